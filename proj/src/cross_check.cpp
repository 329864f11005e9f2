#include "coorbit/cross_check.hpp"

#include "coorbit/oracle.hpp"

namespace coorbit {

CrossCheckReport cross_check(const Composition& p)
{
    CrossCheckReport report{p, {}, true};
    const GradedDims closed = poincare_partial_flag(p);

    report.comparisons.push_back(check_series_split(
        "closed-form", closed, {{"coset-oracle", partial_flag_series_by_cosets(p)}},
        {"independent recomputation by coset enumeration"}));

    if (p.num_parts() == 2)
        report.comparisons.push_back(check_series_split(
            "closed-form", closed,
            {{"box-oracle", grassmannian_series_by_boxes(p.part(0), p.n())}},
            {"independent recomputation by box-partition counting"}));

    for (const auto& c : report.comparisons)
        report.all_agree = report.all_agree && c.verdict;
    return report;
}

}  // namespace coorbit
