#include "coorbit/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace coorbit {

JsonValue to_json(const GradedDims& series)
{
    JsonValue dense = JsonValue::array();
    JsonValue sparse = JsonValue::array();
    const auto& c = series.coeffs();
    for (std::size_t d = 0; d < c.size(); ++d) {
        dense.push_back(c[d]);
        if (c[d] != 0) {
            JsonValue pair = JsonValue::object();
            pair["degree"] = static_cast<long>(d);
            pair["dim"] = c[d];
            sparse.push_back(std::move(pair));
        }
    }
    JsonValue out = JsonValue::object();
    out["dense"] = std::move(dense);
    out["sparse"] = std::move(sparse);
    return out;
}

JsonValue to_json(const LabeledSeries& factor)
{
    JsonValue out = JsonValue::object();
    out["label"] = factor.label;
    out["series"] = to_json(factor.series);
    return out;
}

JsonValue to_json(const SplitCertificate& cert)
{
    JsonValue factors = JsonValue::array();
    for (const auto& f : cert.factors)
        factors.push_back(to_json(f));
    JsonValue notes = JsonValue::array();
    for (const auto& n : cert.hypothesis_notes)
        notes.push_back(n);
    JsonValue out = JsonValue::object();
    out["factors"] = std::move(factors);
    out["hypothesis_notes"] = std::move(notes);
    out["lhs"] = to_json(cert.lhs);
    out["lhs_label"] = cert.lhs_label;
    out["rhs"] = to_json(cert.rhs);
    out["verdict"] = cert.verdict;
    return out;
}

JsonValue to_json(const Tower& tower)
{
    JsonValue chain = JsonValue::array();
    for (const auto& p : tower.chain)
        chain.push_back(p.to_string());
    JsonValue steps = JsonValue::array();
    bool all_true = tower.product_certificate.verdict;
    for (const auto& cert : tower.step_certificates) {
        all_true = all_true && cert.verdict;
        steps.push_back(to_json(cert));
    }
    JsonValue out = JsonValue::object();
    out["all_verdicts_true"] = all_true;
    out["chain"] = std::move(chain);
    out["product_certificate"] = to_json(tower.product_certificate);
    out["step_certificates"] = std::move(steps);
    return out;
}

JsonValue to_json(const CrossCheckReport& report)
{
    JsonValue comparisons = JsonValue::array();
    for (const auto& cert : report.comparisons)
        comparisons.push_back(to_json(cert));
    JsonValue out = JsonValue::object();
    out["all_agree"] = report.all_agree;
    out["comparisons"] = std::move(comparisons);
    out["composition"] = report.composition.to_string();
    return out;
}

JsonValue to_json(const SweepResult& sweep)
{
    JsonValue per_n = JsonValue::array();
    for (auto [n, pairs] : sweep.pairs_per_n) {
        JsonValue row = JsonValue::object();
        row["n"] = n;
        row["pairs"] = pairs;
        per_n.push_back(std::move(row));
    }
    JsonValue out = JsonValue::object();
    out["failures"] = sweep.failures;
    out["max_n"] = sweep.max_n;
    out["pairs_checked"] = sweep.pairs_checked;
    out["pairs_per_n"] = std::move(per_n);
    return out;
}

void render_series_text(std::ostream& os, const GradedDims& series, const std::string& label)
{
    if (!label.empty())
        os << label << ":\n";
    const auto& c = series.coeffs();
    std::size_t width = 1;
    for (const auto& v : c)
        width = std::max(width, v.get_str().size());

    if (series.has_odd_support()) {
        os << "  degree = cohomological degree (odd support present)\n";
        os << "  degree  dim\n";
        for (std::size_t d = 0; d < c.size(); ++d)
            if (c[d] != 0)
                os << "  " << std::setw(6) << d << "  " << std::setw(static_cast<int>(width))
                   << c[d].get_str() << "\n";
    } else {
        os << "  q-degree table, q = t^2 (cohomological degree = 2 * q-degree)\n";
        os << "  q-deg  dim\n";
        for (std::size_t d = 0; d < c.size(); d += 2)
            os << "  " << std::setw(5) << d / 2 << "  " << std::setw(static_cast<int>(width))
               << c[d].get_str() << "\n";
    }
    os << "  total dim: " << total_dim(series).get_str() << "\n";
}

void render_certificate_text(std::ostream& os, const SplitCertificate& cert)
{
    render_series_text(os, cert.lhs, "lhs " + cert.lhs_label);
    for (const auto& f : cert.factors)
        render_series_text(os, f.series, "factor " + f.label);
    render_series_text(os, cert.rhs, "rhs (tensor of factors)");
    for (const auto& note : cert.hypothesis_notes)
        os << "note: " << note << "\n";
    os << "verdict: " << (cert.verdict ? "true" : "false") << "\n";
}

void render_tower_text(std::ostream& os, const Tower& tower)
{
    os << "tower: " << chain_to_string(tower.chain) << "\n";
    for (std::size_t j = 0; j < tower.step_certificates.size(); ++j) {
        const auto& cert = tower.step_certificates[j];
        os << "step " << j + 1 << ": " << tower.chain[j] << " over " << tower.chain[j + 1]
           << " -> verdict " << (cert.verdict ? "true" : "false") << "\n";
    }
    os << "product factorization:\n";
    render_certificate_text(os, tower.product_certificate);
}

void render_report_text(std::ostream& os, const CrossCheckReport& report)
{
    os << "cross-check for composition " << report.composition << "\n";
    for (const auto& cert : report.comparisons) {
        const std::string rhs_label = cert.factors.empty() ? "?" : cert.factors.front().label;
        os << cert.lhs_label << " vs " << rhs_label << ": "
           << (cert.verdict ? "agree" : "DISAGREE") << "\n";
    }
    if (!report.comparisons.empty())
        render_series_text(os, report.comparisons.front().lhs, "series");
    os << "all agree: " << (report.all_agree ? "true" : "false") << "\n";
}

}  // namespace coorbit
