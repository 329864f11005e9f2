#include "coorbit/orbits.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "coorbit/polynomial.hpp"

namespace coorbit {

namespace {

std::string subgroup_text(const Composition& p)
{
    std::ostringstream os;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << " x ";
        os << "U(" << parts[i] << ")";
    }
    return os.str();
}

std::string orbit_label(const Composition& p)
{
    const auto& parts = p.parts();
    const int n = p.n();
    if (parts.size() == 1)
        return "point";
    if (parts.size() == 2) {
        if (parts[0] == 1 || parts[1] == 1)
            return "CP^" + std::to_string(n - 1);
        return "G_{" + std::to_string(parts[0]) + "," + std::to_string(parts[1]) + "}";
    }
    if (static_cast<int>(parts.size()) == n)
        return "F_" + std::to_string(n);
    return "F_{" + p.to_string() + "}";
}

std::string connectedness_note(const Composition& coarse)
{
    return "G_2 = " + subgroup_text(coarse) +
           " is a product of unitary groups, hence connected: the splitting hypothesis holds automatically";
}

SplitCertificate make_certificate(std::string lhs_label, GradedDims lhs,
                                  std::vector<LabeledSeries> factors,
                                  std::vector<std::string> notes)
{
    SplitCertificate cert;
    cert.lhs_label = std::move(lhs_label);
    cert.lhs = std::move(lhs);
    std::vector<GradedDims> series;
    series.reserve(factors.size());
    for (const auto& f : factors)
        series.push_back(f.series);
    cert.rhs = tensor_all(series);
    cert.factors = std::move(factors);
    cert.verdict = equals(cert.lhs, cert.rhs);
    cert.hypothesis_notes = std::move(notes);
    return cert;
}

}  // namespace

OrbitDescriptor OrbitDescriptor::for_stabilizer(Composition p)
{
    std::string label = orbit_label(p);
    return OrbitDescriptor{p.n(), std::move(p), std::move(label)};
}

long long OrbitDescriptor::complex_dim() const
{
    const long long n = ambient_n;
    long long sum_sq = 0;
    for (int i : stabilizer.parts())
        sum_sq += static_cast<long long>(i) * i;
    const long long twice = n * n - sum_sq;
    if (twice % 2 != 0)
        throw std::logic_error("complex_dim: n^2 - sum i_j^2 is odd for " + stabilizer.to_string());
    return twice / 2;
}

GradedDims poincare_cpn(int j)
{
    if (j < 0)
        throw std::invalid_argument("poincare_cpn: j must be >= 0");
    std::vector<mpz_class> q(static_cast<std::size_t>(j) + 1, mpz_class(1));
    return GradedDims::from_q_coeffs(q);
}

GradedDims poincare_partial_flag(const Composition& p)
{
    const int n = p.n();
    poly::Coeffs q{mpz_class(1)};
    for (long j = 1; j <= n; ++j)
        q = poly::mul(q, poly::one_minus_power(j));
    for (int block : p.parts()) {
        for (long j = 1; j <= block; ++j) {
            auto quotient = poly::divide_by_one_minus_power(q, j);
            if (!quotient)
                throw std::logic_error("poincare_partial_flag: q-multinomial division failed for " +
                                       p.to_string());
            q = std::move(*quotient);
        }
    }
    for (const auto& c : q)
        if (c < 0)
            throw std::logic_error("poincare_partial_flag: negative coefficient for " + p.to_string());
    return GradedDims::from_q_coeffs(q);
}

GradedDims poincare_flag(int n)
{
    if (n < 1)
        throw std::invalid_argument("poincare_flag: n must be >= 1");
    return poincare_partial_flag(Composition::ones(n));
}

FibrationDescriptor build_fibration(const Composition& fine, const Composition& coarse)
{
    auto witness = refines(fine, coarse);
    if (!witness)
        throw std::invalid_argument("not a refinement: " + fine.to_string() + " does not refine " +
                                    coarse.to_string() + "; " + refinement_obstruction(fine, coarse));
    FibrationDescriptor fib{OrbitDescriptor::for_stabilizer(fine),
                            OrbitDescriptor::for_stabilizer(coarse),
                            {}};
    fib.fiber_factors.reserve(witness->groups.size());
    for (auto group : witness->groups)
        fib.fiber_factors.push_back(OrbitDescriptor::for_stabilizer(group_parts(fine, group)));

    long long fiber_dims = 0;
    for (const auto& f : fib.fiber_factors)
        fiber_dims += f.complex_dim();
    if (fib.total.complex_dim() != fib.base.complex_dim() + fiber_dims)
        throw std::logic_error("build_fibration: dimension bookkeeping failed for " + fine.to_string() +
                               " over " + coarse.to_string());
    return fib;
}

SplitCertificate verify_split(const Composition& fine, const Composition& coarse)
{
    FibrationDescriptor fib = build_fibration(fine, coarse);

    std::vector<LabeledSeries> factors;
    factors.reserve(1 + fib.fiber_factors.size());
    factors.push_back({"base " + fib.base.label, poincare_partial_flag(coarse)});
    for (const auto& f : fib.fiber_factors)
        factors.push_back({"fiber " + f.label, poincare_partial_flag(f.stabilizer)});

    return make_certificate(fib.total.label, poincare_partial_flag(fine), std::move(factors),
                            {connectedness_note(coarse)});
}

SplitCertificate check_series_split(std::string lhs_label, GradedDims lhs,
                                    std::vector<LabeledSeries> factors,
                                    std::vector<std::string> notes)
{
    return make_certificate(std::move(lhs_label), std::move(lhs), std::move(factors),
                            std::move(notes));
}

Tower verify_tower(const std::vector<Composition>& chain, bool allow_full_group)
{
    if (chain.size() < 2)
        throw std::invalid_argument("verify_tower: chain too short (need >= 2 compositions)");
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        if (chain[j].n() != chain[j + 1].n())
            throw std::invalid_argument("verify_tower: compositions of different n at positions " +
                                        std::to_string(j) + " and " + std::to_string(j + 1));
        if (!refines(chain[j], chain[j + 1]))
            throw std::invalid_argument("verify_tower: broken refinement at position " + std::to_string(j) +
                                        ": " + chain[j].to_string() + " does not refine " +
                                        chain[j + 1].to_string() + "; " +
                                        refinement_obstruction(chain[j], chain[j + 1]));
    }
    if (chain.back().is_full_group() && !allow_full_group)
        throw std::invalid_argument("verify_tower: chain ends at the full group (" +
                                    chain.back().to_string() +
                                    "); pass allow_full_group to permit it");

    Tower tower{chain, {}, {}};
    std::vector<LabeledSeries> product_factors;
    product_factors.push_back({"base " + orbit_label(chain.back()), poincare_partial_flag(chain.back())});
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        tower.step_certificates.push_back(verify_split(chain[j], chain[j + 1]));
        FibrationDescriptor fib = build_fibration(chain[j], chain[j + 1]);
        for (const auto& f : fib.fiber_factors) {
            if (f.label == "point")
                continue;  // unit factors add nothing to the product
            product_factors.push_back({"step " + std::to_string(j + 1) + " fiber " + f.label,
                                       poincare_partial_flag(f.stabilizer)});
        }
    }
    std::vector<std::string> notes;
    for (std::size_t j = 1; j < chain.size(); ++j)
        notes.push_back(connectedness_note(chain[j]));
    tower.product_certificate = make_certificate(orbit_label(chain.front()),
                                                 poincare_partial_flag(chain.front()),
                                                 std::move(product_factors), std::move(notes));
    return tower;
}

SplitCertificate verify_flag_corollary(int n)
{
    if (n < 2)
        throw std::invalid_argument("verify_flag_corollary: n must be >= 2");
    std::vector<LabeledSeries> factors;
    factors.reserve(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j < n; ++j)
        factors.push_back({"CP^" + std::to_string(j), poincare_cpn(j)});
    return make_certificate("F_" + std::to_string(n), poincare_flag(n), std::move(factors),
                            {connectedness_note(Composition({1, n - 1}))});
}

std::vector<SplitCertificate> verify_u4_example()
{
    const GradedDims g22 = poincare_partial_flag(Composition({2, 2}));
    const GradedDims cp1 = poincare_cpn(1);

    std::vector<SplitCertificate> certs;
    certs.push_back(verify_split(Composition::ones(4), Composition({2, 2})));

    certs.push_back(make_certificate(
        "G_{2,2} (x) CP^1 (x) CP^1", tensor(g22, tensor(cp1, cp1)),
        {{"CP^1", cp1}, {"CP^2", poincare_cpn(2)}, {"CP^3", poincare_cpn(3)}},
        {"both sides factor P(F_4): the two hierarchy routes must agree"}));

    certs.push_back(make_certificate(
        "G_{2,2}", g22,
        {{"expected Betti table (1,1,2,1,1) at degrees (0,2,4,6,8)",
          GradedDims({1, 0, 1, 0, 2, 0, 1, 0, 1})}},
        {"dim H^4(G_{2,2}) = 2 and dim H^{2j}(G_{2,2}) = 1 otherwise"}));
    return certs;
}

SweepResult verify_refinement_sweep(int max_n)
{
    if (max_n < 1)
        throw std::invalid_argument("verify_refinement_sweep: max_n must be >= 1");
    if (max_n > kMaxSweepN)
        throw std::domain_error("verify_refinement_sweep: instance too large (max_n > " +
                                std::to_string(kMaxSweepN) + ")");
    SweepResult result;
    result.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        // One closed-form expansion per composition; fiber sub-compositions
        // are looked up in the same cache.
        std::map<std::vector<int>, GradedDims> series;
        auto poincare_of = [&series](const Composition& p) -> const GradedDims& {
            auto it = series.find(p.parts());
            if (it == series.end())
                it = series.emplace(p.parts(), poincare_partial_flag(p)).first;
            return it->second;
        };

        const auto compositions = all_compositions(n);
        long long pairs_this_n = 0;
        for (const auto& fine : compositions) {
            for (const auto& coarse : compositions) {
                auto witness = refines(fine, coarse);
                if (!witness)
                    continue;
                ++pairs_this_n;
                GradedDims rhs = poincare_of(coarse);
                for (auto group : witness->groups)
                    rhs = tensor(rhs, poincare_of(group_parts(fine, group)));
                if (!equals(poincare_of(fine), rhs))
                    ++result.failures;
            }
        }
        result.pairs_per_n.emplace_back(n, pairs_this_n);
        result.pairs_checked += pairs_this_n;
    }
    return result;
}

}  // namespace coorbit
