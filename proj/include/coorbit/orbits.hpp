#pragma once

#include <string>
#include <vector>

#include "coorbit/composition.hpp"
#include "coorbit/graded_dims.hpp"

namespace coorbit {

/// A coadjoint orbit of U(n): the partial flag manifold U(n)/G_p for the
/// block-diagonal stabilizer G_p named by `stabilizer`.
struct OrbitDescriptor {
    int ambient_n;
    Composition stabilizer;
    std::string label;  // "F_4", "G_{2,2}", "CP^3", "point", "F_{1,2,1}"

    static OrbitDescriptor for_stabilizer(Composition p);

    /// dim_C U(n)/G_p = (n^2 - sum i_j^2) / 2. Always an integer; a parity
    /// failure throws std::logic_error.
    long long complex_dim() const;
};

/// One step of the orbit hierarchy: the total orbit fibers over the base
/// orbit, with fiber a product of one partial flag manifold per coarse
/// block (the fine parts that land in that block, inside U(coarse part)).
struct FibrationDescriptor {
    OrbitDescriptor total;
    OrbitDescriptor base;
    std::vector<OrbitDescriptor> fiber_factors;
};

struct LabeledSeries {
    std::string label;
    GradedDims series;
};

/// Record of one claimed tensor-product identity: lhs vs the tensor of all
/// factor series. The verdict reports, never asserts.
struct SplitCertificate {
    std::string lhs_label;
    GradedDims lhs;
    GradedDims rhs;  // tensor of factors
    std::vector<LabeledSeries> factors;
    bool verdict = false;
    std::vector<std::string> hypothesis_notes;
};

/// A refinement chain with one certificate per step plus the certificate
/// for the full product factorization.
struct Tower {
    std::vector<Composition> chain;
    std::vector<SplitCertificate> step_certificates;
    SplitCertificate product_certificate;
};

/// Summary of the exhaustive split check over all refinement-related pairs
/// of compositions of each n <= max_n (reflexive pairs and full-group bases
/// included).
struct SweepResult {
    int max_n = 0;
    long long pairs_checked = 0;
    long long failures = 0;
    std::vector<std::pair<int, long long>> pairs_per_n;
};

/// P(CP^j): 1 in degrees 0, 2, ..., 2j.
GradedDims poincare_cpn(int j);

/// Poincare series of the partial flag manifold U(n)/G_p: the Gaussian
/// multinomial [n; i_1,...,i_s]_q regraded with q = t^2. Expanded exactly as
/// prod_{j<=n} (1-q^j) / prod_b prod_{j<=i_b} (1-q^j) by polynomial division.
GradedDims poincare_partial_flag(const Composition& p);

/// P(F_n) = poincare_partial_flag((1,...,1)), the q-factorial [n]_q!.
GradedDims poincare_flag(int n);

/// Throws std::invalid_argument (with the prefix-sum obstruction) when fine
/// does not refine coarse.
FibrationDescriptor build_fibration(const Composition& fine, const Composition& coarse);

/// Certificate for H*(total) =? H*(base) (x) H*(fiber factors). The
/// reflexive pair fine == coarse is a degenerate trivial split (all fibers
/// points); coarse == (n) makes the base a point. Both are reported, not
/// rejected — the CLI gates the full-group base behind a flag.
SplitCertificate verify_split(const Composition& fine, const Composition& coarse);

/// Generic certificate for externally supplied series: lhs vs tensor of the
/// given factors. No fibration hypotheses are checked; callers may state
/// their own in `notes`.
SplitCertificate check_series_split(std::string lhs_label, GradedDims lhs,
                                    std::vector<LabeledSeries> factors,
                                    std::vector<std::string> notes = {
                                        "externally supplied series: connectedness of the "
                                        "fibration is not checked"});

/// Certificates for every adjacent pair of the chain plus the full product
/// factorization. The chain must have length >= 2 and each element must
/// refine the next; the final composition may be (n) only when
/// allow_full_group is set.
Tower verify_tower(const std::vector<Composition>& chain, bool allow_full_group = false);

/// H*(F_n) =? tensor_{j=1..n-1} H*(CP^j). Requires n >= 2.
SplitCertificate verify_flag_corollary(int n);

/// The worked U(4) identities: (a) P(F_4) = P(G_{2,2}) P(CP^1)^2,
/// (b) P(G_{2,2}) P(CP^1)^2 = P(CP^1) P(CP^2) P(CP^3), and (c) the Betti
/// table of G_{2,2} is (1,1,2,1,1) in degrees (0,2,4,6,8).
std::vector<SplitCertificate> verify_u4_example();

inline constexpr int kMaxSweepN = 12;

/// verify_split over every refinement-related pair of compositions of every
/// n <= max_n. Throws "instance too large" for max_n > kMaxSweepN.
SweepResult verify_refinement_sweep(int max_n);

}  // namespace coorbit
