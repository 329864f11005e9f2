#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coorbit {

/// Ordered sequence of positive block sizes summing to n. Encodes the
/// block-diagonal stabilizer U(i_1) x ... x U(i_s) inside U(n).
class Composition {
public:
    /// Validates: nonempty, every part >= 1. Throws std::invalid_argument.
    explicit Composition(std::vector<int> parts);

    static Composition ones(int n);  // (1,...,1)
    /// Parses the comma-separated form, e.g. "1,1,2".
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(std::size_t i) const { return parts_.at(i); }
    bool is_full_group() const { return parts_.size() == 1; }

    /// Partial sums i_1, i_1+i_2, ..., excluding the final n.
    std::vector<int> proper_prefix_sums() const;

    Composition sorted_descending() const;

    std::string to_string() const;  // "1,1,2"

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& p);

/// One contiguous block of fine parts per coarse part; ranges are half-open
/// [begin, end) indices into the fine composition's parts, in order,
/// disjoint, and covering everything.
struct RefinementWitness {
    std::vector<std::pair<std::size_t, std::size_t>> groups;
};

/// The unique contiguous grouping witnessing fine <= coarse in refinement
/// order, or nullopt when none exists (i.e. when the coarse prefix sums are
/// not a subset of the fine prefix sums). refines(p, p) yields the identity
/// witness. Throws std::invalid_argument when fine.n() != coarse.n().
std::optional<RefinementWitness> refines(const Composition& fine, const Composition& coarse);

/// Witness composition: fine->mid and mid->coarse glue to fine->coarse.
RefinementWitness compose(const RefinementWitness& fine_to_mid,
                          const RefinementWitness& mid_to_coarse);

/// The fine parts covered by one witness group, as a composition of the
/// corresponding coarse part.
Composition group_parts(const Composition& fine, std::pair<std::size_t, std::size_t> group);

/// Human-readable reason why fine does not refine coarse (the offending
/// coarse prefix sum). Empty when it does refine.
std::string refinement_obstruction(const Composition& fine, const Composition& coarse);

/// All 2^(n-1) compositions of n, in prefix-sum-subset order.
std::vector<Composition> all_compositions(int n);

inline constexpr int kDefaultChainBound = 9;

/// All strictly coarsening chains from `from` to `to` (both included), each
/// adjacent pair related by refinement. Requires from refines to. Throws
/// "instance too large" when n exceeds max_n.
std::vector<std::vector<Composition>> refinement_chains(const Composition& from,
                                                        const Composition& to,
                                                        int max_n = kDefaultChainBound);

/// All covering chains from (1,...,1) down to a two-block composition, each
/// step merging two adjacent parts. The full group (n) is never an endpoint.
/// Empty for n < 3. There are (n-1)!/1 such chains.
std::vector<std::vector<Composition>> maximal_refinement_chains(int n,
                                                                int max_n = kDefaultChainBound);

/// Chains serialize pipe-separated: "1,1,1,1|2,1,1|2,2|4".
std::string chain_to_string(const std::vector<Composition>& chain);
std::vector<Composition> parse_chain(std::string_view text);

}  // namespace coorbit
