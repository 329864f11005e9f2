#include "coorbit/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coorbit {

namespace {

int parse_int(std::string_view token, std::string_view what)
{
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw std::invalid_argument("composition: empty part sequence");
    long long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("composition: nonpositive part " + std::to_string(parts_[i]) +
                                        " at index " + std::to_string(i));
        sum += parts_[i];
    }
    if (sum > std::numeric_limits<int>::max())
        throw std::invalid_argument("composition: part sum overflows int");
    n_ = static_cast<int>(sum);
}

Composition Composition::ones(int n)
{
    if (n < 1)
        throw std::invalid_argument("composition: n must be >= 1");
    return Composition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Composition Composition::parse(std::string_view text)
{
    std::vector<int> parts;
    for (auto token : split(text, ','))
        parts.push_back(parse_int(token, "composition"));
    return Composition(std::move(parts));
}

std::vector<int> Composition::proper_prefix_sums() const
{
    std::vector<int> sums;
    sums.reserve(parts_.size() - 1);
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        sums.push_back(acc);
    }
    return sums;
}

Composition Composition::sorted_descending() const
{
    std::vector<int> sorted = parts_;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return Composition(std::move(sorted));
}

std::string Composition::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Composition& p)
{
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << ',';
        os << parts[i];
    }
    return os;
}

std::optional<RefinementWitness> refines(const Composition& fine, const Composition& coarse)
{
    if (fine.n() != coarse.n())
        throw std::invalid_argument("refines: compositions of different n (" +
                                    std::to_string(fine.n()) + " vs " + std::to_string(coarse.n()) + ")");
    RefinementWitness w;
    w.groups.reserve(coarse.parts().size());
    std::size_t i = 0;
    for (int target : coarse.parts()) {
        const std::size_t begin = i;
        int acc = 0;
        while (i < fine.parts().size() && acc < target)
            acc += fine.parts()[i++];
        if (acc != target)
            return std::nullopt;  // a fine part straddles the coarse boundary
        w.groups.emplace_back(begin, i);
    }
    return w;
}

RefinementWitness compose(const RefinementWitness& fine_to_mid,
                          const RefinementWitness& mid_to_coarse)
{
    RefinementWitness w;
    w.groups.reserve(mid_to_coarse.groups.size());
    for (auto [mid_begin, mid_end] : mid_to_coarse.groups) {
        if (mid_begin >= mid_end || mid_end > fine_to_mid.groups.size())
            throw std::invalid_argument("compose: witnesses do not chain");
        w.groups.emplace_back(fine_to_mid.groups[mid_begin].first,
                              fine_to_mid.groups[mid_end - 1].second);
    }
    return w;
}

Composition group_parts(const Composition& fine, std::pair<std::size_t, std::size_t> group)
{
    auto [begin, end] = group;
    if (begin >= end || end > fine.parts().size())
        throw std::invalid_argument("group_parts: range out of bounds");
    return Composition(std::vector<int>(fine.parts().begin() + static_cast<std::ptrdiff_t>(begin),
                                        fine.parts().begin() + static_cast<std::ptrdiff_t>(end)));
}

std::string refinement_obstruction(const Composition& fine, const Composition& coarse)
{
    auto fine_sums = fine.proper_prefix_sums();
    for (int s : coarse.proper_prefix_sums()) {
        if (!std::binary_search(fine_sums.begin(), fine_sums.end(), s)) {
            std::ostringstream os;
            os << "coarse prefix sum " << s << " is not a prefix sum of " << fine << " (prefix sums:";
            for (int t : fine_sums)
                os << ' ' << t;
            os << ')';
            return os.str();
        }
    }
    return {};
}

std::vector<Composition> all_compositions(int n)
{
    if (n < 1)
        throw std::invalid_argument("all_compositions: n must be >= 1");
    if (n > 20)
        throw std::domain_error("all_compositions: instance too large (n > 20)");
    // Compositions of n <-> subsets of {1..n-1} (the proper prefix sums).
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int prev = 0;
        for (int cut = 1; cut < n; ++cut) {
            if (mask >> (cut - 1) & 1u) {
                parts.push_back(cut - prev);
                prev = cut;
            }
        }
        parts.push_back(n - prev);
        out.emplace_back(std::move(parts));
    }
    return out;
}

namespace {

unsigned prefix_mask(const Composition& p)
{
    unsigned mask = 0;
    for (int s : p.proper_prefix_sums())
        mask |= 1u << (s - 1);
    return mask;
}

Composition composition_from_mask(int n, unsigned mask)
{
    std::vector<int> parts;
    int prev = 0;
    for (int cut = 1; cut < n; ++cut) {
        if (mask >> (cut - 1) & 1u) {
            parts.push_back(cut - prev);
            prev = cut;
        }
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

}  // namespace

std::vector<std::vector<Composition>> refinement_chains(const Composition& from,
                                                        const Composition& to,
                                                        int max_n)
{
    const int n = from.n();
    if (n > max_n)
        throw std::domain_error("refinement_chains: instance too large (n = " + std::to_string(n) +
                                " exceeds bound " + std::to_string(max_n) + ")");
    if (!refines(from, to))
        throw std::invalid_argument("refinement_chains: " + from.to_string() + " does not refine " +
                                    to.to_string() + "; " + refinement_obstruction(from, to));

    // Strictly decreasing subset chains from prefix_mask(from) to
    // prefix_mask(to), walking proper submasks that still contain the target.
    const unsigned top = prefix_mask(from);
    const unsigned bottom = prefix_mask(to);
    std::vector<std::vector<Composition>> chains;
    std::vector<Composition> current{from};

    std::function<void(unsigned)> descend = [&](unsigned mask) {
        if (mask == bottom) {
            chains.push_back(current);
            return;
        }
        // Enumerate proper submasks of `mask` that contain `bottom`.
        unsigned free = mask & ~bottom;
        for (unsigned sub = (free - 1) & free;; sub = (sub - 1) & free) {
            unsigned next = sub | bottom;
            current.push_back(composition_from_mask(n, next));
            descend(next);
            current.pop_back();
            if (sub == 0)
                break;
        }
    };
    descend(top);
    return chains;
}

std::vector<std::vector<Composition>> maximal_refinement_chains(int n, int max_n)
{
    if (n < 1)
        throw std::invalid_argument("maximal_refinement_chains: n must be >= 1");
    if (n > max_n)
        throw std::domain_error("maximal_refinement_chains: instance too large (n = " +
                                std::to_string(n) + " exceeds bound " + std::to_string(max_n) + ")");
    std::vector<std::vector<Composition>> chains;
    if (n < 3)
        return chains;
    std::vector<Composition> current{Composition::ones(n)};
    std::function<void()> extend = [&]() {
        // copy: pushing onto `current` may reallocate away from back()
        const std::vector<int> parts = current.back().parts();
        if (parts.size() == 2) {
            chains.push_back(current);
            return;
        }
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            std::vector<int> merged;
            merged.reserve(parts.size() - 1);
            merged.insert(merged.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i));
            merged.push_back(parts[i] + parts[i + 1]);
            merged.insert(merged.end(), parts.begin() + static_cast<std::ptrdiff_t>(i) + 2, parts.end());
            current.emplace_back(std::move(merged));
            extend();
            current.pop_back();
        }
    };
    extend();
    return chains;
}

std::string chain_to_string(const std::vector<Composition>& chain)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i)
            os << '|';
        os << chain[i];
    }
    return os.str();
}

std::vector<Composition> parse_chain(std::string_view text)
{
    std::vector<Composition> chain;
    for (auto token : split(text, '|'))
        chain.push_back(Composition::parse(token));
    return chain;
}

}  // namespace coorbit
