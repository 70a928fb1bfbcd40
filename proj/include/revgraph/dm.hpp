#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revgraph/error.hpp"
#include "revgraph/fourreg.hpp"
#include "revgraph/graphs.hpp"
#include "revgraph/localcomp.hpp"

namespace revgraph {

/// Subset of a ground set of at most 16 elements, bit i = element i.
using Subset = std::uint32_t;

/// How a set system was obtained. Binary-normal systems come from a graph's
/// adjacency matrix and admit the summand criterion.
enum class Provenance { generic, binary_normal };

/// Explicit set system (V, S) over a labelled ground set.
class SetSystem {
public:
    static constexpr std::size_t kMaxGround = 16;

    SetSystem() = default;

    SetSystem(std::vector<std::string> ground, std::vector<Subset> family, Provenance prov = Provenance::generic)
        : ground_(std::move(ground)), provenance_(prov) {
        if (ground_.size() > kMaxGround)
            throw CapExceeded("set systems are limited to " + std::to_string(kMaxGround) + " ground elements");
        std::map<std::string, int> seen;
        for (const auto& g : ground_) detail::require(seen.emplace(g, 0).second, "duplicate ground element '" + g + "'");
        member_.assign(std::size_t{1} << ground_.size(), false);
        for (Subset x : family) {
            detail::require((x & ~full()) == 0, "family member is not a subset of the ground set");
            member_[x] = true;
        }
        for (Subset x = 0; x < member_.size(); ++x)
            if (member_[x]) family_.push_back(x);
    }

    [[nodiscard]] std::size_t ground_size() const noexcept { return ground_.size(); }
    [[nodiscard]] const std::vector<std::string>& ground() const noexcept { return ground_; }
    [[nodiscard]] const std::vector<Subset>& family() const noexcept { return family_; }
    [[nodiscard]] Provenance provenance() const noexcept { return provenance_; }
    [[nodiscard]] bool contains(Subset x) const { return x < member_.size() && member_[x]; }
    [[nodiscard]] Subset full() const noexcept { return static_cast<Subset>((std::size_t{1} << ground_.size()) - 1); }

    [[nodiscard]] Subset subset_of(const std::vector<std::string>& labels) const {
        Subset x = 0;
        for (const auto& l : labels) {
            auto it = std::find(ground_.begin(), ground_.end(), l);
            detail::require(it != ground_.end(), "'" + l + "' is not a ground element");
            x |= Subset{1} << (it - ground_.begin());
        }
        return x;
    }
    [[nodiscard]] std::vector<std::string> labels_of(Subset x) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < ground_.size(); ++i)
            if (x & (Subset{1} << i)) out.push_back(ground_[i]);
        return out;
    }

    /// Same ground and family; provenance is not compared.
    friend bool operator==(const SetSystem& a, const SetSystem& b) {
        return a.ground_ == b.ground_ && a.family_ == b.family_;
    }

private:
    std::vector<std::string> ground_;
    std::vector<Subset> family_;
    std::vector<bool> member_;
    Provenance provenance_ = Provenance::generic;
};

/// Family ordered by cardinality, then by the ascending index lists.
inline std::vector<Subset> canonical_order(const SetSystem& d) {
    std::vector<Subset> f = d.family();
    auto key = [](Subset x) {
        std::vector<int> idx;
        for (int i = 0; i < 32; ++i)
            if (x & (Subset{1} << i)) idx.push_back(i);
        return std::pair<int, std::vector<int>>(std::popcount(x), idx);
    };
    std::sort(f.begin(), f.end(), [&](Subset a, Subset b) { return key(a) < key(b); });
    return f;
}

/// Nonempty family and the symmetric exchange axiom.
inline bool is_delta_matroid(const SetSystem& d) {
    if (d.family().empty()) return false;
    for (Subset x : d.family()) {
        for (Subset y : d.family()) {
            const Subset diff = x ^ y;
            for (Subset rest = diff; rest; rest &= rest - 1) {
                const Subset bx = rest & -rest;
                bool ok = false;
                for (Subset r2 = diff; r2 && !ok; r2 &= r2 - 1) {
                    const Subset by = r2 & -r2;
                    ok = d.contains(x ^ (bx | by));
                }
                if (!ok) return false;
            }
        }
    }
    return true;
}

/// D * X
inline SetSystem twist(const SetSystem& d, Subset x) {
    detail::require((x & ~d.full()) == 0, "twist set is not a subset of the ground set");
    std::vector<Subset> f;
    for (Subset y : d.family()) f.push_back(y ^ x);
    return SetSystem(d.ground(), std::move(f), d.provenance());
}

inline bool is_even(const SetSystem& d) {
    if (d.family().empty()) return true;
    const int parity = std::popcount(d.family().front()) % 2;
    return std::all_of(d.family().begin(), d.family().end(),
                       [&](Subset x) { return std::popcount(x) % 2 == parity; });
}

/// Ground d1 followed by ground d2; members are all unions X1 u X2.
inline SetSystem direct_sum(const SetSystem& d1, const SetSystem& d2) {
    std::vector<std::string> ground = d1.ground();
    for (const auto& g : d2.ground()) {
        detail::require(std::find(ground.begin(), ground.end(), g) == ground.end(),
                        "direct sum needs disjoint ground sets, '" + g + "' is shared");
        ground.push_back(g);
    }
    std::vector<Subset> f;
    for (Subset a : d1.family())
        for (Subset b : d2.family()) f.push_back(a | (b << d1.ground_size()));
    return SetSystem(std::move(ground), std::move(f));
}

/// Projection {X n T : X in S} onto the elements of t, re-indexed in order.
inline SetSystem restrict_to(const SetSystem& d, Subset t) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.ground_size(); ++i)
        if (t & (Subset{1} << i)) keep.push_back(i);
    std::vector<std::string> ground;
    for (auto i : keep) ground.push_back(d.ground()[i]);
    std::vector<Subset> f;
    for (Subset x : d.family()) {
        Subset y = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (x & (Subset{1} << keep[j])) y |= Subset{1} << j;
        f.push_back(y);
    }
    return SetSystem(std::move(ground), std::move(f), d.provenance());
}

namespace detail {
/// T splits S when S is the full product of its projections on T and V - T.
inline bool is_separator(const SetSystem& d, Subset t) {
    std::vector<bool> in_t(std::size_t{1} << d.ground_size(), false), out_t(in_t.size(), false);
    std::size_t a = 0, b = 0;
    for (Subset x : d.family()) {
        if (!in_t[x & t]) {
            in_t[x & t] = true;
            ++a;
        }
        if (!out_t[x & ~t & d.full()]) {
            out_t[x & ~t & d.full()] = true;
            ++b;
        }
    }
    return d.family().size() == a * b;
}
}  // namespace detail

/// Ground sets of the finest direct-sum decomposition, each as a subset,
/// ordered by lowest element.
inline std::vector<Subset> summand_grounds(const SetSystem& d) {
    std::vector<Subset> out;
    Subset remaining = d.full();
    while (remaining) {
        const Subset e = remaining & -remaining;
        const Subset others = remaining & ~e;
        // submasks of `others` by increasing size: the smallest separator holding e
        std::vector<Subset> subs;
        for (Subset s = others;; s = (s - 1) & others) {
            subs.push_back(s);
            if (s == 0) break;
        }
        std::stable_sort(subs.begin(), subs.end(), [](Subset x, Subset y) { return std::popcount(x) < std::popcount(y); });
        Subset atom = remaining;
        for (Subset s : subs) {
            if (detail::is_separator(d, s | e)) {
                atom = s | e;
                break;
            }
        }
        out.push_back(atom);
        remaining &= ~atom;
    }
    return out;
}

inline std::vector<SetSystem> summands(const SetSystem& d) {
    std::vector<SetSystem> out;
    for (Subset t : summand_grounds(d)) out.push_back(restrict_to(d, t));
    return out;
}

/// Inclusion-maximal members.
inline std::vector<Subset> max_sets(const SetSystem& d) {
    const std::size_t m = d.ground_size();
    std::vector<bool> has_super(std::size_t{1} << m, false);
    for (Subset x : d.family()) has_super[x] = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t x = 0; x < has_super.size(); ++x)
            if (!(x & (std::size_t{1} << i)) && has_super[x | (std::size_t{1} << i)]) has_super[x] = true;
    std::vector<Subset> out;
    for (Subset x : d.family()) {
        bool maximal = true;
        for (std::size_t i = 0; i < m && maximal; ++i)
            if (!(x & (Subset{1} << i)) && has_super[x | (Subset{1} << i)]) maximal = false;
        if (maximal) out.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {
inline std::size_t small_rank(std::vector<Subset> rows) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto it = std::max_element(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end());
        if (it == rows.end() || *it == 0) break;
        std::swap(rows[r], *it);
        const Subset top = std::bit_floor(rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && (rows[k] & top)) rows[k] ^= rows[r];
        ++r;
    }
    return r;
}
}  // namespace detail

/// D_H: X is a member iff the principal submatrix A(H)[X] is invertible.
inline SetSystem from_graph(const LoopedGraph& h) {
    const std::size_t n = h.vertex_count();
    if (n > SetSystem::kMaxGround)
        throw CapExceeded("graph has more than " + std::to_string(SetSystem::kMaxGround) + " vertices");
    std::vector<Subset> row(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = 0; w < n; ++w)
            if (h.has_edge(u, w)) row[u] |= Subset{1} << w;
    std::vector<Subset> f;
    for (Subset x = 0; x < (Subset{1} << n); ++x) {
        std::vector<Subset> sub;
        for (Vertex u = 0; u < n; ++u)
            if (x & (Subset{1} << u)) sub.push_back(row[u] & x);
        if (detail::small_rank(sub) == sub.size()) f.push_back(x);
    }
    return SetSystem(h.labels(), std::move(f), Provenance::binary_normal);
}

/// D_G(P1, P2): X is a member iff adopting p2's routes on X turns p1 into an
/// Euler system.
inline SetSystem from_partitions(const FourRegularGraph& g, const CircuitPartition& p1, const CircuitPartition& p2) {
    detail::require_compatible(g, p1);
    detail::require_compatible(g, p2);
    detail::require(supplementary(p1, p2), "circuit partitions are not supplementary");
    const std::size_t n = g.vertex_count();
    if (n > SetSystem::kMaxGround)
        throw CapExceeded("graph has more than " + std::to_string(SetSystem::kMaxGround) + " vertices");
    std::vector<Subset> f;
    for (Subset x = 0; x < (Subset{1} << n); ++x) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if (x & (Subset{1} << v)) vs.push_back(v);
        if (is_euler_system(g, switch_routes(p1, vs, p2))) f.push_back(x);
    }
    return SetSystem(g.vertex_labels(), std::move(f));
}

// ---------------------------------------------------------------------------
// lc-sequences

namespace detail {
inline std::optional<std::vector<Subset>> prefix_sets(const SetSystem& d, const LcSequence& s) {
    std::vector<Subset> out{0};
    Subset cur = 0;
    for (Vertex v : s) {
        if (v >= d.ground_size() || (cur & (Subset{1} << v))) return std::nullopt;
        cur |= Subset{1} << v;
        out.push_back(cur);
    }
    return out;
}
}  // namespace detail

/// Every prefix set of s (including the empty one) is a member.
inline bool is_lc_sequence_dm(const SetSystem& d, const LcSequence& s) {
    const auto prefixes = detail::prefix_sets(d, s);
    return prefixes && std::all_of(prefixes->begin(), prefixes->end(), [&](Subset x) { return d.contains(x); });
}

/// An lc-sequence whose full set is inclusion-maximal in S.
inline bool is_full_lc_sequence_dm(const SetSystem& d, const LcSequence& s) {
    if (!is_lc_sequence_dm(d, s)) return false;
    const Subset last = detail::prefix_sets(d, s)->back();
    const auto maxes = max_sets(d);
    return std::find(maxes.begin(), maxes.end(), last) != maxes.end();
}

/// Exhaustive search over chains of members grown one element at a time.
/// Returns a full lc-sequence (lowest elements first) or nullopt.
inline std::optional<LcSequence> search_full_lc_sequence_dm(const SetSystem& d) {
    if (!d.contains(0)) return std::nullopt;
    const auto maxes = max_sets(d);
    std::vector<bool> is_max(std::size_t{1} << d.ground_size(), false);
    for (Subset x : maxes) is_max[x] = true;
    std::vector<std::optional<Vertex>> via(is_max.size());
    std::vector<bool> reached(is_max.size(), false);
    reached[0] = true;
    std::vector<Subset> front{0};
    while (!front.empty()) {
        std::vector<Subset> next;
        for (Subset x : front) {
            if (is_max[x]) {
                LcSequence seq;
                for (Subset y = x; y; y &= ~(Subset{1} << *via[y])) seq.push_back(*via[y]);
                std::reverse(seq.begin(), seq.end());
                return seq;
            }
            for (Vertex v = 0; v < d.ground_size(); ++v) {
                const Subset y = x | (Subset{1} << v);
                if (y == x || reached[y] || !d.contains(y)) continue;
                reached[y] = true;
                via[y] = v;
                next.push_back(y);
            }
        }
        front = std::move(next);
    }
    return std::nullopt;
}

/// No even summand other than ({v}, {{}}) on a single element.
inline bool summand_criterion(const SetSystem& d) {
    for (const auto& s : summands(d)) {
        if (s.ground_size() == 0 || !is_even(s)) continue;
        if (!(s.ground_size() == 1 && s.family() == std::vector<Subset>{0})) return false;
    }
    return true;
}

/// Summand criterion for binary-normal systems; exhaustive search otherwise.
inline bool has_full_lc_sequence_dm(const SetSystem& d) {
    if (d.provenance() == Provenance::binary_normal) return summand_criterion(d);
    return search_full_lc_sequence_dm(d).has_value();
}

}  // namespace revgraph
