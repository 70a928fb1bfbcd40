#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "revgraph/dcj.hpp"
#include "revgraph/error.hpp"
#include "revgraph/genome.hpp"
#include "revgraph/perm.hpp"

namespace revgraph {

/// Exact distance found by exhaustive search, with one optimal move
/// sequence and the number of states stored.
template <class Move>
struct OracleResult {
    std::size_t distance = 0;
    std::vector<Move> witness;
    std::size_t states_explored = 0;
};

using ReversalOracleResult = OracleResult<ReversalInterval>;
/// Witness lists the genome reached after each move.
using DcjOracleResult = OracleResult<Genome>;

enum class Search { bidirectional, plain };

/// Largest permutation length / marker count the searches accept.
inline constexpr std::size_t kReversalOracleCap = 9;
inline constexpr std::size_t kDcjOracleCap = 6;
/// Stored states (both sides) before a search gives up.
inline constexpr std::size_t kStateBudget = 6'000'000;
inline constexpr std::size_t kMaxPackedLength = 12;

namespace detail {

/// 5 bits per entry (value + 16).
inline std::uint64_t pack(const std::vector<int>& v) {
    std::uint64_t key = 0;
    for (int x : v) key = (key << 5) | static_cast<std::uint64_t>(x + 16);
    return key;
}

inline std::vector<int> unpack(std::uint64_t key, std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = n; i-- > 0;) {
        v[i] = static_cast<int>(key & 31U) - 16;
        key >>= 5;
    }
    return v;
}

inline std::uint64_t reverse_packed(std::uint64_t key, std::size_t n, std::size_t lo, std::size_t hi) {
    std::vector<int> v = unpack(key, n);
    std::reverse(v.begin() + static_cast<std::ptrdiff_t>(lo), v.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    for (std::size_t i = lo; i <= hi; ++i) v[i] = -v[i];
    return pack(v);
}

/// Parent pointers of one search side: state -> (neighbour nearer the root, move).
template <class State, class Move, class Hash = std::hash<State>>
using ParentMap = std::unordered_map<State, std::pair<State, Move>, Hash>;

/// Level-synchronous search from `from` towards `to` over an undirected
/// move graph. Returns the path as the sequence of (move, state reached).
template <class State, class Move, class Hash, class Expand>
std::pair<std::vector<std::pair<Move, State>>, std::size_t> shortest_path(const State& from, const State& to,
                                                                         std::size_t budget, Search mode,
                                                                         Expand expand, const std::string& what) {
    using Map = ParentMap<State, Move, Hash>;
    std::vector<std::pair<Move, State>> path;
    if (from == to) return {path, 1};

    Map fwd, bwd;
    fwd.emplace(from, std::pair<State, Move>{from, Move{}});
    bwd.emplace(to, std::pair<State, Move>{to, Move{}});
    std::vector<State> ffront{from}, bfront{to};
    std::size_t fdepth = 0, bdepth = 0;
    auto spend = [&] {
        if (fwd.size() + bwd.size() > budget)
            throw CapExceeded(what + " search exceeded its budget of " + std::to_string(budget) + " states");
    };

    auto unwind = [&](const State& meet_left, const Move& link, const State& meet_right) {
        std::vector<std::pair<Move, State>> left;
        for (State s = meet_left; !(s == from);) {
            const auto& [parent, mv] = fwd.at(s);
            left.emplace_back(mv, s);
            s = parent;
        }
        std::reverse(left.begin(), left.end());
        left.emplace_back(link, meet_right);
        for (State s = meet_right; !(s == to);) {
            const auto& [parent, mv] = bwd.at(s);
            left.emplace_back(mv, parent);
            s = parent;
        }
        return left;
    };

    const bool bidi = mode == Search::bidirectional;
    while (!ffront.empty() && (!bidi || !bfront.empty())) {
        const bool forward = !bidi || ffront.size() <= bfront.size();
        Map& mine = forward ? fwd : bwd;
        const Map& other = forward ? bwd : fwd;
        std::vector<State>& front = forward ? ffront : bfront;
        std::vector<State> next;
        bool found = false;
        std::size_t best = static_cast<std::size_t>(-1);
        std::vector<std::pair<Move, State>> best_path;

        for (const State& s : front) {
            expand(s, [&](const State& t, const Move& mv) {
                if (auto it = other.find(t); it != other.end()) {
                    // depth of t on the other side
                    std::size_t d = 0;
                    for (State u = t; !(u == (forward ? to : from)); u = other.at(u).first) ++d;
                    const std::size_t total = (forward ? fdepth : bdepth) + 1 + d;
                    if (total < best) {
                        best = total;
                        best_path = forward ? unwind(s, mv, t) : unwind(t, mv, s);
                        found = true;
                    }
                }
                if (!mine.count(t)) {
                    mine.emplace(t, std::pair<State, Move>{s, mv});
                    next.push_back(t);
                    spend();
                }
            });
        }
        if (found) return {best_path, fwd.size() + bwd.size()};
        front = std::move(next);
        (forward ? fdepth : bdepth) += 1;
    }
    throw Error(what + " target is unreachable");
}

inline std::vector<int> to_vector(const SignedPermutation& p) { return {p.values().begin(), p.values().end()}; }

}  // namespace detail

/// Exact reversal distance of p by breadth-first search towards the
/// identity. Throws CapExceeded when p is longer than `cap` or the search
/// outgrows `budget` states.
inline ReversalOracleResult brute_reversal_distance(const SignedPermutation& p, std::size_t cap = kReversalOracleCap,
                                                    Search mode = Search::bidirectional,
                                                    std::size_t budget = kStateBudget) {
    const std::size_t n = p.size();
    if (n > std::min(cap, kMaxPackedLength))
        throw CapExceeded("reversal oracle is capped at n = " + std::to_string(std::min(cap, kMaxPackedLength)) +
                          ", got n = " + std::to_string(n));
    const auto intervals = all_intervals(n);
    auto expand = [&](std::uint64_t s, auto&& visit) {
        for (const auto& r : intervals) visit(detail::reverse_packed(s, n, r.start - 1, r.end - 1), r);
    };
    auto [path, explored] = detail::shortest_path<std::uint64_t, ReversalInterval, std::hash<std::uint64_t>>(
        detail::pack(detail::to_vector(p)), detail::pack(detail::to_vector(SignedPermutation::identity(n))), budget,
        mode, expand, "reversal");
    ReversalOracleResult out;
    out.distance = path.size();
    for (auto& [mv, st] : path) out.witness.push_back(mv);
    out.states_explored = explored;
    return out;
}

/// Distance from the identity to every signed permutation of size n.
class ReversalDistanceTable {
public:
    explicit ReversalDistanceTable(std::size_t n) : n_(n) {
        detail::require(n <= 7, "exhaustive reversal table is limited to n <= 7");
        const auto intervals = all_intervals(n);
        std::vector<std::uint64_t> front{detail::pack(detail::to_vector(SignedPermutation::identity(n)))};
        dist_.emplace(front.front(), 0);
        for (std::size_t d = 1; !front.empty(); ++d) {
            std::vector<std::uint64_t> next;
            for (auto s : front)
                for (const auto& r : intervals) {
                    auto t = detail::reverse_packed(s, n, r.start - 1, r.end - 1);
                    if (dist_.emplace(t, d).second) next.push_back(t);
                }
            front = std::move(next);
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return dist_.size(); }
    [[nodiscard]] std::size_t distance(const SignedPermutation& p) const {
        detail::require(p.size() == n_, "permutation size does not match the table");
        return dist_.at(detail::pack(detail::to_vector(p)));
    }
    [[nodiscard]] std::size_t diameter() const {
        std::size_t d = 0;
        for (const auto& [k, v] : dist_) d = std::max(d, v);
        return d;
    }

private:
    std::size_t n_;
    std::unordered_map<std::uint64_t, std::size_t> dist_;
};

inline ReversalDistanceTable all_reversal_distances(std::size_t n) { return ReversalDistanceTable(n); }

/// Calls fn for every signed permutation of size n: absolute values in
/// lexicographic order, then sign masks 0..2^n-1 (bit i negates entry i).
template <class Fn>
void for_each_signed_permutation(std::size_t n, Fn&& fn) {
    detail::require(n <= 7, "signed permutation enumeration is limited to n <= 7");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    do {
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            std::vector<int> v = base;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1U << i)) v[i] = -v[i];
            fn(SignedPermutation(std::move(v)));
        }
    } while (std::next_permutation(base.begin(), base.end()));
}

inline std::vector<SignedPermutation> enumerate_signed_permutations(std::size_t n) {
    std::vector<SignedPermutation> out;
    for_each_signed_permutation(n, [&](SignedPermutation p) { out.push_back(std::move(p)); });
    return out;
}

namespace detail {
struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 2)) * 1099511628211ULL;
        return h;
    }
};
struct NoMove {};
}  // namespace detail

/// Exact DCJ distance between two genomes over the same markers; at most
/// `cap` markers.
inline DcjOracleResult brute_dcj_distance(const Genome& ga, const Genome& gb, std::size_t cap = kDcjOracleCap,
                                          Search mode = Search::bidirectional, std::size_t budget = kStateBudget) {
    if (ga.marker_count() > cap)
        throw CapExceeded("DCJ oracle is capped at " + std::to_string(cap) + " markers, got " +
                          std::to_string(ga.marker_count()));
    const Genome target = relabel(gb, ga.names());
    auto expand = [](const std::vector<int>& s, auto&& visit) {
        for (const auto& t : detail::dcj_neighbors(s)) visit(t, detail::NoMove{});
    };
    auto [path, explored] = detail::shortest_path<std::vector<int>, detail::NoMove, detail::VectorHash>(
        AdjacencySet::from_genome(ga).partners(), AdjacencySet::from_genome(target).partners(), budget, mode, expand,
        "DCJ");
    DcjOracleResult out;
    out.distance = path.size();
    for (auto& [mv, st] : path) out.witness.push_back(AdjacencySet(st).to_genome(ga.names()));
    out.states_explored = explored;
    return out;
}

}  // namespace revgraph
