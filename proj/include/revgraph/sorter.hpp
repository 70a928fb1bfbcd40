#pragma once

#include <algorithm>
#include <iterator>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "revgraph/error.hpp"
#include "revgraph/fourreg.hpp"
#include "revgraph/graphs.hpp"
#include "revgraph/localcomp.hpp"
#include "revgraph/oracle.hpp"
#include "revgraph/perm.hpp"

namespace revgraph {

namespace detail {

/// Breakpoint labels of entry x (a marker of the framed circle, n+1 = $).
inline Vertex left_label(int x, std::size_t n) {
    const auto a = static_cast<std::size_t>(std::abs(x));
    return x > 0 ? (a - 1) : a % (n + 1);
}
inline Vertex right_label(int x, std::size_t n) {
    const auto a = static_cast<std::size_t>(std::abs(x));
    return x > 0 ? a % (n + 1) : (a - 1);
}

/// Element at framed position k (0 and n+1 are the anchor).
inline int framed_at(const SignedPermutation& p, std::size_t k) {
    return (k == 0 || k == p.size() + 1) ? static_cast<int>(p.size() + 1) : p.at(k);
}

}  // namespace detail

/// The reversal realising *_c at an oriented vertex v_i: the interval
/// between the two breakpoints of p that carry v_i.
inline ReversalInterval reversal_for_vertex(const SignedPermutation& p, Vertex v) {
    const std::size_t n = p.size();
    detail::require(v <= n, "vertex v" + std::to_string(v) + " does not exist for n = " + std::to_string(n));
    const LoopedGraph h = circle_graph(encode_permutation(p));
    detail::require(h.has_loop(v), "vertex " + h.label(v) + " is not oriented");

    std::vector<std::size_t> at;
    for (std::size_t k = 0; k <= n; ++k) {
        if (detail::right_label(detail::framed_at(p, k), n) == v) at.push_back(k);
        if (detail::left_label(detail::framed_at(p, k + 1), n) == v) at.push_back(k);
    }
    if (at.size() != 2 || at[0] == at[1]) throw std::logic_error("oriented vertex without two distinct breakpoints");
    return {at[0] + 1, at[1]};
}

struct ScriptStep {
    Vertex vertex = 0;
    ReversalInterval interval;
    SignedPermutation result;
};

struct ReversalScript {
    SignedPermutation start;
    std::vector<ScriptStep> steps;
    std::size_t claimed_distance = 0;

    /// Replays the intervals from `start`; true iff each recorded result
    /// matches and the last one is the identity.
    [[nodiscard]] bool replays() const {
        SignedPermutation cur = start;
        for (const auto& s : steps) {
            cur = apply_reversal(cur, s.interval);
            if (cur != s.result) return false;
        }
        return is_identity(cur);
    }
};

/// Sorts p by reversals following a greedy full lc-sequence of H_p, or
/// nullopt when H_p has no full lc-sequence. Each step re-derives the
/// circle graph and checks it equals H *_c v.
inline std::optional<ReversalScript> sort_by_reversals(const SignedPermutation& p) {
    LoopedGraph h = circle_graph(encode_permutation(p));
    if (!has_full_lc_sequence(h)) return std::nullopt;

    ReversalScript script{p, {}, 0};
    SignedPermutation cur = p;
    while (auto v = next_greedy_vertex(h)) {
        const ReversalInterval r = reversal_for_vertex(cur, *v);
        cur = apply_reversal(cur, r);
        LoopedGraph next = circle_graph(encode_permutation(cur));
        if (next != lc_strip(h, *v))
            throw std::logic_error("circle graph after reversal differs from H *_c " + h.label(*v));
        script.steps.push_back({*v, r, cur});
        h = std::move(next);
    }
    if (!is_identity(cur)) throw std::logic_error("greedy sorting ended away from the identity");
    script.claimed_distance = script.steps.size();
    return script;
}

/// Reference adjacencies (k, k+1), k = 0..n, present in p. 0 and n+1 both
/// stand for the anchor.
inline std::vector<std::size_t> sorted_adjacencies(const SignedPermutation& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= n; ++k) {
        const int a = detail::framed_at(p, k);
        const int b = detail::framed_at(p, k + 1);
        // a then b is a reference adjacency when both ends name the same vertex
        if (detail::right_label(a, n) == detail::left_label(b, n)) out.push_back(detail::right_label(a, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
inline std::string segment_name(std::size_t k, std::size_t n) {
    return (k == 0 || k == n + 1) ? "$" : std::to_string(k);
}
}  // namespace detail

/// One line per step in the style "reversal connecting 1 with 2".
inline std::string format_script(const ReversalScript& s) {
    std::ostringstream os;
    const std::size_t n = s.start.size();
    os << to_string(s.start) << '\n';
    SignedPermutation prev = s.start;
    for (const auto& step : s.steps) {
        const auto before = sorted_adjacencies(prev);
        const auto after = sorted_adjacencies(step.result);
        std::vector<std::size_t> fresh;
        std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(fresh));
        os << "  reversal " << step.interval << " at v" << step.vertex << ", connecting ";
        if (fresh.size() > 1) os << "both ";
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            if (i) os << " and ";
            if (fresh.size() > 1) os << '(' << std::string(i + 1, 'i') << ") ";
            os << detail::segment_name(fresh[i], n) << " with " << detail::segment_name(fresh[i] + 1, n);
        }
        if (fresh.empty()) os << "nothing";
        os << '\n' << to_string(step.result) << '\n';
        prev = step.result;
    }
    os << "distance " << s.claimed_distance << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Distance

enum class DistancePolicy { automatic, bound_only, oracle_only };
enum class DistanceMethod { hp_criterion, oracle, bound_only };

inline const char* to_string(DistancePolicy p) noexcept {
    switch (p) {
        case DistancePolicy::automatic: return "auto";
        case DistancePolicy::bound_only: return "bound_only";
        case DistancePolicy::oracle_only: return "oracle_only";
    }
    return "?";
}

inline const char* to_string(DistanceMethod m) noexcept {
    switch (m) {
        case DistanceMethod::hp_criterion: return "hp_criterion";
        case DistanceMethod::oracle: return "oracle";
        case DistanceMethod::bound_only: return "bound_only";
    }
    return "?";
}

inline DistancePolicy parse_policy(std::string_view s) {
    if (s == "auto") return DistancePolicy::automatic;
    if (s == "bound_only") return DistancePolicy::bound_only;
    if (s == "oracle_only") return DistancePolicy::oracle_only;
    detail::fail("unknown policy '" + std::string(s) + "'");
}

inline DistanceMethod parse_method(std::string_view s) {
    if (s == "hp_criterion") return DistanceMethod::hp_criterion;
    if (s == "oracle") return DistanceMethod::oracle;
    if (s == "bound_only") return DistanceMethod::bound_only;
    detail::fail("unknown method '" + std::string(s) + "'");
}

struct DistanceOptions {
    DistancePolicy policy = DistancePolicy::automatic;
    bool both_orientations = false;
    std::size_t oracle_cap = kReversalOracleCap;  ///< longest permutation handed to the oracle
};

struct DistanceReport {
    SignedPermutation permutation;
    std::size_t cycles = 0;
    std::size_t lower_bound = 0;  ///< n + 1 - c
    std::optional<std::size_t> exact;
    DistanceMethod method = DistanceMethod::bound_only;
    /// Empty, or the reports for p and its reverse complement.
    std::vector<DistanceReport> orientations;

    [[nodiscard]] std::size_t n() const noexcept { return permutation.size(); }

    /// Smaller exact distance over the two orientations (needs both), or
    /// this report's exact value when orientations were not requested.
    [[nodiscard]] std::optional<std::size_t> best_exact() const {
        if (orientations.empty()) return exact;
        std::optional<std::size_t> best;
        for (const auto& r : orientations) {
            if (!r.exact) return std::nullopt;
            best = best ? std::min(*best, *r.exact) : *r.exact;
        }
        return best;
    }

    friend bool operator==(const DistanceReport&, const DistanceReport&) = default;
};

namespace detail {
inline DistanceReport single_report(const SignedPermutation& p, const DistanceOptions& opt) {
    DistanceReport r;
    r.permutation = p;
    const PermEncoding enc = encode_permutation(p);
    r.cycles = enc.cycles();
    r.lower_bound = p.size() + 1 - r.cycles;

    auto run_oracle = [&]() -> bool {
        try {
            r.exact = brute_reversal_distance(p, opt.oracle_cap).distance;
            r.method = DistanceMethod::oracle;
            return true;
        } catch (const CapExceeded&) {
            return false;
        }
    };

    switch (opt.policy) {
        case DistancePolicy::bound_only:
            break;
        case DistancePolicy::oracle_only:
            if (!run_oracle())
                throw CapExceeded("oracle cannot decide n = " + std::to_string(p.size()) + " (cap n <= " +
                                  std::to_string(opt.oracle_cap) + ", budget " + std::to_string(kStateBudget) +
                                  " states)");
            break;
        case DistancePolicy::automatic:
            if (has_full_lc_sequence(circle_graph(enc))) {
                r.exact = r.lower_bound;
                r.method = DistanceMethod::hp_criterion;
            } else {
                run_oracle();
            }
            break;
    }
    return r;
}
}  // namespace detail

inline DistanceReport reversal_distance(const SignedPermutation& p, const DistanceOptions& opt = {}) {
    DistanceReport r = detail::single_report(p, opt);
    if (opt.both_orientations) {
        r.orientations.push_back(r);
        r.orientations.push_back(detail::single_report(reverse_complement(p), opt));
    }
    return r;
}

}  // namespace revgraph
