#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revgraph/error.hpp"

namespace revgraph {

/// A chromosome described relative to a sorted reference: a sequence of
/// nonzero signed integers whose absolute values are exactly 1..n.
class SignedPermutation {
public:
    SignedPermutation() = default;

    /// Validates that |values| is a permutation of 1..n with no zero entry.
    explicit SignedPermutation(std::vector<int> values) : values_(std::move(values)) {
        const auto n = values_.size();
        std::vector<bool> seen(n + 1, false);
        for (int v : values_) {
            detail::require(v != 0, "zero entry in signed permutation");
            const auto a = static_cast<std::size_t>(std::abs(v));
            detail::require(a <= n, "gap in signed permutation: value " + std::to_string(v) +
                                        " exceeds length " + std::to_string(n));
            detail::require(!seen[a], "duplicate absolute value " + std::to_string(a));
            seen[a] = true;
        }
    }

    static SignedPermutation identity(std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
        return SignedPermutation(std::move(v));
    }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] std::span<const int> values() const noexcept { return values_; }
    /// 1-based access, matching interval positions.
    [[nodiscard]] int at(std::size_t pos) const { return values_.at(pos - 1); }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> values_;
};

/// Positions start..end (1-based, inclusive) of a permutation.
struct ReversalInterval {
    std::size_t start = 1;
    std::size_t end = 1;

    friend bool operator==(const ReversalInterval&, const ReversalInterval&) = default;
};

inline std::string to_string(const SignedPermutation& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.values()[i]);
    }
    return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const SignedPermutation& p) {
    return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, const ReversalInterval& r) {
    return os << '[' << r.start << ',' << r.end << ']';
}

/// Parses a comma- and/or whitespace-separated list of signed integers,
/// optionally wrapped in parentheses.
inline SignedPermutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    auto is_sep = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' || c == ')';
    };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        std::string_view token = text.substr(i, j - i);
        std::string_view digits = token;
        if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            detail::fail("malformed token '" + std::string(token) + "' in permutation");
        values.push_back(value);
        i = j;
    }
    return SignedPermutation(std::move(values));
}

inline SignedPermutation apply_reversal(const SignedPermutation& p, ReversalInterval r) {
    detail::require(r.start >= 1 && r.start <= r.end && r.end <= p.size(),
                    "reversal interval [" + std::to_string(r.start) + "," + std::to_string(r.end) +
                        "] out of bounds for n = " + std::to_string(p.size()));
    std::vector<int> v(p.values().begin(), p.values().end());
    std::reverse(v.begin() + static_cast<std::ptrdiff_t>(r.start - 1),
                 v.begin() + static_cast<std::ptrdiff_t>(r.end));
    for (std::size_t k = r.start - 1; k < r.end; ++k) v[k] = -v[k];
    return SignedPermutation(std::move(v));
}

inline bool is_identity(const SignedPermutation& p) noexcept {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.values()[i] != static_cast<int>(i + 1)) return false;
    return true;
}

/// The same chromosome read from the other strand: (-p_n, ..., -p_1).
inline SignedPermutation reverse_complement(const SignedPermutation& p) {
    std::vector<int> v(p.values().rbegin(), p.values().rend());
    for (int& x : v) x = -x;
    return SignedPermutation(std::move(v));
}

/// All n(n+1)/2 intervals in lexicographic (start, end) order.
inline std::vector<ReversalInterval> all_intervals(std::size_t n) {
    std::vector<ReversalInterval> out;
    out.reserve(n * (n + 1) / 2);
    for (std::size_t s = 1; s <= n; ++s)
        for (std::size_t e = s; e <= n; ++e) out.push_back({s, e});
    return out;
}

}  // namespace revgraph
