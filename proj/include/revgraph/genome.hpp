#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revgraph/error.hpp"

namespace revgraph {

enum class Shape { linear, circular };

inline const char* to_string(Shape s) noexcept { return s == Shape::linear ? "linear" : "circular"; }

/// Markers are dense signed ids (+k / -k for marker k, 1-based) into the
/// owning genome's name table.
struct Chromosome {
    Shape shape = Shape::linear;
    std::vector<int> markers;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
    friend auto operator<=>(const Chromosome&, const Chromosome&) = default;
};

namespace detail {

inline std::vector<int> reverse_negate(const std::vector<int>& m) {
    std::vector<int> r(m.rbegin(), m.rend());
    for (int& x : r) x = -x;
    return r;
}

inline std::vector<int> least_rotation(const std::vector<int>& m) {
    std::vector<int> best = m;
    std::vector<int> cur = m;
    for (std::size_t i = 1; i < m.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace detail

/// Linear: least of the two strands. Circular: least rotation of either strand.
inline Chromosome canonical(const Chromosome& c) {
    Chromosome out{c.shape, {}};
    if (c.shape == Shape::linear) {
        out.markers = std::min(c.markers, detail::reverse_negate(c.markers));
    } else {
        out.markers = std::min(detail::least_rotation(c.markers),
                               detail::least_rotation(detail::reverse_negate(c.markers)));
    }
    return out;
}

/// A multichromosomal genome over a named marker universe. Every marker
/// occurs exactly once across all chromosomes.
class Genome {
public:
    Genome() = default;

    Genome(std::vector<std::string> names, std::vector<Chromosome> chromosomes)
        : names_(std::move(names)), chromosomes_(std::move(chromosomes)) {
        std::map<std::string_view, int> seen_names;
        for (const auto& n : names_) {
            detail::require(!n.empty() && n.front() != '-' && n.front() != '+',
                            "invalid marker name '" + n + "'");
            detail::require(seen_names.emplace(n, 0).second, "duplicate marker name '" + n + "'");
        }
        std::vector<bool> seen(names_.size() + 1, false);
        for (const auto& c : chromosomes_) {
            detail::require(!c.markers.empty(), "empty chromosome");
            for (int m : c.markers) {
                const auto a = static_cast<std::size_t>(std::abs(m));
                detail::require(m != 0 && a <= names_.size(), "marker id out of range");
                detail::require(!seen[a], "duplicate marker '" + names_[a - 1] + "'");
                seen[a] = true;
            }
        }
        for (std::size_t a = 1; a <= names_.size(); ++a)
            detail::require(seen[a], "marker '" + names_[a - 1] + "' does not occur in any chromosome");
    }

    /// Markers named "1".."n" by their ids.
    static Genome numbered(std::vector<Chromosome> chromosomes) {
        std::size_t n = 0;
        for (const auto& c : chromosomes) n += c.markers.size();
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
        return Genome(std::move(names), std::move(chromosomes));
    }

    [[nodiscard]] std::size_t marker_count() const noexcept { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    [[nodiscard]] const std::vector<Chromosome>& chromosomes() const noexcept { return chromosomes_; }

    [[nodiscard]] bool all_circular() const noexcept {
        return std::all_of(chromosomes_.begin(), chromosomes_.end(),
                           [](const Chromosome& c) { return c.shape == Shape::circular; });
    }

    /// Sorted multiset of canonical chromosomes; the same name table.
    [[nodiscard]] Genome canonical() const {
        Genome g;
        g.names_ = names_;
        for (const auto& c : chromosomes_) g.chromosomes_.push_back(revgraph::canonical(c));
        std::sort(g.chromosomes_.begin(), g.chromosomes_.end());
        return g;
    }

    [[nodiscard]] std::string marker_label(int m) const {
        return (m < 0 ? "-" : "") + names_.at(static_cast<std::size_t>(std::abs(m)) - 1);
    }

    /// Equality up to chromosome order, rotation of circular chromosomes,
    /// and reading either strand. Name tables must match exactly.
    friend bool operator==(const Genome& a, const Genome& b) {
        if (a.names_ != b.names_) return false;
        return a.canonical().chromosomes_ == b.canonical().chromosomes_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Chromosome> chromosomes_;
};

/// Re-expresses g over the name table `names` (same marker set, any order).
inline Genome relabel(const Genome& g, const std::vector<std::string>& names) {
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<int>(i + 1);
    detail::require(names.size() == g.marker_count(), "marker sets differ in size");
    std::vector<Chromosome> chroms;
    for (const auto& c : g.chromosomes()) {
        Chromosome out{c.shape, {}};
        for (int m : c.markers) {
            const auto& name = g.names()[static_cast<std::size_t>(std::abs(m)) - 1];
            auto it = id.find(name);
            detail::require(it != id.end(), "marker '" + name + "' missing from the other genome");
            out.markers.push_back(m < 0 ? -it->second : it->second);
        }
        chroms.push_back(std::move(out));
    }
    return Genome(names, std::move(chroms));
}

/// One chromosome per line: "L:" or "C:" followed by signed marker names
/// separated by whitespace or commas. ';' also ends a line.
inline Genome parse_genome(std::string_view text) {
    std::vector<std::string> names;
    std::map<std::string, int> id;
    std::vector<Chromosome> chroms;

    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find_first_of("\n;", pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty() || line.front() == '#') continue;

        const auto colon = line.find(':');
        detail::require(colon != std::string_view::npos,
                        "missing chromosome prefix in line '" + std::string(line) + "'");
        std::string_view prefix = trim(line.substr(0, colon));
        Chromosome c;
        if (prefix == "L" || prefix == "l") c.shape = Shape::linear;
        else if (prefix == "C" || prefix == "c") c.shape = Shape::circular;
        else detail::fail("unknown chromosome prefix '" + std::string(prefix) + "'");

        std::string_view rest = line.substr(colon + 1);
        std::size_t i = 0;
        while (i < rest.size()) {
            if (std::isspace(static_cast<unsigned char>(rest[i])) || rest[i] == ',') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j])) && rest[j] != ',') ++j;
            std::string_view tok = rest.substr(i, j - i);
            i = j;
            bool inverted = false;
            if (tok.front() == '-' || tok.front() == '+') {
                inverted = tok.front() == '-';
                tok.remove_prefix(1);
            }
            detail::require(!tok.empty(), "empty marker name");
            std::string name(tok);
            auto [it, inserted] = id.emplace(name, static_cast<int>(names.size() + 1));
            detail::require(inserted, "duplicate marker '" + name + "'");
            names.push_back(name);
            c.markers.push_back(inverted ? -it->second : it->second);
        }
        detail::require(!c.markers.empty(), "empty chromosome");
        chroms.push_back(std::move(c));
    }
    return Genome(std::move(names), std::move(chroms));
}

inline std::string to_string(const Genome& g) {
    std::string out;
    for (const auto& c : g.chromosomes()) {
        out += c.shape == Shape::linear ? "L:" : "C:";
        for (int m : c.markers) out += " " + g.marker_label(m);
        out += "\n";
    }
    return out;
}

}  // namespace revgraph
