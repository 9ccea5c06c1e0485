#pragma once

// The symbol diagram of a regular factor: bullets on M, then repeatedly a
// cross on the largest empty place (k,t) followed by (-,+) pairs on
// (k,a), (a,t) for t < a < k whenever both places are still empty.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coadj/roots.hpp"
#include "coadj/weyl.hpp"

namespace coadj {

enum class Symbol { Bullet, Cross, Plus, Minus };

inline char symbol_char(Symbol s) {
    switch (s) {
        case Symbol::Bullet: return 'B';
        case Symbol::Cross: return 'X';
        case Symbol::Plus: return '+';
        case Symbol::Minus: return '-';
    }
    return '?';
}

inline std::string symbol_name(Symbol s) { return std::string(1, symbol_char(s)); }

struct Cell {
    Symbol symbol;
    int step;  // 0 for bullets, otherwise the step that filled the place
};

class Diagram {
public:
    int n() const { return n_; }

    /// Symbol and step of a positive root.
    const Cell& at(const Root& r) const {
        if (!r.valid_for(n_)) throw InputError("root " + to_string(r) + " outside the diagram");
        return *cells_[index(r)];
    }

    /// Crosses in decreasing scan order: xi_1 > xi_2 > ... > xi_s.
    const std::vector<Root>& crosses() const { return crosses_; }

    /// Number of cross steps, equal to |S|.
    int steps() const { return static_cast<int>(crosses_.size()); }

    /// Rebuilds a diagram from stored cells; every positive root must appear once.
    static Diagram from_cells(int n, const std::vector<std::pair<Root, Cell>>& cells) {
        if (n < 1) throw InputError("diagram size must be >= 1");
        Diagram d(n);
        std::vector<std::pair<int, Root>> crosses;
        for (const auto& [r, c] : cells) {
            if (!r.valid_for(n)) throw InputError("root " + to_string(r) + " outside the diagram");
            if (!d.empty(r.row, r.col)) throw InputError("duplicate cell " + to_string(r));
            d.put(r.row, r.col, c.symbol, c.step);
            if (c.symbol == Symbol::Cross) crosses.emplace_back(c.step, r);
        }
        for (const auto& r : positive_roots(n))
            if (d.empty(r.row, r.col)) throw InputError("missing cell " + to_string(r));
        std::sort(crosses.begin(), crosses.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < crosses.size(); ++i) {
            if (crosses[i].first != static_cast<int>(i) + 1) throw InputError("cross steps must be 1..|S|");
            d.crosses_.push_back(crosses[i].second);
        }
        return d;
    }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.n_ == b.n_ && a.crosses_ == b.crosses_ &&
               std::equal(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
                          [](const auto& x, const auto& y) {
                              return x.has_value() == y.has_value() &&
                                     (!x || (x->symbol == y->symbol && x->step == y->step));
                          });
    }

    friend Diagram build_diagram(const RegularIdeal& ideal);

private:
    explicit Diagram(int n) : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1)) {}
    std::size_t index(const Root& r) const { return static_cast<std::size_t>(r.row) * (n_ + 1) + r.col; }
    bool empty(int row, int col) const { return !cells_[index({row, col})].has_value(); }
    void put(int row, int col, Symbol s, int step) { cells_[index({row, col})] = Cell{s, step}; }

    int n_;
    std::vector<std::optional<Cell>> cells_;
    std::vector<Root> crosses_;
};

inline Diagram build_diagram(const RegularIdeal& ideal) {
    const int n = ideal.n();
    Diagram d(n);
    for (const auto& r : ideal.roots()) d.put(r.row, r.col, Symbol::Bullet, 0);
    const auto order = positive_roots(n);
    int step = 0;
    for (const auto& place : order) {
        if (!d.empty(place.row, place.col)) continue;
        // `place` is the largest empty place: every earlier place is filled.
        ++step;
        const int k = place.row;
        const int t = place.col;
        d.put(k, t, Symbol::Cross, step);
        d.crosses_.push_back(place);
        for (int a = t + 1; a < k; ++a) {
            if (d.empty(k, a) && d.empty(a, t)) {
                d.put(k, a, Symbol::Minus, step);
                d.put(a, t, Symbol::Plus, step);
            }
        }
    }
    return d;
}

struct DiagramCounts {
    int crosses = 0;
    int plus = 0;
    int minus = 0;
    int bullets = 0;
    int plus_minus() const { return plus + minus; }
    int total() const { return crosses + plus + minus + bullets; }
};

inline DiagramCounts diagram_counts(const Diagram& d) {
    DiagramCounts c;
    for (const auto& r : positive_roots(d.n())) {
        switch (d.at(r).symbol) {
            case Symbol::Bullet: ++c.bullets; break;
            case Symbol::Cross: ++c.crosses; break;
            case Symbol::Plus: ++c.plus; break;
            case Symbol::Minus: ++c.minus; break;
        }
    }
    return c;
}

/// Grid as n strings of n characters: '.' on and above the diagonal,
/// B/X/+/- for filled places, '_' for places still empty after `upto_step`.
inline std::vector<std::string> render_grid(const Diagram& d, int upto_step) {
    std::vector<std::string> lines;
    for (int i = 1; i <= d.n(); ++i) {
        std::string line;
        for (int j = 1; j <= d.n(); ++j) {
            if (i <= j) {
                line += '.';
                continue;
            }
            const Cell& c = d.at({i, j});
            line += c.step <= upto_step ? symbol_char(c.symbol) : '_';
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

inline std::vector<std::string> render_grid(const Diagram& d) { return render_grid(d, d.steps()); }

/// The symbol of eta = (b,t) read off from reflection products only:
///   '-'        iff w^[t-1](eta) < 0
///   bullet     iff w^[t](eta) > 0
///   '+' or X   iff w^[t-1](eta) > 0 and w^[t](eta) < 0,
/// with X exactly when eta is in S. Throws InvariantViolation when the
/// three conditions do not select exactly one class.
inline Symbol symbol_by_signs(const Diagram& d, const Root& eta) {
    if (!eta.valid_for(d.n())) throw InputError("root " + to_string(eta) + " outside the diagram");
    const WFamily fam(d.n(), d.crosses());
    const int t = eta.col;
    const bool before_pos = fam.upto(t - 1).maps_positive(eta);
    const bool after_pos = fam.upto(t).maps_positive(eta);
    const bool minus = !before_pos;
    const bool bullet = after_pos;
    const bool plus_or_cross = before_pos && !after_pos;
    if (int(minus) + int(bullet) + int(plus_or_cross) != 1)
        throw InvariantViolation("sign classes overlap at " + to_string(eta));
    if (minus) return Symbol::Minus;
    if (bullet) return Symbol::Bullet;
    return fam.in_s(eta) ? Symbol::Cross : Symbol::Plus;
}

inline Symbol symbol_by_signs(const RegularIdeal& ideal, const Root& eta) {
    return symbol_by_signs(build_diagram(ideal), eta);
}

}  // namespace coadj
