#pragma once

// Permutations attached to a regular factor: the greedy permutation w,
// products of the reflections r_xi over the cross set S, and the chain /
// segment data used to predict the lambda-degree of a case-2 minor.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "coadj/errors.hpp"
#include "coadj/roots.hpp"

namespace coadj {

/// Bijection of {1..n}.
class Permutation {
public:
    /// Identity of size n.
    explicit Permutation(int n = 0) : images_(static_cast<std::size_t>(n)) {
        std::iota(images_.begin(), images_.end(), 1);
    }

    /// From one-line notation (w(1), ..., w(n)).
    static Permutation from_images(std::vector<int> images) {
        Permutation p;
        std::vector<bool> seen(images.size() + 1, false);
        for (int v : images) {
            if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
                throw InputError("not a permutation of 1..n");
            seen[static_cast<std::size_t>(v)] = true;
        }
        p.images_ = std::move(images);
        return p;
    }

    /// Transposition r_xi swapping xi.row and xi.col.
    static Permutation reflection(int n, const Root& xi) {
        Permutation p(n);
        std::swap(p.images_[static_cast<std::size_t>(xi.row - 1)], p.images_[static_cast<std::size_t>(xi.col - 1)]);
        return p;
    }

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// (this * other)(x) = this(other(x)).
    Permutation operator*(const Permutation& other) const {
        Permutation out(n());
        for (int x = 1; x <= n(); ++x) out.images_[static_cast<std::size_t>(x - 1)] = (*this)(other(x));
        return out;
    }

    /// w(i,j) = (w(i), w(j)) is positive iff w(i) > w(j).
    bool maps_positive(const Root& r) const { return (*this)(r.row) > (*this)(r.col); }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

inline std::string to_string(const Permutation& w) {
    std::string out = "(";
    for (int i = 1; i <= w.n(); ++i) out += (i > 1 ? "," : "") + std::to_string(w(i));
    return out + ")";
}

/// Number of pairs i < j with w(i) > w(j).
inline int inversions(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

/// w(t) = max{ i unused : (i,t) not in M }, chosen for t = 1..n in turn.
inline Permutation build_w(const RegularIdeal& ideal) {
    const int n = ideal.n();
    std::vector<int> images;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int t = 1; t <= n; ++t) {
        int pick = 0;
        for (int i = n; i >= 1; --i) {
            if (used[static_cast<std::size_t>(i)] || ideal.contains(i, t)) continue;
            pick = i;
            break;
        }
        if (pick == 0) throw InvariantViolation("greedy permutation has no candidate");
        used[static_cast<std::size_t>(pick)] = true;
        images.push_back(pick);
    }
    return Permutation::from_images(std::move(images));
}

/// r_{roots[0]} r_{roots[1]} ... with the rightmost factor applied first.
/// The list must be strictly decreasing in scan order.
inline Permutation reflection_product(int n, std::span<const Root> roots) {
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (!prec_greater(roots[i - 1], roots[i]))
            throw InputError("reflection factors must be strictly decreasing in scan order");
    Permutation out(n);
    for (const auto& r : roots) {
        if (!r.valid_for(n)) throw InputError("root " + to_string(r) + " invalid for n=" + std::to_string(n));
        out = out * Permutation::reflection(n, r);
    }
    return out;
}

/// Partial reflection products over the cross list S (sorted decreasingly):
///   column(t)   = product over S in column t
///   upto(t)     = product over S in columns <= t
///   at(xi)      = product over xi' in S with xi' >= xi
///   at_column(xi) = product over xi' in S in xi's column with xi' >= xi
class WFamily {
public:
    WFamily(int n, std::vector<Root> crosses) : n_(n), s_(std::move(crosses)) {
        reflection_product(n_, s_);  // validates order
    }

    int n() const { return n_; }
    const std::vector<Root>& crosses() const { return s_; }

    bool in_s(const Root& xi) const { return std::find(s_.begin(), s_.end(), xi) != s_.end(); }

    Permutation column(int t) const {
        return product([t](const Root& r) { return r.col == t; });
    }
    Permutation upto(int t) const {
        return product([t](const Root& r) { return r.col <= t; });
    }
    Permutation at(const Root& xi) const {
        require(xi);
        return product([&xi](const Root& r) { return compare_prec(r, xi) >= 0; });
    }
    Permutation at_column(const Root& xi) const {
        require(xi);
        return product([&xi](const Root& r) { return r.col == xi.col && compare_prec(r, xi) >= 0; });
    }
    Permutation full() const { return reflection_product(n_, s_); }

    /// Least element of S in columns <= t, if any.
    std::optional<Root> least_upto(int t) const {
        std::optional<Root> out;
        for (const auto& r : s_)
            if (r.col <= t) out = r;
        return out;
    }

private:
    template <class Pred>
    Permutation product(Pred keep) const {
        std::vector<Root> chosen;
        for (const auto& r : s_)
            if (keep(r)) chosen.push_back(r);
        return reflection_product(n_, chosen);
    }
    void require(const Root& xi) const {
        if (!in_s(xi)) throw InputError("root " + to_string(xi) + " is not a cross of the diagram");
    }

    int n_;
    std::vector<Root> s_;
};

// ---------------------------------------------------------------------------
// Chains and the E = F + D split for a cross xi = (k,t) with h = w_xi(t) < t.

/// The sequence i_0 = i, i_1, i_2, ... obtained by pushing i through the
/// column products from column t (restricted to xi) down to column 1 when
/// i > t, or from column i-1 down to column 1 when i <= t.
inline std::vector<int> column_descent_sequence(int i, const Root& xi, const WFamily& fam) {
    std::vector<int> seq{i};
    int x = i;
    int first_col;
    if (i > xi.col) {
        x = fam.at_column(xi)(x);
        seq.push_back(x);
        first_col = xi.col - 1;
    } else {
        first_col = i - 1;
    }
    for (int col = first_col; col >= 1; --col) {
        x = fam.column(col)(x);
        seq.push_back(x);
    }
    return seq;
}

/// i' : the first value of the descent sequence below i, or 0 if none.
/// Every earlier value is >= i, and i' is the column index where i is
/// reflected down.
inline int chain_successor(int i, const Root& xi, const WFamily& fam) {
    for (int v : column_descent_sequence(i, xi, fam))
        if (v < i) return v;
    return 0;
}

namespace detail {

struct CrossGeometry {
    int h = 0;            // w_xi(t)
    int c = 0;            // first column of J
    std::vector<int> j;   // J(xi)
};

inline CrossGeometry cross_geometry(const Root& xi, const WFamily& fam) {
    const Permutation wx = fam.at(xi);
    CrossGeometry g;
    g.h = wx(xi.col);
    for (int j = 1; j <= xi.col; ++j)
        if (wx(j) >= g.h) g.j.push_back(j);
    g.c = g.j.empty() ? xi.col : g.j.front();
    return g;
}

}  // namespace detail

/// Descending chain i > i' > i'' > ... ending at the first value in
/// F0 = [c, h). Requires xi in case 2 (h < t) and h <= i.
inline std::vector<int> chain_of(int i, const Root& xi, const WFamily& fam) {
    const auto g = detail::cross_geometry(xi, fam);
    if (g.h > xi.col) throw InputError("chains are defined only for crosses with w_xi(t) < t");
    if (i < g.h || i > fam.n()) throw InputError("chain start " + std::to_string(i) + " outside [h, n]");
    if (chain_successor(i, xi, fam) == 0)
        throw InputError("row " + std::to_string(i) + " has no descent for " + to_string(xi));
    std::vector<int> chain{i};
    int cur = i;
    while (!(g.c <= cur && cur < g.h)) {
        const int next = chain_successor(cur, xi, fam);
        if (next == 0 || next < g.c)
            throw InvariantViolation("chain from " + std::to_string(i) + " misses [c,h) for " + to_string(xi));
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

struct Segment {
    int first = 0;
    int last = 0;
    int size() const { return last - first + 1; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Segment data of a case-2 cross.
struct FDData {
    Root xi;
    int h = 0;
    int c = 0;
    int a_t = 0;                      // largest row of column t outside M
    Segment e;                        // E = [h, a_t]
    std::vector<int> i_star;          // rows t < i with w_xi(i) < h
    std::vector<std::vector<int>> chains;  // one per element of i_star
    std::vector<int> f;               // chain-covered part of E
    std::vector<int> d;               // E \ F
    std::vector<Segment> d_segments;  // D_1 < D_2 < ... < D_l
    std::vector<Segment> f_segments;  // F_1 < F_2 < ... < F_l
    int nu = 0;                       // largest count with D_1..D_nu inside J
    int d_star = 0;                   // |D_1| + ... + |D_nu|

    friend bool operator==(const FDData&, const FDData&) = default;
};

inline FDData fd_data(const Root& xi, const RegularIdeal& ideal, const WFamily& fam, std::span<const int> j_cols) {
    const int n = ideal.n();
    const int t = xi.col;
    const Permutation wx = fam.at(xi);
    FDData out;
    out.xi = xi;
    out.h = wx(t);
    if (out.h > t) throw InputError("fd_data requires a case-2 cross; " + to_string(xi) + " is case 1");
    if (j_cols.empty()) throw InvariantViolation("empty column set J");
    out.c = j_cols.front();
    for (std::size_t a = 0; a < j_cols.size(); ++a)
        if (j_cols[a] != out.c + static_cast<int>(a) || j_cols.back() != t)
            throw InvariantViolation("J is not the segment [c,t] for " + to_string(xi));

    out.a_t = t;
    for (int i = n; i > t; --i)
        if (!ideal.contains(i, t)) {
            out.a_t = i;
            break;
        }
    out.e = {out.h, out.a_t};

    for (int i = t + 1; i <= n; ++i)
        if (wx(i) < out.h) out.i_star.push_back(i);

    std::set<int> covered;
    std::set<int> endpoints;
    for (int i : out.i_star) {
        auto chain = chain_of(i, xi, fam);
        for (int v : chain)
            if (!covered.insert(v).second)
                throw InvariantViolation("chains of " + to_string(xi) + " intersect at " + std::to_string(v));
        endpoints.insert(chain.back());
        out.chains.push_back(std::move(chain));
    }
    if (static_cast<int>(endpoints.size()) != out.h - out.c)
        throw InvariantViolation("chain endpoints do not exhaust [c,h) for " + to_string(xi));

    for (int a = out.h; a <= out.a_t; ++a) (covered.count(a) ? out.f : out.d).push_back(a);

    // Maximal runs of E, alternating between D and F.
    for (int a = out.h; a <= out.a_t;) {
        const bool in_f = covered.count(a) != 0;
        int b = a;
        while (b + 1 <= out.a_t && (covered.count(b + 1) != 0) == in_f) ++b;
        (in_f ? out.f_segments : out.d_segments).push_back({a, b});
        a = b + 1;
    }

    auto in_f = [&](int v) { return covered.count(v) != 0; };
    if (in_f(out.h)) throw InvariantViolation("h lies in F for " + to_string(xi));
    if (!in_f(t)) throw InvariantViolation("t lies in D for " + to_string(xi));
    for (int i : out.i_star)
        if (!in_f(i)) throw InvariantViolation("I_* not inside F for " + to_string(xi));
    if (out.d_segments.size() != out.f_segments.size() || !in_f(out.a_t))
        throw InvariantViolation("E does not split as D_1 < F_1 < ... < D_l < F_l for " + to_string(xi));

    for (const auto& seg : out.d_segments) {
        if (seg.last > t) break;
        ++out.nu;
        out.d_star += seg.size();
    }
    return out;
}

}  // namespace coadj
