#pragma once

// Positive roots of type A_{n-1}, the order used to scan the diagram,
// partial root addition and regular ideals.

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "coadj/errors.hpp"

namespace coadj {

/// Positive root (row, col) with row > col, labelling the matrix unit y[row,col].
struct Root {
    int row = 0;
    int col = 0;

    friend bool operator==(const Root&, const Root&) = default;

    bool valid_for(int n) const { return 1 <= col && col < row && row <= n; }
};

inline std::ostream& operator<<(std::ostream& os, const Root& r) {
    return os << '(' << r.row << ',' << r.col << ')';
}

inline std::string to_string(const Root& r) {
    return "(" + std::to_string(r.row) + "," + std::to_string(r.col) + ")";
}

/// Scan order: (n,1) > (n-1,1) > ... > (2,1) > (n,2) > ... > (n,n-1).
/// `greater` means a comes first.
inline std::strong_ordering compare_prec(const Root& a, const Root& b) {
    if (a.col != b.col) return b.col <=> a.col;
    return a.row <=> b.row;
}

inline bool prec_greater(const Root& a, const Root& b) { return compare_prec(a, b) > 0; }

/// Strict weak ordering placing the larger root first; use for containers.
struct PrecDescending {
    bool operator()(const Root& a, const Root& b) const { return prec_greater(a, b); }
};

/// a + b when the indices chain: (i,j)+(j,m) = (i,m), in either argument order.
inline std::optional<Root> root_sum(const Root& a, const Root& b) {
    if (a.col == b.row) return Root{a.row, b.col};
    if (b.col == a.row) return Root{b.row, a.col};
    return std::nullopt;
}

/// All positive roots of size n in decreasing scan order.
inline std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int col = 1; col < n; ++col)
        for (int row = n; row > col; --row) out.push_back({row, col});
    return out;
}

/// Set of positive roots for a fixed n, iterated in decreasing scan order.
class RootSet {
public:
    explicit RootSet(int n = 0) : n_(n) {}

    RootSet(int n, const std::vector<Root>& members) : n_(n) {
        for (const auto& r : members) insert(r);
    }

    int n() const { return n_; }

    void insert(const Root& r) {
        if (!r.valid_for(n_))
            throw InputError("root " + to_string(r) + " is not a positive root for n=" +
                             std::to_string(n_));
        members_.insert(r);
    }

    bool contains(const Root& r) const { return members_.count(r) != 0; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    std::vector<Root> to_vector() const { return {members_.begin(), members_.end()}; }

    friend bool operator==(const RootSet& a, const RootSet& b) {
        return a.n_ == b.n_ && a.members_ == b.members_;
    }

private:
    int n_;
    std::set<Root, PrecDescending> members_;
};

enum class ClosureMode { Close, Strict };

/// Root set M spanning an ideal of the unitriangular algebra: whenever a sum of
/// two positive roots has a summand in M, the sum is in M. Equivalently M is
/// stable under moving down a column and left along a row.
class RegularIdeal {
public:
    /// Ideal of n with no roots (L = n).
    explicit RegularIdeal(int n = 1) : roots_(n), mask_(grid_size(n), false) {
        if (n < 1) throw InputError("matrix size n must be >= 1");
    }

    int n() const { return roots_.n(); }
    const RootSet& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }

    bool contains(const Root& r) const {
        if (!r.valid_for(n())) return false;
        return mask_[index(r)];
    }
    bool contains(int row, int col) const { return contains(Root{row, col}); }

    /// dim L = |positive roots| - |M|.
    int quotient_dim() const { return n() * (n() - 1) / 2 - static_cast<int>(size()); }

    /// The closure of a generator set. In Strict mode a generator set that
    /// is not already closed is rejected instead.
    static RegularIdeal from_generators(int n, const std::vector<Root>& generators,
                                        ClosureMode mode = ClosureMode::Close);

    /// M = all positive roots (L = 0).
    /// M = all positive roots.
    static RegularIdeal full(int n) { return from_generators(n, positive_roots(n)); }

    friend bool operator==(const RegularIdeal& a, const RegularIdeal& b) { return a.roots_ == b.roots_; }

private:
    static std::size_t grid_size(int n) { return n > 0 ? static_cast<std::size_t>(n + 1) * (n + 1) : 0; }
    std::size_t index(const Root& r) const { return static_cast<std::size_t>(r.row) * (n() + 1) + r.col; }

    RootSet roots_;
    std::vector<bool> mask_;
};

/// Smallest closed superset of `generators`.
inline RegularIdeal close_ideal(int n, const RootSet& generators) {
    return RegularIdeal::from_generators(n, generators.to_vector());
}

/// True iff `roots` already satisfies the closure rule.
inline bool is_closed(const RootSet& roots) {
    for (const auto& r : roots) {
        if (r.row < roots.n() && !roots.contains({r.row + 1, r.col})) return false;
        if (r.col > 1 && !roots.contains({r.row, r.col - 1})) return false;
    }
    return true;
}

inline RegularIdeal RegularIdeal::from_generators(int n, const std::vector<Root>& generators,
                                                  ClosureMode mode) {
    RegularIdeal ideal(n);
    RootSet given(n, generators);
    if (mode == ClosureMode::Strict && !is_closed(given))
        throw InputError("ideal generators are not closed under root addition");
    // (i,j) in M forces every (i',j') with i' >= i, j' <= j.
    for (const auto& g : given)
        for (int row = g.row; row <= n; ++row)
            for (int col = 1; col <= g.col; ++col) {
                const Root r{row, col};
                if (!ideal.mask_[ideal.index(r)]) {
                    ideal.mask_[ideal.index(r)] = true;
                    ideal.roots_.insert(r);
                }
            }
    return ideal;
}

}  // namespace coadj
