#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "coadj/coadj.hpp"

namespace oracle {

using coadj::Monomial;
using coadj::Polynomial;
using coadj::Rational;
using coadj::RegularIdeal;
using coadj::Root;

/// Polynomial in lambda with dense coefficient list, lambda^0 first.
using LambdaPoly = std::vector<Polynomial>;

inline LambdaPoly multiply(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.empty() || b.empty()) return {};
    LambdaPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline coadj::LambdaPolynomial to_lambda(const LambdaPoly& p) { return coadj::LambdaPolynomial(p); }

/// Entry (row, col) of Phi - lambda*E read straight off the definition.
inline LambdaPoly entry(const RegularIdeal& ideal, int row, int col) {
    if (row == col) return {Polynomial{}, Polynomial(-1)};
    if (row > col && !ideal.contains(row, col)) return {Polynomial::variable({row, col})};
    return {};
}

/// Leibniz formula: sum over all permutations with sign from the inversion count.
inline coadj::LambdaPolynomial naive_minor(const RegularIdeal& ideal, const coadj::MinorSpec& spec) {
    const std::size_t m = spec.rows.size();
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    LambdaPoly total;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        LambdaPoly term{Polynomial(inv % 2 == 0 ? 1 : -1)};
        for (std::size_t i = 0; i < m && !term.empty(); ++i)
            term = multiply(term, entry(ideal, spec.rows[i], spec.cols[perm[i]]));
        if (term.size() > total.size()) total.resize(term.size());
        for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return to_lambda(total);
}

/// Adds (i+1, j) and (i, j-1) until nothing changes.
inline std::set<std::pair<int, int>> brute_closure(int n, const std::vector<Root>& gens) {
    std::set<std::pair<int, int>> s;
    for (const auto& g : gens) s.insert({g.row, g.col});
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [i, j] : std::set<std::pair<int, int>>(s)) {
            if (i + 1 <= n && s.insert({i + 1, j}).second) changed = true;
            if (j - 1 >= 1 && s.insert({i, j - 1}).second) changed = true;
        }
    }
    return s;
}

inline std::set<std::pair<int, int>> as_pairs(const RegularIdeal& ideal) {
    std::set<std::pair<int, int>> s;
    for (const auto& r : ideal.roots()) s.insert({r.row, r.col});
    return s;
}

/// Every regular ideal for size n, by filtering all subsets of the positive
/// roots. Exponential; meant for n <= 5.
inline std::vector<RegularIdeal> all_ideals_by_subsets(int n) {
    std::vector<Root> roots;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) roots.push_back({i, j});
    std::vector<RegularIdeal> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << roots.size()); ++mask) {
        std::vector<Root> subset;
        for (std::size_t b = 0; b < roots.size(); ++b)
            if (mask >> b & 1) subset.push_back(roots[b]);
        if (brute_closure(n, subset).size() != subset.size()) continue;
        out.push_back(RegularIdeal::from_generators(n, subset, coadj::ClosureMode::Strict));
    }
    return out;
}

/// Every regular ideal for size n via its staircase: the first row of column j
/// inside M is non-decreasing in j. Fast for n <= 8.
inline std::vector<RegularIdeal> all_ideals(int n) {
    std::vector<RegularIdeal> out;
    std::vector<int> first(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int col) -> void {
        if (col >= n) {
            std::vector<Root> gens;
            for (int j = 1; j < n; ++j)
                if (first[static_cast<std::size_t>(j)] <= n) gens.push_back({first[static_cast<std::size_t>(j)], j});
            out.push_back(RegularIdeal::from_generators(n, gens));
            return;
        }
        const int lo = std::max(col + 1, col > 1 ? first[static_cast<std::size_t>(col - 1)] : 2);
        for (int r = lo; r <= n + 1; ++r) {
            first[static_cast<std::size_t>(col)] = r;
            self(self, col + 1);
        }
    };
    if (n == 1) out.push_back(RegularIdeal::from_generators(1, {}));
    else rec(rec, 1);
    return out;
}

/// Closure of a random set of generators; each root is picked with probability p.
inline RegularIdeal random_ideal(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution pick(p);
    std::vector<Root> gens;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (pick(rng)) gens.push_back({i, j});
    return RegularIdeal::from_generators(n, gens);
}

inline int inversions_by_pairs(const std::vector<int>& images) {
    int inv = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] > images[j]) ++inv;
    return inv;
}

/// Commutator of elementary matrices E_ij E_kl - E_kl E_ij, as (coefficient, root) terms.
inline std::vector<std::pair<int, Root>> matrix_commutator(const Root& a, const Root& b) {
    std::vector<std::pair<int, Root>> out;
    if (a.col == b.row) out.push_back({1, {a.row, b.col}});
    if (b.col == a.row) out.push_back({-1, {b.row, a.col}});
    return out;
}

/// Corner minor M_i: rows n-i+1..n, columns 1..i.
inline coadj::MinorSpec corner(int n, int i) {
    coadj::MinorSpec s;
    for (int k = 1; k <= i; ++k) {
        s.rows.push_back(n - i + k);
        s.cols.push_back(k);
    }
    return s;
}

}  // namespace oracle
