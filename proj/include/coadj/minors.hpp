#pragma once

// Minors of the characteristic matrix Phi_L - lambda*E. Phi_L carries y[i,j]
// below the diagonal outside M and zeros elsewhere.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coadj/polynomial.hpp"
#include "coadj/roots.hpp"

namespace coadj {

class CharMatrix {
public:
    enum class Kind { Zero, Var, Diagonal };

    explicit CharMatrix(RegularIdeal ideal) : ideal_(std::move(ideal)) {}

    int n() const { return ideal_.n(); }
    const RegularIdeal& ideal() const { return ideal_; }

    /// Entry of Phi_L - lambda*E; the diagonal carries -lambda.
    Kind kind(int row, int col) const {
        if (row == col) return Kind::Diagonal;
        if (row < col || ideal_.contains(row, col)) return Kind::Zero;
        return Kind::Var;
    }

private:
    RegularIdeal ideal_;
};

inline CharMatrix build_phi(const RegularIdeal& ideal) { return CharMatrix(ideal); }

/// Rows I and columns J of a minor, both ascending.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;
    friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
    friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

inline std::string to_string(const MinorSpec& s) {
    auto list = [](const std::vector<int>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out + "}";
    };
    return "I=" + list(s.rows) + " J=" + list(s.cols);
}

inline void validate_spec(const MinorSpec& s, int n) {
    if (s.rows.size() != s.cols.size()) throw InputError("minor needs |I| = |J|: " + to_string(s));
    auto check = [n, &s](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > n) throw InputError("index out of range in " + to_string(s));
            if (i > 0 && v[i] <= v[i - 1]) throw InputError("indices must be strictly ascending in " + to_string(s));
        }
    };
    check(s.rows);
    check(s.cols);
    if (s.rows.size() > 20) throw ResourceError("minor too large for subset expansion");
}

/// Determinant of the I x J submatrix of Phi_L - lambda*E, as a polynomial in
/// lambda. Expands row by row over subsets of used columns.
inline LambdaPolynomial minor_lambda(const CharMatrix& phi, const MinorSpec& spec) {
    validate_spec(spec, phi.n());
    const std::size_t m = spec.rows.size();
    if (m == 0) return LambdaPolynomial(Polynomial(1));
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<std::optional<LambdaPolynomial>> dp(full + 1);
    dp[0] = LambdaPolynomial(Polynomial(1));
    // Masks with r bits are complete once all rows < r are processed; walking
    // masks in increasing numeric order visits every subset after its subsets.
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!dp[mask] || dp[mask]->is_zero()) continue;
        const auto r = static_cast<std::size_t>(std::popcount(mask));
        const int row = spec.rows[r];
        for (std::size_t c = 0; c < m; ++c) {
            const std::uint32_t bit = std::uint32_t{1} << c;
            if (mask & bit) continue;
            const int col = spec.cols[c];
            const auto kind = phi.kind(row, col);
            if (kind == CharMatrix::Kind::Zero) continue;
            // Earlier rows took the columns in `mask`; each of them to the
            // right of c is one inversion.
            const int sign = (std::popcount(mask >> (c + 1)) % 2 == 0) ? 1 : -1;
            LambdaPolynomial term = kind == CharMatrix::Kind::Var
                                        ? dp[mask]->times(Monomial(Root{row, col}), sign)
                                        : dp[mask]->times_lambda(-sign);
            auto& slot = dp[mask | bit];
            if (slot) *slot += term;
            else slot = std::move(term);
        }
        dp[mask].reset();
    }
    return dp[full] ? *dp[full] : LambdaPolynomial{};
}

enum class ShiftDirection { Left, Down };

/// Down: replace row i by i+1 when i in I and i+1 not in I.
/// Left: replace column i+1 by i when i+1 in J and i not in J.
/// Absent in every other case.
inline std::optional<MinorSpec> shift_minor(const MinorSpec& spec, int i, ShiftDirection dir) {
    auto has = [](const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); };
    auto replace = [](std::vector<int> v, int from, int to) {
        *std::find(v.begin(), v.end(), from) = to;
        std::sort(v.begin(), v.end());
        return v;
    };
    MinorSpec out = spec;
    if (dir == ShiftDirection::Down) {
        if (!has(spec.rows, i) || has(spec.rows, i + 1)) return std::nullopt;
        out.rows = replace(spec.rows, i, i + 1);
    } else {
        if (!has(spec.cols, i + 1) || has(spec.cols, i)) return std::nullopt;
        out.cols = replace(spec.cols, i + 1, i);
    }
    return out;
}

namespace detail {

/// Memoised minor degrees for one characteristic matrix.
class DegreeCache {
public:
    explicit DegreeCache(const CharMatrix& phi) : phi_(phi) {}
    int degree(const MinorSpec& s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        const int d = minor_lambda(phi_, s).degree();
        cache_.emplace(s, d);
        return d;
    }

private:
    const CharMatrix& phi_;
    std::map<MinorSpec, int> cache_;
};

inline bool is_extremal_with(detail::DegreeCache& cache, int n, const MinorSpec& spec, int degree) {
    for (int i = 1; i < n; ++i) {
        for (auto dir : {ShiftDirection::Down, ShiftDirection::Left}) {
            auto shifted = shift_minor(spec, i, dir);
            if (!shifted) continue;
            if (cache.degree(*shifted) >= degree) return false;  // zero shift has degree -1
        }
    }
    return true;
}

}  // namespace detail

/// A nonzero minor is extremal when every row-down and column-left shift
/// strictly lowers its lambda-degree (a vanishing shift counts as lower).
inline bool is_extremal(const CharMatrix& phi, const MinorSpec& spec) {
    const auto minor = minor_lambda(phi, spec);
    if (minor.is_zero()) throw InputError("extremality is defined only for nonzero minors");
    detail::DegreeCache cache(phi);
    return detail::is_extremal_with(cache, phi.n(), spec, minor.degree());
}

struct ExtremalEntry {
    MinorSpec spec;
    int degree = 0;
    bool extremal = true;
    friend bool operator==(const ExtremalEntry&, const ExtremalEntry&) = default;
};

inline double binomial(int n, int k) {
    double out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

/// Every extremal minor with 1 <= |I| <= max_size whose highest coefficient
/// is not a constant, sorted by size then (I, J).
/// The scan visits sum_k C(n,k)^2 specs; exceeding `budget` throws ResourceError.
inline std::vector<ExtremalEntry> enumerate_extremal(const RegularIdeal& ideal, int max_size, double budget = 200000) {
    const int n = ideal.n();
    max_size = std::min(max_size, n);
    double work = 0;
    for (int k = 1; k <= max_size; ++k) work += binomial(n, k) * binomial(n, k);
    if (work > budget)
        throw ResourceError("extremal scan needs " + std::to_string(static_cast<long long>(work)) +
                            " minors, budget is " + std::to_string(static_cast<long long>(budget)));
    const CharMatrix phi(ideal);
    detail::DegreeCache cache(phi);
    std::vector<ExtremalEntry> out;
    for (int k = 1; k <= max_size; ++k) {
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        auto gen = [&](auto&& self, int next) -> void {
            if (static_cast<int>(cur.size()) == k) {
                subsets.push_back(cur);
                return;
            }
            for (int v = next; v <= n; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        gen(gen, 1);
        for (const auto& rows : subsets)
            for (const auto& cols : subsets) {
                MinorSpec spec{rows, cols};
                const int d = cache.degree(spec);
                if (d < 0) continue;
                if (!detail::is_extremal_with(cache, n, spec, d)) continue;
                if (minor_lambda(phi, spec).leading().degree() < 1) continue;  // constant, no invariant
                out.push_back({spec, d, true});
            }
    }
    return out;
}

}  // namespace coadj
