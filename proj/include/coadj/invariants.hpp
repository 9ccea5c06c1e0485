#pragma once

// For each cross xi = (k,t) of the diagram: the columns J(xi), rows I(xi),
// the minor M_xi(lambda) of Phi_L - lambda*E and its highest coefficient P_xi,
// an invariant of the coadjoint representation.
//
// With h = w_xi(t):
//   case 1 (h > t, then h = k):  J = {j <= t : w_xi(j) >= h},  I = w_xi(J)
//   case 2 (h < t):              J as above,  I = [h,t] + {i > t : w_xi(i) < h}

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coadj/diagram.hpp"
#include "coadj/minors.hpp"
#include "coadj/polynomial.hpp"
#include "coadj/weyl.hpp"

namespace coadj {

enum class CrossCase { One = 1, Two = 2 };

struct InvariantRecord {
    Root xi;
    CrossCase cross_case = CrossCase::One;
    int h = 0;
    std::vector<int> cols;  // J
    std::vector<int> rows;  // I
    LambdaPolynomial minor;
    int degree = 0;
    Polynomial p;           // highest coefficient, leading term positive
    std::optional<int> d_star;
    bool extremal = false;

    MinorSpec spec() const { return {rows, cols}; }
    friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

struct CaseInfo {
    int h = 0;
    CrossCase cross_case = CrossCase::One;
};

inline CaseInfo case_of(const Root& xi, const WFamily& fam) {
    const int h = fam.at(xi)(xi.col);  // throws if xi not in S
    if (h == xi.col) throw InvariantViolation("w_xi(t) = t for " + to_string(xi));
    if (h > xi.col && h != xi.row) throw InvariantViolation("case 1 with h != k for " + to_string(xi));
    return {h, h > xi.col ? CrossCase::One : CrossCase::Two};
}

/// (J, I) for a cross.
inline std::pair<std::vector<int>, std::vector<int>> column_rows(const Root& xi, const WFamily& fam) {
    const auto info = case_of(xi, fam);
    const Permutation wx = fam.at(xi);
    const int t = xi.col;
    std::vector<int> cols;
    for (int j = 1; j <= t; ++j)
        if (wx(j) >= info.h) cols.push_back(j);
    std::vector<int> rows;
    if (info.cross_case == CrossCase::One) {
        for (int j : cols) rows.push_back(wx(j));
    } else {
        for (int i = info.h; i <= t; ++i) rows.push_back(i);
        for (int i = t + 1; i <= fam.n(); ++i)
            if (wx(i) < info.h) rows.push_back(i);
    }
    std::sort(rows.begin(), rows.end());
    if (rows.size() != cols.size())
        throw InvariantViolation("|I| != |J| for " + to_string(xi));
    if (cols.empty() || cols.back() != t || cols.back() - cols.front() + 1 != static_cast<int>(cols.size()))
        throw InvariantViolation("J is not a segment [c,t] for " + to_string(xi));
    return {std::move(cols), std::move(rows)};
}

/// Flips the sign so that the leading term in canonical order is positive.
inline Polynomial normalize_sign(const Polynomial& p) {
    if (!p.is_zero() && p.leading().second < 0) return -p;
    return p;
}

inline InvariantRecord invariant_for(const Root& xi, const RegularIdeal& ideal, const WFamily& fam) {
    InvariantRecord rec;
    rec.xi = xi;
    const auto info = case_of(xi, fam);
    rec.h = info.h;
    rec.cross_case = info.cross_case;
    std::tie(rec.cols, rec.rows) = column_rows(xi, fam);

    const CharMatrix phi(ideal);
    rec.minor = minor_lambda(phi, rec.spec());
    if (rec.minor.is_zero()) throw InvariantViolation("minor vanishes for " + to_string(xi));
    rec.degree = rec.minor.degree();
    rec.p = normalize_sign(rec.minor.leading());

    if (rec.cross_case == CrossCase::One) {
        if (rec.degree != 0)
            throw InvariantViolation("case-1 minor of " + to_string(xi) + " has lambda-degree " +
                                     std::to_string(rec.degree));
    } else {
        rec.d_star = fd_data(xi, ideal, fam, rec.cols).d_star;
        if (rec.degree != *rec.d_star)
            throw InvariantViolation("minor of " + to_string(xi) + " has degree " + std::to_string(rec.degree) +
                                     " but d_* = " + std::to_string(*rec.d_star));
    }
    rec.extremal = is_extremal(phi, rec.spec());
    if (!rec.extremal) throw InvariantViolation("minor of " + to_string(xi) + " is not extremal");
    return rec;
}

/// One record per cross, in decreasing scan order.
inline std::vector<InvariantRecord> all_invariants(const RegularIdeal& ideal) {
    const Diagram d = build_diagram(ideal);
    const WFamily fam(ideal.n(), d.crosses());
    std::vector<InvariantRecord> out;
    for (const auto& xi : d.crosses()) out.push_back(invariant_for(xi, ideal, fam));
    return out;
}

struct Triangular {
    Polynomial q;
    Polynomial r;
};

/// P = y_xi * Q + R with Q, R free of y_xi and built only from y[i,j] with
/// j < t, or j = t and i > k. Throws InvariantViolation otherwise.
inline Triangular triangular_decomposition(const InvariantRecord& rec) {
    const Root xi = rec.xi;
    Triangular out;
    for (const auto& [m, c] : rec.p.terms()) {
        const int e = m.exponent(xi);
        if (e > 1) throw InvariantViolation("P is not linear in y" + to_string(xi));
        (e == 1 ? out.q : out.r).add_term(m.without(xi), c);
    }
    if (out.q.is_zero()) throw InvariantViolation("P does not involve y" + to_string(xi));
    for (const auto* part : {&out.q, &out.r})
        for (const auto& v : part->variables()) {
            const bool allowed = v.col < xi.col || (v.col == xi.col && v.row > xi.row);
            if (!allowed) throw InvariantViolation("y" + to_string(v) + " breaks the triangular form for " + to_string(xi));
        }
    return out;
}

}  // namespace coadj
