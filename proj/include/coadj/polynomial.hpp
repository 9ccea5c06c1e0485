#pragma once

// Sparse multivariate polynomials over Q in the root variables y[i,j],
// polynomials in lambda with such coefficients, and the Poisson structure
// of the unitriangular algebra reduced modulo a regular ideal.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coadj/linalg.hpp"
#include "coadj/rational.hpp"
#include "coadj/roots.hpp"

namespace coadj {

/// Product of root variables. Factors are kept sorted in decreasing scan order
/// with positive exponents.
class Monomial {
public:
    using Factor = std::pair<Root, int>;

    Monomial() = default;
    explicit Monomial(const Root& var, int exponent = 1) {
        if (exponent > 0) {
            factors_.push_back({var, exponent});
            degree_ = exponent;
        }
    }

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }

    int exponent(const Root& var) const {
        for (const auto& [v, e] : factors_)
            if (v == var) return e;
        return 0;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out;
        auto a = factors_.begin();
        auto b = other.factors_.begin();
        while (a != factors_.end() || b != other.factors_.end()) {
            if (b == other.factors_.end() || (a != factors_.end() && prec_greater(a->first, b->first))) {
                out.factors_.push_back(*a++);
            } else if (a == factors_.end() || prec_greater(b->first, a->first)) {
                out.factors_.push_back(*b++);
            } else {
                out.factors_.push_back({a->first, a->second + b->second});
                ++a;
                ++b;
            }
        }
        out.degree_ = degree_ + other.degree_;
        return out;
    }

    /// This monomial with one power of `var` removed; `var` must divide it.
    Monomial without_one(const Root& var) const {
        Monomial out = *this;
        for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
            if (it->first == var) {
                if (--it->second == 0) out.factors_.erase(it);
                --out.degree_;
                return out;
            }
        }
        return out;
    }

    Monomial without(const Root& var) const {
        Monomial out;
        for (const auto& f : factors_)
            if (!(f.first == var)) {
                out.factors_.push_back(f);
                out.degree_ += f.second;
            }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Canonical term order: higher total degree first, then lexicographic on the
/// variable sequence with larger roots (in scan order) first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
            if (!(fa[i].first == fb[i].first)) return prec_greater(fa[i].first, fb[i].first);
            if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
        }
        return false;
    }
};

using Point = std::map<Root, Rational, PrecDescending>;

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial variable(const Root& r) { return term(Monomial(r), 1); }
    static Polynomial variable(int row, int col) { return variable(Root{row, col}); }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    /// Leading term in canonical order.
    const std::pair<const Monomial, Rational>& leading() const { return *terms_.begin(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Variables occurring in any term.
    std::set<Root, PrecDescending> variables() const {
        std::set<Root, PrecDescending> out;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors()) out.insert(f.first);
        return out;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial times(const Monomial& m, const Rational& c) const {
        Polynomial out;
        if (c == 0) return out;
        for (const auto& [mt, ct] : terms_) out.terms_.emplace_hint(out.terms_.end(), mt * m, ct * c);
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

inline Polynomial derivative(const Polynomial& p, const Root& var) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(var);
        if (e > 0) out.add_term(m.without_one(var), c * e);
    }
    return out;
}

/// Exact substitution. Throws InputError when a variable of p is unassigned.
inline Rational evaluate(const Polynomial& p, const Point& point) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational value = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = point.find(var);
            if (it == point.end()) throw InputError("no value assigned to y" + to_string(var));
            for (int k = 0; k < e; ++k) value *= it->second;
        }
        total += value;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Text form:  "3*y[2,1]*y[3,2] - 1/2*y[4,1] + 7"

inline std::string variable_name(const Root& r) {
    return "y[" + std::to_string(r.row) + "," + std::to_string(r.col) + "]";
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string body;
        for (const auto& [var, e] : m.factors())
            for (int k = 0; k < e; ++k) body += (body.empty() ? "" : "*") + variable_name(var);
        if (body.empty()) {
            out += magnitude.str();
        } else if (magnitude == 1) {
            out += body;
        } else {
            out += magnitude.str() + "*" + body;
        }
    }
    return out;
}

namespace detail {

class PolynomialParser {
public:
    explicit PolynomialParser(const std::string& text) : s_(text) {}

    Polynomial parse() {
        Polynomial out;
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = parse_term();
            out.add_term(m, c * sign);
            skip();
        }
        return out;
    }

private:
    std::pair<Monomial, Rational> parse_term() {
        Rational coeff = 1;
        Monomial mono;
        bool have_factor = false;
        while (true) {
            skip();
            if (peek() == 'y') {
                mono = mono * parse_variable();
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_number();
            } else {
                fail("expected a coefficient or variable");
            }
            have_factor = true;
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        if (!have_factor) fail("empty term");
        return {mono, coeff};
    }

    Rational parse_number() {
        std::string digits = read_digits();
        if (peek() == '/') {
            ++pos_;
            const std::string den = read_digits();
            if (den.empty()) fail("missing denominator");
            digits += "/" + den;
        }
        return parse_rational(digits);
    }

    Monomial parse_variable() {
        ++pos_;  // 'y'
        expect('[');
        const int row = std::stoi(read_digits_required());
        expect(',');
        const int col = std::stoi(read_digits_required());
        expect(']');
        const Root r{row, col};
        if (r.row <= r.col || r.col < 1) fail("variable " + variable_name(r) + " is not a positive root");
        int exponent = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            exponent = std::stoi(read_digits_required());
        }
        return Monomial(r, exponent);
    }

    std::string read_digits() {
        skip();
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += s_[pos_++];
        return out;
    }
    std::string read_digits_required() {
        std::string d = read_digits();
        if (d.empty()) fail("expected digits");
        return d;
    }
    void expect(char ch) {
        skip();
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text) {
    return detail::PolynomialParser(text).parse();
}

// ---------------------------------------------------------------------------

/// Polynomial in lambda: coefficients[a] multiplies lambda^a.
class LambdaPolynomial {
public:
    LambdaPolynomial() = default;
    explicit LambdaPolynomial(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
    LambdaPolynomial(const Polynomial& constant) : coeffs_{constant} { trim(); }  // NOLINT

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Polynomial>& coefficients() const { return coeffs_; }

    const Polynomial& coefficient(int power) const {
        static const Polynomial zero;
        return power >= 0 && power <= degree() ? coeffs_[static_cast<std::size_t>(power)] : zero;
    }

    /// Highest coefficient; zero polynomial if this is zero.
    Polynomial leading() const { return coeffs_.empty() ? Polynomial{} : coeffs_.back(); }

    LambdaPolynomial& operator+=(const LambdaPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    LambdaPolynomial times(const Monomial& m, const Rational& c) const {
        LambdaPolynomial out;
        out.coeffs_.reserve(coeffs_.size());
        for (const auto& p : coeffs_) out.coeffs_.push_back(p.times(m, c));
        out.trim();
        return out;
    }

    /// Multiplies by c*lambda.
    LambdaPolynomial times_lambda(const Rational& c) const {
        LambdaPolynomial out;
        if (coeffs_.empty() || c == 0) return out;
        out.coeffs_.resize(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i + 1] = coeffs_[i].times(Monomial{}, c);
        return out;
    }

    friend bool operator==(const LambdaPolynomial&, const LambdaPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Polynomial> coeffs_;
};

inline std::string to_string(const LambdaPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int a = p.degree(); a >= 0; --a) {
        const auto& c = p.coefficient(a);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string body = "(" + to_string(c) + ")";
        if (a == 0) out += body;
        else if (a == 1) out += "lambda*" + body;
        else out += "lambda^" + std::to_string(a) + "*" + body;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poisson structure.  {y_a, y_b} = [E_a, E_b] with
//   [y_ij, y_kl] = delta_jk y_il - delta_li y_kj,
// reduced modulo the ideal generated by y_eta, eta in M.

/// [y_a, y_b] as (sign, root) or nothing when the bracket vanishes in n.
inline std::optional<std::pair<int, Root>> lie_bracket(const Root& a, const Root& b) {
    if (a.col == b.row) return std::pair{1, Root{a.row, b.col}};
    if (b.col == a.row) return std::pair{-1, Root{b.row, a.col}};
    return std::nullopt;
}

inline void require_outside_ideal(const Polynomial& p, const RegularIdeal& ideal) {
    for (const auto& v : p.variables())
        if (ideal.contains(v)) throw InputError("variable y" + to_string(v) + " lies in the ideal");
}

/// {y_a, P} modulo M, extended to P as a derivation.
inline Polynomial poisson_bracket(const Root& a, const Polynomial& p, const RegularIdeal& ideal) {
    require_outside_ideal(p, ideal);
    Polynomial out;
    if (ideal.contains(a)) return out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [var, e] : m.factors()) {
            auto br = lie_bracket(a, var);
            if (!br || ideal.contains(br->second)) continue;
            out.add_term(m.without_one(var) * Monomial(br->second), c * e * br->first);
        }
    }
    return out;
}

/// {y[i+1,i], P} modulo M, 1 <= i <= n-1.
inline Polynomial poisson_bracket_generator(int i, const Polynomial& p, const RegularIdeal& ideal) {
    if (i < 1 || i >= ideal.n()) throw InputError("generator index out of range");
    return poisson_bracket(Root{i + 1, i}, p, ideal);
}

/// Rank of the Jacobian (dP_a / dy_eta) evaluated exactly at `point`.
inline std::size_t jacobian_rank(const std::vector<Polynomial>& polys, const Point& point) {
    std::set<Root, PrecDescending> vars;
    for (const auto& p : polys)
        for (const auto& v : p.variables()) vars.insert(v);
    linalg::Matrix m;
    for (const auto& p : polys) {
        std::vector<Rational> row;
        row.reserve(vars.size());
        for (const auto& v : vars) row.push_back(evaluate(derivative(p, v), point));
        m.push_back(std::move(row));
    }
    if (vars.empty()) return 0;
    return linalg::rank(m);
}

}  // namespace coadj
