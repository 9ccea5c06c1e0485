#pragma once

// Exact checks of the construction against the coadjoint representation.
//
// A linear form f on L is stored as the strictly upper triangular matrix b
// with b[t][k] = f(y[k,t]); the pairing is Tr(ab). The group acts by
// Ad*_g b = P(g b g^{-1}), P the projection onto the strictly upper part.

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coadj/diagram.hpp"
#include "coadj/invariants.hpp"
#include "coadj/linalg.hpp"
#include "coadj/polynomial.hpp"
#include "coadj/weyl.hpp"

namespace coadj {

using SquareMatrix = std::vector<std::vector<Rational>>;

inline SquareMatrix zero_matrix(int n) {
    return SquareMatrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
}

inline SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
    const std::size_t n = a.size();
    SquareMatrix out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline std::string to_string(const SquareMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? "," : "") + m[i][j].str();
        out += "]";
    }
    return out + "]";
}

/// Point of L*: zero on M and on and below the diagonal.
class DualPoint {
public:
    DualPoint(const RegularIdeal& ideal, const Point& coordinates) : b_(zero_matrix(ideal.n())) {
        for (const auto& [r, v] : coordinates) {
            if (!r.valid_for(ideal.n())) throw InputError("coordinate " + to_string(r) + " out of range");
            if (ideal.contains(r) && v != 0) throw InputError("coordinate " + to_string(r) + " lies in M");
            at(r) = v;
        }
    }

    int n() const { return static_cast<int>(b_.size()); }
    const SquareMatrix& matrix() const { return b_; }

    /// f(y[k,t]) = b[t][k].
    const Rational& value(const Root& r) const {
        return b_[static_cast<std::size_t>(r.col - 1)][static_cast<std::size_t>(r.row - 1)];
    }

    Point coordinates(const RegularIdeal& ideal) const {
        Point out;
        for (const auto& r : positive_roots(n()))
            if (!ideal.contains(r)) out.emplace(r, value(r));
        return out;
    }

    friend bool operator==(const DualPoint&, const DualPoint&) = default;

private:
    friend DualPoint coadjoint_act(const class GroupElement&, const DualPoint&, const RegularIdeal&);
    explicit DualPoint(SquareMatrix b) : b_(std::move(b)) {}
    Rational& at(const Root& r) { return b_[static_cast<std::size_t>(r.col - 1)][static_cast<std::size_t>(r.row - 1)]; }

    SquareMatrix b_;
};

/// Lower unitriangular matrix.
class GroupElement {
public:
    explicit GroupElement(SquareMatrix g) : g_(std::move(g)) {
        const std::size_t n = g_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (g_[i].size() != n) throw InputError("group element must be square");
            for (std::size_t j = i; j < n; ++j)
                if (g_[i][j] != (i == j ? 1 : 0)) throw InputError("group element must be lower unitriangular");
        }
        inverse_ = invert(g_);
    }

    static GroupElement identity(int n) {
        SquareMatrix g = zero_matrix(n);
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return GroupElement(std::move(g));
    }

    int n() const { return static_cast<int>(g_.size()); }
    const SquareMatrix& matrix() const { return g_; }
    const SquareMatrix& inverse() const { return inverse_; }

    GroupElement operator*(const GroupElement& o) const { return GroupElement(multiply(g_, o.g_)); }

private:
    static SquareMatrix invert(const SquareMatrix& g) {
        const std::size_t n = g.size();
        SquareMatrix inv(n, std::vector<Rational>(n, Rational(0)));
        // Column by column forward substitution on g * inv = 1.
        for (std::size_t c = 0; c < n; ++c) {
            inv[c][c] = 1;
            for (std::size_t i = c + 1; i < n; ++i) {
                Rational s = 0;
                for (std::size_t k = c; k < i; ++k) s += g[i][k] * inv[k][c];
                inv[i][c] = -s;
            }
        }
        return inv;
    }

    SquareMatrix g_;
    SquareMatrix inverse_;
};

/// P(g b g^{-1}). Throws InvariantViolation if the result is not in L*.
inline DualPoint coadjoint_act(const GroupElement& g, const DualPoint& b, const RegularIdeal& ideal) {
    if (g.n() != b.n() || b.n() != ideal.n()) throw InputError("size mismatch in coadjoint action");
    SquareMatrix conj = multiply(multiply(g.matrix(), b.matrix()), g.inverse());
    const std::size_t n = conj.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) conj[i][j] = 0;
    for (const auto& r : ideal.roots())
        if (conj[static_cast<std::size_t>(r.col - 1)][static_cast<std::size_t>(r.row - 1)] != 0)
            throw InvariantViolation("coadjoint image leaves L* at y" + to_string(r));
    return DualPoint(std::move(conj));
}

// ---------------------------------------------------------------------------
// Sampling. Entries are integers in [-9, 9].

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int small() { return std::uniform_int_distribution<int>(-9, 9)(rng_); }

    DualPoint dual_point(const RegularIdeal& ideal) {
        Point p;
        for (const auto& r : positive_roots(ideal.n()))
            if (!ideal.contains(r)) p.emplace(r, Rational(small()));
        return DualPoint(ideal, p);
    }

    GroupElement group_element(int n) {
        SquareMatrix g = zero_matrix(n);
        for (int i = 0; i < n; ++i) {
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
            for (int j = 0; j < i; ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = small();
        }
        return GroupElement(std::move(g));
    }

private:
    std::mt19937_64 rng_;
};

/// Free coordinates (roots outside M, in decreasing scan order) set to 2, 3, 5, 7, ...
inline Point prime_point(const RegularIdeal& ideal) {
    Point p;
    int candidate = 2;
    for (const auto& r : positive_roots(ideal.n())) {
        if (ideal.contains(r)) continue;
        auto is_prime = [](int x) {
            for (int d = 2; d * d <= x; ++d)
                if (x % d == 0) return false;
            return true;
        };
        while (!is_prime(candidate)) ++candidate;
        p.emplace(r, Rational(candidate++));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Reports.

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string detail;
    std::optional<std::string> witness;
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
    void append(const VerificationReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

struct NamedPolynomial {
    std::string name;
    Polynomial p;
};

inline std::vector<NamedPolynomial> named(const std::vector<InvariantRecord>& records) {
    std::vector<NamedPolynomial> out;
    for (const auto& r : records) out.push_back({"P" + to_string(r.xi), r.p});
    return out;
}

/// (a) every generator bracket {y[i+1,i], P} vanishes mod M;
/// (b) P(Ad*_g b) = P(b) for `trials` random pairs (g, b).
inline VerificationReport check_invariance(const std::vector<NamedPolynomial>& polys, const RegularIdeal& ideal,
                                           int trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("trials must be >= 1");
    VerificationReport report;
    CheckResult poisson{"invariance.poisson", CheckStatus::Pass, ideal.n() - 1, seed, {}, {}};
    for (const auto& [name, p] : polys) {
        for (int i = 1; i < ideal.n(); ++i) {
            const Polynomial br = poisson_bracket_generator(i, p, ideal);
            if (!br.is_zero()) {
                poisson.status = CheckStatus::Fail;
                poisson.witness = name + ": {y[" + std::to_string(i + 1) + "," + std::to_string(i) + "], P} = " +
                                  to_string(br);
                break;
            }
        }
        if (poisson.status == CheckStatus::Fail) break;
    }
    if (polys.empty()) poisson.detail = "no polynomials";
    report.checks.push_back(poisson);

    CheckResult orbit{"invariance.coadjoint", CheckStatus::Pass, trials, seed, {}, {}};
    Sampler sampler(seed);
    for (int trial = 0; trial < trials && orbit.status == CheckStatus::Pass && !polys.empty(); ++trial) {
        const GroupElement g = sampler.group_element(ideal.n());
        const DualPoint b = sampler.dual_point(ideal);
        const Point before = b.coordinates(ideal);
        const Point after = coadjoint_act(g, b, ideal).coordinates(ideal);
        for (const auto& [name, p] : polys) {
            const Rational v0 = evaluate(p, before);
            const Rational v1 = evaluate(p, after);
            if (v0 != v1) {
                orbit.status = CheckStatus::Fail;
                orbit.witness = name + " trial " + std::to_string(trial) + ": g=" + to_string(g.matrix()) +
                                " b=" + to_string(b.matrix()) + " values " + v0.str() + " vs " + v1.str();
                break;
            }
        }
    }
    if (polys.empty()) orbit.detail = "no polynomials";
    report.checks.push_back(orbit);
    return report;
}

inline VerificationReport check_invariance(const std::vector<InvariantRecord>& records, const RegularIdeal& ideal,
                                           int trials, std::uint64_t seed) {
    return check_invariance(named(records), ideal, trials, seed);
}

/// Skew form B(f)[eta][mu] = f([y_eta, y_mu] mod M) on the roots outside M,
/// in decreasing scan order.
inline linalg::Matrix skew_form(const RegularIdeal& ideal, const Point& f) {
    std::vector<Root> basis;
    for (const auto& r : positive_roots(ideal.n()))
        if (!ideal.contains(r)) basis.push_back(r);
    linalg::Matrix m(basis.size(), std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto br = lie_bracket(basis[a], basis[b]);
            if (!br || ideal.contains(br->second)) continue;
            m[a][b] = br->first * f.at(br->second);
        }
    return m;
}

struct OrbitStats {
    int dim = 0;
    int max_rank = 0;
    int corank = 0;
    int samples = 0;
    friend bool operator==(const OrbitStats&, const OrbitStats&) = default;
};

/// Maximum rank of B(f) over `trials` random points plus the prime point.
inline OrbitStats skew_rank_stats(const RegularIdeal& ideal, int trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("trials must be >= 1");
    OrbitStats s;
    s.dim = ideal.quotient_dim();
    auto consider = [&](const Point& f) {
        s.max_rank = std::max(s.max_rank, static_cast<int>(linalg::rank(skew_form(ideal, f))));
        ++s.samples;
    };
    Sampler sampler(seed);
    for (int i = 0; i < trials; ++i) consider(sampler.dual_point(ideal).coordinates(ideal));
    consider(prime_point(ideal));
    s.corank = s.dim - s.max_rank;
    return s;
}

// ---------------------------------------------------------------------------
// Brute-force invariants: the common kernel of P -> {y[i+1,i], P} mod M on
// homogeneous polynomials of degree 1..max_degree. The derivations preserve
// degree and shift the torus weight uniformly, so the kernel splits into
// (degree, weight) blocks.

struct OracleBasis {
    int max_degree = 0;
    std::vector<Polynomial> basis;
    friend bool operator==(const OracleBasis&, const OracleBasis&) = default;
};

inline double monomial_count(int vars, int max_degree) {
    double total = 0;
    for (int d = 1; d <= max_degree; ++d) total += binomial(vars + d - 1, d);
    return total;
}

inline OracleBasis oracle_invariants(const RegularIdeal& ideal, int max_degree, double budget = 200000) {
    const int n = ideal.n();
    std::vector<Root> vars;
    for (const auto& r : positive_roots(n))
        if (!ideal.contains(r)) vars.push_back(r);
    const double count = monomial_count(static_cast<int>(vars.size()), max_degree);
    if (count > budget)
        throw ResourceError("oracle needs " + std::to_string(static_cast<long long>(count)) +
                            " monomials, budget is " + std::to_string(static_cast<long long>(budget)));

    OracleBasis out;
    out.max_degree = max_degree;
    for (int d = 1; d <= max_degree; ++d) {
        std::map<std::vector<int>, std::vector<Monomial>> blocks;
        Monomial cur;
        std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
        auto gen = [&](auto&& self, std::size_t from, int left) -> void {
            if (left == 0) {
                blocks[weight].push_back(cur);
                return;
            }
            for (std::size_t v = from; v < vars.size(); ++v) {
                const Monomial saved = cur;
                cur = cur * Monomial(vars[v]);
                ++weight[static_cast<std::size_t>(vars[v].row)];
                --weight[static_cast<std::size_t>(vars[v].col)];
                self(self, v, left - 1);
                --weight[static_cast<std::size_t>(vars[v].row)];
                ++weight[static_cast<std::size_t>(vars[v].col)];
                cur = saved;
            }
        };
        gen(gen, 0, d);

        for (auto& [w, monos] : blocks) {
            std::sort(monos.begin(), monos.end(), MonomialOrder{});
            std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(monos.size());
            std::vector<std::map<Monomial, std::size_t, MonomialOrder>> rows_per_gen(static_cast<std::size_t>(n));
            std::size_t next_row = 0;
            for (std::size_t c = 0; c < monos.size(); ++c) {
                const Polynomial image_src = Polynomial::term(monos[c], 1);
                for (int i = 1; i < n; ++i) {
                    const Polynomial img = poisson_bracket_generator(i, image_src, ideal);
                    for (const auto& [m, coeff] : img.terms()) {
                        auto& table = rows_per_gen[static_cast<std::size_t>(i)];
                        auto [it, inserted] = table.try_emplace(m, next_row);
                        if (inserted) ++next_row;
                        columns[c].push_back({it->second, coeff});
                    }
                }
            }
            linalg::Matrix a(next_row, std::vector<Rational>(monos.size(), Rational(0)));
            for (std::size_t c = 0; c < monos.size(); ++c)
                for (const auto& [r, v] : columns[c]) a[r][c] += v;
            linalg::Matrix kernel = linalg::nullspace(a, monos.size());
            if (kernel.empty()) continue;
            const auto canon = linalg::rref(kernel, monos.size());
            for (const auto& row : canon.rows) {
                Polynomial p;
                for (std::size_t c = 0; c < monos.size(); ++c) p.add_term(monos[c], row[c]);
                out.basis.push_back(std::move(p));
            }
        }
    }
    return out;
}

/// Exact membership of p in the span of an oracle basis.
inline bool oracle_contains(const OracleBasis& oracle, const Polynomial& p) {
    std::vector<Monomial> coords;
    std::map<Monomial, std::size_t, MonomialOrder> index;
    auto add = [&](const Polynomial& q) {
        for (const auto& [m, c] : q.terms())
            if (index.try_emplace(m, coords.size()).second) coords.push_back(m);
    };
    for (const auto& b : oracle.basis) add(b);
    add(p);
    auto vec = [&](const Polynomial& q) {
        std::vector<Rational> v(coords.size(), Rational(0));
        for (const auto& [m, c] : q.terms()) v[index.at(m)] = c;
        return v;
    };
    linalg::Matrix span;
    // Only basis elements sharing a monomial with p can contribute.
    for (const auto& b : oracle.basis) {
        bool shares = false;
        for (const auto& [m, c] : b.terms())
            if (!p.coefficient(m).is_zero()) {
                shares = true;
                break;
            }
        if (shares) span.push_back(vec(b));
    }
    return linalg::in_row_span(span, vec(p));
}

// ---------------------------------------------------------------------------

struct ReportOptions {
    std::uint64_t seed = 0;
    int trials = 100;
    int max_degree = 4;
    double budget = 200000;
    int rank_samples = 20;
};

namespace detail {

template <class Fn>
CheckResult run_check(const std::string& name, std::uint64_t seed, int trials, Fn&& body) {
    CheckResult r{name, CheckStatus::Pass, trials, seed, {}, {}};
    try {
        if (auto failure = body(r)) {
            r.status = CheckStatus::Fail;
            r.witness = *failure;
        }
    } catch (const ResourceError& e) {
        r.status = CheckStatus::Skipped;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.witness = e.what();
    }
    return r;
}

}  // namespace detail

/// Runs every check for one ideal and collects the outcomes.
inline VerificationReport full_report(const RegularIdeal& ideal, const ReportOptions& opt = {}) {
    using Failure = std::optional<std::string>;
    VerificationReport report;
    const Diagram d = build_diagram(ideal);
    const DiagramCounts counts = diagram_counts(d);
    const WFamily fam(ideal.n(), d.crosses());
    const Permutation w = build_w(ideal);
    const int n = ideal.n();

    report.checks.push_back(detail::run_check("diagram.symbol_agreement", opt.seed, 0, [&](CheckResult&) -> Failure {
        for (const auto& r : positive_roots(n))
            if (symbol_by_signs(d, r) != d.at(r).symbol)
                return "place " + to_string(r) + ": diagram " + symbol_name(d.at(r).symbol) + ", signs " +
                       symbol_name(symbol_by_signs(d, r));
        return std::nullopt;
    }));
    report.checks.push_back(detail::run_check("diagram.counts", opt.seed, 0, [&](CheckResult& r) -> Failure {
        r.detail = "crosses=" + std::to_string(counts.crosses) + " plus_minus=" + std::to_string(counts.plus_minus()) +
                   " bullets=" + std::to_string(counts.bullets);
        if (counts.total() != n * (n - 1) / 2) return "symbol total differs from the number of positive roots";
        if (counts.plus != counts.minus) return "'+' and '-' counts differ";
        if (counts.bullets != static_cast<int>(ideal.size())) return "bullets differ from |M|";
        return std::nullopt;
    }));
    report.checks.push_back(detail::run_check("permutation.reflection_product", opt.seed, 0, [&](CheckResult& r) -> Failure {
        r.detail = "w=" + to_string(w);
        if (fam.full() != w) return "product over S is " + to_string(fam.full());
        return std::nullopt;
    }));
    report.checks.push_back(detail::run_check("permutation.length", opt.seed, 0, [&](CheckResult& r) -> Failure {
        r.detail = "l(w)=" + std::to_string(inversions(w)) + " dim L=" + std::to_string(ideal.quotient_dim());
        if (inversions(w) != ideal.quotient_dim()) return r.detail;
        return std::nullopt;
    }));
    report.checks.push_back(detail::run_check("permutation.cross_signs", opt.seed, 0, [&](CheckResult&) -> Failure {
        for (const auto& xi : d.crosses()) {
            const Permutation wx = fam.at(xi);
            for (int j = 1; j < xi.col; ++j)
                if (wx(j) != w(j)) return "w_xi(j) != w(j) for xi=" + to_string(xi) + ", j=" + std::to_string(j);
            if (wx.maps_positive(xi)) return "w_xi(xi) > 0 for xi=" + to_string(xi);
        }
        return std::nullopt;
    }));

    std::vector<InvariantRecord> records;
    bool have_records = false;
    report.checks.push_back(detail::run_check("invariants.construction", opt.seed, 0, [&](CheckResult& r) -> Failure {
        records = all_invariants(ideal);
        have_records = true;
        r.detail = std::to_string(records.size()) + " records";
        if (records.size() != d.crosses().size()) return "record count differs from |S|";
        return std::nullopt;
    }));
    auto needs_records = [&](CheckResult&) -> Failure {
        return have_records ? Failure{} : Failure{"invariant records unavailable"};
    };

    report.checks.push_back(detail::run_check("invariants.triangular", opt.seed, 0, [&](CheckResult& r) -> Failure {
        if (auto f = needs_records(r)) return f;
        for (const auto& rec : records) triangular_decomposition(rec);
        return std::nullopt;
    }));

    if (have_records) {
        report.append(check_invariance(records, ideal, opt.trials, opt.seed));
    } else {
        report.checks.push_back({"invariance.poisson", CheckStatus::Fail, 0, opt.seed, {}, "invariant records unavailable"});
        report.checks.push_back({"invariance.coadjoint", CheckStatus::Fail, 0, opt.seed, {}, "invariant records unavailable"});
    }

    report.checks.push_back(detail::run_check("orbit.skew_rank", opt.seed, opt.rank_samples, [&](CheckResult& r) -> Failure {
        const auto s = skew_rank_stats(ideal, opt.rank_samples, opt.seed);
        r.detail = "max_rank=" + std::to_string(s.max_rank) + " corank=" + std::to_string(s.corank);
        if (s.max_rank % 2 != 0) return "odd skew rank";
        if (s.max_rank != counts.plus_minus() || s.corank != counts.crosses)
            return r.detail + " vs diagram plus_minus=" + std::to_string(counts.plus_minus()) +
                   " crosses=" + std::to_string(counts.crosses);
        return std::nullopt;
    }));

    report.checks.push_back(detail::run_check("invariants.jacobian_rank", opt.seed, 0, [&](CheckResult& r) -> Failure {
        if (auto f = needs_records(r)) return f;
        std::vector<Polynomial> ps;
        for (const auto& rec : records) ps.push_back(rec.p);
        const auto rank = jacobian_rank(ps, prime_point(ideal));
        r.detail = "rank=" + std::to_string(rank) + " |S|=" + std::to_string(records.size());
        if (rank != records.size()) return r.detail;
        return std::nullopt;
    }));

    report.checks.push_back(detail::run_check("oracle.containment", opt.seed, 0, [&](CheckResult& r) -> Failure {
        if (auto f = needs_records(r)) return f;
        const auto oracle = oracle_invariants(ideal, opt.max_degree, opt.budget);
        int tested = 0;
        for (const auto& rec : records) {
            if (rec.p.degree() > opt.max_degree) continue;
            ++tested;
            if (!oracle_contains(oracle, rec.p)) return "P" + to_string(rec.xi) + " is outside the oracle span";
        }
        r.detail = std::to_string(tested) + " invariants checked against " + std::to_string(oracle.basis.size()) +
                   " basis elements";
        return std::nullopt;
    }));
    return report;
}

}  // namespace coadj
