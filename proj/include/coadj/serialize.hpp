#pragma once

// JSON forms of the library types (nlohmann::json).
//
// Roots are [row, col]; permutations are one-line image arrays; polynomials
// are canonical strings; lambda polynomials list coefficients from lambda^0 up.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coadj/diagram.hpp"
#include "coadj/invariants.hpp"
#include "coadj/minors.hpp"
#include "coadj/polynomial.hpp"
#include "coadj/roots.hpp"
#include "coadj/verify.hpp"
#include "coadj/weyl.hpp"

namespace coadj {

using Json = nlohmann::json;

namespace detail {

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("field '") + key + "': " + e.what());
    }
}

inline Symbol symbol_from_char(const std::string& s) {
    if (s == "B") return Symbol::Bullet;
    if (s == "X") return Symbol::Cross;
    if (s == "+") return Symbol::Plus;
    if (s == "-") return Symbol::Minus;
    throw InputError("unknown symbol '" + s + "'");
}

}  // namespace detail

// Root -----------------------------------------------------------------------

inline void to_json(Json& j, const Root& r) { j = Json::array({r.row, r.col}); }

inline void from_json(const Json& j, Root& r) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw InputError("a root is a pair [row, col], got " + j.dump());
    r = Root{j[0].get<int>(), j[1].get<int>()};
}

// Problem files ----------------------------------------------------------------

struct ProblemOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> max_degree;
    std::optional<double> budget;
    std::optional<std::string> format;

    friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct ProblemSpec {
    int n = 1;
    std::vector<Root> ideal_generators;
    ProblemOptions options;

    /// The closed ideal; with `strict` unclosed generators are an error.
    RegularIdeal ideal(bool strict) const {
        return RegularIdeal::from_generators(n, ideal_generators, strict ? ClosureMode::Strict : ClosureMode::Close);
    }

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

inline void to_json(Json& j, const ProblemSpec& p) {
    j = Json{{"n", p.n}, {"ideal_generators", p.ideal_generators}};
    Json opts = Json::object();
    if (p.options.seed) opts["seed"] = *p.options.seed;
    if (p.options.trials) opts["trials"] = *p.options.trials;
    if (p.options.max_degree) opts["max_degree"] = *p.options.max_degree;
    if (p.options.budget) opts["budget"] = *p.options.budget;
    if (p.options.format) opts["format"] = *p.options.format;
    if (!opts.empty()) j["options"] = opts;
}

inline void from_json(const Json& j, ProblemSpec& p) {
    if (!j.is_object()) throw InputError("problem file must be a JSON object");
    p.n = detail::get_field<int>(j, "n");
    if (p.n < 1) throw InputError("n must be >= 1");
    p.ideal_generators = j.contains("ideal_generators") ? detail::get_field<std::vector<Root>>(j, "ideal_generators")
                                                        : std::vector<Root>{};
    for (const auto& r : p.ideal_generators)
        if (!r.valid_for(p.n)) throw InputError("generator " + to_string(r) + " is not a positive root for n=" +
                                                std::to_string(p.n));
    p.options = {};
    if (j.contains("options")) {
        const Json& o = j.at("options");
        if (!o.is_object()) throw InputError("'options' must be an object");
        if (o.contains("seed")) p.options.seed = detail::get_field<std::uint64_t>(o, "seed");
        if (o.contains("trials")) p.options.trials = detail::get_field<int>(o, "trials");
        if (o.contains("max_degree")) p.options.max_degree = detail::get_field<int>(o, "max_degree");
        if (o.contains("budget")) p.options.budget = detail::get_field<double>(o, "budget");
        if (o.contains("format")) p.options.format = detail::get_field<std::string>(o, "format");
    }
}

inline ProblemSpec problem_from_ideal(const RegularIdeal& ideal) {
    ProblemSpec p;
    p.n = ideal.n();
    p.ideal_generators.assign(ideal.roots().begin(), ideal.roots().end());
    return p;
}

inline ProblemSpec parse_problem(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return j.get<ProblemSpec>();
}

// Diagram ------------------------------------------------------------------------

inline void to_json(Json& j, const Diagram& d) {
    Json cells = Json::array();
    for (const auto& r : positive_roots(d.n())) {
        const Cell& c = d.at(r);
        cells.push_back({{"root", r}, {"symbol", symbol_name(c.symbol)}, {"step", c.step}});
    }
    const DiagramCounts counts = diagram_counts(d);
    Json steps = Json::array();
    for (int m = 0; m <= d.steps(); ++m) steps.push_back(render_grid(d, m));
    j = Json{{"n", d.n()},
             {"grid", render_grid(d)},
             {"crosses", d.crosses()},
             {"counts",
              {{"crosses", counts.crosses},
               {"plus", counts.plus},
               {"minus", counts.minus},
               {"plus_minus", counts.plus_minus()},
               {"bullets", counts.bullets}}},
             {"cells", cells},
             {"steps", steps}};
}

inline Diagram diagram_from_json(const Json& j) {
    const int n = detail::get_field<int>(j, "n");
    std::vector<std::pair<Root, Cell>> cells;
    for (const auto& c : detail::get_field<Json>(j, "cells"))
        cells.emplace_back(detail::get_field<Root>(c, "root"),
                           Cell{detail::symbol_from_char(detail::get_field<std::string>(c, "symbol")),
                                detail::get_field<int>(c, "step")});
    return Diagram::from_cells(n, cells);
}

// Permutation ---------------------------------------------------------------------

inline void to_json(Json& j, const Permutation& w) { j = w.images(); }

inline Permutation permutation_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("a permutation is an array of images");
    return Permutation::from_images(j.get<std::vector<int>>());
}

// FD data -----------------------------------------------------------------------

inline void to_json(Json& j, const Segment& s) { j = Json::array({s.first, s.last}); }

inline void from_json(const Json& j, Segment& s) {
    if (!j.is_array() || j.size() != 2) throw InputError("a segment is a pair [first, last]");
    s = Segment{j[0].get<int>(), j[1].get<int>()};
}

inline void to_json(Json& j, const FDData& f) {
    j = Json{{"xi", f.xi},
             {"h", f.h},
             {"c", f.c},
             {"a_t", f.a_t},
             {"e", f.e},
             {"i_star", f.i_star},
             {"chains", f.chains},
             {"f", f.f},
             {"d", f.d},
             {"d_segments", f.d_segments},
             {"f_segments", f.f_segments},
             {"nu", f.nu},
             {"d_star", f.d_star}};
}

inline void from_json(const Json& j, FDData& f) {
    f.xi = detail::get_field<Root>(j, "xi");
    f.h = detail::get_field<int>(j, "h");
    f.c = detail::get_field<int>(j, "c");
    f.a_t = detail::get_field<int>(j, "a_t");
    f.e = detail::get_field<Segment>(j, "e");
    f.i_star = detail::get_field<std::vector<int>>(j, "i_star");
    f.chains = detail::get_field<std::vector<std::vector<int>>>(j, "chains");
    f.f = detail::get_field<std::vector<int>>(j, "f");
    f.d = detail::get_field<std::vector<int>>(j, "d");
    f.d_segments = detail::get_field<std::vector<Segment>>(j, "d_segments");
    f.f_segments = detail::get_field<std::vector<Segment>>(j, "f_segments");
    f.nu = detail::get_field<int>(j, "nu");
    f.d_star = detail::get_field<int>(j, "d_star");
}

// Polynomials ---------------------------------------------------------------------

inline void to_json(Json& j, const LambdaPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
    j = Json{{"degree", p.degree()}, {"coefficients", coeffs}};
}

inline void from_json(const Json& j, LambdaPolynomial& p) {
    std::vector<Polynomial> coeffs;
    for (const auto& s : detail::get_field<std::vector<std::string>>(j, "coefficients"))
        coeffs.push_back(parse_polynomial(s));
    p = LambdaPolynomial(std::move(coeffs));
    if (p.degree() != detail::get_field<int>(j, "degree")) throw InputError("lambda polynomial degree mismatch");
}

// Minors ---------------------------------------------------------------------------

inline void to_json(Json& j, const MinorSpec& s) { j = Json{{"rows", s.rows}, {"cols", s.cols}}; }

inline void from_json(const Json& j, MinorSpec& s) {
    s.rows = detail::get_field<std::vector<int>>(j, "rows");
    s.cols = detail::get_field<std::vector<int>>(j, "cols");
    if (s.rows.size() != s.cols.size()) throw InputError("minor rows and cols differ in size");
}

inline void to_json(Json& j, const ExtremalEntry& e) {
    j = Json{{"rows", e.spec.rows}, {"cols", e.spec.cols}, {"degree", e.degree}, {"extremal", e.extremal}};
}

inline void from_json(const Json& j, ExtremalEntry& e) {
    e.spec = j.get<MinorSpec>();
    e.degree = detail::get_field<int>(j, "degree");
    e.extremal = detail::get_field<bool>(j, "extremal");
}

// Invariant records ---------------------------------------------------------------

inline void to_json(Json& j, const InvariantRecord& r) {
    j = Json{{"xi", r.xi},
             {"case", static_cast<int>(r.cross_case)},
             {"h", r.h},
             {"rows", r.rows},
             {"cols", r.cols},
             {"degree", r.degree},
             {"d_star", r.d_star ? Json(*r.d_star) : Json(nullptr)},
             {"P", to_string(r.p)},
             {"extremal", r.extremal},
             {"minor", r.minor}};
}

inline void from_json(const Json& j, InvariantRecord& r) {
    r.xi = detail::get_field<Root>(j, "xi");
    const int c = detail::get_field<int>(j, "case");
    if (c != 1 && c != 2) throw InputError("case must be 1 or 2");
    r.cross_case = static_cast<CrossCase>(c);
    r.h = detail::get_field<int>(j, "h");
    r.rows = detail::get_field<std::vector<int>>(j, "rows");
    r.cols = detail::get_field<std::vector<int>>(j, "cols");
    r.degree = detail::get_field<int>(j, "degree");
    r.d_star = j.contains("d_star") && !j.at("d_star").is_null() ? std::optional<int>(j.at("d_star").get<int>())
                                                                   : std::nullopt;
    r.p = parse_polynomial(detail::get_field<std::string>(j, "P"));
    r.extremal = detail::get_field<bool>(j, "extremal");
    r.minor = j.contains("minor") ? j.at("minor").get<LambdaPolynomial>() : LambdaPolynomial{};
}

// Verification ----------------------------------------------------------------------

inline void to_json(Json& j, const CheckResult& c) {
    j = Json{{"name", c.name}, {"status", to_string(c.status)}, {"trials", c.trials}, {"seed", c.seed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) j["witness"] = *c.witness;
}

inline void from_json(const Json& j, CheckResult& c) {
    c.name = detail::get_field<std::string>(j, "name");
    const auto status = detail::get_field<std::string>(j, "status");
    if (status == "pass") c.status = CheckStatus::Pass;
    else if (status == "fail") c.status = CheckStatus::Fail;
    else if (status == "skipped") c.status = CheckStatus::Skipped;
    else throw InputError("unknown status '" + status + "'");
    c.trials = detail::get_field<int>(j, "trials");
    c.seed = detail::get_field<std::uint64_t>(j, "seed");
    c.detail = j.contains("detail") ? j.at("detail").get<std::string>() : std::string{};
    c.witness = j.contains("witness") ? std::optional<std::string>(j.at("witness").get<std::string>()) : std::nullopt;
}

inline void to_json(Json& j, const VerificationReport& r) {
    j = Json{{"passed", r.passed()}, {"checks", r.checks}};
}

inline void from_json(const Json& j, VerificationReport& r) {
    r.checks = detail::get_field<std::vector<CheckResult>>(j, "checks");
}

inline void to_json(Json& j, const OrbitStats& s) {
    j = Json{{"dim", s.dim}, {"max_rank", s.max_rank}, {"corank", s.corank}, {"samples", s.samples}};
}

inline void from_json(const Json& j, OrbitStats& s) {
    s.dim = detail::get_field<int>(j, "dim");
    s.max_rank = detail::get_field<int>(j, "max_rank");
    s.corank = detail::get_field<int>(j, "corank");
    s.samples = detail::get_field<int>(j, "samples");
}

inline void to_json(Json& j, const OracleBasis& o) {
    Json basis = Json::array();
    for (const auto& p : o.basis) basis.push_back(to_string(p));
    j = Json{{"max_degree", o.max_degree}, {"dimension", o.basis.size()}, {"basis", basis}};
}

inline void from_json(const Json& j, OracleBasis& o) {
    o.max_degree = detail::get_field<int>(j, "max_degree");
    o.basis.clear();
    for (const auto& s : detail::get_field<std::vector<std::string>>(j, "basis")) o.basis.push_back(parse_polynomial(s));
}

}  // namespace coadj
