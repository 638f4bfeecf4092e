#include "polyvor/problem.hpp"

#include <fstream>
#include <sstream>

namespace polyvor {

bool Problem::operator==(const Problem& o) const {
    auto same_box = [](const std::optional<Box>& a, const std::optional<Box>& b) {
        if (a.has_value() != b.has_value()) {
            return false;
        }
        return !a || (a->lo == b->lo && a->hi == b->hi);
    };
    return ball == o.ball && polynomial == o.polynomial && points == o.points &&
           same_box(box, o.box) && params == o.params;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ProblemError("bad rational '" + j.get<std::string>() + "': " + e.what());
        }
    }
    if (j.is_number_integer()) {
        return Rational(std::to_string(j.get<long long>()));
    }
    throw ProblemError("rationals must be strings \"p/q\" or integers, got " + j.dump());
}

RationalVector rational_vector_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ProblemError("expected an array of rationals, got " + j.dump());
    }
    RationalVector v;
    for (const auto& e : j) {
        v.push_back(rational_from_json(e));
    }
    return v;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(std::span<const Rational> v) {
    Json a = Json::array();
    for (const auto& q : v) {
        a.push_back(to_string(q));
    }
    return a;
}

Json polynomial_to_json(const MultiPoly& f) {
    Json a = Json::array();
    for (const auto& [e, c] : f.terms()) {
        a.push_back({{"coeff", to_string(c)}, {"exponents", e}});
    }
    return a;
}

MultiPoly polynomial_from_json(const Json& j, std::size_t arity) {
    if (!j.is_array() || j.empty()) {
        throw ProblemError("polynomial must be a nonempty list of terms");
    }
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents") ||
            !t["exponents"].is_array()) {
            throw ProblemError("term must be {\"coeff\": ..., \"exponents\": [...]}");
        }
        if (arity == 0) {
            arity = t["exponents"].size();
        }
    }
    MultiPoly f(arity);
    for (const auto& t : j) {
        Exponents e;
        for (const auto& k : t["exponents"]) {
            if (!k.is_number_integer() || k.get<long long>() < 0) {
                throw ProblemError("exponents must be nonnegative integers");
            }
            e.push_back(k.get<int>());
        }
        if (e.size() != arity) {
            throw ProblemError("term has " + std::to_string(e.size()) + " exponents, expected " +
                               std::to_string(arity));
        }
        f.add_term(e, rational_from_json(t["coeff"]));
    }
    return f;
}

Json approximate(std::span<const double> x) {
    return {{"value", std::vector<double>(x.begin(), x.end())}, {"approximate", true}};
}

Problem parse_problem(const Json& j) {
    if (!j.is_object()) {
        throw ProblemError("problem must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "ball" && key != "polynomial" && key != "points" && key != "box" &&
            key != "params") {
            throw ProblemError("unknown key '" + key + "'");
        }
    }
    if (!j.contains("ball") || !j["ball"].is_array() || j["ball"].empty()) {
        throw ProblemError("missing 'ball'");
    }
    Problem p;
    for (const auto& l : j["ball"]) {
        p.ball.push_back(rational_vector_from_json(l));
    }
    const std::size_t n = p.ball.front().size();
    if (!j.contains("polynomial")) {
        throw ProblemError("missing 'polynomial'");
    }
    p.polynomial = polynomial_from_json(j["polynomial"], n);
    if (j.contains("points")) {
        for (const auto& q : j["points"]) {
            p.points.push_back(rational_vector_from_json(q));
            if (p.points.back().size() != n) {
                throw ProblemError("point has the wrong dimension");
            }
        }
    }
    if (j.contains("box")) {
        const auto& b = j["box"];
        if (!b.is_array() || b.size() != n) {
            throw ProblemError("box must list one [lo, hi] pair per coordinate");
        }
        Box box;
        for (const auto& r : b) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
                throw ProblemError("box entries must be [lo, hi] numbers");
            }
            box.lo.push_back(r[0].get<double>());
            box.hi.push_back(r[1].get<double>());
        }
        try {
            box.validate();
        } catch (const std::exception& e) {
            throw ProblemError(e.what());
        }
        p.box = std::move(box);
    }
    if (j.contains("params")) {
        if (!j["params"].is_object()) {
            throw ProblemError("'params' must be an object");
        }
        p.params = j["params"];
    }
    return p;
}

Problem parse_problem_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ProblemError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(j);
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ProblemError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

Json to_json(const Problem& p) {
    Json j;
    j["ball"] = Json::array();
    for (const auto& l : p.ball) {
        j["ball"].push_back(to_json(std::span<const Rational>(l)));
    }
    j["polynomial"] = polynomial_to_json(p.polynomial);
    if (!p.points.empty()) {
        j["points"] = Json::array();
        for (const auto& q : p.points) {
            j["points"].push_back(to_json(std::span<const Rational>(q)));
        }
    }
    if (p.box) {
        j["box"] = Json::array();
        for (std::size_t i = 0; i < p.box->dimension(); ++i) {
            j["box"].push_back({p.box->lo[i], p.box->hi[i]});
        }
    }
    if (!p.params.empty()) {
        j["params"] = p.params;
    }
    return j;
}

RationalVector parse_point(const std::string& text) {
    RationalVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(parse_rational(item));
        } catch (const std::exception&) {
            throw ProblemError("bad point coordinate '" + item + "'");
        }
    }
    if (v.empty()) {
        throw ProblemError("empty point");
    }
    return v;
}

namespace {

template <typename T>
void read(const Json& params, const char* key, T& out) {
    if (params.contains(key)) {
        try {
            out = params[key].get<T>();
        } catch (const Json::exception&) {
            throw ProblemError(std::string("bad value for parameter '") + key + "'");
        }
    }
}

}  // namespace

StratifyParams stratify_params(const Json& params) {
    StratifyParams s;
    read(params, "count", s.count);
    read(params, "seed", s.seed);
    read(params, "neighborhood_radius", s.neighborhood_radius);
    read(params, "max_denominator", s.max_denominator);
    read(params, "boundary_tolerance", s.boundary_tolerance);
    read(params, "stratum_seed_fraction", s.stratum_seed_fraction);
    return s;
}

OracleParams oracle_params(const Json& params) {
    OracleParams o;
    read(params, "sample_count", o.sample_count);
    read(params, "seed", o.seed);
    read(params, "refine_seeds", o.refine_seeds);
    read(params, "seed_separation", o.seed_separation);
    read(params, "max_iterations", o.max_iterations);
    read(params, "initial_step", o.initial_step);
    read(params, "step_tolerance", o.step_tolerance);
    read(params, "merge_tolerance", o.merge_tolerance);
    read(params, "value_band", o.value_band);
    read(params, "face_tolerance", o.face_tolerance);
    read(params, "on_variety_tolerance", o.on_variety_tolerance);
    read(params, "zero_set_resolution", o.zero_set_resolution);
    read(params, "zero_set_points", o.zero_set_points);
    return o;
}

}  // namespace polyvor
