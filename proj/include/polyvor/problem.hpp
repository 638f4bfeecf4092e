#pragma once

#include "polyvor/oracle.hpp"
#include "polyvor/polynomial.hpp"
#include "polyvor/rational.hpp"
#include "polyvor/sampling.hpp"
#include "polyvor/variety.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyvor {

using Json = nlohmann::json;

class ProblemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One problem file: a ball, a polynomial and optional points, box and
/// parameters. Rationals travel as strings so nothing is coerced to float.
struct Problem {
    std::vector<RationalVector> ball;
    MultiPoly polynomial;
    std::vector<RationalVector> points;
    std::optional<Box> box;
    Json params = Json::object();

    std::size_t dimension() const { return ball.empty() ? 0 : ball.front().size(); }
    bool operator==(const Problem& o) const;
};

Problem parse_problem(const Json& j);
Problem parse_problem_text(const std::string& text);
Problem load_problem(const std::string& path);
Json to_json(const Problem& p);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
RationalVector rational_vector_from_json(const Json& j);
Json to_json(const Rational& q);
Json to_json(std::span<const Rational> v);
Json polynomial_to_json(const MultiPoly& f);
MultiPoly polynomial_from_json(const Json& j, std::size_t arity = 0);

/// Floats are tagged so that readers never mistake them for exact values.
Json approximate(std::span<const double> x);

/// Comma-separated rationals, e.g. "0,1" or "3/5,9/25,27/125".
RationalVector parse_point(const std::string& text);

StratifyParams stratify_params(const Json& params);
OracleParams oracle_params(const Json& params);

}  // namespace polyvor
