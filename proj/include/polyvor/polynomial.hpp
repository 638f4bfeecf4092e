#pragma once

#include "polyvor/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyvor {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. No zero coefficient is ever stored.
class MultiPoly {
public:
    using Terms = std::map<Exponents, Rational, GradedLex>;

    explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, const Rational& c);
    static MultiPoly variable(std::size_t arity, std::size_t index);
    /// sum_i coeffs[i] * x_i + offset
    static MultiPoly linear(std::span<const Rational> coeffs, const Rational& offset);

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(std::size_t var) const;
    Rational coefficient(const Exponents& e) const;
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly pow(unsigned k) const;

    /// Human-readable form using `names` (default x1, x2, ...).
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_arity(const MultiPoly& o) const;

    std::size_t arity_ = 0;
    Terms terms_;
};

Rational evaluate(const MultiPoly& f, std::span<const Rational> x);
double evaluate(const MultiPoly& f, std::span<const double> x);
MultiPoly derivative(const MultiPoly& f, std::size_t var);
std::vector<MultiPoly> gradient(const MultiPoly& f);
std::vector<Rational> evaluate_gradient(const MultiPoly& f, std::span<const Rational> x);

/// Substitutes x_i -> images[i] (all images share one arity).
MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images);

/// Primitive integer form with positive leading coefficient (graded lex).
MultiPoly normalize(const MultiPoly& f);

/// r with p = q * r, or std::nullopt when q does not divide p.
/// Throws std::invalid_argument when q is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q);

/// Polynomial in lambda whose coefficients are polynomials in u.
/// coefficients[i] multiplies lambda^i.
class UniPolyOverU {
public:
    UniPolyOverU() = default;
    UniPolyOverU(std::size_t u_arity, std::vector<MultiPoly> coefficients);

    std::size_t u_arity() const { return arity_; }
    const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
    /// Degree in lambda after dropping identically-zero leading coefficients;
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MultiPoly& coefficient(std::size_t i) const { return coeffs_.at(i); }
    bool is_zero() const { return coeffs_.empty(); }

    UniPolyOverU& operator+=(const UniPolyOverU& o);
    friend UniPolyOverU operator*(const UniPolyOverU& a, const UniPolyOverU& b);

    /// Specializes u and evaluates at lambda.
    Rational evaluate(std::span<const Rational> u, const Rational& lambda) const;
    /// Univariate coefficients (low to high) after fixing u.
    std::vector<Rational> specialize(std::span<const Rational> u) const;

private:
    void trim();

    std::size_t arity_ = 0;
    std::vector<MultiPoly> coeffs_;
};

/// g(u, lambda) = f(u + direction * lambda).
UniPolyOverU substitute_line(const MultiPoly& f, std::span<const Rational> direction);

/// Determinant of a square matrix of polynomials (fraction-free Bareiss).
MultiPoly polynomial_determinant(std::vector<std::vector<MultiPoly>> m, std::size_t arity);

/// Sylvester-matrix resultant in lambda; an input whose leading coefficients
/// vanish identically is treated at its reduced degree.
/// Throws std::invalid_argument when both inputs are constant in lambda.
MultiPoly sylvester_resultant(const UniPolyOverU& g1, const UniPolyOverU& g2);

/// The Sylvester matrix itself (rows of polynomials), for inspection.
std::vector<std::vector<MultiPoly>> sylvester_matrix(const UniPolyOverU& g1,
                                                     const UniPolyOverU& g2);

/// Dense univariate polynomial over Q, coefficients low to high.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;
    UniPoly derivative() const;
    const Rational& leading() const { return c_.back(); }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    bool operator==(const UniPoly&) const = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of a / b over Q.
std::pair<UniPoly, UniPoly> divide(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly squarefree_part(const UniPoly& p);

/// Univariate polynomial from a MultiPoly that only involves variable `var`.
UniPoly to_univariate(const MultiPoly& f, std::size_t var);

/// An isolated real root: exact when lo == hi, otherwise the unique root of
/// the squarefree part inside the open interval (lo, hi).
struct RealRoot {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
    double approx() const;
};

/// All distinct real roots, sorted, each either exact (rational) or isolated
/// in an interval of width <= max_width. Throws on the zero polynomial.
std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& max_width);

}  // namespace polyvor
