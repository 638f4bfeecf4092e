#pragma once

#include "polyvor/polynomial.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace polyvor {

using Point = std::vector<double>;

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t dimension() const { return lo.size(); }
    double diagonal() const;
    bool contains(std::span<const double> x, double slack = 0.0) const;
    /// Throws std::invalid_argument on mismatched or empty bounds.
    void validate() const;
};

/// Floating-point evaluation of a polynomial together with its gradient and
/// Hessian, compiled once from an exact MultiPoly.
class NumericPoly {
public:
    NumericPoly() = default;
    explicit NumericPoly(const MultiPoly& f);

    std::size_t arity() const { return arity_; }
    double value(std::span<const double> x) const;
    Eigen::VectorXd gradient(std::span<const double> x) const;
    Eigen::MatrixXd hessian(std::span<const double> x) const;

private:
    struct Term {
        double coeff;
        std::vector<int> exps;
    };
    struct Compiled {
        std::vector<Term> terms;
        double eval(std::span<const double> x, const std::vector<std::vector<double>>& powers) const;
    };
    std::vector<std::vector<double>> powers(std::span<const double> x) const;

    std::size_t arity_ = 0;
    int max_degree_ = 0;
    Compiled f_;
    std::vector<Compiled> grad_;
    std::vector<Compiled> hess_;  // row-major n x n
};

struct ProjectionParams {
    int max_iterations = 60;
    /// Accept when |f| / |grad f| falls below this.
    double residual_tolerance = 1e-10;
};

/// Newton projection x <- x - f grad f / |grad f|^2 onto {f = 0}.
std::optional<Point> project_to_variety(const NumericPoly& f, Point x,
                                        const ProjectionParams& params = {});

/// Gauss-Newton solve of f = 0 together with grad f lying in span(directions).
std::optional<Point> project_to_normal_condition(const NumericPoly& f,
                                                 const std::vector<Point>& directions, Point x,
                                                 const ProjectionParams& params = {});

/// Grid seeds (odd counts per axis, so coordinate hyperplanes are included)
/// plus seeded uniform random seeds, projected onto {f = 0}; points outside
/// the box and duplicates are dropped and replaced by fresh random seeds, so
/// up to `count` points come back. Deterministic for a fixed seed.
std::vector<Point> sample_variety(const NumericPoly& f, const Box& box, std::size_t count,
                                  std::uint64_t seed);

struct Segment2 {
    std::array<double, 2> a;
    std::array<double, 2> b;
};

/// Zero-level segments of a bivariate polynomial over an nx x ny grid.
std::vector<Segment2> marching_squares(const NumericPoly& f, const Box& box, int nx, int ny);

/// Points of {f = 0} found by bisection on sign-changing edges of a grid
/// shifted off the box lattice (plus minima of |f| along grid lines, so
/// even-multiplicity zeros are found too), thinned evenly to max_points.
std::vector<Point> zero_set_points(const MultiPoly& f, const Box& box, int resolution,
                                   std::size_t max_points);

}  // namespace polyvor
