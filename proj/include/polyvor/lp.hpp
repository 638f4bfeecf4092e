#pragma once

#include "polyvor/rational.hpp"

#include <optional>

namespace polyvor {

/// Exact phase-one simplex (Bland's rule) for { x >= 0 : A x = b }.
/// Returns a feasible point, or std::nullopt when the polyhedron is empty.
std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a,
                                                        std::span<const Rational> b);

/// Strictly positive solution of sum_i lambda_i g_i = target, if one exists.
/// Decided exactly through the homogenized system lambda_i >= 1, tau >= 1,
/// sum lambda_i g_i = tau * target, then rescaled by 1/tau.
std::optional<RationalVector> positive_combination(std::span<const RationalVector> generators,
                                                   std::span<const Rational> target);

/// Does span(basis) meet the open cone generated by `generators`?
/// Returns the strictly positive cone coefficients of a witness when it does.
std::optional<RationalVector> span_meets_open_cone(std::span<const RationalVector> basis,
                                                   std::span<const RationalVector> generators);

}  // namespace polyvor
