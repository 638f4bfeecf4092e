#pragma once

#include "polyvor/polynomial.hpp"
#include "polyvor/polytope.hpp"
#include "polyvor/sampling.hpp"
#include "polyvor/variety.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyvor {

/// A point z of X with grad f(z) parallel to the functional of a facet.
struct TangentPoint {
    int facet_id = -1;
    /// Exact when `exact`; otherwise a rational approximation.
    RationalVector point;
    bool exact = true;
    /// Per-coordinate enclosure; lo == hi for exact coordinates.
    std::vector<std::pair<Rational, Rational>> enclosure;
    /// Level l(z) of the facet functional; the components only see z through it.
    Rational level;
    bool level_exact = true;
    /// The whole line {l = level} lies in X (a positive-dimensional tangent set).
    bool on_line = false;
    bool near_box_boundary = false;
};

enum class PairKind { VertexVertex, VertexFacet, FacetFacet };

std::string to_string(PairKind kind);

struct EquidistantComponent {
    MultiPoly poly;  // normalized; zero when zero_resultant_flag is set
    int face_a = -1;
    int face_b = -1;
    PairKind kind = PairKind::VertexVertex;
    /// z for vertex-facet, (p, q) for facet-facet.
    std::vector<TangentPoint> tangent_points;
    /// Functional ids stacked into A for each vertex (vertex pairs only).
    std::vector<int> functionals_a;
    std::vector<int> functionals_b;
    MultiPoly raw_resultant;
    int degree_bound = 0;
    bool zero_resultant_flag = false;
    bool exact = true;
    /// Vertex lies on the facet, giving a doubled line through the tangency.
    bool degenerate = false;
    /// Nonzero constant: no real points at all.
    bool empty_zero_set = false;
};

/// A^{-1} 1 with A stacking the lexicographically first n independent
/// active functionals of the vertex. `chosen` receives their ids.
RationalVector vertex_direction(const UnitBall& ball, const Face& vertex,
                                std::vector<int>* chosen = nullptr);

EquidistantComponent vertex_vertex_component(const Hypersurface& x, const UnitBall& ball,
                                             const Face& v1, const Face& v2);

/// Real solutions of f = 0, grad f parallel to the facet functional, in the
/// box. Exact (resultant + root isolation) for n = 2, numeric for n >= 3.
std::vector<TangentPoint> tangent_points_to_facet(const Hypersurface& x, const UnitBall& ball,
                                                  const Face& facet, const Box& box);

EquidistantComponent vertex_facet_component(const Hypersurface& x, const UnitBall& ball,
                                            const Face& vertex, const Face& facet,
                                            const TangentPoint& z);

/// One linear polynomial l_a(p - u) - l_b(q - u) per pair of tangent points
/// (p on Fa, q on Fb, p != q).
std::vector<EquidistantComponent> facet_facet_components(const Hypersurface& x,
                                                         const UnitBall& ball, const Face& fa,
                                                         const Face& fb, const Box& box);

std::vector<EquidistantComponent> facet_facet_components(
    const UnitBall& ball, const Face& fa, const Face& fb, const std::vector<TangentPoint>& pa,
    const std::vector<TangentPoint>& pb);

struct OutOfScopePair {
    int face_a = -1;
    int face_b = -1;
    std::string reason;
};

struct FacetFamily {
    int face_a = -1;
    int face_b = -1;
    std::size_t count = 0;
    std::size_t bound = 0;  // s * t
};

struct EquidistantLocus {
    std::vector<EquidistantComponent> components;
    std::vector<EquidistantComponent> full_dimensional;  // zero_resultant_flag set
    std::vector<OutOfScopePair> out_of_scope;
    std::vector<FacetFamily> facet_families;
    std::vector<std::vector<TangentPoint>> tangent_points;  // indexed by functional id
};

/// All vertex-vertex, vertex-facet and facet-facet components. Pairs with a
/// face of intermediate dimension (n >= 3) are listed as out of scope.
EquidistantLocus equidistant_locus(const Hypersurface& x, const UnitBall& ball, const Box& box);

struct DegreeEntry {
    int face_a = -1;
    int face_b = -1;
    PairKind kind = PairKind::VertexVertex;
    int degree = -1;
    int bound = 0;
    bool ok = true;
};

struct DegreeReport {
    std::vector<DegreeEntry> entries;
    std::vector<FacetFamily> families;
    bool all_ok = true;
};

/// Checks each component against its degree bound (d^2 - d for vertex pairs, d otherwise) and each facet family
/// against s * t.
DegreeReport degree_report(const EquidistantLocus& locus);

/// For deg f = 2: every component has degree <= 4. Throws for other degrees.
DegreeReport quadratic_degree_check(const Hypersurface& x, const UnitBall& ball, const Box& box);

}  // namespace polyvor
