#pragma once

#include "polyvor/polynomial.hpp"
#include "polyvor/polytope.hpp"
#include "polyvor/sampling.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace polyvor {

/// X = V(f) for a nonconstant f, read as a codimension-one variety.
struct Hypersurface {
    MultiPoly f;
    std::vector<MultiPoly> grad;
    NumericPoly numeric;

    static Hypersurface from(MultiPoly f);
    std::size_t dimension() const { return f.arity(); }
    int degree() const { return f.degree(); }
};

class OffVarietyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularPointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoVarietyPointsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TypeResult {
    std::vector<int> faces;  // sorted face ids, closed under negation
    bool is_codim_one = true;
};

/// {F, -F} with F the minimizing face of grad f(v). Throws OffVarietyError
/// when f(v) != 0 and SingularPointError when grad f(v) = 0.
TypeResult type_of(const Hypersurface& x, const UnitBall& ball, std::span<const Rational> v);

/// Faces F whose open inner normal cone meets span(normal_generators).
TypeResult type_general(const std::vector<RationalVector>& normal_generators, const UnitBall& ball);

/// Closed cone over the dual face F* in the dual ball: generators are the
/// inner normals of F*, which coincide with the negated vertices of F. Both
/// routes are computed; std::logic_error if they ever disagree.
ConeDescription voronoi_cone_of_face(const UnitBall& ball, const UnitBall& dual, const Face& f);

struct VoronoiCone {
    RationalVector apex;
    std::vector<int> face_ids;
    std::vector<ConeDescription> cones;  // closed, apex at v, one per face id
};

VoronoiCone voronoi_cone(const Hypersurface& x, const UnitBall& ball, std::span<const Rational> v);

struct StratumLabel {
    int index = -1;
    int face_id = -1;
    std::vector<RationalVector> generators;  // inner normals w_j of the face
    RationalVector certificate;              // grad f(v) = sum certificate[j] w_j, all > 0
};

StratumLabel stratum_of(const Hypersurface& x, const UnitBall& ball, std::span<const Rational> v);

/// Label from an exact gradient (v need not lie exactly on X).
StratumLabel stratum_from_gradient(const UnitBall& ball, std::span<const Rational> gradient);

struct StratifyParams {
    std::size_t count = 2000;
    std::uint64_t seed = 0;
    /// Radius for closure-anomaly and neighborhood checks; 0 selects
    /// 0.05 times the box diagonal.
    double neighborhood_radius = 0.0;
    long max_denominator = 1000000;
    /// Relative vertex-gap below which a label is advisory.
    double boundary_tolerance = 1e-9;
    /// Share of the budget spent solving f = 0, grad f in span(F) per face.
    double stratum_seed_fraction = 0.3;
};

struct ClassifiedPoint {
    Point point;
    RationalVector rational;
    bool singular = false;
    StratumLabel label;  // exact label at `rational`
    bool near_boundary = false;
    int advisory_index = -1;
    int advisory_face_id = -1;

    int effective_index() const {
        return singular ? -1 : (near_boundary ? advisory_index : label.index);
    }
};

ClassifiedPoint classify_point(const Hypersurface& x, const UnitBall& ball, const Point& p,
                               const StratifyParams& params);

struct Stratification {
    std::vector<ClassifiedPoint> points;
    std::map<int, std::size_t> histogram;  // effective index -> count; -1 = singular
    /// Points of index i < n - 1 at least one radius inside the box without an
    /// index-(i + 1) point within radius.
    std::vector<std::size_t> closure_anomalies;
    double radius = 0.0;
};

/// Throws NoVarietyPointsError when no point of X is found in the box.
Stratification sample_and_classify(const Hypersurface& x, const UnitBall& ball, const Box& box,
                                   const StratifyParams& params);

/// Number of single-linkage clusters at the given radius.
std::size_t count_clusters(const std::vector<Point>& points, double radius);

}  // namespace polyvor
