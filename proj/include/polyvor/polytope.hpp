#pragma once

#include "polyvor/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace polyvor {

class BallError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite negation-closed set of linear functionals; the norm is
/// h(x) = max over the set of <l, x>. Functionals are taken literally, so
/// scaling one of them changes the ball.
struct FunctionalSet {
    std::vector<RationalVector> functionals;
    std::size_t dimension = 0;

    static FunctionalSet from(std::vector<RationalVector> functionals);
};

struct Face {
    int id = -1;
    int dim = 0;
    std::vector<int> vertex_ids;             // sorted
    std::vector<int> active_functional_ids;  // sorted; l == 1 on the face
    int negation_id = -1;

    bool operator==(const Face&) const = default;
};

/// Cone at `apex`: open = strictly positive span of the generators, closed =
/// nonnegative span without the origin.
struct ConeDescription {
    RationalVector apex;
    std::vector<RationalVector> generators;
    bool open = true;
};

class UnitBall {
public:
    /// Enumerates vertices from n-subsets of functionals and builds the face
    /// lattice. Throws BallError when the set is not negation-closed, has a
    /// zero or redundant functional, or cuts out an unbounded region.
    static UnitBall build(const FunctionalSet& functionals);

    std::size_t dimension() const { return dim_; }
    const FunctionalSet& functionals() const { return functionals_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<std::vector<double>>& functionals_double() const { return functionals_d_; }
    const Face& face(int id) const;

    /// Face whose vertex set is exactly `vertex_ids` (sorted or not).
    const Face* find_face_by_vertices(std::vector<int> vertex_ids) const;
    /// Smallest face on which every functional of `functional_ids` equals one.
    const Face* find_face_by_functionals(std::span<const int> functional_ids) const;

    int vertex_index(std::span<const Rational> point) const;
    int functional_index(std::span<const Rational> functional) const;
    std::vector<RationalVector> face_vertices(const Face& f) const;

    /// Face of the lattice consisting of a single vertex id.
    const Face& vertex_face(int vertex_id) const;
    /// Facet face whose only active functional is `functional_id`.
    const Face& facet_face(int functional_id) const;

private:
    std::size_t dim_ = 0;
    FunctionalSet functionals_;
    std::vector<RationalVector> vertices_;
    std::vector<Face> faces_;
    std::vector<std::vector<double>> functionals_d_;
};

UnitBall build_ball(const FunctionalSet& functionals);

/// Polar dual: vertices of the result are the functionals of `ball` and
/// its functionals are the vertices of `ball`.
UnitBall dual_ball(const UnitBall& ball);

/// Face of dual_ball(ball) whose vertex set is the active functional set of F.
/// `dual` must be dual_ball(ball).
const Face& dual_face(const UnitBall& ball, const UnitBall& dual, const Face& f);
Face dual_face(const UnitBall& ball, const Face& f);

/// Face F with v in the open inner normal cone C(B, F): spanned by the full
/// argmin of <v, vertex>.
const Face& minimizing_face(const UnitBall& ball, std::span<const Rational> v);

/// Inner normals (negated active functionals) of F, as an open cone at 0.
ConeDescription cone_generators(const UnitBall& ball, const Face& f);

bool in_open_cone(const ConeDescription& cone, std::span<const Rational> v);

/// Strictly positive coefficients expressing v - apex over the generators.
std::optional<RationalVector> open_cone_certificate(const ConeDescription& cone,
                                                    std::span<const Rational> v);

/// Faces F' with F contained in F' (F included); the closed cone of F is
/// the disjoint union of their open cones.
std::vector<const Face*> cone_closure_faces(const UnitBall& ball, const Face& f);

/// Faces with dim F = n - 1 - i.
std::vector<const Face*> faces_of_codim_index(const UnitBall& ball, int i);

/// Codim index i = n - 1 - dim F.
int codim_index(const UnitBall& ball, const Face& f);

Rational norm_value(const UnitBall& ball, std::span<const Rational> x);
double norm_value(const UnitBall& ball, std::span<const double> x);

}  // namespace polyvor
