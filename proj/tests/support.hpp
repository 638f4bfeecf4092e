#pragma once

#include "polyvor/medial.hpp"
#include "polyvor/oracle.hpp"
#include "polyvor/polynomial.hpp"
#include "polyvor/polytope.hpp"
#include "polyvor/problem.hpp"
#include "polyvor/rational.hpp"
#include "polyvor/variety.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using namespace polyvor;

inline Rational R(const std::string& s) { return parse_rational(s); }

inline RationalVector V(std::initializer_list<const char*> xs) {
    RationalVector v;
    for (const char* x : xs) {
        v.push_back(parse_rational(x));
    }
    return v;
}

inline UnitBall ball_from(std::vector<RationalVector> ls) {
    return build_ball(FunctionalSet::from(std::move(ls)));
}

inline UnitBall square() { return ball_from({V({"1", "0"}), V({"-1", "0"}), V({"0", "1"}), V({"0", "-1"})}); }

inline UnitBall diamond() {
    return ball_from({V({"1", "1"}), V({"1", "-1"}), V({"-1", "1"}), V({"-1", "-1"})});
}

inline UnitBall cube() {
    std::vector<RationalVector> ls;
    for (int i = 0; i < 3; ++i) {
        for (int s : {1, -1}) {
            RationalVector l(3, Rational(0));
            l[static_cast<std::size_t>(i)] = s;
            ls.push_back(l);
        }
    }
    return ball_from(ls);
}

/// Polynomial from (coefficient, exponents) pairs.
inline MultiPoly P(std::size_t n, std::initializer_list<std::pair<const char*, Exponents>> terms) {
    MultiPoly f(n);
    for (const auto& [c, e] : terms) {
        f.add_term(e, parse_rational(c));
    }
    return f;
}

inline MultiPoly circle_poly() { return P(2, {{"1", {2, 0}}, {"1", {0, 2}}, {"-1", {0, 0}}}); }
inline MultiPoly parabola_poly() { return P(2, {{"1", {0, 1}}, {"-1", {2, 0}}}); }
inline MultiPoly ellipse_poly() { return P(2, {{"4", {2, 0}}, {"1", {0, 2}}, {"-4", {0, 0}}}); }
inline MultiPoly hyperboloid_poly() {
    return P(3, {{"36", {2, 0, 0}}, {"9", {0, 2, 0}}, {"-4", {0, 0, 2}}, {"-36", {0, 0, 0}}});
}
inline MultiPoly torus_poly() {
    return P(3, {{"1", {4, 0, 0}}, {"1", {0, 4, 0}}, {"1", {0, 0, 4}}, {"2", {2, 2, 0}},
                 {"2", {2, 0, 2}}, {"2", {0, 2, 2}}, {"-10", {2, 0, 0}}, {"-10", {0, 2, 0}},
                 {"6", {0, 0, 2}}, {"9", {0, 0, 0}}});
}

inline Box box2(double lo0, double hi0, double lo1, double hi1) { return Box{{lo0, lo1}, {hi0, hi1}}; }
inline Box cube_box(double r) { return Box{{-r, -r, -r}, {r, r, r}}; }

inline const Face& vertex_at(const UnitBall& b, const RationalVector& v) {
    const int id = b.vertex_index(v);
    if (id < 0) {
        throw std::invalid_argument("no such vertex");
    }
    return b.vertex_face(id);
}

inline const Face& face_spanned(const UnitBall& b, const std::vector<RationalVector>& verts) {
    std::vector<int> ids;
    for (const auto& v : verts) {
        ids.push_back(b.vertex_index(v));
    }
    const Face* f = b.find_face_by_vertices(ids);
    if (!f) {
        throw std::invalid_argument("no such face");
    }
    return *f;
}

/// Same polynomial up to a nonzero rational factor.
inline bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    return normalize(a) == normalize(b);
}

inline std::vector<RationalVector> sorted(std::vector<RationalVector> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
}

/// Random rational in [-bound, bound] with denominator up to `den`.
inline Rational random_rational(std::mt19937_64& rng, int bound, int den) {
    std::uniform_int_distribution<int> d(1, den);
    const int q = d(rng);
    std::uniform_int_distribution<int> n(-bound * q, bound * q);
    Rational r(n(rng), q);
    r.canonicalize();
    return r;
}

}  // namespace testing
