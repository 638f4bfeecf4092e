#include "properties.hpp"

#include <doctest.h>

#include <cmath>

using namespace testing;

namespace {

double sup(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

/// Square-norm distance from u to the parabola through its parametrization (t, t^2).
double parabola_brute_force(double u1, double u2) {
    auto h = [&](double t) { return sup(t - u1, t * t - u2); };
    double best_t = 0, best = INFINITY;
    for (int k = 0; k <= 60000; ++k) {
        const double t = -3.0 + 6.0 * k / 60000.0;
        if (h(t) < best) {
            best = h(t);
            best_t = t;
        }
    }
    double lo = best_t - 1e-4, hi = best_t + 1e-4;
    for (int it = 0; it < 200; ++it) {
        const double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
        if (h(a) < h(b)) {
            hi = b;
        } else {
            lo = a;
        }
    }
    return std::min(best, h((lo + hi) / 2));
}

struct Instances {
    UnitBall sq = square();
    Hypersurface par = Hypersurface::from(parabola_poly());
    Hypersurface cir = Hypersurface::from(circle_poly());
    DistanceOracle par_oracle{par, sq, box2(-3, 3, -1, 5)};
    DistanceOracle cir_oracle{cir, sq, box2(-2, 2, -2, 2)};
};

const Instances& instances() {
    static const Instances in;
    return in;
}

double dist(const Point& a, const Point& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

/// Walks along the segment a -> b, finds where the nearest point jumps, and
/// bisects to a point of the medial axis.
std::optional<Point> medial_crossing(const DistanceOracle& o, Point a, Point b) {
    auto nearest = [&](const Point& u) { return o.distance(u).minimizers.front(); };
    const Point na = nearest(a), nb = nearest(b);
    if (dist(na, nb) < 0.05) {
        return std::nullopt;
    }
    for (int it = 0; it < 45; ++it) {
        const Point m = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
        const Point nm = nearest(m);
        (dist(nm, na) < dist(nm, nb) ? a : b) = m;
    }
    return Point{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
}

double normalized_value(const MultiPoly& g, const Point& u) {
    const MultiPoly n = normalize(g);
    double scale = 0.0;
    for (const auto& [e, c] : n.terms()) {
        scale = std::max(scale, std::abs(c.get_d()));
    }
    return std::abs(evaluate(n, std::span<const double>(u))) / scale;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("parabola distances agree with a parametric brute force") {
    const auto& in = instances();
    const DistanceResult r = in.par_oracle.distance(Point{0, 1});
    CHECK(r.value == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-9));
    REQUIRE(r.minimizers.size() == 2);
    const double t = (std::sqrt(5.0) - 1) / 2;
    CHECK(r.minimizers[0][0] == doctest::Approx(-t).epsilon(1e-7));
    CHECK(r.minimizers[1][0] == doctest::Approx(t).epsilon(1e-7));
    CHECK(r.minimizers[1][1] == doctest::Approx(t * t).epsilon(1e-7));
    for (double res : r.residuals) {
        CHECK(res <= 1e-8);
    }
    for (double v : r.minimizer_values) {
        CHECK(std::abs(v - r.value) <= 1e-6);
    }

    const DistanceResult z = in.par_oracle.distance(Point{2, 4});
    CHECK(z.value == doctest::Approx(0.0));
    REQUIRE(z.minimizers.size() == 1);
    CHECK(dist(z.minimizers[0], {2, 4}) < 1e-9);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ux(-2, 2), uy(-0.5, 3.5);
    for (int k = 0; k < 25; ++k) {
        const double a = ux(rng), b = uy(rng);
        CHECK(in.par_oracle.distance(Point{a, b}).value == doctest::Approx(parabola_brute_force(a, b)).epsilon(1e-7));
    }
}

TEST_CASE("hyperboloid saddle: distance from (2,0,0)") {
    const Hypersurface hyp = Hypersurface::from(hyperboloid_poly());
    const UnitBall cu = cube();
    const DistanceResult r = distance_to_variety(hyp, cu, Point{2, 0, 0}, cube_box(3));
    const double xs = (-1 + 3 * std::sqrt(3.0)) / 4;
    CHECK(r.value == doctest::Approx(2 - xs).epsilon(1e-9));
    REQUIRE(r.minimizers.size() == 2);
    for (const auto& m : r.minimizers) {
        CHECK(m[0] == doctest::Approx(xs).epsilon(1e-7));
        CHECK(std::abs(m[1]) < 1e-7);
        CHECK(std::abs(std::abs(m[2]) - (2 - xs)) < 1e-7);
        CHECK(std::hypot(m[0] - 1, m[1], m[2]) > 0.5);
    }
}

TEST_CASE("optimizing faces") {
    const UnitBall sq = square();
    const double t = (std::sqrt(5.0) - 1) / 2;
    const Face& f = optimizing_face_of(sq, Point{0, 1}, Point{t, t * t}, t);
    REQUIRE(f.dim == 0);
    CHECK(sq.vertices()[static_cast<std::size_t>(f.vertex_ids[0])] == V({"1", "-1"}));

    const auto& in = instances();
    const DistanceResult r = in.par_oracle.distance(Point{0, 2});
    REQUIRE(r.minimizers.size() == 2);
    for (int id : r.optimizing_faces) {
        CHECK(sq.face(id).dim == 0);
    }

    const Face& e = optimizing_face_of(sq, Point{0, 0.5}, Point{0, 1}, 0.5);
    CHECK(e.dim == 1);
    CHECK(e.active_functional_ids == std::vector<int>{sq.functional_index(V({"0", "1"}))});
    CHECK_THROWS_AS(optimizing_face_of(sq, Point{0, 0}, Point{0, 1}, 0.5), std::invalid_argument);
}

TEST_CASE("medial candidates") {
    const auto& in = instances();
    CHECK(in.par_oracle.is_medial_candidate(Point{0, 2}));
    CHECK(in.par_oracle.is_medial_candidate(Point{0, 0.5}));
    CHECK_FALSE(in.par_oracle.is_medial_candidate(Point{1, 0}));
    CHECK_FALSE(in.cir_oracle.is_medial_candidate(Point{0.35, 0.35}));
    CHECK(in.cir_oracle.is_medial_candidate(Point{0, 0.3}));
    CHECK_THROWS_AS(in.par_oracle.is_medial_candidate(Point{2, 4}), std::invalid_argument);
}

TEST_CASE("oracle value is an upper bound witnessed by exact points") {
    const auto& in = instances();
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> uu(-1.8, 1.8);
    for (int k = 0; k < 20; ++k) {
        const Point u = {uu(rng), uu(rng)};
        if (std::abs(u[0] * u[0] + u[1] * u[1] - 1) < 1e-3) {
            continue;
        }
        const double v = in.cir_oracle.distance(u).value;
        for (int j = -40; j <= 40; ++j) {
            const Rational s(j, 10);
            const Rational d = 1 + s * s;
            const Point x = {Rational((1 - s * s) / d).get_d(), Rational(2 * s / d).get_d()};
            CHECK(sup(u[0] - x[0], u[1] - x[1]) >= v - 1e-6);
        }
    }
}

TEST_CASE("distances respect the symmetry of circle and square") {
    const auto& in = instances();
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> uu(-1.5, 1.5);
    for (int k = 0; k < 10; ++k) {
        const double a = uu(rng), b = uu(rng);
        const double v = in.cir_oracle.distance(Point{a, b}).value;
        for (const Point& g : {Point{-a, b}, Point{a, -b}, Point{b, a}, Point{-b, -a}}) {
            CHECK(in.cir_oracle.distance(g).value == doctest::Approx(v).epsilon(1e-8));
        }
    }
}

TEST_CASE("Voronoi-cone consistency on convex-side instances") {
    const auto& in = instances();
    std::mt19937_64 rng(31);
    for (int k = 0; k < 20; ++k) {
        Rational s = random_rational(rng, 1, 16);
        const Rational d = 1 + s * s;
        const RationalVector vc = {Rational((1 - s * s) / d), Rational(2 * s / d)};
        Rational w = random_rational(rng, 1, 16);
        w += w < 0 ? Rational(-1, 2) : Rational(1, 2);
        const RationalVector vp = {w, w * w};
        for (auto [x, o, v] : {std::tuple{&in.cir, &in.cir_oracle, vc}, std::tuple{&in.par, &in.par_oracle, vp}}) {
            const VoronoiCone cone = voronoi_cone(*x, in.sq, v);
            const Point vd = to_double(v);
            for (const auto& c : cone.cones) {
                if (c.generators.size() != 1) {
                    continue;
                }
                const Point gd = to_double(c.generators[0]);
                for (double t : {0.05, 0.1}) {
                    const Point u = {vd[0] + t * gd[0], vd[1] + t * gd[1]};
                    for (const auto& m : o->distance(u).minimizers) {
                        INFO("v=", vd[0], ",", vd[1], " t=", t);
                        CHECK(dist(m, vd) < 1e-3);
                    }
                }
            }
        }
    }
}

TEST_CASE("edge-type points of the circle have trivial Voronoi cells") {
    const auto& in = instances();
    for (double t : {0.01, 0.05, 0.2}) {
        const DistanceResult r = in.cir_oracle.distance(Point{0, 1 - t});
        CHECK(r.value < t);
        CHECK(r.minimizers.size() == 2);
    }
}

TEST_CASE("medial points lie on equidistant components") {
    const auto& in = instances();
    int found = 0;
    for (auto [x, o, box] : {std::tuple{&in.par, &in.par_oracle, box2(-3, 3, -1, 5)},
                             std::tuple{&in.cir, &in.cir_oracle, box2(-2, 2, -2, 2)}}) {
        const EquidistantLocus locus = equidistant_locus(*x, in.sq, box);
        std::vector<std::pair<Point, Point>> segments;
        for (int k = 0; k < 25; ++k) {
            const double c = 0.1 + 0.03 * k;
            if (x == &in.par) {
                segments.push_back({{-1.5, c + 0.2}, {1.3, c + 0.2}});
            } else {
                segments.push_back(k % 2 ? std::pair{Point{-0.8, c - 0.4}, Point{0.7, c - 0.4}}
                                         : std::pair{Point{c - 0.4, -0.8}, Point{c - 0.4, 0.7}});
            }
        }
        for (const auto& [a, b] : segments) {
            const auto m = medial_crossing(*o, a, b);
            if (!m) {
                continue;
            }
            ++found;
            double best = INFINITY;
            for (const auto& comp : locus.components) {
                if (!comp.poly.is_zero() && !comp.poly.is_constant()) {
                    best = std::min(best, normalized_value(comp.poly, *m));
                }
            }
            INFO("medial point " << (*m)[0] << ", " << (*m)[1]);
            CHECK(best <= 1e-6);
        }
    }
    CHECK(found >= 40);
}

TEST_CASE("component pruning") {
    const auto& in = instances();
    const auto cir = equidistant_locus(in.cir, in.sq, box2(-2, 2, -2, 2));
    const PruneResult pr = prune_components(cir.components, in.cir_oracle);
    const MultiPoly u1 = MultiPoly::variable(2, 0), u2 = MultiPoly::variable(2, 1);
    auto status_of = [&](const MultiPoly& p, PairKind kind) {
        std::vector<SupportStatus> out;
        for (const auto& d : pr.details) {
            const auto& c = cir.components[d.component];
            if (c.kind == kind && proportional(c.poly, p)) {
                out.push_back(d.status);
            }
        }
        return out;
    };
    const auto diag = status_of((u1 - u2) * (u1 - u2), PairKind::VertexVertex);
    REQUIRE_FALSE(diag.empty());
    for (auto s : diag) {
        CHECK(s == SupportStatus::Unsupported);
    }
    for (auto s : status_of((u1 + u2) * (u1 + u2), PairKind::VertexVertex)) {
        CHECK(s == SupportStatus::Unsupported);
    }
    const auto axis = status_of(u1 * u1, PairKind::VertexVertex);
    CHECK(std::count(axis.begin(), axis.end(), SupportStatus::Supported) >= 1);
    // near the center the nearest points are diagonal corners, never edge contacts
    for (auto s : status_of(u2 - u1, PairKind::FacetFacet)) {
        CHECK(s == SupportStatus::Unsupported);
    }

    const auto par = equidistant_locus(in.par, in.sq, box2(-3, 3, -1, 5));
    const PruneResult pp = prune_components(par.components, in.par_oracle);
    bool supported_axis = false;
    for (const auto& d : pp.details) {
        const auto& c = par.components[d.component];
        if (c.poly == u1 * u1 && d.status == SupportStatus::Supported) {
            supported_axis = true;
            CHECK_FALSE(d.witnesses.empty());
        }
    }
    CHECK(supported_axis);
    CHECK_FALSE(pp.no_real_points.empty());
}

TEST_CASE("oracle failures") {
    const auto& in = instances();
    CHECK_THROWS_AS(DistanceOracle(in.cir, in.sq, box2(5, 6, 5, 6)), OracleFailure);
    CHECK_THROWS(in.cir_oracle.distance(Point{1, 2, 3}));
}

}
