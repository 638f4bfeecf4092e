#include "polyvor/variety.hpp"

#include "polyvor/lp.hpp"
#include "polyvor/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace polyvor {

Hypersurface Hypersurface::from(MultiPoly f) {
    if (f.is_constant()) {
        throw std::invalid_argument("hypersurface: polynomial must be nonconstant");
    }
    Hypersurface x;
    x.grad = gradient(f);
    x.numeric = NumericPoly(f);
    x.f = std::move(f);
    return x;
}

namespace {

RationalVector checked_gradient(const Hypersurface& x, std::span<const Rational> v) {
    if (v.size() != x.dimension()) {
        throw std::invalid_argument("point has the wrong dimension");
    }
    if (evaluate(x.f, v) != 0) {
        throw OffVarietyError("point " + to_string(v) + " is not on the variety");
    }
    RationalVector g;
    for (const auto& d : x.grad) {
        g.push_back(evaluate(d, v));
    }
    if (is_zero(g)) {
        throw SingularPointError("point " + to_string(v) + " is a singular point of the variety");
    }
    return g;
}

bool same_ray(std::span<const Rational> a, std::span<const Rational> b) {
    std::size_t k = 0;
    while (k < a.size() && a[k] == 0) {
        ++k;
    }
    if (k == a.size() || b[k] == 0) {
        return false;
    }
    const Rational c = b[k] / a[k];
    if (c <= 0) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] != c * a[i]) {
            return false;
        }
    }
    return true;
}

bool same_ray_set(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
    auto covered = [](const auto& xs, const auto& ys) {
        return std::all_of(xs.begin(), xs.end(), [&](const RationalVector& x) {
            return std::any_of(ys.begin(), ys.end(),
                               [&](const RationalVector& y) { return same_ray(x, y); });
        });
    };
    return covered(a, b) && covered(b, a);
}

}  // namespace

TypeResult type_of(const Hypersurface& x, const UnitBall& ball, std::span<const Rational> v) {
    if (ball.dimension() != x.dimension()) {
        throw std::invalid_argument("type_of: ball and variety dimensions differ");
    }
    const RationalVector g = checked_gradient(x, v);
    const Face& f = minimizing_face(ball, g);
    TypeResult r;
    r.faces = {f.id, f.negation_id};
    std::sort(r.faces.begin(), r.faces.end());
    r.is_codim_one = true;
    return r;
}

TypeResult type_general(const std::vector<RationalVector>& normal_generators,
                        const UnitBall& ball) {
    if (normal_generators.empty()) {
        throw std::invalid_argument("type_general: empty generator list");
    }
    for (const auto& g : normal_generators) {
        if (g.size() != ball.dimension()) {
            throw std::invalid_argument("type_general: generator has the wrong dimension");
        }
    }
    TypeResult r;
    r.is_codim_one = rank(RationalMatrix::from_rows(normal_generators)) == 1;
    for (const auto& f : ball.faces()) {
        const ConeDescription c = cone_generators(ball, f);
        if (span_meets_open_cone(normal_generators, c.generators)) {
            r.faces.push_back(f.id);
        }
    }
    return r;
}

ConeDescription voronoi_cone_of_face(const UnitBall& ball, const UnitBall& dual, const Face& f) {
    const Face& fstar = dual_face(ball, dual, f);
    ConeDescription via_dual = cone_generators(dual, fstar);
    std::vector<RationalVector> direct;
    for (int v : f.vertex_ids) {
        direct.push_back(negate(ball.vertices()[static_cast<std::size_t>(v)]));
    }
    if (!same_ray_set(via_dual.generators, direct)) {
        throw std::logic_error("Voronoi cone generators disagree between dual and direct routes");
    }
    via_dual.open = false;
    return via_dual;
}

VoronoiCone voronoi_cone(const Hypersurface& x, const UnitBall& ball, std::span<const Rational> v) {
    const TypeResult t = type_of(x, ball, v);
    const UnitBall dual = dual_ball(ball);
    VoronoiCone vc;
    vc.apex.assign(v.begin(), v.end());
    for (int id : t.faces) {
        ConeDescription c = voronoi_cone_of_face(ball, dual, ball.face(id));
        c.apex = vc.apex;
        vc.face_ids.push_back(id);
        vc.cones.push_back(std::move(c));
    }
    return vc;
}

StratumLabel stratum_from_gradient(const UnitBall& ball, std::span<const Rational> gradient) {
    const Face& f = minimizing_face(ball, gradient);
    StratumLabel label;
    label.index = codim_index(ball, f);
    label.face_id = f.id;
    ConeDescription c = cone_generators(ball, f);
    auto cert = open_cone_certificate(c, gradient);
    if (!cert) {
        throw std::logic_error("minimizing face does not certify the gradient");
    }
    label.generators = std::move(c.generators);
    label.certificate = std::move(*cert);
    return label;
}

StratumLabel stratum_of(const Hypersurface& x, const UnitBall& ball, std::span<const Rational> v) {
    if (ball.dimension() != x.dimension()) {
        throw std::invalid_argument("stratum_of: ball and variety dimensions differ");
    }
    return stratum_from_gradient(ball, checked_gradient(x, v));
}

ClassifiedPoint classify_point(const Hypersurface& x, const UnitBall& ball, const Point& p,
                               const StratifyParams& params) {
    ClassifiedPoint c;
    c.point = p;
    for (double xi : p) {
        c.rational.push_back(rationalize(xi, params.max_denominator));
    }
    RationalVector g;
    for (const auto& d : x.grad) {
        g.push_back(evaluate(d, c.rational));
    }
    if (is_zero(g)) {
        c.singular = true;
        return c;
    }
    c.label = stratum_from_gradient(ball, g);

    // Float vertex gaps at the unrounded point decide whether the label is
    // stable under the rounding above.
    const Eigen::VectorXd gd = x.numeric.gradient(p);
    std::vector<double> s;
    double vmax = 0.0;
    for (const auto& v : ball.vertices()) {
        double dot_v = 0.0;
        double norm_v = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double vi = v[i].get_d();
            dot_v += gd[static_cast<Eigen::Index>(i)] * vi;
            norm_v += vi * vi;
        }
        s.push_back(dot_v);
        vmax = std::max(vmax, std::sqrt(norm_v));
    }
    const double smin = *std::min_element(s.begin(), s.end());
    const double tol = params.boundary_tolerance * gd.norm() * vmax;
    std::vector<int> near;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] - smin <= tol) {
            near.push_back(static_cast<int>(k));
        }
    }
    const Face* tf = ball.find_face_by_vertices(near);
    if (tf && tf->id != c.label.face_id) {
        c.near_boundary = true;
        c.advisory_face_id = tf->id;
        c.advisory_index = codim_index(ball, *tf);
    }
    return c;
}

std::size_t count_clusters(const std::vector<Point>& points, double radius) {
    std::vector<std::size_t> parent(points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            a = parent[a] = parent[parent[a]];
        }
        return a;
    };
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < points[i].size(); ++k) {
                d2 += (points[i][k] - points[j][k]) * (points[i][k] - points[j][k]);
            }
            if (d2 <= r2) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        roots += find(i) == i ? 1 : 0;
    }
    return roots;
}

Stratification sample_and_classify(const Hypersurface& x, const UnitBall& ball, const Box& box,
                                   const StratifyParams& params) {
    box.validate();
    const std::size_t n = x.dimension();
    if (box.dimension() != n || ball.dimension() != n) {
        throw std::invalid_argument("sample_and_classify: dimension mismatch");
    }
    const double fraction = std::clamp(params.stratum_seed_fraction, 0.0, 1.0);
    const auto stratum_budget = static_cast<std::size_t>(static_cast<double>(params.count) * fraction);

    // Lower strata have measure zero, so seed them directly: one face of
    // every +-pair with index below n - 1.
    std::vector<const Face*> reps;
    for (const auto& f : ball.faces()) {
        if (codim_index(ball, f) < static_cast<int>(n) - 1 && f.id < f.negation_id) {
            reps.push_back(&f);
        }
    }
    const double cell = 1e-9 * box.diagonal();
    std::set<std::vector<long long>> seen;
    auto fresh = [&](const Point& p) {
        std::vector<long long> key(n);
        for (std::size_t i = 0; i < n; ++i) {
            key[i] = std::llround(p[i] / cell);
        }
        return seen.insert(std::move(key)).second;
    };
    std::vector<Point> strata_pts;
    if (!reps.empty() && stratum_budget > 0) {
        const std::size_t per_face = std::max<std::size_t>(stratum_budget / reps.size(), 1);
        std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
        std::vector<std::pair<std::size_t, Point>> jobs;
        for (std::size_t r = 0; r < reps.size(); ++r) {
            for (std::size_t k = 0; k < per_face; ++k) {
                Point p(n);
                for (std::size_t i = 0; i < n; ++i) {
                    p[i] = std::uniform_real_distribution<double>(box.lo[i], box.hi[i])(rng);
                }
                jobs.emplace_back(r, std::move(p));
            }
        }
        std::vector<std::vector<Point>> directions(reps.size());
        for (std::size_t r = 0; r < reps.size(); ++r) {
            for (int j : reps[r]->active_functional_ids) {
                directions[r].push_back(ball.functionals_double()[static_cast<std::size_t>(j)]);
            }
        }
        std::vector<std::optional<Point>> solved(jobs.size());
        parallel_for(jobs.size(), [&](std::size_t i) {
            solved[i] = project_to_normal_condition(x.numeric, directions[jobs[i].first], jobs[i].second);
        });
        for (auto& p : solved) {
            if (p && box.contains(*p) && strata_pts.size() < params.count && fresh(*p)) {
                strata_pts.push_back(std::move(*p));
            }
        }
    }
    std::vector<Point> pts;
    for (auto& p : sample_variety(x.numeric, box, params.count, params.seed)) {
        if (pts.size() + strata_pts.size() < params.count && fresh(p)) {
            pts.push_back(std::move(p));
        }
    }
    pts.insert(pts.end(), std::make_move_iterator(strata_pts.begin()), std::make_move_iterator(strata_pts.end()));
    if (pts.empty()) {
        throw NoVarietyPointsError("no points of the variety found in the box");
    }

    Stratification out;
    out.radius = params.neighborhood_radius > 0 ? params.neighborhood_radius : 0.05 * box.diagonal();
    out.points.resize(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { out.points[i] = classify_point(x, ball, pts[i], params); });
    for (const auto& c : out.points) {
        ++out.histogram[c.effective_index()];
    }
    const double r2 = out.radius * out.radius;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        const int idx = out.points[i].effective_index();
        if (idx < 0 || idx >= static_cast<int>(n) - 1) {
            continue;
        }
        // the neighborhood of a point near the box wall is truncated
        bool inside = true;
        for (std::size_t k = 0; k < n; ++k) {
            const double v = out.points[i].point[k];
            inside = inside && v - box.lo[k] >= out.radius && box.hi[k] - v >= out.radius;
        }
        if (!inside) {
            continue;
        }
        bool has_neighbor = false;
        for (std::size_t j = 0; j < out.points.size() && !has_neighbor; ++j) {
            if (out.points[j].effective_index() != idx + 1) {
                continue;
            }
            double d2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double d = out.points[i].point[k] - out.points[j].point[k];
                d2 += d * d;
            }
            has_neighbor = d2 <= r2;
        }
        if (!has_neighbor) {
            out.closure_anomalies.push_back(i);
        }
    }
    return out;
}

}  // namespace polyvor
