#include "polyvor/medial.hpp"

#include "polyvor/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace polyvor {

std::string to_string(PairKind kind) {
    switch (kind) {
        case PairKind::VertexVertex:
            return "vertex-vertex";
        case PairKind::VertexFacet:
            return "vertex-facet";
        case PairKind::FacetFacet:
            return "facet-facet";
    }
    return "unknown";
}

RationalVector vertex_direction(const UnitBall& ball, const Face& vertex, std::vector<int>* chosen) {
    if (vertex.dim != 0) {
        throw std::invalid_argument("vertex_direction: face is not a vertex");
    }
    const std::size_t n = ball.dimension();
    std::vector<RationalVector> rows;
    std::vector<int> ids;
    for (int j : vertex.active_functional_ids) {
        rows.push_back(ball.functionals().functionals[static_cast<std::size_t>(j)]);
        if (rank(RationalMatrix::from_rows(rows)) < rows.size()) {
            rows.pop_back();
            continue;
        }
        ids.push_back(j);
        if (rows.size() == n) {
            break;
        }
    }
    if (rows.size() < n) {
        throw std::logic_error("vertex_direction: active functionals do not span the space");
    }
    const RationalMatrix a = RationalMatrix::from_rows(rows);
    const RationalVector ones(n, Rational(1));
    RationalVector dir = matrix_inverse(a) * std::span<const Rational>(ones);
    if (chosen) {
        *chosen = std::move(ids);
    }
    return dir;
}

EquidistantComponent vertex_vertex_component(const Hypersurface& x, const UnitBall& ball,
                                             const Face& v1, const Face& v2) {
    EquidistantComponent c;
    c.kind = PairKind::VertexVertex;
    c.face_a = v1.id;
    c.face_b = v2.id;
    const int d = x.degree();
    c.degree_bound = d * d - d;
    const RationalVector dir1 = vertex_direction(ball, v1, &c.functionals_a);
    const RationalVector dir2 = vertex_direction(ball, v2, &c.functionals_b);
    const UniPolyOverU g1 = substitute_line(x.f, dir1);
    const UniPolyOverU g2 = substitute_line(x.f, dir2);
    const std::size_t n = x.dimension();
    if (g1.degree() <= 0 && g2.degree() <= 0) {
        // X contains both line directions; the only condition left is f(u) = 0.
        c.raw_resultant = x.f;
        c.poly = MultiPoly::constant(n, 1);
        c.empty_zero_set = true;
        return c;
    }
    c.raw_resultant = sylvester_resultant(g1, g2);
    if (c.raw_resultant.is_zero()) {
        c.zero_resultant_flag = true;
        c.poly = MultiPoly(n);
        return c;
    }
    auto q = exact_divide(c.raw_resultant, x.f);
    if (!q) {
        throw std::logic_error("vertex-vertex resultant is not divisible by f(u)");
    }
    c.poly = normalize(*q);
    c.empty_zero_set = c.poly.is_constant();
    return c;
}

namespace {

const RationalVector& facet_functional(const UnitBall& ball, const Face& facet) {
    if (facet.dim != static_cast<int>(ball.dimension()) - 1 ||
        facet.active_functional_ids.size() != 1) {
        throw std::invalid_argument("face is not a facet");
    }
    return ball.functionals().functionals[static_cast<std::size_t>(facet.active_functional_ids[0])];
}

// Coefficients of p as a polynomial in `var` (coefficients keep the arity).
UniPolyOverU in_variable(const MultiPoly& p, std::size_t var) {
    const int deg = std::max(p.degree_in(var), 0);
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(deg + 1), MultiPoly(p.arity()));
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        rest[var] = 0;
        coeffs[static_cast<std::size_t>(e[var])].add_term(rest, c);
    }
    return UniPolyOverU(p.arity(), std::move(coeffs));
}

// Bivariate p with variable `fixed` set to `value`, as a polynomial in the other one.
UniPoly restrict_bivariate(const MultiPoly& p, std::size_t fixed, const Rational& value) {
    const std::size_t other = 1 - fixed;
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(other), 0) + 1),
                            Rational(0));
    for (const auto& [e, coeff] : p.terms()) {
        Rational term = coeff;
        for (int k = 0; k < e[fixed]; ++k) {
            term *= value;
        }
        c[static_cast<std::size_t>(e[other])] += term;
    }
    return UniPoly(std::move(c));
}

MultiPoly compose_univariate(const UniPoly& g, const MultiPoly& inner) {
    MultiPoly out(inner.arity());
    MultiPoly power = MultiPoly::constant(inner.arity(), 1);
    for (const auto& c : g.coefficients()) {
        out += power * c;
        power = power * inner;
    }
    return out;
}

const Rational kRootWidth = Rational(1, mpz_class("1000000000000000000000000000000"));

struct BoxGeometry {
    double slack;
    double edge_band;
};

BoxGeometry geometry(const Box& box) {
    return {1e-9 * box.diagonal(), 1e-6 * box.diagonal()};
}

bool near_boundary(const Box& box, const Point& p, double band) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (std::abs(p[i] - box.lo[i]) <= band || std::abs(p[i] - box.hi[i]) <= band) {
            return true;
        }
    }
    return false;
}

TangentPoint make_exact_point(int facet_id, const RationalVector& ell, RationalVector p) {
    TangentPoint t;
    t.facet_id = facet_id;
    t.level = dot(ell, p);
    for (const auto& c : p) {
        t.enclosure.emplace_back(c, c);
    }
    t.point = std::move(p);
    return t;
}

// Newton on (f, m) = 0 in the plane.
std::optional<Point> newton_pair(const NumericPoly& f, const NumericPoly& m, Point p) {
    for (int it = 0; it < 60; ++it) {
        const Eigen::VectorXd gf = f.gradient(p);
        const Eigen::VectorXd gm = m.gradient(p);
        Eigen::Matrix2d j;
        j << gf[0], gf[1], gm[0], gm[1];
        Eigen::Vector2d r(f.value(p), m.value(p));
        const Eigen::Vector2d dx = j.fullPivLu().solve(-r);
        if (!dx.allFinite()) {
            return std::nullopt;
        }
        p[0] += dx[0];
        p[1] += dx[1];
        if (dx.norm() < 1e-16 * (1.0 + std::hypot(p[0], p[1]))) {
            break;
        }
    }
    const double scale = 1.0 + f.gradient(p).norm() + m.gradient(p).norm();
    if (std::abs(f.value(p)) + std::abs(m.value(p)) > 1e-9 * scale) {
        return std::nullopt;
    }
    return p;
}

std::vector<TangentPoint> tangent_points_planar(const Hypersurface& x, const UnitBall& ball,
                                                const Face& facet, const Box& box) {
    const RationalVector& ell = facet_functional(ball, facet);
    const Rational& a = ell[0];
    const Rational& b = ell[1];
    const auto [slack, band] = geometry(box);
    std::vector<TangentPoint> out;

    // Lines {l = c} contained in X: f restricted to the line vanishes in t.
    const Rational norm2 = a * a + b * b;
    const MultiPoly cvar = MultiPoly::variable(2, 0);
    const MultiPoly tvar = MultiPoly::variable(2, 1);
    const std::vector<MultiPoly> images{cvar * Rational(a / norm2) - tvar * b,
                                        cvar * Rational(b / norm2) + tvar * a};
    const MultiPoly on_line = compose(x.f, images);
    UniPoly common;
    for (int k = 0; k <= on_line.degree_in(1); ++k) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(on_line.degree_in(0), 0) + 1),
                                     Rational(0));
        for (const auto& [e, c] : on_line.terms()) {
            if (e[1] == k) {
                coeffs[static_cast<std::size_t>(e[0])] += c;
            }
        }
        common = gcd(common, UniPoly(std::move(coeffs)));
    }
    MultiPoly f_rest = x.f;
    double lmin = 0.0, lmax = 0.0;
    {
        bool first = true;
        for (int corner = 0; corner < 4; ++corner) {
            const double cx = (corner & 1) ? box.hi[0] : box.lo[0];
            const double cy = (corner & 2) ? box.hi[1] : box.lo[1];
            const double v = a.get_d() * cx + b.get_d() * cy;
            lmin = first ? v : std::min(lmin, v);
            lmax = first ? v : std::max(lmax, v);
            first = false;
        }
    }
    if (common.degree() >= 1) {
        const UniPoly sf = squarefree_part(common);
        const MultiPoly lines = compose_univariate(sf, MultiPoly::linear(ell, 0));
        while (auto q = exact_divide(f_rest, lines)) {
            f_rest = std::move(*q);
        }
        const RationalVector centre{rationalize(0.5 * (box.lo[0] + box.hi[0])),
                                    rationalize(0.5 * (box.lo[1] + box.hi[1]))};
        for (const auto& root : real_roots(sf, kRootWidth)) {
            const double cd = root.approx();
            if (cd < lmin - slack || cd > lmax + slack) {
                continue;
            }
            const Rational c = root.exact() ? root.lo : Rational((root.lo + root.hi) / 2);
            // Point of the line closest to the box centre.
            const Rational shift = (c - dot(ell, centre)) / norm2;
            RationalVector p = add(centre, scale(shift, ell));
            TangentPoint t = make_exact_point(facet.id, ell, p);
            t.on_line = true;
            t.level = c;
            t.level_exact = root.exact();
            t.exact = root.exact();
            out.push_back(std::move(t));
        }
    }
    if (f_rest.is_constant()) {
        return out;
    }

    const MultiPoly m = b * derivative(f_rest, 0) - a * derivative(f_rest, 1);
    if (m.is_zero()) {
        return out;
    }
    const NumericPoly fn(f_rest);
    const NumericPoly mn(m);
    std::set<RationalVector> seen_exact;
    std::vector<Point> seen_approx;
    auto record = [&](TangentPoint t, const Point& approx) {
        if (!box.contains(approx, slack)) {
            return;
        }
        if (t.exact) {
            if (!seen_exact.insert(t.point).second) {
                return;
            }
        } else {
            for (const auto& s : seen_approx) {
                if (std::hypot(s[0] - approx[0], s[1] - approx[1]) < 1e-9 * (1.0 + box.diagonal())) {
                    return;
                }
            }
            seen_approx.push_back(approx);
        }
        t.near_box_boundary = near_boundary(box, approx, band);
        out.push_back(std::move(t));
    };

    for (std::size_t elim : {std::size_t{1}, std::size_t{0}}) {
        const std::size_t keep = 1 - elim;
        const UniPolyOverU fy = in_variable(f_rest, elim);
        const UniPolyOverU my = in_variable(m, elim);
        UniPoly r;
        if (fy.degree() <= 0 && my.degree() <= 0) {
            continue;
        }
        if (fy.degree() <= 0) {
            // f depends on `keep` only: tangency forces a multiple root.
            const UniPoly p = to_univariate(f_rest, keep);
            r = gcd(p, p.derivative());
        } else if (my.degree() <= 0) {
            r = to_univariate(m, keep);
        } else {
            r = to_univariate(sylvester_resultant(fy, my), keep);
        }
        if (r.is_zero()) {
            continue;
        }
        if (r.degree() <= 0) {
            return out;
        }
        for (const auto& root : real_roots(r, kRootWidth)) {
            const double rv = root.approx();
            if (rv < box.lo[keep] - slack || rv > box.hi[keep] + slack) {
                continue;
            }
            if (root.exact()) {
                const UniPoly fr = restrict_bivariate(f_rest, keep, root.lo);
                const UniPoly mr = restrict_bivariate(m, keep, root.lo);
                const UniPoly g = mr.is_zero() ? fr : (fr.is_zero() ? mr : gcd(fr, mr));
                if (g.degree() < 1) {
                    continue;
                }
                for (const auto& s : real_roots(g, kRootWidth)) {
                    RationalVector p(2);
                    p[keep] = root.lo;
                    p[elim] = s.exact() ? s.lo : Rational((s.lo + s.hi) / 2);
                    TangentPoint t = make_exact_point(facet.id, ell, p);
                    if (!s.exact()) {
                        t.exact = false;
                        t.level_exact = false;
                        t.enclosure[elim] = {s.lo, s.hi};
                    }
                    Point approx(2);
                    approx[keep] = rv;
                    approx[elim] = s.approx();
                    record(std::move(t), approx);
                }
                continue;
            }
            // Irrational coordinate: candidates from both restricted
            // polynomials, polished on the pair (f, m).
            const Rational mid = (root.lo + root.hi) / 2;
            std::vector<double> candidates;
            for (const UniPoly& u : {restrict_bivariate(f_rest, keep, mid), restrict_bivariate(m, keep, mid)}) {
                if (u.degree() < 1) {
                    continue;
                }
                for (const auto& s : real_roots(u, Rational(1, 1000000000))) {
                    candidates.push_back(s.approx());
                }
            }
            for (double cand : candidates) {
                Point start(2);
                start[keep] = rv;
                start[elim] = cand;
                auto p = newton_pair(fn, mn, start);
                if (!p || std::abs((*p)[keep] - rv) > 1e-6) {
                    continue;
                }
                RationalVector q(2);
                q[keep] = mid;
                q[elim] = Rational((*p)[elim]);
                TangentPoint t = make_exact_point(facet.id, ell, q);
                t.exact = false;
                t.level_exact = false;
                t.enclosure[keep] = {root.lo, root.hi};
                t.enclosure[elim] = {Rational((*p)[elim] - 1e-9), Rational((*p)[elim] + 1e-9)};
                Point approx(2);
                approx[keep] = rv;
                approx[elim] = (*p)[elim];
                record(std::move(t), approx);
            }
        }
        break;
    }
    return out;
}

std::vector<TangentPoint> tangent_points_numeric(const Hypersurface& x, const UnitBall& ball,
                                                 const Face& facet, const Box& box) {
    const RationalVector& ell = facet_functional(ball, facet);
    const std::size_t n = x.dimension();
    const auto [slack, band] = geometry(box);
    const std::vector<Point> dirs{to_double(ell)};
    const std::size_t per_axis = n <= 3 ? 9 : 5;
    std::vector<Point> seeds;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * (static_cast<double>(idx[i]) + 0.5) /
                                   static_cast<double>(per_axis);
        }
        seeds.push_back(std::move(p));
        std::size_t k = 0;
        while (k < n && ++idx[k] == per_axis) {
            idx[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    std::vector<std::optional<Point>> solved(seeds.size());
    ProjectionParams params;
    params.residual_tolerance = 1e-10;
    parallel_for(seeds.size(), [&](std::size_t i) {
        solved[i] = project_to_normal_condition(x.numeric, dirs, seeds[i], params);
    });
    std::vector<Point> kept;
    std::vector<TangentPoint> out;
    for (auto& s : solved) {
        if (!s || !box.contains(*s, slack)) {
            continue;
        }
        bool dup = false;
        for (const auto& k : kept) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                d2 += ((*s)[i] - k[i]) * ((*s)[i] - k[i]);
            }
            dup = dup || std::sqrt(d2) < 1e-7 * (1.0 + box.diagonal());
        }
        if (dup) {
            continue;
        }
        kept.push_back(*s);
        RationalVector r;
        for (double v : *s) {
            r.push_back(rationalize(v));
        }
        bool exact = evaluate(x.f, r) == 0;
        if (exact) {
            const RationalVector g = evaluate_gradient(x.f, r);
            RationalMatrix both = RationalMatrix::from_rows(std::vector<RationalVector>{g, ell});
            exact = !is_zero(g) && rank(both) == 1;
        }
        TangentPoint t;
        if (exact) {
            t = make_exact_point(facet.id, ell, r);
        } else {
            RationalVector q;
            for (double v : *s) {
                q.push_back(Rational(v));
            }
            t = make_exact_point(facet.id, ell, q);
            t.exact = false;
            t.level_exact = false;
            for (std::size_t i = 0; i < n; ++i) {
                t.enclosure[i] = {Rational((*s)[i] - 1e-8), Rational((*s)[i] + 1e-8)};
            }
        }
        t.near_box_boundary = near_boundary(box, *s, band);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::vector<TangentPoint> tangent_points_to_facet(const Hypersurface& x, const UnitBall& ball,
                                                  const Face& facet, const Box& box) {
    box.validate();
    if (box.dimension() != x.dimension() || ball.dimension() != x.dimension()) {
        throw std::invalid_argument("tangent_points_to_facet: dimension mismatch");
    }
    std::vector<TangentPoint> pts = x.dimension() == 2 ? tangent_points_planar(x, ball, facet, box)
                                                       : tangent_points_numeric(x, ball, facet, box);
    std::sort(pts.begin(), pts.end(), [](const TangentPoint& p, const TangentPoint& q) {
        if (p.on_line != q.on_line) {
            return p.on_line;
        }
        return p.point < q.point;
    });
    return pts;
}

EquidistantComponent vertex_facet_component(const Hypersurface& x, const UnitBall& ball,
                                            const Face& vertex, const Face& facet,
                                            const TangentPoint& z) {
    const RationalVector& ell = facet_functional(ball, facet);
    EquidistantComponent c;
    c.kind = PairKind::VertexFacet;
    c.face_a = vertex.id;
    c.face_b = facet.id;
    c.degree_bound = x.degree();
    c.tangent_points = {z};
    const RationalVector dir = vertex_direction(ball, vertex, &c.functionals_a);
    c.functionals_b = facet.active_functional_ids;
    const std::size_t n = x.dimension();
    const UniPolyOverU g1 = substitute_line(x.f, dir);
    // l(z - u) - lambda
    const MultiPoly level = MultiPoly::constant(n, z.level) - MultiPoly::linear(ell, 0);
    const UniPolyOverU g2(n, {level, MultiPoly::constant(n, -1)});
    c.raw_resultant = sylvester_resultant(g1, g2);
    c.exact = z.level_exact;
    c.degenerate = dot(ell, ball.vertices()[static_cast<std::size_t>(vertex.vertex_ids[0])]) == 1;
    if (c.raw_resultant.is_zero()) {
        c.zero_resultant_flag = true;
        c.poly = MultiPoly(n);
        return c;
    }
    c.poly = normalize(c.raw_resultant);
    c.empty_zero_set = c.poly.is_constant();
    return c;
}

std::vector<EquidistantComponent> facet_facet_components(
    const UnitBall& ball, const Face& fa, const Face& fb, const std::vector<TangentPoint>& pa,
    const std::vector<TangentPoint>& pb) {
    const RationalVector& la = facet_functional(ball, fa);
    const RationalVector& lb = facet_functional(ball, fb);
    const std::size_t n = ball.dimension();
    const bool same = fa.id == fb.id;
    std::vector<EquidistantComponent> out;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (std::size_t j = same ? i : 0; j < pb.size(); ++j) {
            // Two distinct points are needed; a tangent line supplies them itself.
            if (same && i == j && !pa[i].on_line) {
                continue;
            }
            EquidistantComponent c;
            c.kind = PairKind::FacetFacet;
            c.face_a = fa.id;
            c.face_b = fb.id;
            c.degree_bound = 1;
            c.tangent_points = {pa[i], pb[j]};
            c.functionals_a = fa.active_functional_ids;
            c.functionals_b = fb.active_functional_ids;
            c.exact = pa[i].level_exact && pb[j].level_exact;
            // l_a(p - u) - l_b(q - u)
            c.raw_resultant = MultiPoly::constant(n, pa[i].level - pb[j].level) +
                              MultiPoly::linear(sub(lb, la), 0);
            if (c.raw_resultant.is_zero()) {
                c.zero_resultant_flag = true;
                c.poly = MultiPoly(n);
            } else {
                c.poly = normalize(c.raw_resultant);
                c.empty_zero_set = c.poly.is_constant();
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<EquidistantComponent> facet_facet_components(const Hypersurface& x,
                                                         const UnitBall& ball, const Face& fa,
                                                         const Face& fb, const Box& box) {
    const auto pa = tangent_points_to_facet(x, ball, fa, box);
    const auto pb = fa.id == fb.id ? pa : tangent_points_to_facet(x, ball, fb, box);
    return facet_facet_components(ball, fa, fb, pa, pb);
}

EquidistantLocus equidistant_locus(const Hypersurface& x, const UnitBall& ball, const Box& box) {
    box.validate();
    const int n = static_cast<int>(x.dimension());
    if (ball.dimension() != x.dimension() || box.dimension() != x.dimension()) {
        throw std::invalid_argument("equidistant_locus: dimension mismatch");
    }
    EquidistantLocus locus;
    locus.tangent_points.resize(ball.functionals().functionals.size());
    std::vector<const Face*> facets;
    for (const auto& f : ball.faces()) {
        if (f.dim == n - 1) {
            facets.push_back(&f);
        }
    }
    std::vector<std::vector<TangentPoint>> per_facet(facets.size());
    parallel_for(facets.size(), [&](std::size_t i) {
        per_facet[i] = tangent_points_to_facet(x, ball, *facets[i], box);
    });
    std::vector<int> facet_slot(ball.faces().size(), -1);
    for (std::size_t i = 0; i < facets.size(); ++i) {
        facet_slot[static_cast<std::size_t>(facets[i]->id)] = static_cast<int>(i);
        locus.tangent_points[static_cast<std::size_t>(facets[i]->active_functional_ids[0])] = per_facet[i];
    }

    struct Job {
        const Face* a;
        const Face* b;
    };
    std::vector<Job> jobs;
    const auto& faces = ball.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i; j < faces.size(); ++j) {
            const Face& a = faces[i];
            const Face& b = faces[j];
            const bool a_mid = a.dim != 0 && a.dim != n - 1;
            const bool b_mid = b.dim != 0 && b.dim != n - 1;
            if (a_mid || b_mid) {
                locus.out_of_scope.push_back(
                    {a.id, b.id, "pair involves a face of intermediate dimension"});
                continue;
            }
            if (i == j && a.dim == 0) {
                continue;  // one vertex direction cannot give two distinct points
            }
            jobs.push_back({&a, &b});
        }
    }
    std::vector<std::vector<EquidistantComponent>> results(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t k) {
        const Face& a = *jobs[k].a;
        const Face& b = *jobs[k].b;
        auto& out = results[k];
        if (a.dim == 0 && b.dim == 0) {
            out.push_back(vertex_vertex_component(x, ball, a, b));
        } else if (a.dim == 0 || b.dim == 0) {
            const Face& v = a.dim == 0 ? a : b;
            const Face& f = a.dim == 0 ? b : a;
            for (const auto& z : per_facet[static_cast<std::size_t>(facet_slot[static_cast<std::size_t>(f.id)])]) {
                out.push_back(vertex_facet_component(x, ball, v, f, z));
            }
        } else {
            out = facet_facet_components(
                ball, a, b, per_facet[static_cast<std::size_t>(facet_slot[static_cast<std::size_t>(a.id)])],
                per_facet[static_cast<std::size_t>(facet_slot[static_cast<std::size_t>(b.id)])]);
        }
    });
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const Face& a = *jobs[k].a;
        const Face& b = *jobs[k].b;
        if (a.dim == n - 1 && b.dim == n - 1) {
            const std::size_t s = per_facet[static_cast<std::size_t>(facet_slot[static_cast<std::size_t>(a.id)])].size();
            const std::size_t t = per_facet[static_cast<std::size_t>(facet_slot[static_cast<std::size_t>(b.id)])].size();
            locus.facet_families.push_back({a.id, b.id, results[k].size(), s * t});
        }
        for (auto& c : results[k]) {
            (c.zero_resultant_flag ? locus.full_dimensional : locus.components).push_back(std::move(c));
        }
    }
    return locus;
}

DegreeReport degree_report(const EquidistantLocus& locus) {
    DegreeReport r;
    for (const auto& c : locus.components) {
        DegreeEntry e{c.face_a, c.face_b, c.kind, c.poly.degree(), c.degree_bound, true};
        e.ok = e.degree <= e.bound;
        r.all_ok = r.all_ok && e.ok;
        r.entries.push_back(e);
    }
    r.families = locus.facet_families;
    for (const auto& f : r.families) {
        r.all_ok = r.all_ok && f.count <= f.bound;
    }
    return r;
}

DegreeReport quadratic_degree_check(const Hypersurface& x, const UnitBall& ball, const Box& box) {
    if (x.degree() != 2) {
        throw std::invalid_argument("quadratic_degree_check: polynomial is not quadratic");
    }
    const EquidistantLocus locus = equidistant_locus(x, ball, box);
    DegreeReport r = degree_report(locus);
    for (auto& e : r.entries) {
        e.bound = std::min(e.bound, 4);
        e.ok = e.degree <= 4;
        r.all_ok = r.all_ok && e.ok;
    }
    for (const auto& c : locus.components) {
        if (c.kind == PairKind::VertexVertex && c.raw_resultant.degree() > 4) {
            r.all_ok = false;
        }
    }
    return r;
}

}  // namespace polyvor
