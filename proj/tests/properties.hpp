#pragma once

// Property checks shared by the unit tests and the acceptance run.

#include "support.hpp"

#include <sstream>

namespace testing {

struct Check {
    bool ok = true;
    std::size_t cases = 0;
    std::string failure;

    void fail(const std::string& why) {
        if (ok) {
            failure = why;
        }
        ok = false;
    }
};

inline RationalVector random_integer_vector(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    RationalVector v(n);
    do {
        for (auto& c : v) {
            c = d(rng);
        }
    } while (is_zero(v));
    return v;
}

/// Every nonzero v lies in exactly one open inner normal cone, that cone's
/// face is the brute-force argmin face, and the LP certificate agrees.
inline Check fan_partition(const UnitBall& ball, std::size_t samples, std::uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        // small bounds make ties (cone boundaries) frequent
        const RationalVector v = random_integer_vector(rng, ball.dimension(), s % 2 ? 2 : 9);
        Rational best;
        std::vector<int> argmin;
        for (std::size_t k = 0; k < ball.vertices().size(); ++k) {
            const Rational d = dot(v, ball.vertices()[k]);
            if (argmin.empty() || d < best) {
                best = d;
                argmin = {static_cast<int>(k)};
            } else if (d == best) {
                argmin.push_back(static_cast<int>(k));
            }
        }
        std::vector<int> hits;
        for (const auto& f : ball.faces()) {
            const ConeDescription cone = cone_generators(ball, f);
            const bool in = in_open_cone(cone, v);
            const auto cert = open_cone_certificate(cone, v);
            if (in != cert.has_value()) {
                c.fail("in_open_cone and certificate disagree at " + to_string(v));
            }
            if (cert) {
                RationalVector sum(ball.dimension(), Rational(0));
                for (std::size_t j = 0; j < cone.generators.size(); ++j) {
                    if ((*cert)[j] <= 0) {
                        c.fail("non-positive certificate coefficient");
                    }
                    sum = add(sum, scale((*cert)[j], cone.generators[j]));
                }
                if (sum != v) {
                    c.fail("certificate does not reproduce v");
                }
            }
            if (in) {
                hits.push_back(f.id);
            }
        }
        const Face& m = minimizing_face(ball, v);
        if (hits.size() != 1) {
            c.fail(to_string(v) + " lies in " + std::to_string(hits.size()) + " open cones");
        } else if (hits.front() != m.id) {
            c.fail("LP cone and argmin face differ at " + to_string(v));
        }
        if (m.vertex_ids != argmin) {
            c.fail("minimizing_face differs from brute-force argmin at " + to_string(v));
        }
        ++c.cases;
    }
    return c;
}

inline MultiPoly random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> coef(-5, 5);
    MultiPoly f(2);
    for (int a = 0; a <= degree; ++a) {
        for (int b = 0; a + b <= degree; ++b) {
            f.add_term({a, b}, Rational(coef(rng)));
        }
    }
    if (f.degree() < degree) {
        f.add_term({degree, 0}, Rational(1));
    }
    return f;
}

/// Resultant of two univariates through an explicit rational Sylvester matrix.
inline Rational univariate_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const std::size_t m = a.size() - 1, k = b.size() - 1;
    RationalMatrix s(m + k, m + k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t i = 0; i <= m; ++i) {
            s(r, r + i) = a[m - i];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= k; ++i) {
            s(k + r, r + i) = b[k - i];
        }
    }
    return determinant(s);
}

/// For random f and directions d1 != d2: f(u) divides res(f(u + d1 t), f(u + d2 t)),
/// and the symbolic resultant specializes to the numeric one.
inline Check resultant_divisibility(std::size_t per_degree, std::uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    for (int degree : {2, 3}) {
        for (std::size_t s = 0; s < per_degree; ++s) {
            const MultiPoly f = random_poly(rng, degree);
            RationalVector d1, d2;
            do {
                d1 = random_integer_vector(rng, 2, 2);
                d2 = random_integer_vector(rng, 2, 2);
            } while (d1 == d2);
            const UniPolyOverU g1 = substitute_line(f, d1);
            const UniPolyOverU g2 = substitute_line(f, d2);
            if (g1.degree() < 1 || g2.degree() < 1) {
                continue;
            }
            const MultiPoly res = sylvester_resultant(g1, g2);
            ++c.cases;
            if (res.is_zero()) {
                continue;
            }
            if (!exact_divide(res, f)) {
                std::ostringstream os;
                os << "f = " << f.to_string() << " does not divide its resultant";
                c.fail(os.str());
            }
            for (int t = 0; t < 3; ++t) {
                const RationalVector u = {random_rational(rng, 3, 7), random_rational(rng, 3, 7)};
                const Rational direct = univariate_resultant(g1.specialize(u), g2.specialize(u));
                if (direct != evaluate(res, u)) {
                    c.fail("resultant does not specialize for f = " + f.to_string());
                }
            }
        }
    }
    return c;
}

/// Voronoi cone of F: closed cone over the negated vertices of F.
inline Check voronoi_generator_law(const UnitBall& ball) {
    Check c;
    const UnitBall dual = dual_ball(ball);
    for (const auto& f : ball.faces()) {
        std::vector<RationalVector> expect;
        for (const auto& v : ball.face_vertices(f)) {
            expect.push_back(negate(v));
        }
        const ConeDescription cone = voronoi_cone_of_face(ball, dual, f);
        if (cone.open || sorted(cone.generators) != sorted(expect)) {
            c.fail("generator law fails on face " + std::to_string(f.id));
        }
        ++c.cases;
    }
    return c;
}

inline Check norm_axioms(const UnitBall& ball, std::size_t samples, std::uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    const std::size_t n = ball.dimension();
    if (norm_value(ball, RationalVector(n, Rational(0))) != 0) {
        c.fail("h(0) != 0");
    }
    for (std::size_t s = 0; s < samples; ++s) {
        RationalVector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = random_rational(rng, 4, 9);
            y[i] = random_rational(rng, 4, 9);
        }
        const Rational k = random_rational(rng, 3, 5);
        const Rational hx = norm_value(ball, x), hy = norm_value(ball, y);
        if (hx < 0 || (hx == 0) != is_zero(x)) {
            c.fail("definiteness fails at " + to_string(x));
        }
        if (norm_value(ball, scale(k, x)) != abs(k) * hx) {
            c.fail("homogeneity fails at " + to_string(x));
        }
        if (norm_value(ball, add(x, y)) > hx + hy) {
            c.fail("triangle inequality fails");
        }
        if (norm_value(ball, negate(x)) != hx) {
            c.fail("symmetry fails");
        }
        const auto xd = to_double(x);
        if (std::abs(norm_value(ball, std::span<const double>(xd)) - hx.get_d()) > 1e-9) {
            c.fail("floating norm disagrees");
        }
        ++c.cases;
    }
    return c;
}

inline Problem random_problem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    Problem p;
    const std::size_t n = coin(rng) ? 2 : 3;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector l(n, Rational(0));
        l[i] = random_rational(rng, 3, 4);
        if (l[i] == 0) {
            l[i] = 1;
        }
        p.ball.push_back(l);
        p.ball.push_back(negate(l));
    }
    p.polynomial = MultiPoly(n);
    std::uniform_int_distribution<int> e(0, 3);
    for (int t = 0; t < 5; ++t) {
        Exponents ex(n);
        for (auto& k : ex) {
            k = e(rng);
        }
        p.polynomial.add_term(ex, random_rational(rng, 10, 12));
    }
    if (p.polynomial.is_zero()) {
        p.polynomial.add_term(Exponents(n, 1), Rational(1));
    }
    for (int k = 0; k < e(rng); ++k) {
        RationalVector q(n);
        for (auto& c : q) {
            c = random_rational(rng, 5, 1000);
        }
        p.points.push_back(q);
    }
    if (coin(rng)) {
        Box b;
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double a = u(rng);
            b.lo.push_back(a);
            b.hi.push_back(a + 0.1 + std::abs(u(rng)));
        }
        p.box = b;
    }
    if (coin(rng)) {
        p.params = {{"seed", static_cast<int>(e(rng))}, {"sample_count", 500}, {"value_band", 1e-7}};
    }
    return p;
}

/// parse(serialize(p)) == p, through the textual form.
inline Check json_round_trip(std::size_t samples, std::uint64_t seed) {
    Check c;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const Problem p = random_problem(rng);
        const std::string text = to_json(p).dump();
        const Problem q = parse_problem_text(text);
        if (!(q == p) || to_json(q).dump() != text) {
            c.fail("round trip changed " + text);
        }
        ++c.cases;
    }
    return c;
}

}  // namespace testing
