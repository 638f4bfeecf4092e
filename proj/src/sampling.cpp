#include "polyvor/sampling.hpp"

#include "polyvor/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <random>
#include <stdexcept>

namespace polyvor {

double Box::diagonal() const {
    double s = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        s += (hi[i] - lo[i]) * (hi[i] - lo[i]);
    }
    return std::sqrt(s);
}

bool Box::contains(std::span<const double> x, double slack) const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (x[i] < lo[i] - slack || x[i] > hi[i] + slack) {
            return false;
        }
    }
    return true;
}

void Box::validate() const {
    if (lo.empty() || lo.size() != hi.size()) {
        throw std::invalid_argument("box: bounds must be nonempty and of equal length");
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!(lo[i] < hi[i])) {
            throw std::invalid_argument("box: every lower bound must be below its upper bound");
        }
    }
}

NumericPoly::NumericPoly(const MultiPoly& f) : arity_(f.arity()), max_degree_(std::max(0, f.degree())) {
    auto compile = [](const MultiPoly& p) {
        Compiled c;
        for (const auto& [e, coeff] : p.terms()) {
            c.terms.push_back({coeff.get_d(), e});
        }
        return c;
    };
    f_ = compile(f);
    std::vector<MultiPoly> g = polyvor::gradient(f);
    for (const auto& gi : g) {
        grad_.push_back(compile(gi));
    }
    for (std::size_t i = 0; i < arity_; ++i) {
        for (std::size_t j = 0; j < arity_; ++j) {
            hess_.push_back(compile(derivative(g[i], j)));
        }
    }
}

std::vector<std::vector<double>> NumericPoly::powers(std::span<const double> x) const {
    std::vector<std::vector<double>> p(arity_, std::vector<double>(max_degree_ + 1, 1.0));
    for (std::size_t i = 0; i < arity_; ++i) {
        for (int k = 1; k <= max_degree_; ++k) {
            p[i][k] = p[i][k - 1] * x[i];
        }
    }
    return p;
}

double NumericPoly::Compiled::eval(std::span<const double>,
                                   const std::vector<std::vector<double>>& powers) const {
    double sum = 0.0;
    for (const auto& t : terms) {
        double v = t.coeff;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            v *= powers[i][t.exps[i]];
        }
        sum += v;
    }
    return sum;
}

double NumericPoly::value(std::span<const double> x) const {
    return f_.eval(x, powers(x));
}

Eigen::VectorXd NumericPoly::gradient(std::span<const double> x) const {
    const auto p = powers(x);
    Eigen::VectorXd g(arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
        g[i] = grad_[i].eval(x, p);
    }
    return g;
}

Eigen::MatrixXd NumericPoly::hessian(std::span<const double> x) const {
    const auto p = powers(x);
    Eigen::MatrixXd h(arity_, arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
        for (std::size_t j = 0; j < arity_; ++j) {
            h(i, j) = hess_[i * arity_ + j].eval(x, p);
        }
    }
    return h;
}

std::optional<Point> project_to_variety(const NumericPoly& f, Point x,
                                        const ProjectionParams& params) {
    for (int it = 0; it < params.max_iterations; ++it) {
        const double v = f.value(x);
        const Eigen::VectorXd g = f.gradient(x);
        const double g2 = g.squaredNorm();
        if (!(g2 > 0.0) || !std::isfinite(v)) {
            return std::nullopt;
        }
        if (std::abs(v) / std::sqrt(g2) < 1e-15 * (1.0 + Eigen::Map<Eigen::VectorXd>(x.data(), x.size()).norm())) {
            break;
        }
        double step = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double d = v * g[i] / g2;
            x[i] -= d;
            step += d * d;
        }
        if (std::sqrt(step) < 1e-16) {
            break;
        }
    }
    const double v = f.value(x);
    const double gn = f.gradient(x).norm();
    if (!std::isfinite(v) || !(gn > 0.0) || std::abs(v) / gn > params.residual_tolerance) {
        return std::nullopt;
    }
    return x;
}

std::optional<Point> project_to_normal_condition(const NumericPoly& f,
                                                 const std::vector<Point>& directions, Point x,
                                                 const ProjectionParams& params) {
    const std::size_t n = f.arity();
    // Orthonormal basis Q of the complement of span(directions).
    Eigen::MatrixXd w(n, directions.size());
    for (std::size_t j = 0; j < directions.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            w(i, j) = directions[j][i];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(w, Eigen::ComputeFullU);
    const auto rank = static_cast<std::size_t>(svd.rank());
    const Eigen::MatrixXd q = svd.matrixU().rightCols(static_cast<Eigen::Index>(n - rank));
    const auto m = static_cast<Eigen::Index>(1 + q.cols());

    auto residual = [&](const Point& p, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
        const Eigen::VectorXd g = f.gradient(p);
        r.resize(m);
        r[0] = f.value(p);
        r.tail(q.cols()) = q.transpose() * g;
        if (jac) {
            jac->resize(m, static_cast<Eigen::Index>(n));
            jac->row(0) = g.transpose();
            jac->bottomRows(q.cols()) = q.transpose() * f.hessian(p);
        }
        return g.norm();
    };

    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    for (int it = 0; it < params.max_iterations; ++it) {
        residual(x, r, &jac);
        if (!r.allFinite() || !jac.allFinite()) {
            return std::nullopt;
        }
        const Eigen::VectorXd dx = jac.completeOrthogonalDecomposition().solve(-r);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += dx[static_cast<Eigen::Index>(i)];
        }
        if (dx.norm() < 1e-15 * (1.0 + Eigen::Map<Eigen::VectorXd>(x.data(), x.size()).norm())) {
            break;
        }
    }
    const double gn = residual(x, r, nullptr);
    if (!r.allFinite() || !(gn > 0.0) || r.norm() / gn > params.residual_tolerance) {
        return std::nullopt;
    }
    return x;
}

std::vector<Point> sample_variety(const NumericPoly& f, const Box& box, std::size_t count,
                                  std::uint64_t seed) {
    box.validate();
    const std::size_t n = box.dimension();
    if (f.arity() != n) {
        throw std::invalid_argument("sample_variety: box dimension differs from the polynomial");
    }
    std::vector<Point> seeds;
    const std::size_t grid_budget = std::max<std::size_t>(count / 2, 1);
    auto per_axis = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(grid_budget), 1.0 / static_cast<double>(n))));
    per_axis = std::max<std::size_t>(per_axis, 3);
    if (per_axis % 2 == 0) {
        ++per_axis;
    }
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * static_cast<double>(idx[i]) /
                                   static_cast<double>(per_axis - 1);
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
    std::mt19937_64 rng(seed);
    const std::size_t random_budget = count > grid_budget ? count - grid_budget : 0;
    for (std::size_t s = 0; s < random_budget; ++s) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = std::uniform_real_distribution<double>(box.lo[i], box.hi[i])(rng);
        }
        seeds.push_back(std::move(p));
    }

    const double cell = 1e-9 * box.diagonal();
    std::set<std::vector<long long>> seen;
    std::vector<Point> out;
    // Projections that leave the box or repeat are dropped, so top up with
    // fresh random seeds until the budget is met or progress stalls.
    for (int round = 0; round < 20 && !seeds.empty(); ++round) {
        std::vector<std::optional<Point>> projected(seeds.size());
        parallel_for(seeds.size(), [&](std::size_t i) { projected[i] = project_to_variety(f, seeds[i]); });
        for (auto& p : projected) {
            if (out.size() == count || !p || !box.contains(*p)) {
                continue;
            }
            std::vector<long long> key(n);
            for (std::size_t i = 0; i < n; ++i) {
                key[i] = std::llround((*p)[i] / cell);
            }
            if (seen.insert(std::move(key)).second) {
                out.push_back(std::move(*p));
            }
        }
        seeds.clear();
        if (out.size() < count && !out.empty()) {
            for (std::size_t s = 0; s < 2 * (count - out.size()); ++s) {
                Point p(n);
                for (std::size_t i = 0; i < n; ++i) {
                    p[i] = std::uniform_real_distribution<double>(box.lo[i], box.hi[i])(rng);
                }
                seeds.push_back(std::move(p));
            }
        }
    }
    return out;
}

std::vector<Segment2> marching_squares(const NumericPoly& f, const Box& box, int nx, int ny) {
    box.validate();
    if (box.dimension() != 2 || f.arity() != 2 || nx < 1 || ny < 1) {
        throw std::invalid_argument("marching_squares: needs a 2-D box and polynomial");
    }
    const double dx = (box.hi[0] - box.lo[0]) / nx;
    const double dy = (box.hi[1] - box.lo[1]) / ny;
    std::vector<double> v((nx + 1) * (ny + 1));
    auto at = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(j * (nx + 1) + i)]; };
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            const double p[2] = {box.lo[0] + i * dx, box.lo[1] + j * dy};
            at(i, j) = f.value(p);
        }
    }
    std::vector<Segment2> segs;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double x0 = box.lo[0] + i * dx;
            const double y0 = box.lo[1] + j * dy;
            // Corners counter-clockwise from bottom-left.
            const double c[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            const double px[4] = {x0, x0 + dx, x0 + dx, x0};
            const double py[4] = {y0, y0, y0 + dy, y0 + dy};
            std::vector<std::array<double, 2>> cut;
            for (int e = 0; e < 4; ++e) {
                const int a = e;
                const int b = (e + 1) % 4;
                if ((c[a] < 0) != (c[b] < 0)) {
                    const double t = c[a] / (c[a] - c[b]);
                    cut.push_back({px[a] + t * (px[b] - px[a]), py[a] + t * (py[b] - py[a])});
                }
            }
            if (cut.size() == 2) {
                segs.push_back({cut[0], cut[1]});
            } else if (cut.size() == 4) {
                const double centre = (c[0] + c[1] + c[2] + c[3]) / 4;
                if ((centre < 0) == (c[0] < 0)) {
                    segs.push_back({cut[0], cut[1]});
                    segs.push_back({cut[2], cut[3]});
                } else {
                    segs.push_back({cut[0], cut[3]});
                    segs.push_back({cut[1], cut[2]});
                }
            }
        }
    }
    return segs;
}

namespace {

// Sum of |c| |x|^e over terms, the natural scale for deciding f(x) ~ 0.
double absolute_scale(const MultiPoly& f, std::span<const double> x) {
    double s = 0.0;
    for (const auto& [e, c] : f.terms()) {
        double t = std::abs(c.get_d());
        for (std::size_t i = 0; i < e.size(); ++i) {
            t *= std::pow(std::abs(x[i]), e[i]);
        }
        s += t;
    }
    return s;
}

}  // namespace

std::vector<Point> zero_set_points(const MultiPoly& exact, const Box& box, int resolution,
                                   std::size_t max_points) {
    box.validate();
    const NumericPoly f(exact);
    const std::size_t n = box.dimension();
    if (n != 2 || f.arity() != 2 || resolution < 2) {
        throw std::invalid_argument("zero_set_points: needs a 2-D box and polynomial");
    }
    // |f| along a line, used to catch even-multiplicity zeros without a sign change.
    const double shift = 0.1234567;
    std::vector<Point> found;
    auto scan_line = [&](int axis, double fixed) {
        const int other = 1 - axis;
        const int fine = 4 * resolution;
        const double lo = box.lo[axis];
        const double step = (box.hi[axis] - box.lo[axis]) / fine;
        auto eval = [&](double t) {
            Point p(2);
            p[axis] = t;
            p[other] = fixed;
            return f.value(p);
        };
        std::vector<double> vals(fine + 1);
        for (int k = 0; k <= fine; ++k) {
            vals[k] = eval(lo + k * step);
        }
        for (int k = 0; k < fine; ++k) {
            double a = lo + k * step;
            double b = a + step;
            double fa = vals[k];
            double fb = vals[k + 1];
            if (fa == 0.0 || (fa < 0) != (fb < 0)) {
                for (int it = 0; it < 80 && fa != 0.0; ++it) {
                    const double m = 0.5 * (a + b);
                    const double fm = eval(m);
                    if ((fm < 0) == (fa < 0) && fm != 0.0) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                Point p(2);
                p[axis] = fa == 0.0 ? a : 0.5 * (a + b);
                p[other] = fixed;
                found.push_back(p);
                continue;
            }
            // Interior local minimum of |f| on [t_{k-1}, t_{k+1}]: golden section.
            if (k == 0 || k + 1 > fine) {
                continue;
            }
            const double m0 = std::abs(vals[k - 1]);
            const double m1 = std::abs(vals[k]);
            const double m2 = std::abs(vals[k + 1]);
            if (!(m1 <= m0 && m1 < m2) || (vals[k - 1] < 0) != (vals[k] < 0)) {
                continue;
            }
            double l = a - step;
            double r = a + step;
            const double g = 0.5 * (std::sqrt(5.0) - 1.0);
            double c1 = r - g * (r - l);
            double c2 = l + g * (r - l);
            double f1 = std::abs(eval(c1));
            double f2 = std::abs(eval(c2));
            for (int it = 0; it < 100; ++it) {
                if (f1 < f2) {
                    r = c2;
                    c2 = c1;
                    f2 = f1;
                    c1 = r - g * (r - l);
                    f1 = std::abs(eval(c1));
                } else {
                    l = c1;
                    c1 = c2;
                    f1 = f2;
                    c2 = l + g * (r - l);
                    f2 = std::abs(eval(c2));
                }
            }
            Point p(2);
            p[axis] = 0.5 * (l + r);
            p[other] = fixed;
            if (std::abs(f.value(p)) <= 1e-9 * absolute_scale(exact, p)) {
                found.push_back(p);
            }
        }
    };
    for (int j = 0; j < resolution; ++j) {
        const double y = box.lo[1] + (j + shift) * (box.hi[1] - box.lo[1]) / resolution;
        scan_line(0, y);
        const double x = box.lo[0] + (j + shift) * (box.hi[0] - box.lo[0]) / resolution;
        scan_line(1, x);
    }
    if (found.size() <= max_points || max_points == 0) {
        return max_points == 0 ? std::vector<Point>{} : found;
    }
    std::vector<Point> thinned;
    for (std::size_t k = 0; k < max_points; ++k) {
        thinned.push_back(found[k * found.size() / max_points]);
    }
    return thinned;
}

}  // namespace polyvor
