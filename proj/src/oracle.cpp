#include "polyvor/oracle.hpp"

#include "polyvor/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polyvor {

DistanceOracle::DistanceOracle(const Hypersurface& x, const UnitBall& ball, Box box,
                               OracleParams params)
    : x_(&x), ball_(&ball), box_(std::move(box)), params_(params) {
    box_.validate();
    if (box_.dimension() != x.dimension() || ball.dimension() != x.dimension()) {
        throw std::invalid_argument("oracle: dimension mismatch");
    }
    samples_ = sample_variety(x.numeric, box_, params_.sample_count, params_.seed);
    if (samples_.empty()) {
        throw OracleFailure("no points of the variety found in the box");
    }
}

double DistanceOracle::objective(std::span<const double> u, std::span<const double> x) const {
    double best = -INFINITY;
    for (const auto& l : ball_->functionals_double()) {
        double s = 0.0;
        for (std::size_t i = 0; i < l.size(); ++i) {
            s += l[i] * (u[i] - x[i]);
        }
        best = std::max(best, s);
    }
    return best;
}

namespace {

std::vector<Eigen::VectorXd> search_directions(const Eigen::VectorXd& grad) {
    const auto n = grad.size();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(grad);
    const Eigen::MatrixXd q = qr.householderQ();
    std::vector<Eigen::VectorXd> basis;
    for (Eigen::Index j = 1; j < n; ++j) {
        basis.push_back(q.col(j));
    }
    std::vector<Eigen::VectorXd> dirs;
    for (const auto& b : basis) {
        dirs.push_back(b);
        dirs.push_back(-b);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            for (double si : {1.0, -1.0}) {
                for (double sj : {1.0, -1.0}) {
                    dirs.push_back((si * basis[i] + sj * basis[j]).normalized());
                }
            }
        }
    }
    return dirs;
}

double norm2(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) {
        s += v * v;
    }
    return std::sqrt(s);
}

double euclid(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

}  // namespace

DistanceOracle::Local DistanceOracle::refine(std::span<const double> u, Point x) const {
    const double step0 = params_.initial_step * box_.diagonal();
    double step = step0;
    double value = objective(u, x);
    for (int it = 0; it < params_.max_iterations; ++it) {
        if (step < params_.step_tolerance * (1.0 + norm2(x))) {
            break;
        }
        const auto dirs = search_directions(x_->numeric.gradient(x));
        std::optional<Point> best;
        double best_value = value;
        for (const auto& d : dirs) {
            Point y = x;
            for (std::size_t i = 0; i < y.size(); ++i) {
                y[i] += step * d[static_cast<Eigen::Index>(i)];
            }
            auto p = project_to_variety(x_->numeric, y);
            if (!p || euclid(*p, x) > 3.0 * step) {
                continue;
            }
            const double v = objective(u, *p);
            if (v < best_value) {
                best_value = v;
                best = std::move(p);
            }
        }
        if (best) {
            x = std::move(*best);
            value = best_value;
            step = std::min(2.0 * step, step0);
        } else {
            step *= 0.5;
        }
    }
    return {std::move(x), value};
}

// Newton on the KKT system of  min t  s.t.  l_a(u - x) <= t (a active), f(x) = 0.
std::optional<DistanceOracle::Local> DistanceOracle::polish(std::span<const double> u,
                                                            const Local& start) const {
    if (start.value <= 1e-12) {
        return std::nullopt;
    }
    const auto& ls = ball_->functionals_double();
    const auto n = static_cast<Eigen::Index>(x_->dimension());
    std::vector<double> slack(ls.size());
    for (std::size_t a = 0; a < ls.size(); ++a) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            s += ls[a][static_cast<std::size_t>(i)] * (u[static_cast<std::size_t>(i)] - start.x[static_cast<std::size_t>(i)]);
        }
        slack[a] = start.value - s;
    }
    std::optional<Local> best;
    std::vector<std::vector<std::size_t>> tried;
    for (double rel : {1e-10, 1e-7, 1e-4, 1e-2}) {
        std::vector<std::size_t> active;
        for (std::size_t a = 0; a < ls.size(); ++a) {
            if (slack[a] <= rel * start.value) {
                active.push_back(a);
            }
        }
        if (active.empty() || active.size() > static_cast<std::size_t>(n) ||
            std::find(tried.begin(), tried.end(), active) != tried.end()) {
            continue;
        }
        tried.push_back(active);
        const auto k = static_cast<Eigen::Index>(active.size());
        const Eigen::Index size = n + 2 + k;
        Eigen::MatrixXd lmat(k, n);
        for (Eigen::Index a = 0; a < k; ++a) {
            for (Eigen::Index i = 0; i < n; ++i) {
                lmat(a, i) = ls[active[static_cast<std::size_t>(a)]][static_cast<std::size_t>(i)];
            }
        }
        Eigen::VectorXd z(size);
        for (Eigen::Index i = 0; i < n; ++i) {
            z[i] = start.x[static_cast<std::size_t>(i)];
        }
        z[n] = start.value;
        {
            const Eigen::VectorXd g = x_->numeric.gradient(start.x);
            Eigen::MatrixXd m(n + 1, k + 1);
            m.topLeftCorner(n, k) = -lmat.transpose();
            m.topRightCorner(n, 1) = g;
            m.bottomLeftCorner(1, k).setOnes();
            m(n, k) = 0.0;
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
            rhs[n] = 1.0;
            const Eigen::VectorXd mn = m.completeOrthogonalDecomposition().solve(rhs);
            z.segment(n + 1, k) = mn.head(k);
            z[n + 1 + k] = mn[k];
        }
        const Eigen::Map<const Eigen::VectorXd> uu(u.data(), n);
        auto residual = [&](const Eigen::VectorXd& zz, Eigen::MatrixXd* jac) {
            Point xp(zz.data(), zz.data() + n);
            const Eigen::VectorXd g = x_->numeric.gradient(xp);
            const double nu = zz[n + 1 + k];
            const Eigen::VectorXd mu = zz.segment(n + 1, k);
            Eigen::VectorXd r(size);
            r.head(n) = -lmat.transpose() * mu + nu * g;
            r[n] = mu.sum() - 1.0;
            r.segment(n + 1, k) = lmat * (uu - zz.head(n)) - Eigen::VectorXd::Constant(k, zz[n]);
            r[n + 1 + k] = x_->numeric.value(xp);
            if (jac) {
                jac->setZero(size, size);
                jac->topLeftCorner(n, n) = nu * x_->numeric.hessian(xp);
                jac->block(0, n + 1, n, k) = -lmat.transpose();
                jac->block(0, n + 1 + k, n, 1) = g;
                jac->block(n, n + 1, 1, k).setOnes();
                jac->block(n + 1, 0, k, n) = -lmat;
                jac->block(n + 1, n, k, 1).setConstant(-1.0);
                jac->block(n + 1 + k, 0, 1, n) = g.transpose();
            }
            return r;
        };
        Eigen::MatrixXd jac;
        bool converged = false;
        for (int it = 0; it < 40; ++it) {
            const Eigen::VectorXd r = residual(z, &jac);
            if (!r.allFinite()) {
                break;
            }
            if (r.norm() < 1e-14 * (1.0 + z.norm())) {
                converged = true;
                break;
            }
            const Eigen::VectorXd dz = jac.completeOrthogonalDecomposition().solve(-r);
            if (!dz.allFinite()) {
                break;
            }
            z += dz;
            if (dz.norm() < 1e-16 * (1.0 + z.norm())) {
                converged = residual(z, nullptr).norm() < 1e-10 * (1.0 + z.norm());
                break;
            }
        }
        if (!converged) {
            continue;
        }
        Point xp(z.data(), z.data() + n);
        const double value = objective(u, xp);
        const Eigen::VectorXd mu = z.segment(n + 1, k);
        const double gn = x_->numeric.gradient(xp).norm();
        if (mu.minCoeff() < -1e-10 || z[n] <= 0.0 || value > z[n] + 1e-12 * (1.0 + z[n]) ||
            !(gn > 0.0) || std::abs(x_->numeric.value(xp)) / gn > params_.on_variety_tolerance ||
            euclid(xp, start.x) > 1e-3 * box_.diagonal() || value > start.value + 1e-12) {
            continue;
        }
        if (!best || value < best->value) {
            best = Local{std::move(xp), value};
        }
    }
    return best;
}

DistanceResult DistanceOracle::distance(std::span<const double> u) const {
    const std::size_t n = x_->dimension();
    if (u.size() != n) {
        throw std::invalid_argument("distance: point has the wrong dimension");
    }
    std::vector<double> vals(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        vals[i] = objective(u, samples_[i]);
    }
    std::vector<std::size_t> order(samples_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const double sep = params_.seed_separation * box_.diagonal();
    std::vector<Point> seeds;
    for (std::size_t idx : order) {
        if (seeds.size() >= params_.refine_seeds) {
            break;
        }
        const Point& p = samples_[idx];
        if (std::all_of(seeds.begin(), seeds.end(),
                        [&](const Point& s) { return euclid(s, p) >= sep; })) {
            seeds.push_back(p);
        }
    }
    if (auto p = project_to_variety(x_->numeric, Point(u.begin(), u.end()))) {
        seeds.push_back(std::move(*p));
    }

    std::vector<Local> local(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t i) {
        local[i] = refine(u, seeds[i]);
        if (auto p = polish(u, local[i])) {
            local[i] = std::move(*p);
        }
    });
    std::stable_sort(local.begin(), local.end(),
                     [](const Local& a, const Local& b) { return a.value < b.value; });
    const double best = local.front().value;
    std::vector<Local> clusters;
    for (auto& l : local) {
        if (l.value > best + params_.value_band) {
            break;
        }
        const bool merged = std::any_of(clusters.begin(), clusters.end(), [&](const Local& c) {
            return euclid(c.x, l.x) < params_.merge_tolerance;
        });
        if (!merged) {
            clusters.push_back(l);
        }
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const Local& a, const Local& b) { return a.x < b.x; });

    DistanceResult r;
    r.value = best;
    for (auto& c : clusters) {
        const double gn = x_->numeric.gradient(c.x).norm();
        r.residuals.push_back(gn > 0.0 ? std::abs(x_->numeric.value(c.x)) / gn : INFINITY);
        r.minimizer_values.push_back(c.value);
        int face = -1;
        if (c.value > 1e-12) {
            try {
                face = optimizing_face_of(*ball_, u, c.x, c.value, params_.face_tolerance).id;
            } catch (const std::invalid_argument&) {
                face = -1;
            }
        }
        r.optimizing_faces.push_back(face);
        r.minimizers.push_back(std::move(c.x));
    }
    return r;
}

bool DistanceOracle::is_medial_candidate(std::span<const double> u) const {
    if (u.size() != x_->dimension()) {
        throw std::invalid_argument("is_medial_candidate: point has the wrong dimension");
    }
    const double gn = x_->numeric.gradient(u).norm();
    const double fv = std::abs(x_->numeric.value(u));
    if (fv == 0.0 || (gn > 0.0 && fv / gn < params_.on_variety_tolerance)) {
        throw std::invalid_argument("is_medial_candidate: point lies on the variety");
    }
    return distance(u).minimizers.size() >= 2;
}

DistanceResult distance_to_variety(const Hypersurface& x, const UnitBall& ball,
                                   std::span<const double> u, const Box& box,
                                   const OracleParams& params) {
    return DistanceOracle(x, ball, box, params).distance(u);
}

const Face& optimizing_face_of(const UnitBall& ball, std::span<const double> u,
                               std::span<const double> x, double lambda, double tolerance) {
    if (u.size() != ball.dimension() || x.size() != ball.dimension()) {
        throw std::invalid_argument("optimizing_face_of: dimension mismatch");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("optimizing_face_of: lambda must be positive");
    }
    std::vector<double> diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        diff[i] = x[i] - u[i];
    }
    if (std::abs(norm_value(ball, std::span<const double>(diff)) - lambda) > tolerance * lambda) {
        throw std::invalid_argument("optimizing_face_of: x is not on the sphere of radius lambda");
    }
    std::vector<int> active;
    const auto& ls = ball.functionals_double();
    for (std::size_t a = 0; a < ls.size(); ++a) {
        double s = 0.0;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            s += ls[a][i] * diff[i];
        }
        if (std::abs(s - lambda) <= tolerance * lambda) {
            active.push_back(static_cast<int>(a));
        }
    }
    const Face* f = ball.find_face_by_functionals(active);
    if (!f) {
        throw std::invalid_argument("optimizing_face_of: active functionals do not define a face");
    }
    return *f;
}

bool is_medial_candidate(const Hypersurface& x, const UnitBall& ball, std::span<const double> u,
                         const Box& box, const OracleParams& params) {
    return DistanceOracle(x, ball, box, params).is_medial_candidate(u);
}

std::string to_string(SupportStatus s) {
    switch (s) {
        case SupportStatus::Supported:
            return "supported";
        case SupportStatus::Unsupported:
            return "unsupported";
        case SupportStatus::NoRealPoints:
            return "no real points in box";
    }
    return "unknown";
}

PruneResult prune_components(const std::vector<EquidistantComponent>& components,
                             const DistanceOracle& oracle) {
    if (oracle.box().dimension() != 2) {
        throw std::invalid_argument("prune_components: only planar instances are supported");
    }
    const auto& params = oracle.params();
    PruneResult out;
    for (std::size_t k = 0; k < components.size(); ++k) {
        const auto& c = components[k];
        ComponentSupport s;
        s.component = k;
        std::vector<Point> pts;
        if (!c.zero_resultant_flag && !c.empty_zero_set) {
            pts = zero_set_points(c.poly, oracle.box(), params.zero_set_resolution,
                                  params.zero_set_points);
        }
        if (pts.empty()) {
            s.status = SupportStatus::NoRealPoints;
            out.no_real_points.push_back(k);
            out.details.push_back(std::move(s));
            continue;
        }
        for (const auto& u : pts) {
            DistanceResult r;
            try {
                if (!oracle.is_medial_candidate(u)) {
                    ++s.sampled;
                    continue;
                }
                r = oracle.distance(u);
            } catch (const std::invalid_argument&) {
                continue;  // sample lies on X
            }
            ++s.sampled;
            ++s.medial;
            bool match = false;
            for (std::size_t i = 0; i < r.optimizing_faces.size() && !match; ++i) {
                for (std::size_t j = 0; j < r.optimizing_faces.size() && !match; ++j) {
                    match = i != j && r.optimizing_faces[i] == c.face_a &&
                            r.optimizing_faces[j] == c.face_b;
                }
            }
            if (match) {
                ++s.matched;
                s.witnesses.push_back(u);
            }
        }
        s.status = s.matched > 0 ? SupportStatus::Supported : SupportStatus::Unsupported;
        (s.status == SupportStatus::Supported ? out.supported : out.unsupported).push_back(k);
        out.details.push_back(std::move(s));
    }
    return out;
}

}  // namespace polyvor
