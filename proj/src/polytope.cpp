#include "polyvor/polytope.hpp"

#include "polyvor/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyvor {

FunctionalSet FunctionalSet::from(std::vector<RationalVector> functionals) {
    FunctionalSet s;
    s.dimension = functionals.empty() ? 0 : functionals.front().size();
    s.functionals = std::move(functionals);
    return s;
}

namespace {

std::size_t affine_dimension(const std::vector<RationalVector>& points) {
    if (points.size() <= 1) {
        return 0;
    }
    std::vector<RationalVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(sub(points[i], points[0]));
    }
    return rank(RationalMatrix::from_rows(diffs));
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

UnitBall UnitBall::build(const FunctionalSet& input) {
    const auto& ls = input.functionals;
    if (ls.empty()) {
        throw BallError("empty functional set");
    }
    const std::size_t n = ls.front().size();
    if (n == 0) {
        throw BallError("functionals must have dimension >= 1");
    }
    for (const auto& l : ls) {
        if (l.size() != n) {
            throw BallError("functionals have inconsistent dimensions");
        }
        if (is_zero(l)) {
            throw BallError("zero functional");
        }
    }
    std::set<RationalVector> as_set(ls.begin(), ls.end());
    if (as_set.size() != ls.size()) {
        throw BallError("duplicate functional");
    }
    for (const auto& l : ls) {
        if (!as_set.contains(negate(l))) {
            throw BallError("functional set is not centrally symmetric: missing -" + to_string(l));
        }
    }
    // With L = -L the region is bounded iff the functionals span R^n.
    if (rank(RationalMatrix::from_rows(ls)) < n) {
        throw BallError("unbounded region: functionals do not span the ambient space");
    }

    UnitBall ball;
    ball.dim_ = n;
    ball.functionals_ = FunctionalSet{ls, n};

    std::set<RationalVector> vertex_set;
    const RationalVector ones(n, Rational(1));
    for_each_subset(ls.size(), n, [&](const std::vector<std::size_t>& idx) {
        std::vector<RationalVector> rows;
        for (auto i : idx) {
            rows.push_back(ls[i]);
        }
        RationalMatrix a = RationalMatrix::from_rows(rows);
        if (determinant(a) == 0) {
            return;
        }
        auto x = solve_linear(a, ones);
        for (const auto& l : ls) {
            if (dot(l, *x) > 1) {
                return;
            }
        }
        vertex_set.insert(*x);
    });
    ball.vertices_.assign(vertex_set.begin(), vertex_set.end());

    // Vertex/functional incidence.
    std::vector<std::vector<int>> facet_vertices(ls.size());
    for (std::size_t j = 0; j < ls.size(); ++j) {
        std::vector<RationalVector> pts;
        for (std::size_t v = 0; v < ball.vertices_.size(); ++v) {
            if (dot(ls[j], ball.vertices_[v]) == 1) {
                facet_vertices[j].push_back(static_cast<int>(v));
                pts.push_back(ball.vertices_[v]);
            }
        }
        if (pts.size() < n || affine_dimension(pts) != n - 1) {
            throw BallError("redundant functional " + to_string(ls[j]) +
                            " does not support a facet");
        }
    }

    // Faces are the nonempty intersections of facets.
    std::set<std::vector<int>> vertex_sets(facet_vertices.begin(), facet_vertices.end());
    std::vector<std::vector<int>> frontier(vertex_sets.begin(), vertex_sets.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier) {
            for (const auto& g : facet_vertices) {
                std::vector<int> both;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                      std::back_inserter(both));
                if (!both.empty() && vertex_sets.insert(both).second) {
                    next.push_back(std::move(both));
                }
            }
        }
        frontier = std::move(next);
    }

    for (const auto& vs : vertex_sets) {
        Face f;
        f.vertex_ids = vs;
        std::vector<RationalVector> pts;
        for (int v : vs) {
            pts.push_back(ball.vertices_[static_cast<std::size_t>(v)]);
        }
        f.dim = static_cast<int>(affine_dimension(pts));
        for (std::size_t j = 0; j < ls.size(); ++j) {
            if (std::includes(facet_vertices[j].begin(), facet_vertices[j].end(), vs.begin(),
                              vs.end())) {
                f.active_functional_ids.push_back(static_cast<int>(j));
            }
        }
        ball.faces_.push_back(std::move(f));
    }
    std::stable_sort(ball.faces_.begin(), ball.faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) {
            return a.dim < b.dim;
        }
        return a.vertex_ids < b.vertex_ids;
    });
    std::map<std::vector<int>, int> by_vertices;
    for (std::size_t i = 0; i < ball.faces_.size(); ++i) {
        ball.faces_[i].id = static_cast<int>(i);
        by_vertices[ball.faces_[i].vertex_ids] = static_cast<int>(i);
    }
    for (auto& f : ball.faces_) {
        std::vector<int> neg;
        for (int v : f.vertex_ids) {
            int w = ball.vertex_index(negate(ball.vertices_[static_cast<std::size_t>(v)]));
            if (w < 0) {
                throw BallError("vertex set is not centrally symmetric");
            }
            neg.push_back(w);
        }
        std::sort(neg.begin(), neg.end());
        auto it = by_vertices.find(neg);
        if (it == by_vertices.end()) {
            throw BallError("face lattice is not centrally symmetric");
        }
        f.negation_id = it->second;
    }
    for (const auto& l : ls) {
        ball.functionals_d_.push_back(to_double(l));
    }
    return ball;
}

const Face& UnitBall::face(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= faces_.size()) {
        throw std::out_of_range("face id out of range");
    }
    return faces_[static_cast<std::size_t>(id)];
}

const Face* UnitBall::find_face_by_vertices(std::vector<int> vertex_ids) const {
    std::sort(vertex_ids.begin(), vertex_ids.end());
    vertex_ids.erase(std::unique(vertex_ids.begin(), vertex_ids.end()), vertex_ids.end());
    for (const auto& f : faces_) {
        if (f.vertex_ids == vertex_ids) {
            return &f;
        }
    }
    return nullptr;
}

const Face* UnitBall::find_face_by_functionals(std::span<const int> functional_ids) const {
    std::vector<int> on_all;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        bool ok = true;
        for (int j : functional_ids) {
            if (dot(functionals_.functionals[static_cast<std::size_t>(j)], vertices_[v]) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            on_all.push_back(static_cast<int>(v));
        }
    }
    if (on_all.empty()) {
        return nullptr;
    }
    return find_face_by_vertices(std::move(on_all));
}

int UnitBall::vertex_index(std::span<const Rational> point) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (std::equal(point.begin(), point.end(), vertices_[v].begin(), vertices_[v].end())) {
            return static_cast<int>(v);
        }
    }
    return -1;
}

int UnitBall::functional_index(std::span<const Rational> functional) const {
    const auto& ls = functionals_.functionals;
    for (std::size_t j = 0; j < ls.size(); ++j) {
        if (std::equal(functional.begin(), functional.end(), ls[j].begin(), ls[j].end())) {
            return static_cast<int>(j);
        }
    }
    return -1;
}

std::vector<RationalVector> UnitBall::face_vertices(const Face& f) const {
    std::vector<RationalVector> pts;
    for (int v : f.vertex_ids) {
        pts.push_back(vertices_.at(static_cast<std::size_t>(v)));
    }
    return pts;
}

const Face& UnitBall::vertex_face(int vertex_id) const {
    const Face* f = find_face_by_vertices({vertex_id});
    if (!f) {
        throw std::out_of_range("no vertex face with that id");
    }
    return *f;
}

const Face& UnitBall::facet_face(int functional_id) const {
    for (const auto& f : faces_) {
        if (f.dim == static_cast<int>(dim_) - 1 && f.active_functional_ids.size() == 1 &&
            f.active_functional_ids.front() == functional_id) {
            return f;
        }
    }
    throw std::out_of_range("no facet for that functional id");
}

UnitBall build_ball(const FunctionalSet& functionals) {
    return UnitBall::build(functionals);
}

UnitBall dual_ball(const UnitBall& ball) {
    return UnitBall::build(FunctionalSet{ball.vertices(), ball.dimension()});
}

const Face& dual_face(const UnitBall& ball, const UnitBall& dual, const Face& f) {
    std::vector<int> ids;
    for (int j : f.active_functional_ids) {
        int v = dual.vertex_index(ball.functionals().functionals[static_cast<std::size_t>(j)]);
        if (v < 0) {
            throw std::invalid_argument("dual_face: ball and dual do not match");
        }
        ids.push_back(v);
    }
    const Face* g = dual.find_face_by_vertices(ids);
    if (!g) {
        throw std::invalid_argument("dual_face: face not in lattice");
    }
    return *g;
}

Face dual_face(const UnitBall& ball, const Face& f) {
    if (f.id < 0 || static_cast<std::size_t>(f.id) >= ball.faces().size() ||
        !(ball.faces()[static_cast<std::size_t>(f.id)] == f)) {
        throw std::invalid_argument("dual_face: face not in lattice");
    }
    UnitBall dual = dual_ball(ball);
    return dual_face(ball, dual, f);
}

const Face& minimizing_face(const UnitBall& ball, std::span<const Rational> v) {
    if (v.size() != ball.dimension()) {
        throw std::invalid_argument("minimizing_face: dimension mismatch");
    }
    if (is_zero(v)) {
        throw std::invalid_argument("minimizing_face: zero vector");
    }
    std::vector<int> argmin;
    Rational best;
    for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
        Rational value = dot(v, ball.vertices()[i]);
        if (argmin.empty() || value < best) {
            best = value;
            argmin.assign(1, static_cast<int>(i));
        } else if (value == best) {
            argmin.push_back(static_cast<int>(i));
        }
    }
    const Face* f = ball.find_face_by_vertices(argmin);
    if (!f) {
        throw std::logic_error("minimizing_face: argmin set is not a face");
    }
    return *f;
}

ConeDescription cone_generators(const UnitBall& ball, const Face& f) {
    ConeDescription c;
    c.apex = RationalVector(ball.dimension(), Rational(0));
    for (int j : f.active_functional_ids) {
        c.generators.push_back(negate(ball.functionals().functionals[static_cast<std::size_t>(j)]));
    }
    c.open = true;
    return c;
}

std::optional<RationalVector> open_cone_certificate(const ConeDescription& cone,
                                                    std::span<const Rational> v) {
    if (cone.generators.empty()) {
        throw std::invalid_argument("in_open_cone: empty generator list");
    }
    RationalVector w = sub(v, cone.apex);
    if (is_zero(w)) {
        return std::nullopt;
    }
    return positive_combination(cone.generators, w);
}

bool in_open_cone(const ConeDescription& cone, std::span<const Rational> v) {
    return open_cone_certificate(cone, v).has_value();
}

std::vector<const Face*> cone_closure_faces(const UnitBall& ball, const Face& f) {
    std::vector<const Face*> out;
    for (const auto& g : ball.faces()) {
        if (std::includes(g.vertex_ids.begin(), g.vertex_ids.end(), f.vertex_ids.begin(),
                          f.vertex_ids.end())) {
            out.push_back(&g);
        }
    }
    return out;
}

std::vector<const Face*> faces_of_codim_index(const UnitBall& ball, int i) {
    const int n = static_cast<int>(ball.dimension());
    if (i < 0 || i > n - 1) {
        throw std::out_of_range("faces_of_codim_index: index out of range");
    }
    std::vector<const Face*> out;
    for (const auto& f : ball.faces()) {
        if (f.dim == n - 1 - i) {
            out.push_back(&f);
        }
    }
    return out;
}

int codim_index(const UnitBall& ball, const Face& f) {
    return static_cast<int>(ball.dimension()) - 1 - f.dim;
}

Rational norm_value(const UnitBall& ball, std::span<const Rational> x) {
    if (x.size() != ball.dimension()) {
        throw std::invalid_argument("norm_value: dimension mismatch");
    }
    Rational best = 0;
    for (const auto& l : ball.functionals().functionals) {
        Rational value = dot(l, x);
        if (value > best) {
            best = value;
        }
    }
    return best;
}

double norm_value(const UnitBall& ball, std::span<const double> x) {
    if (x.size() != ball.dimension()) {
        throw std::invalid_argument("norm_value: dimension mismatch");
    }
    double best = 0.0;
    for (const auto& l : ball.functionals_double()) {
        double value = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            value += l[i] * x[i];
        }
        best = std::max(best, value);
    }
    return best;
}

}  // namespace polyvor
