#include "properties.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::vector<int> counts(const UnitBall& b) {
    std::vector<int> c(b.dimension(), 0);
    for (const auto& f : b.faces()) {
        ++c[static_cast<std::size_t>(f.dim)];
    }
    return c;
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("square ball and its diamond dual") {
    const UnitBall sq = square();
    CHECK(sorted(sq.vertices()) ==
          sorted({V({"-1", "1"}), V({"1", "1"}), V({"1", "-1"}), V({"-1", "-1"})}));
    CHECK(counts(sq) == std::vector<int>{4, 4});
    const UnitBall d = dual_ball(sq);
    CHECK(sorted(d.vertices()) ==
          sorted({V({"0", "1"}), V({"0", "-1"}), V({"1", "0"}), V({"-1", "0"})}));
    const UnitBall dd = dual_ball(d);
    CHECK(sorted(dd.vertices()) == sorted(sq.vertices()));
}

TEST_CASE("cube ball and octahedron dual") {
    const UnitBall c = cube();
    CHECK(counts(c) == std::vector<int>{8, 12, 6});
    const UnitBall o = dual_ball(c);
    CHECK(o.vertices().size() == 6);
    CHECK(counts(o) == std::vector<int>{6, 12, 8});
}

TEST_CASE("invalid functional sets") {
    CHECK_THROWS_AS(ball_from({V({"1", "0"}), V({"-1", "0"})}), BallError);
    CHECK_THROWS_AS(ball_from({V({"1", "0"}), V({"0", "1"}), V({"0", "-1"})}), BallError);
    CHECK_THROWS_AS(ball_from({V({"1", "0"}), V({"-1", "0"}), V({"0", "0"})}), BallError);
    try {
        ball_from({V({"1", "0"}), V({"-1", "0"})});
    } catch (const BallError& e) {
        CHECK(std::string(e.what()).find("unbounded") != std::string::npos);
    }
}

TEST_CASE("face invariants") {
    for (const UnitBall& b : {square(), cube(), diamond()}) {
        for (const auto& f : b.faces()) {
            RationalMatrix a(f.active_functional_ids.size(), b.dimension());
            for (std::size_t r = 0; r < f.active_functional_ids.size(); ++r) {
                const auto& l = b.functionals().functionals[static_cast<std::size_t>(f.active_functional_ids[r])];
                for (std::size_t c = 0; c < b.dimension(); ++c) {
                    a(r, c) = l[c];
                }
            }
            CHECK(f.dim == static_cast<int>(b.dimension() - rank(a)));
            std::vector<int> on;
            for (std::size_t v = 0; v < b.vertices().size(); ++v) {
                bool all = true;
                for (int l : f.active_functional_ids) {
                    all = all && dot(b.functionals().functionals[static_cast<std::size_t>(l)], b.vertices()[v]) == 1;
                }
                if (all) {
                    on.push_back(static_cast<int>(v));
                }
            }
            CHECK(on == f.vertex_ids);
            const Face& neg = b.face(f.negation_id);
            std::vector<RationalVector> nv;
            for (const auto& v : b.face_vertices(f)) {
                nv.push_back(negate(v));
            }
            CHECK(sorted(b.face_vertices(neg)) == sorted(nv));
        }
        for (const auto& v : b.vertices()) {
            CHECK(b.vertex_index(negate(v)) >= 0);
        }
    }
}

TEST_CASE("dual faces") {
    const UnitBall sq = square();
    const UnitBall d = dual_ball(sq);
    const Face& df = dual_face(sq, d, vertex_at(sq, V({"1", "-1"})));
    CHECK(sorted(d.face_vertices(df)) == sorted({V({"1", "0"}), V({"0", "-1"})}));
    const Face& bottom = face_spanned(sq, {V({"1", "-1"}), V({"-1", "-1"})});
    CHECK(d.face_vertices(dual_face(sq, d, bottom)) == std::vector<RationalVector>{V({"0", "-1"})});
    const UnitBall c = cube();
    const UnitBall o = dual_ball(c);
    const Face& facet = face_spanned(c, {V({"1", "1", "1"}), V({"1", "-1", "1"}), V({"1", "1", "-1"}), V({"1", "-1", "-1"})});
    CHECK(o.face_vertices(dual_face(c, o, facet)) == std::vector<RationalVector>{V({"1", "0", "0"})});
    CHECK(dual_face(sq, bottom).dim == 0);
}

TEST_CASE("minimizing face") {
    const UnitBall sq = square();
    CHECK(minimizing_face(sq, V({"-4", "1"})).id == vertex_at(sq, V({"1", "-1"})).id);
    CHECK(minimizing_face(sq, V({"0", "1"})).id ==
          face_spanned(sq, {V({"1", "-1"}), V({"-1", "-1"})}).id);
    CHECK(minimizing_face(sq, V({"1", "1"})).id == vertex_at(sq, V({"-1", "-1"})).id);
    CHECK_THROWS(minimizing_face(sq, V({"0", "0"})));
}

TEST_CASE("cone generators and open-cone membership") {
    const UnitBall sq = square();
    const ConeDescription c = cone_generators(sq, vertex_at(sq, V({"1", "-1"})));
    CHECK(sorted(c.generators) == sorted({V({"-1", "0"}), V({"0", "1"})}));
    CHECK(c.open);
    CHECK(in_open_cone(c, V({"-4", "1"})));
    CHECK(*open_cone_certificate(c, V({"-4", "1"})) == V({"4", "1"}));
    CHECK_FALSE(in_open_cone(c, V({"0", "1"})));
    CHECK_FALSE(in_open_cone(c, V({"1", "0"})));
    const Face& bottom = face_spanned(sq, {V({"1", "-1"}), V({"-1", "-1"})});
    CHECK(cone_generators(sq, bottom).generators == std::vector<RationalVector>{V({"0", "1"})});
    const UnitBall cu = cube();
    CHECK(sorted(cone_generators(cu, vertex_at(cu, V({"1", "1", "1"}))).generators) ==
          sorted({V({"-1", "0", "0"}), V({"0", "-1", "0"}), V({"0", "0", "-1"})}));
}

TEST_CASE("closure faces and codim index") {
    const UnitBall sq = square();
    const auto cl = cone_closure_faces(sq, vertex_at(sq, V({"1", "-1"})));
    std::vector<std::vector<RationalVector>> got;
    for (const Face* f : cl) {
        got.push_back(sorted(sq.face_vertices(*f)));
    }
    std::sort(got.begin(), got.end());
    std::vector<std::vector<RationalVector>> want = {
        {V({"1", "-1"})},
        sorted({V({"1", "-1"}), V({"1", "1"})}),
        sorted({V({"-1", "-1"}), V({"1", "-1"})})};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    const Face& edge = face_spanned(sq, {V({"1", "-1"}), V({"1", "1"})});
    CHECK(cone_closure_faces(sq, edge).size() == 1);
    const UnitBall cu = cube();
    const Face& cedge = face_spanned(cu, {V({"1", "1", "1"}), V({"1", "1", "-1"})});
    CHECK(cone_closure_faces(cu, cedge).size() == 3);
    CHECK(faces_of_codim_index(sq, 0).size() == 4);
    for (const Face* f : faces_of_codim_index(sq, 0)) {
        CHECK(f->dim == 1);
    }
    for (const Face* f : faces_of_codim_index(sq, 1)) {
        CHECK(f->dim == 0);
    }
    CHECK(faces_of_codim_index(cu, 1).size() == 12);
    CHECK(codim_index(cu, vertex_at(cu, V({"1", "1", "1"}))) == 2);
}

TEST_CASE("norm values") {
    CHECK(norm_value(square(), V({"3", "-4"})) == 4);
    CHECK(norm_value(cube(), V({"0", "0", "0"})) == 0);
    CHECK(norm_value(diamond(), V({"1", "0"})) == 1);
}

TEST_CASE("fan partition and argmin/LP agreement, 200 vectors per ball") {
    std::uint64_t seed = 11;
    for (const UnitBall& b : {square(), diamond(), cube(), dual_ball(cube())}) {
        const Check c = fan_partition(b, 200, seed++);
        INFO(c.failure);
        CHECK(c.ok);
        CHECK(c.cases == 200);
    }
}

TEST_CASE("norm axioms") {
    std::uint64_t seed = 3;
    for (const UnitBall& b : {square(), diamond(), cube()}) {
        const Check c = norm_axioms(b, 200, seed++);
        INFO(c.failure);
        CHECK(c.ok);
    }
}

}
