#include "properties.hpp"

#include "polyvor/commands.hpp"
#include "polyvor/svg.hpp"

#include <doctest.h>

using namespace testing;

namespace {

const char* kCircle = R"({
  "ball": [["1","0"],["-1","0"],["0","1"],["0","-1"]],
  "polynomial": [{"coeff":"1","exponents":[2,0]},{"coeff":"1","exponents":[0,2]},{"coeff":"-1","exponents":[0,0]}],
  "points": [["0","1"],["3/5","4/5"]],
  "box": [[-1.5,1.5],[-1.5,1.5]],
  "params": {"count": 600, "sample_count": 1500}
})";

const char* kParabola = R"({
  "ball": [["1","0"],["-1","0"],["0","1"],["0","-1"]],
  "polynomial": [{"coeff":"1","exponents":[0,1]},{"coeff":"-1","exponents":[2,0]}],
  "points": [["0","1"]],
  "box": [[-2.5,2.5],[-1,4]]
})";

int exit_code(const std::string& cmd, const Problem& p, const CommandOptions& o = {}) {
    try {
        run_command(cmd, p, o);
    } catch (const std::exception& e) {
        return exit_code_for(e);
    }
    return 0;
}

}  // namespace

TEST_SUITE("problem") {

TEST_CASE("parse a problem file") {
    const Problem p = parse_problem_text(kCircle);
    CHECK(p.dimension() == 2);
    CHECK(p.ball.size() == 4);
    CHECK(p.polynomial == circle_poly());
    CHECK(p.points == std::vector<RationalVector>{V({"0", "1"}), V({"3/5", "4/5"})});
    REQUIRE(p.box.has_value());
    CHECK(p.box->hi[1] == 1.5);
    CHECK(stratify_params(p.params).count == 600);
    CHECK(oracle_params(p.params).sample_count == 1500);
    CHECK(oracle_params(p.params).merge_tolerance == 1e-5);
}

TEST_CASE("malformed problems are rejected") {
    CHECK_THROWS_AS(parse_problem_text("{"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text(R"({"ball": [["1","0"]]})"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text(R"({"ball": [["one","0"]], "polynomial": [{"coeff":"1","exponents":[1,0]}]})"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text(R"({"ball": [[0.5, 0]], "polynomial": [{"coeff":"1","exponents":[1,0]}]})"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text(R"({"ball": [["1","0"]], "polynomial": [{"coeff":"1","exponents":[1]}]})"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text(R"({"ball": [["1","0"]], "polynomial": [{"coeff":"1","exponents":[1,0]}], "extra": 1})"), ProblemError);
    CHECK_THROWS_AS(parse_problem_text(R"({"ball": [["1","0"]], "polynomial": [{"coeff":"1","exponents":[1,0]}], "box": [[1,0],[0,1]]})"), ProblemError);
    CHECK(parse_point("3/5,9/25,27/125") == V({"3/5", "9/25", "27/125"}));
    CHECK_THROWS_AS(parse_point("1,x"), ProblemError);
}

TEST_CASE("property: JSON round trip") {
    const Check c = json_round_trip(200, 77);
    INFO(c.failure);
    CHECK(c.ok);
    const Problem p = parse_problem_text(kCircle);
    CHECK(parse_problem(to_json(p)) == p);
}

TEST_CASE("ball-info") {
    const Problem p = parse_problem_text(kCircle);
    const Json j = cmd_ball_info(p).json;
    CHECK(j["face_counts"] == Json::array({4, 4}));
    CHECK(j["vertices"].size() == 4);
    CHECK(j["dual"]["vertices"].size() == 4);
    Problem cube_problem = p;
    cube_problem.ball = {V({"1", "0", "0"}), V({"-1", "0", "0"}), V({"0", "1", "0"}),
                         V({"0", "-1", "0"}), V({"0", "0", "1"}), V({"0", "0", "-1"})};
    const Json c = cmd_ball_info(cube_problem).json;
    CHECK(c["face_counts"] == Json::array({8, 12, 6}));
    CHECK(c["dual"]["face_counts"] == Json::array({6, 12, 8}));
    Problem slab = p;
    slab.ball = {V({"1", "0"}), V({"-1", "0"})};
    CHECK(exit_code("ball-info", slab) == 2);
}

TEST_CASE("type and exit codes") {
    const Problem p = parse_problem_text(kCircle);
    const Json j = cmd_type(p).json;
    REQUIRE(j["points"].size() == 2);
    CHECK(j["points"][0]["type"].size() == 2);
    CHECK(j["points"][0]["type"][0]["dim"] == 1);
    CHECK(j["points"][0]["stratum_index"] == 0);
    CHECK(j["points"][1]["stratum_index"] == 1);
    CommandOptions off;
    off.points = {V({"0", "0"})};
    CHECK(exit_code("type", p, off) == 3);
    Problem cone = p;
    cone.polynomial = P(2, {{"1", {2, 0}}, {"-1", {0, 2}}});
    CHECK(exit_code("type", cone, off) == 4);
    CHECK(exit_code("no-such-command", p) == 1);
}

TEST_CASE("voronoi-cone") {
    const Problem p = parse_problem_text(kCircle);
    CommandOptions o;
    o.points = {V({"3/5", "4/5"})};
    const Json j = cmd_voronoi_cone(p, o).json;
    const Json& cones = j["points"][0]["cones"];
    REQUIRE(cones.size() == 2);
    std::vector<Json> gens = {cones[0]["generators"][0], cones[1]["generators"][0]};
    std::sort(gens.begin(), gens.end());
    CHECK(gens[0] == Json::array({"-1", "-1"}));
    CHECK(gens[1] == Json::array({"1", "1"}));
}

TEST_CASE("stratify output and deterministic SVG") {
    const Problem p = parse_problem_text(kCircle);
    CommandOptions o;
    o.want_svg = true;
    o.seed = 5;
    const CommandResult a = cmd_stratify(p, o);
    const CommandResult b = cmd_stratify(p, o);
    CHECK(a.json["index0_clusters"] == 4);
    CHECK(a.json["histogram"]["0"].get<int>() >= 4);
    CHECK(a.json["points"][0]["approximate"] == true);
    CHECK_FALSE(a.svg.empty());
    CHECK(a.svg == b.svg);
    CHECK(a.svg.find("#1f4fd1") != std::string::npos);
    CHECK(a.svg.find("#e6550d") != std::string::npos);
    CHECK(a.svg.rfind("<?xml", 0) == 0);
}

TEST_CASE("distance and medial commands") {
    const Problem p = parse_problem_text(kParabola);
    const Json d = cmd_distance(p).json;
    CHECK(d["points"][0]["value"].get<double>() == doctest::Approx(0.6180339887).epsilon(1e-8));
    CHECK(d["points"][0]["minimizers"].size() == 2);
    CHECK(d["points"][0]["approximate"] == true);

    CommandOptions o;
    o.want_svg = true;
    const CommandResult m = cmd_medial(p, o);
    bool axis = false;
    for (const auto& c : m.json["components"]) {
        if (c["polynomial"] == "u1^2" && c["support"]["status"] == "supported") {
            axis = true;
        }
    }
    CHECK(axis);
    CHECK(m.json["full_dimensional_candidate"] == false);
    CHECK(m.svg.find("#2ca02c") != std::string::npos);
    CHECK(m.svg == cmd_medial(p, o).svg);

    Problem line = p;
    line.polynomial = P(2, {{"1", {1, 0}}});
    CHECK(cmd_medial(line).json["full_dimensional_candidate"] == true);

    Problem far = p;
    far.box = box2(10, 11, -20, -19);
    CommandOptions q;
    q.points = {V({"0", "1"})};
    CHECK(exit_code("distance", far, q) == 5);
}

TEST_CASE("stratum colors") {
    CHECK(stratum_color(0) == "#1f4fd1");
    CHECK(stratum_color(1) == "#e6550d");
    CHECK(stratum_color(2) == "#7b3294");
}

}
