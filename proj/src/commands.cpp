#include "polyvor/commands.hpp"

#include "polyvor/medial.hpp"
#include "polyvor/oracle.hpp"
#include "polyvor/svg.hpp"

#include <algorithm>

namespace polyvor {

namespace {

struct Instance {
    UnitBall ball;
    Hypersurface x;
};

UnitBall ball_of(const Problem& p) {
    return build_ball(FunctionalSet::from(p.ball));
}

Instance instance_of(const Problem& p) {
    UnitBall ball = ball_of(p);
    if (p.polynomial.arity() != ball.dimension()) {
        throw ProblemError("polynomial and ball have different dimensions");
    }
    return {std::move(ball), Hypersurface::from(p.polynomial)};
}

const std::vector<RationalVector>& points_of(const Problem& p, const CommandOptions& o) {
    const auto& pts = o.points.empty() ? p.points : o.points;
    if (pts.empty()) {
        throw ProblemError("this command needs at least one point (--point or \"points\")");
    }
    for (const auto& q : pts) {
        if (q.size() != p.dimension()) {
            throw ProblemError("point has the wrong dimension");
        }
    }
    return pts;
}

const Box& box_of(const Problem& p) {
    if (!p.box) {
        throw ProblemError("this command needs a \"box\"");
    }
    return *p.box;
}

Json vec(std::span<const Rational> v) { return to_json(v); }

Json vecs(const std::vector<RationalVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) {
        a.push_back(vec(v));
    }
    return a;
}

std::vector<std::string> u_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("u" + std::to_string(i + 1));
    }
    return names;
}

Json face_json(const UnitBall& ball, const Face& f) {
    return {{"id", f.id},
            {"dim", f.dim},
            {"vertices", vecs(ball.face_vertices(f))},
            {"functionals", f.active_functional_ids},
            {"negation", f.negation_id}};
}

Json face_counts(const UnitBall& ball) {
    std::vector<int> counts(ball.dimension(), 0);
    for (const auto& f : ball.faces()) {
        ++counts.at(static_cast<std::size_t>(f.dim));
    }
    return counts;
}

OracleParams oracle_params_of(const Problem& p, const CommandOptions& o) {
    OracleParams op = oracle_params(p.params);
    if (o.seed) {
        op.seed = *o.seed;
    }
    return op;
}

StratifyParams stratify_params_of(const Problem& p, const CommandOptions& o) {
    StratifyParams sp = stratify_params(p.params);
    if (o.seed) {
        sp.seed = *o.seed;
    }
    return sp;
}

Scene base_scene(const Problem& p, const Instance& in) {
    Scene s;
    s.ball = &in.ball;
    if (p.box && in.ball.dimension() == 2) {
        s.view = *p.box;
        s.curve = &in.x.f;
    }
    return s;
}

std::vector<Scene::Wedge> wedges(const VoronoiCone& vc) {
    std::vector<Scene::Wedge> out;
    for (const auto& c : vc.cones) {
        Scene::Wedge w{to_double(c.apex), {}};
        for (const auto& g : c.generators) {
            w.generators.push_back(to_double(g));
        }
        out.push_back(std::move(w));
    }
    return out;
}

Json voronoi_json(const UnitBall& ball, const VoronoiCone& vc) {
    Json cones = Json::array();
    for (std::size_t k = 0; k < vc.cones.size(); ++k) {
        cones.push_back({{"face", vc.face_ids[k]},
                         {"face_vertices", vecs(ball.face_vertices(ball.face(vc.face_ids[k])))},
                         {"generators", vecs(vc.cones[k].generators)},
                         {"closed", !vc.cones[k].open}});
    }
    return {{"apex", vec(vc.apex)}, {"cones", cones}};
}

Json stratification_json(const UnitBall& ball, const Stratification& s) {
    Json hist = Json::object();
    for (const auto& [i, c] : s.histogram) {
        hist[std::to_string(i)] = c;
    }
    Json pts = Json::array();
    std::vector<Point> index0;
    for (const auto& c : s.points) {
        const int index = c.effective_index();
        const int face = c.singular ? -1 : (c.near_boundary ? c.advisory_face_id : c.label.face_id);
        pts.push_back({{"x", c.point},
                       {"approximate", true},
                       {"index", index},
                       {"face", face},
                       {"near_boundary", c.near_boundary}});
        if (index == 0) {
            index0.push_back(c.point);
        }
    }
    Json anomalies = Json::array();
    for (std::size_t k : s.closure_anomalies) {
        anomalies.push_back({{"x", s.points[k].point},
                             {"approximate", true},
                             {"index", s.points[k].effective_index()}});
    }
    (void)ball;
    return {{"count", s.points.size()},
            {"histogram", hist},
            {"radius", s.radius},
            {"index0_clusters", count_clusters(index0, s.radius)},
            {"closure_anomalies", anomalies},
            {"points", pts}};
}

Json tangent_json(const TangentPoint& t) {
    Json j = {{"facet", t.facet_id},
              {"point", vec(t.point)},
              {"exact", t.exact},
              {"level", to_json(t.level)},
              {"level_exact", t.level_exact},
              {"on_line", t.on_line}};
    return j;
}

Json component_json(const UnitBall& ball, const EquidistantComponent& c) {
    const auto names = u_names(ball.dimension());
    Json tps = Json::array();
    for (const auto& t : c.tangent_points) {
        tps.push_back(tangent_json(t));
    }
    return {{"kind", to_string(c.kind)},
            {"faces", {c.face_a, c.face_b}},
            {"face_vertices",
             {vecs(ball.face_vertices(ball.face(c.face_a))),
              vecs(ball.face_vertices(ball.face(c.face_b)))}},
            {"functionals", {c.functionals_a, c.functionals_b}},
            {"polynomial", c.poly.to_string(names)},
            {"terms", c.poly.is_zero() ? Json::array() : polynomial_to_json(c.poly)},
            {"degree", c.poly.is_zero() ? -1 : c.poly.degree()},
            {"degree_bound", c.degree_bound},
            {"raw_resultant_degree", c.raw_resultant.is_zero() ? -1 : c.raw_resultant.degree()},
            {"zero_resultant", c.zero_resultant_flag},
            {"exact", c.exact},
            {"degenerate", c.degenerate},
            {"empty_zero_set", c.empty_zero_set},
            {"tangent_points", tps}};
}

}  // namespace

CommandResult cmd_ball_info(const Problem& p, const CommandOptions& o) {
    const UnitBall ball = ball_of(p);
    const UnitBall dual = dual_ball(ball);
    Json faces = Json::array();
    for (const auto& f : ball.faces()) {
        Json j = face_json(ball, f);
        j["fan_cone"] = {{"generators", vecs(cone_generators(ball, f).generators)}};
        j["dual_face"] = dual_face(ball, dual, f).id;
        faces.push_back(std::move(j));
    }
    CommandResult r;
    r.json = {{"dimension", ball.dimension()},
              {"functionals", vecs(ball.functionals().functionals)},
              {"vertices", vecs(ball.vertices())},
              {"face_counts", face_counts(ball)},
              {"faces", faces},
              {"dual", {{"vertices", vecs(dual.vertices())}, {"face_counts", face_counts(dual)}}}};
    if (o.want_svg && ball.dimension() == 2) {
        Scene s;
        s.ball = &ball;
        r.svg = render_svg(s);
    }
    return r;
}

CommandResult cmd_type(const Problem& p, const CommandOptions& o) {
    const Instance in = instance_of(p);
    Json out = Json::array();
    Scene scene = base_scene(p, in);
    for (const auto& v : points_of(p, o)) {
        const TypeResult t = type_of(in.x, in.ball, v);
        const StratumLabel label = stratum_of(in.x, in.ball, v);
        const VoronoiCone vc = voronoi_cone(in.x, in.ball, v);
        Json faces = Json::array();
        for (int id : t.faces) {
            faces.push_back(face_json(in.ball, in.ball.face(id)));
        }
        out.push_back({{"point", vec(v)},
                       {"type", faces},
                       {"stratum_index", label.index},
                       {"face", label.face_id},
                       {"certificate", vec(label.certificate)},
                       {"voronoi_cone", voronoi_json(in.ball, vc)}});
        for (auto& w : wedges(vc)) {
            scene.cones.push_back(std::move(w));
        }
    }
    CommandResult r{{{"points", out}}, {}};
    if (o.want_svg && scene.view.dimension() == 2) {
        r.svg = render_svg(scene);
    }
    return r;
}

CommandResult cmd_voronoi_cone(const Problem& p, const CommandOptions& o) {
    const Instance in = instance_of(p);
    Json out = Json::array();
    Scene scene = base_scene(p, in);
    for (const auto& v : points_of(p, o)) {
        const VoronoiCone vc = voronoi_cone(in.x, in.ball, v);
        Json j = voronoi_json(in.ball, vc);
        j["point"] = vec(v);
        out.push_back(std::move(j));
        for (auto& w : wedges(vc)) {
            scene.cones.push_back(std::move(w));
        }
    }
    CommandResult r{{{"points", out}}, {}};
    if (o.want_svg && scene.view.dimension() == 2) {
        r.svg = render_svg(scene);
    }
    return r;
}

CommandResult cmd_stratify(const Problem& p, const CommandOptions& o) {
    const Instance in = instance_of(p);
    const Stratification s =
        sample_and_classify(in.x, in.ball, box_of(p), stratify_params_of(p, o));
    CommandResult r;
    r.json = stratification_json(in.ball, s);
    Json exact = Json::array();
    for (const auto& v : p.points) {
        const StratumLabel label = stratum_of(in.x, in.ball, v);
        exact.push_back({{"point", vec(v)}, {"index", label.index}, {"face", label.face_id}});
    }
    r.json["exact"] = exact;
    if (o.want_svg && in.ball.dimension() == 2) {
        Scene scene = base_scene(p, in);
        for (const auto& c : s.points) {
            scene.strata.emplace_back(c.point, c.effective_index());
        }
        r.svg = render_svg(scene);
    }
    return r;
}

namespace {

struct MedialRun {
    EquidistantLocus locus;
    std::vector<std::string> status;
    Json json;
};

MedialRun medial_run(const Problem& p, const CommandOptions& o, const Instance& in) {
    const Box& box = box_of(p);
    EquidistantLocus locus = equidistant_locus(in.x, in.ball, box);
    const DegreeReport report = degree_report(locus);

    Json comps = Json::array();
    for (const auto& c : locus.components) {
        comps.push_back(component_json(in.ball, c));
    }
    Json full = Json::array();
    for (const auto& c : locus.full_dimensional) {
        full.push_back(component_json(in.ball, c));
    }
    Json oos = Json::array();
    for (const auto& q : locus.out_of_scope) {
        oos.push_back({{"faces", {q.face_a, q.face_b}}, {"reason", q.reason}});
    }
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"faces", {e.face_a, e.face_b}},
                           {"kind", to_string(e.kind)},
                           {"degree", e.degree},
                           {"bound", e.bound},
                           {"ok", e.ok}});
    }
    Json families = Json::array();
    for (const auto& f : report.families) {
        families.push_back(
            {{"faces", {f.face_a, f.face_b}}, {"count", f.count}, {"bound", f.bound}});
    }
    MedialRun r;
    r.json = {{"components", comps},
              {"full_dimensional", full},
              {"full_dimensional_candidate", !locus.full_dimensional.empty()},
              {"out_of_scope", oos},
              {"degree_report", {{"entries", entries}, {"families", families}, {"all_ok", report.all_ok}}}};

    std::vector<std::string>& status = r.status;
    status.assign(locus.components.size(), "unpruned");
    if (in.ball.dimension() == 2) {
        DistanceOracle oracle(in.x, in.ball, box, oracle_params_of(p, o));
        const PruneResult pr = prune_components(locus.components, oracle);
        for (const auto& d : pr.details) {
            status[d.component] = to_string(d.status);
            Json w = Json::array();
            for (const auto& pt : d.witnesses) {
                w.push_back(pt);
            }
            r.json["components"][d.component]["support"] = {{"status", to_string(d.status)},
                                                            {"sampled", d.sampled},
                                                            {"medial", d.medial},
                                                            {"matched", d.matched},
                                                            {"witnesses", w},
                                                            {"approximate", true}};
        }
        r.json["pruning"] = {{"supported", pr.supported},
                             {"unsupported", pr.unsupported},
                             {"no_real_points", pr.no_real_points}};
    } else {
        r.json["pruning"] = nullptr;
    }
    r.locus = std::move(locus);
    return r;
}

void add_components(Scene& scene, const MedialRun& m) {
    for (std::size_t k = 0; k < m.locus.components.size(); ++k) {
        scene.components.push_back({m.locus.components[k].poly, m.status[k]});
    }
}

}  // namespace

CommandResult cmd_medial(const Problem& p, const CommandOptions& o) {
    const Instance in = instance_of(p);
    MedialRun m = medial_run(p, o, in);
    CommandResult r{std::move(m.json), {}};
    if (o.want_svg && in.ball.dimension() == 2) {
        Scene scene = base_scene(p, in);
        add_components(scene, m);
        r.svg = render_svg(scene);
    }
    return r;
}

CommandResult cmd_distance(const Problem& p, const CommandOptions& o) {
    const Instance in = instance_of(p);
    const DistanceOracle oracle(in.x, in.ball, box_of(p), oracle_params_of(p, o));
    Json out = Json::array();
    for (const auto& v : points_of(p, o)) {
        const auto u = to_double(v);
        const DistanceResult d = oracle.distance(u);
        Json mins = Json::array();
        for (std::size_t k = 0; k < d.minimizers.size(); ++k) {
            Json m = {{"x", d.minimizers[k]},
                      {"value", d.minimizer_values[k]},
                      {"residual", d.residuals[k]},
                      {"optimizing_face", d.optimizing_faces[k]}};
            if (d.optimizing_faces[k] >= 0) {
                m["face_vertices"] =
                    vecs(in.ball.face_vertices(in.ball.face(d.optimizing_faces[k])));
            }
            mins.push_back(std::move(m));
        }
        out.push_back({{"point", vec(v)},
                       {"value", d.value},
                       {"approximate", true},
                       {"minimizers", mins},
                       {"medial", d.minimizers.size() >= 2}});
    }
    return {{{"points", out}}, {}};
}

CommandResult cmd_render(const Problem& p, const CommandOptions& o) {
    const Instance in = instance_of(p);
    if (in.ball.dimension() != 2) {
        throw ProblemError("render needs a planar instance");
    }
    const Box& box = box_of(p);
    Scene scene = base_scene(p, in);
    Json layers = Json::array({"ball", "curve"});

    const Stratification s = sample_and_classify(in.x, in.ball, box, stratify_params_of(p, o));
    for (const auto& c : s.points) {
        scene.strata.emplace_back(c.point, c.effective_index());
    }
    layers.push_back("strata");
    for (const auto& v : p.points) {
        for (auto& w : wedges(voronoi_cone(in.x, in.ball, v))) {
            scene.cones.push_back(std::move(w));
        }
    }
    if (!p.points.empty()) {
        layers.push_back("cones");
    }
    const MedialRun medial = medial_run(p, o, in);
    add_components(scene, medial);
    layers.push_back("components");
    CommandResult r;
    r.json = {{"layers", layers},
              {"strata_points", s.points.size()},
              {"components", medial.locus.components.size()}};
    r.svg = render_svg(scene);
    return r;
}

CommandResult run_command(const std::string& name, const Problem& p, const CommandOptions& o) {
    if (name == "ball-info") return cmd_ball_info(p, o);
    if (name == "type") return cmd_type(p, o);
    if (name == "voronoi-cone") return cmd_voronoi_cone(p, o);
    if (name == "stratify") return cmd_stratify(p, o);
    if (name == "medial") return cmd_medial(p, o);
    if (name == "distance") return cmd_distance(p, o);
    if (name == "render") return cmd_render(p, o);
    throw ProblemError("unknown command '" + name + "'");
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const BallError*>(&e)) return 2;
    if (dynamic_cast<const OffVarietyError*>(&e)) return 3;
    if (dynamic_cast<const SingularPointError*>(&e)) return 4;
    if (dynamic_cast<const OracleFailure*>(&e) || dynamic_cast<const NoVarietyPointsError*>(&e)) {
        return 5;
    }
    return 1;
}

}  // namespace polyvor
