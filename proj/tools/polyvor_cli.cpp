// polyvor: polyhedral-norm Voronoi geometry of hypersurfaces.
//
// Exit codes: 0 success, 1 usage or input error, 2 ball error, 3 point not
// on the variety, 4 singular point, 5 oracle failure.

#include "polyvor/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw polyvor::ProblemError("cannot write " + path);
    }
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voronoi geometry of real hypersurfaces under polyhedral norms"};
    app.require_subcommand(1);

    std::string input, output, svg;
    std::uint64_t seed = 0;
    std::vector<std::string> points;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"ball-info", "vertices, faces, dual ball and fan cones of the unit ball"},
        {"type", "Type(v), stratum index and Voronoi cone of points on the variety"},
        {"voronoi-cone", "Voronoi cones at points on the variety"},
        {"stratify", "sample the variety and label points by stratum"},
        {"medial", "equidistant components, degree report and oracle pruning"},
        {"distance", "numerical distance from points to the variety"},
        {"render", "SVG of the planar scene"},
    };
    std::vector<CLI::Option*> seed_opts;
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--input,-i", input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--output,-o", output, "result file (JSON); stdout when omitted");
        sub->add_option("--svg", svg, "SVG output for planar instances");
        seed_opts.push_back(sub->add_option("--seed", seed, "random seed"));
        sub->add_option("--point,-p", points, "point as comma-separated rationals, e.g. 3/5,9/25");
    }
    CLI11_PARSE(app, argc, argv);

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const polyvor::Problem problem = polyvor::load_problem(input);
        polyvor::CommandOptions opts;
        for (auto* o : seed_opts) {
            if (o->count() > 0) {
                opts.seed = seed;
            }
        }
        for (const auto& p : points) {
            opts.points.push_back(polyvor::parse_point(p));
        }
        opts.want_svg = !svg.empty();
        if (name == "render" && svg.empty()) {
            throw polyvor::ProblemError("render needs --svg");
        }
        const polyvor::CommandResult r = polyvor::run_command(name, problem, opts);
        const std::string text = r.json.dump(2) + "\n";
        if (output.empty()) {
            std::cout << text;
        } else {
            write_file(output, text);
        }
        if (!svg.empty()) {
            if (r.svg.empty()) {
                std::cerr << "polyvor: no SVG for this instance (planar only)\n";
            } else {
                write_file(svg, r.svg);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "polyvor " << name << ": " << e.what() << "\n";
        return polyvor::exit_code_for(e);
    }
    return 0;
}
