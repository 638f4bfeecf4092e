#include "polyvor/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace polyvor {

namespace {

constexpr double kBallPanel = 220.0;
constexpr double kScenePanel = 600.0;
constexpr double kMargin = 10.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

struct Frame {
    double ox, oy, scale;
    double cx, cy;  // world point mapped to (ox, oy)

    std::string x(double wx) const { return num(ox + (wx - cx) * scale); }
    std::string y(double wy) const { return num(oy - (wy - cy) * scale); }
    std::string xy(double wx, double wy) const { return x(wx) + "," + y(wy); }
};

std::vector<std::vector<double>> hull_order(std::vector<std::vector<double>> pts) {
    double cx = 0, cy = 0;
    for (const auto& p : pts) {
        cx += p[0];
        cy += p[1];
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
    });
    return pts;
}

void polygon(std::ostringstream& out, const Frame& fr, const std::vector<RationalVector>& verts,
             const std::string& style) {
    std::vector<std::vector<double>> pts;
    for (const auto& v : verts) {
        pts.push_back(to_double(v));
    }
    out << "<polygon points=\"";
    bool first = true;
    for (const auto& p : hull_order(pts)) {
        out << (first ? "" : " ") << fr.xy(p[0], p[1]);
        first = false;
    }
    out << "\" " << style << "/>\n";
}

void contour(std::ostringstream& out, const Frame& fr, const MultiPoly& f, const Box& box,
             int grid, const std::string& style) {
    const NumericPoly nf(f);
    auto segs = marching_squares(nf, box, grid, grid);
    // Zero sets of even multiplicity do not change sign; they show up as
    // sign changes of a partial derivative along which f itself vanishes.
    double scale = 0.0;
    for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
            const Point p = {box.lo[0] + (box.hi[0] - box.lo[0]) * i / 8, box.lo[1] + (box.hi[1] - box.lo[1]) * j / 8};
            scale = std::max(scale, std::abs(nf.value(p)));
        }
    }
    for (std::size_t var = 0; var < 2 && f.degree() > 1; ++var) {
        for (const auto& s : marching_squares(NumericPoly(derivative(f, var)), box, grid, grid)) {
            const Point mid = {(s.a[0] + s.b[0]) / 2, (s.a[1] + s.b[1]) / 2};
            if (std::abs(nf.value(mid)) <= 1e-6 * scale) {
                segs.push_back(s);
            }
        }
    }
    if (segs.empty()) {
        return;
    }
    out << "<path d=\"";
    for (const auto& s : segs) {
        out << "M" << fr.xy(s.a[0], s.a[1]) << "L" << fr.xy(s.b[0], s.b[1]);
    }
    out << "\" " << style << "/>\n";
}

void ball_panel(std::ostringstream& out, const UnitBall& ball) {
    const UnitBall dual = dual_ball(ball);
    double extent = 0.0;
    for (const auto* b : {&ball, &dual}) {
        for (const auto& v : b->vertices()) {
            for (const auto& c : v) {
                extent = std::max(extent, std::abs(c.get_d()));
            }
        }
    }
    const double half = kBallPanel / 2.0;
    const Frame fr{kMargin + half, kMargin + half, (half - 12.0) / (1.2 * extent), 0.0, 0.0};
    out << "<g id=\"ball\">\n";
    out << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(kBallPanel) << "\" height=\"" << num(kBallPanel)
        << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    for (const auto& l : ball.functionals().functionals) {
        const auto d = to_double(l);
        const double len = std::hypot(d[0], d[1]);
        const double r = 1.2 * extent;
        out << "<line x1=\"" << fr.x(0) << "\" y1=\"" << fr.y(0) << "\" x2=\""
            << fr.x(-d[0] / len * r) << "\" y2=\"" << fr.y(-d[1] / len * r)
            << "\" stroke=\"#bbbbbb\" stroke-width=\"0.8\"/>\n";
    }
    polygon(out, fr, dual.vertices(),
            "fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"4,3\"");
    polygon(out, fr, ball.vertices(), "fill=\"#dde6f5\" fill-opacity=\"0.6\" stroke=\"#1a1a1a\" stroke-width=\"1.5\"");
    out << "</g>\n";
}

}  // namespace

std::string stratum_color(int index) {
    switch (index) {
        case 0:
            return "#1f4fd1";
        case 1:
            return "#e6550d";
        case 2:
            return "#7b3294";
        default:
            return "#000000";
    }
}

std::string render_svg(const Scene& scene) {
    const bool has_view = scene.view.dimension() == 2;
    const double width = 3 * kMargin + kBallPanel + (has_view ? kScenePanel : 0.0);
    const double height = 2 * kMargin + (has_view ? kScenePanel : kBallPanel);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (scene.ball && scene.ball->dimension() == 2) {
        ball_panel(out, *scene.ball);
    }
    if (has_view) {
        const Box& b = scene.view;
        const double w = b.hi[0] - b.lo[0];
        const double h = b.hi[1] - b.lo[1];
        const double scale = kScenePanel / std::max(w, h);
        const double left = 2 * kMargin + kBallPanel;
        const Frame fr{left + kScenePanel / 2.0, kMargin + kScenePanel / 2.0, scale,
                       (b.lo[0] + b.hi[0]) / 2.0, (b.lo[1] + b.hi[1]) / 2.0};
        out << "<defs><clipPath id=\"view\"><rect x=\"" << num(left) << "\" y=\""
            << num(kMargin) << "\" width=\"" << num(kScenePanel) << "\" height=\""
            << num(kScenePanel) << "\"/></clipPath></defs>\n";
        out << "<rect x=\"" << num(left) << "\" y=\"" << num(kMargin) << "\" width=\""
            << num(kScenePanel) << "\" height=\"" << num(kScenePanel)
            << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
        out << "<g id=\"scene\" clip-path=\"url(#view)\">\n";
        out << "<g id=\"components\">\n";
        for (const auto& c : scene.components) {
            if (c.poly.is_zero() || c.poly.is_constant()) {
                continue;
            }
            std::string style = "fill=\"none\" stroke-width=\"1.2\" ";
            if (c.status == "supported") {
                style += "stroke=\"#2ca02c\"";
            } else if (c.status == "unsupported") {
                style += "stroke=\"#999999\" stroke-dasharray=\"6,4\"";
            } else {
                style += "stroke=\"#17becf\"";
            }
            contour(out, fr, c.poly, b, scene.grid, style);
        }
        out << "</g>\n";
        if (scene.curve) {
            out << "<g id=\"curve\">\n";
            contour(out, fr, *scene.curve, b, scene.grid,
                    "fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"1.5\"");
            out << "</g>\n";
        }
        out << "<g id=\"cones\">\n";
        const double len = 0.15 * std::hypot(w, h);
        for (const auto& c : scene.cones) {
            std::vector<Point> ends;
            for (const auto& g : c.generators) {
                const double gl = std::hypot(g[0], g[1]);
                ends.push_back({c.apex[0] + g[0] / gl * len, c.apex[1] + g[1] / gl * len});
            }
            if (ends.size() == 2) {
                out << "<polygon points=\"" << fr.xy(c.apex[0], c.apex[1]) << " "
                    << fr.xy(ends[0][0], ends[0][1]) << " " << fr.xy(ends[1][0], ends[1][1])
                    << "\" fill=\"#fdd49e\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
            }
            for (const auto& e : ends) {
                out << "<line x1=\"" << fr.x(c.apex[0]) << "\" y1=\"" << fr.y(c.apex[1])
                    << "\" x2=\"" << fr.x(e[0]) << "\" y2=\"" << fr.y(e[1])
                    << "\" stroke=\"#d94801\" stroke-width=\"1\"/>\n";
            }
        }
        out << "</g>\n";
        out << "<g id=\"strata\">\n";
        for (const auto& [p, index] : scene.strata) {
            out << "<circle cx=\"" << fr.x(p[0]) << "\" cy=\"" << fr.y(p[1]) << "\" r=\""
                << (index == 0 ? "3.000" : "1.600") << "\" fill=\"" << stratum_color(index)
                << "\"/>\n";
        }
        out << "</g>\n</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace polyvor
