#pragma once

#include "polyvor/polynomial.hpp"
#include "polyvor/polytope.hpp"
#include "polyvor/sampling.hpp"

#include <string>
#include <vector>

namespace polyvor {

/// A planar scene. The left panel shows the ball, its dual (dashed) and the
/// fan rays; the right panel shows everything else inside `view`. Layers
/// are drawn in a fixed order: components, curve, cones, strata points.
struct Scene {
    struct Wedge {
        Point apex;
        std::vector<Point> generators;
    };
    struct Component {
        MultiPoly poly;
        std::string status;  // "supported", "unsupported" or anything else
    };

    Box view;
    const UnitBall* ball = nullptr;
    const MultiPoly* curve = nullptr;
    std::vector<std::pair<Point, int>> strata;  // point, stratum index (-1 singular)
    std::vector<Wedge> cones;
    std::vector<Component> components;
    int grid = 240;  // marching-squares resolution per axis
};

std::string stratum_color(int index);

/// Byte-deterministic SVG 1.1 text.
std::string render_svg(const Scene& scene);

}  // namespace polyvor
