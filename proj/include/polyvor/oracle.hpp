#pragma once

#include "polyvor/medial.hpp"
#include "polyvor/polytope.hpp"
#include "polyvor/sampling.hpp"
#include "polyvor/variety.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyvor {

/// Every floating-point tolerance of the oracle, with its default.
struct OracleParams {
    std::size_t sample_count = 4000;  // variety samples drawn once per oracle
    std::uint64_t seed = 0;
    std::size_t refine_seeds = 32;   // best samples refined locally
    double seed_separation = 0.01;   // between refined seeds, relative to box diagonal
    int max_iterations = 200;        // pattern-search iterations per seed
    double initial_step = 0.02;      // relative to box diagonal
    double step_tolerance = 1e-12;   // stop when the step falls below this
    double merge_tolerance = 1e-5;   // minimizers closer than this are one cluster
    double value_band = 1e-6;        // clusters within this of the minimum are kept
    double face_tolerance = 1e-6;    // relative slack for active functionals
    double on_variety_tolerance = 1e-8;  // |f| / |grad f| below this counts as on X
    int zero_set_resolution = 64;    // grid for sampling component zero sets
    std::size_t zero_set_points = 30;
};

class OracleFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DistanceResult {
    double value = 0.0;
    std::vector<Point> minimizers;
    std::vector<double> minimizer_values;  // h(u - x) recomputed per minimizer
    std::vector<double> residuals;         // |f(x)| / |grad f(x)|
    std::vector<int> optimizing_faces;     // -1 when the value is zero
};

/// Samples X once and answers distance queries against that sample.
class DistanceOracle {
public:
    /// Throws OracleFailure when no point of X is found in the box.
    DistanceOracle(const Hypersurface& x, const UnitBall& ball, Box box, OracleParams params = {});

    DistanceResult distance(std::span<const double> u) const;
    /// Throws std::invalid_argument when u lies on X.
    bool is_medial_candidate(std::span<const double> u) const;

    const std::vector<Point>& samples() const { return samples_; }
    const OracleParams& params() const { return params_; }
    const Box& box() const { return box_; }

private:
    struct Local {
        Point x;
        double value;
    };
    Local refine(std::span<const double> u, Point x) const;
    std::optional<Local> polish(std::span<const double> u, const Local& start) const;
    double objective(std::span<const double> u, std::span<const double> x) const;

    const Hypersurface* x_;
    const UnitBall* ball_;
    Box box_;
    OracleParams params_;
    std::vector<Point> samples_;
};

DistanceResult distance_to_variety(const Hypersurface& x, const UnitBall& ball,
                                   std::span<const double> u, const Box& box,
                                   const OracleParams& params = {});

/// Smallest face of B whose functionals all satisfy |l(x - u) - lambda| <=
/// tolerance * lambda. Throws std::invalid_argument when x is not on the
/// sphere of radius lambda about u.
const Face& optimizing_face_of(const UnitBall& ball, std::span<const double> u,
                               std::span<const double> x, double lambda,
                               double tolerance = 1e-6);

bool is_medial_candidate(const Hypersurface& x, const UnitBall& ball, std::span<const double> u,
                         const Box& box, const OracleParams& params = {});

enum class SupportStatus { Supported, Unsupported, NoRealPoints };

std::string to_string(SupportStatus s);

struct ComponentSupport {
    std::size_t component = 0;  // index into the input list
    SupportStatus status = SupportStatus::Unsupported;
    std::size_t sampled = 0;
    std::size_t medial = 0;   // sampled points with >= 2 minimizer clusters
    std::size_t matched = 0;  // medial points whose optimizing faces fit the pair
    std::vector<Point> witnesses;  // matched points
};

struct PruneResult {
    std::vector<ComponentSupport> details;
    std::vector<std::size_t> supported;
    std::vector<std::size_t> unsupported;
    std::vector<std::size_t> no_real_points;
};

/// 2-D only: samples each component's zero set and asks the oracle whether
/// those points are medial with optimizing faces equal to the face pair.
PruneResult prune_components(const std::vector<EquidistantComponent>& components,
                             const DistanceOracle& oracle);

}  // namespace polyvor
