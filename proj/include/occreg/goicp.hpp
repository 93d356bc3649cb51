#pragma once

// Globally optimal rigid registration: nested branch-and-bound over rotations
// (angle-axis cube) and translations with ICP refinement of every improvement.

#include "occreg/geometry.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace occreg::reg {

struct IcpConfig {
    int max_iterations = 100;
    double tolerance = 1e-9;  // stop when the mean squared residual improves by less
};

struct IcpResult {
    RigidTransform transform;     // moving -> fixed
    double residual = 0.0;        // mean squared nearest-neighbor distance
    int iterations = 0;
    std::vector<double> history;  // residual before the first and after every update
};

/// Least-squares rigid fit with R a_i + t ~ b_i. Throws InvalidInput when all
/// points of `a` coincide.
RigidTransform fit_rigid(std::span<const Point3> a, std::span<const Point3> b);

IcpResult icp_refine(std::span<const Point3> moving, const NnIndex& fixed, const RigidTransform& init,
                     const IcpConfig& cfg = {});
IcpResult icp_refine(std::span<const Point3> moving, std::span<const Point3> fixed, const RigidTransform& init,
                     const IcpConfig& cfg = {});

struct RotationNode {
    Point3 center = Point3::Zero();  // angle-axis vector
    double half = 0.0;               // half side, radians
};

struct TranslationNode {
    Point3 center = Point3::Zero();
    double half = 0.0;
};

struct Bounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Rotation uncertainty radius of a point at distance `norm` from the origin for a
/// rotation cube of half side `half`.
double rotation_uncertainty(double half, double norm);
double translation_uncertainty(double half);

/// upper = sum_i e_i^2 at the node centers; lower = sum_i max(e_i - g_r,i - g_t, 0)^2,
/// with e_i the distance from the transformed moving point to its nearest neighbor.
Bounds node_bounds(const RotationNode& r, const TranslationNode& t, std::span<const Point3> moving,
                   const NnIndex& fixed);

/// Nearest-neighbor distances sampled at cell centers of a regular grid. Lookups
/// return a lower bound on the exact distance (the sample minus half a cell diagonal).
class DistanceGrid {
public:
    DistanceGrid() = default;
    DistanceGrid(const NnIndex& index, const Point3& lo, const Point3& hi, int resolution);

    /// Lower bound on the distance from `p` to the indexed set.
    double lower_bound(const Point3& p) const;
    /// Upper bound on the same distance.
    double upper_bound(const Point3& p) const;
    double slack() const { return slack_; }
    bool empty() const { return values_.empty(); }

private:
    double lookup(const Point3& p, double& outside) const;

    Point3 lo_, hi_;
    int n_ = 0;
    double cell_ = 0.0, slack_ = 0.0;
    std::vector<float> values_;
};

struct RegistrationConfig {
    double epsilon = 1e-4;                 // gap on the mean squared residual (normalized units)
    double translation_half_width = 0.5;   // normalized units
    std::size_t max_iterations = 200000;   // rotation nodes expanded
    int grid_resolution = 64;              // distance grid cells per axis; 0 disables it
    std::size_t search_points = 100;       // target subsample used by the search (0 = all)
    IcpConfig icp;
};

/// Source cloud in the normalized frame with its search structures; reusable across
/// registrations against the same source.
struct PreparedSource {
    Point3 center = Point3::Zero();  // mm
    double scale = 1.0;              // mm per normalized unit
    std::vector<Point3> points;      // normalized
    NnIndex index;
    std::shared_ptr<const DistanceGrid> grid;
};

/// Centers the source on its centroid and scales it into [-1, 1]^3.
PreparedSource prepare_source(std::span<const Point3> source_mm, const RegistrationConfig& cfg);

struct RegistrationResult {
    RigidTransform transform;      // source -> target, mm
    double residual = 0.0;         // mean squared target->source NN distance, mm^2
    double lower_bound = 0.0;      // final bounds on the normalized mean squared residual
    double upper_bound = 0.0;
    std::size_t iterations = 0;
    double seconds = 0.0;
    bool budget_exhausted = false;
};

/// Minimizes the target->source residual over rigid motions. Target points are
/// centered on their centroid and scaled with the source scale. The bounds are
/// certified on a farthest-point subsample of `search_points` target points; the
/// returned transform is then refined with ICP on every target point.
RegistrationResult goicp_register(const PreparedSource& source, std::span<const Point3> target_mm,
                                  const RegistrationConfig& cfg);
RegistrationResult goicp_register(std::span<const Point3> source_mm, std::span<const Point3> target_mm,
                                  const RegistrationConfig& cfg);

}  // namespace occreg::reg
