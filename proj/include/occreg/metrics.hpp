#pragma once

// Completion and registration quality measures and the rank-sum test.

#include "occreg/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace occreg::metrics {

/// Symmetric mean nearest-neighbor distance, mm. `squared` averages squared
/// distances instead. Throws InvalidInput on an empty cloud.
double chamfer_l2(std::span<const Point3> pred, std::span<const Point3> gt, bool squared = false);

struct FScore {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
};

/// Precision: fraction of `pred` within `d` of `gt`; recall the converse.
/// F is their harmonic mean, 0 when both are 0.
FScore f_score_parts(std::span<const Point3> pred, std::span<const Point3> gt, double d = 1.0);
double f_score(std::span<const Point3> pred, std::span<const Point3> gt, double d = 1.0);

/// |gt and pred| / |gt or pred| over binary masks; 1 when both are empty.
double iou(std::span<const std::uint8_t> gt, std::span<const std::uint8_t> pred);

struct Fiducial {
    int id = 0;
    Point3 position = Point3::Zero();
};

using FiducialSet = std::vector<Fiducial>;

/// Throws InvalidInput on duplicate ids.
void validate_fiducials(const FiducialSet& set);

/// Mean over shared ids of |tgt_i - T(src_i)|. Throws InvalidInput unless both
/// sets carry the same ids.
double tre(const FiducialSet& tgt, const FiducialSet& src, const RigidTransform& t);

enum class WilcoxonMethod { automatic, exact, normal };

struct WilcoxonResult {
    double statistic = 0.0;  // rank sum of the first sample (average ranks for ties)
    double p_value = 1.0;    // two-sided
    bool significant = false;
    bool exact = false;
};

/// Two-sided Wilcoxon rank-sum test. `automatic` enumerates the exact
/// permutation distribution (conditional on ties) when n + m <= 20 and uses the
/// tie-corrected normal approximation with continuity correction otherwise.
/// Throws InvalidInput when either sample has fewer than 3 values or a value is
/// not finite.
WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha = 0.05,
                                 WilcoxonMethod method = WilcoxonMethod::automatic);

/// Average ranks (1-based) of the pooled values.
std::vector<double> average_ranks(std::span<const double> values);

struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation (n - 1); 0 for a single value
};

Summary summarize(std::span<const double> values);

}  // namespace occreg::metrics
