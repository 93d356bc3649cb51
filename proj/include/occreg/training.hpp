#pragma once

// Patient-specific supervised training of the occupancy network.

#include "occreg/geometry.hpp"
#include "occreg/mesh.hpp"
#include "occreg/vn_network.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace occreg::train {

using nn::Matrix;
using nn::NetworkParams;
using nn::Vector;

/// Inside/outside classification of points against a closed mesh by counting
/// signed crossings of a +z ray. Shared edges and vertices hit by the ray are
/// resolved by a fixed symbolic perturbation of the query, so every crossing is
/// counted exactly once.
class InsideTester {
public:
    /// Throws InvalidInput when the mesh has boundary edges.
    explicit InsideTester(const TriangleMesh& mesh);

    bool inside(const Point3& p) const;
    /// Signed crossing count along the ray: 1 inside, 0 outside for a closed,
    /// outward-oriented mesh.
    int winding(const Point3& p) const;

private:
    struct Tri {
        std::uint32_t v[3];
        int orientation;  // sign of the projected (xy) area
    };
    const TriangleMesh* mesh_ = nullptr;
    std::vector<Tri> tris_;
    Point3 lo_, hi_;
    int nx_ = 1, ny_ = 1;
    std::vector<std::vector<std::uint32_t>> cells_;
};

struct QuerySample {
    std::vector<Point3> points;
    std::vector<std::uint8_t> labels;  // 1 inside, 0 outside
};

/// `count` points uniform in the mesh bounding box padded by `padding` (fraction
/// of each extent on every side), labeled by InsideTester.
QuerySample make_query_set(const TriangleMesh& mesh, std::size_t count, std::uint64_t seed, double padding = 0.1);

void save_query_sample(const std::filesystem::path& path, const QuerySample& q);
QuerySample load_query_sample(const std::filesystem::path& path);

/// Mean binary cross-entropy with probabilities clamped to [1e-12, 1 - 1e-12].
double bce_loss(std::span<const double> preds, std::span<const double> labels);

/// One supervised example in the normalized network frame.
struct Example {
    std::vector<Point3> partial;
    Eigen::Matrix3Xd queries;
    Vector labels;
};

/// Mean BCE over every query of the batch and its exact gradient with respect
/// to every tensor of `params` (written to `grads`, resized as needed).
double loss_and_gradient(std::span<const Example> batch, const NetworkParams& params, std::vector<Matrix>& grads);

/// Mean BCE over the batch without gradients.
double batch_loss(std::span<const Example> batch, const NetworkParams& params);

struct AdamState {
    std::vector<Matrix> m, v;
    std::uint64_t step = 0;
    double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
};

AdamState make_adam(const NetworkParams& params);
void adam_step(NetworkParams& params, const std::vector<Matrix>& grads, AdamState& state, double lr);

struct Split {
    std::vector<std::size_t> train, val, test;
};

/// Deterministic shuffled 8:1:1 split (validation and test get floor(n/10) each).
Split split_dataset(std::size_t count, std::uint64_t seed);

// --- Target generation -------------------------------------------------------------

struct TargetConfig {
    std::size_t downsample = 1000;  // D
    std::size_t nearest = 300;      // N
    Point3 anterior_axis = Point3::UnitZ();
    bool full_sphere_viewpoints = false;
};

/// One deformed model with its precomputed anterior surface and labeled queries (mm).
struct TrainingModel {
    TriangleMesh mesh;
    std::vector<Point3> anterior;
    QuerySample queries;
    ViewSphere views;
};

TrainingModel make_training_model(TriangleMesh mesh, QuerySample queries, const Point3& anterior_axis);

/// Anterior surface -> D farthest points -> N nearest to `viewpoint`.
std::vector<Point3> make_partial_target(const TrainingModel& model, const TargetConfig& cfg, const Point3& viewpoint,
                                        std::uint64_t seed);

/// Maps a millimeter partial cloud and query set into the normalized frame
/// (subtract the partial centroid, divide by `scale`) and rotates both by `r`.
/// `query_limit` (0 = all) keeps a seeded random subset of queries.
Example make_example(std::span<const Point3> partial_mm, const QuerySample& queries_mm, const Rotation& r,
                     double scale, std::size_t query_limit = 0, std::uint64_t seed = 0);

// --- Training loop -----------------------------------------------------------------

struct TrainConfig {
    std::size_t batch_size = 8;
    double learning_rate = 1e-4;
    int max_epochs = 300;
    int patience = 50;
    RotationMode rotation_mode = RotationMode::so3;
    double rotation_lo = -std::numbers::pi / 2;
    double rotation_hi = std::numbers::pi / 2;
    TargetConfig target;
    double threshold = 0.4;
    bool select_threshold = false;
    std::size_t queries_per_example = 0;  // 0 = all
    std::uint64_t seed = 1;
};

struct EpochRecord {
    int epoch = 0;
    double train_loss = 0.0;
    double val_loss = 0.0;
    double val_iou = 0.0;
};

/// Everything needed to continue a run exactly where it stopped.
struct Checkpoint {
    NetworkParams params;
    AdamState adam;
    NetworkParams best;
    double best_val = 0.0;
    int best_epoch = -1;
    int epochs_done = 0;
    int since_best = 0;
    std::vector<EpochRecord> log;
};

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ck);
Checkpoint load_checkpoint(const std::filesystem::path& path);

struct TrainResult {
    NetworkParams best;
    int best_epoch = -1;
    std::vector<EpochRecord> log;
    bool stopped_early = false;
};

/// Raised when the training loss becomes NaN or infinite.
class Diverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Validation examples: fixed viewpoint (cycling the five test views) and a
/// seeded rotation per model.
std::vector<Example> make_validation_set(std::span<const TrainingModel> models, const TrainConfig& cfg, double scale);

/// Fraction-based IoU of thresholded predictions against labels over a set of examples.
double examples_iou(std::span<const Example> examples, const NetworkParams& params, double threshold);

using EpochCallback = std::function<void(const EpochRecord&)>;

/// Trains `init` on `train_models`, selecting the best epoch on validation BCE.
/// When `resume` is given the run continues from it; `stop_after` (if > 0) ends
/// the run after that many total epochs and stores the state in `checkpoint_out`.
TrainResult train(std::span<const TrainingModel> train_models, std::span<const TrainingModel> val_models,
                  NetworkParams init, const TrainConfig& cfg, const EpochCallback& on_epoch = {},
                  std::optional<Checkpoint> resume = std::nullopt, int stop_after = 0,
                  Checkpoint* checkpoint_out = nullptr);

}  // namespace occreg::train
