#pragma once

// Batch experiments: dataset simulation, training runs, completion evaluation and
// the registration comparison with and without completion.

#include "occreg/deform.hpp"
#include "occreg/goicp.hpp"
#include "occreg/mesh_extract.hpp"
#include "occreg/metrics.hpp"
#include "occreg/phantom.hpp"
#include "occreg/training.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace occreg::pipeline {

namespace fs = std::filesystem;

/// Invalid or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Missing or corrupt input data (CLI exit code 3).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Worker threads for case-parallel commands: OCCREG_WORKERS, default 1.
/// Results never depend on this value.
int worker_count();

/// Runs fn(i) for i in [0, n) on `workers` threads. The first exception is rethrown.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

// --- Dataset -------------------------------------------------------------------------

struct SimulateConfig {
    fs::path output;
    PhantomConfig phantom;
    deform::DeformConfig deform;
    std::size_t queries = 4096;  // labeled occupancy queries per model
    double query_padding = 0.1;
    std::uint64_t seed = 1;      // queries and split
};

/// Dataset directory layout:
///   config.json, manifest.json, split.json, phantom.ply, fiducials.json,
///   models/NNNNN.ply (deformed meshes), queries/NNNNN.bin.
struct Dataset {
    fs::path dir;
    SimulateConfig config;
    Phantom phantom;
    double scale = 1.0;  // canonical network scale, mm per unit
    double max_disp = 0.0;
    std::vector<deform::ManifestEntry> entries;
    train::Split split;
};

Dataset simulate(const SimulateConfig& cfg);
/// Throws DataError when files are missing, unreadable or inconsistent.
Dataset load_dataset(const fs::path& dir);

TriangleMesh load_model_mesh(const Dataset& ds, std::size_t id);
train::QuerySample load_model_queries(const Dataset& ds, std::size_t id);
std::vector<train::TrainingModel> load_training_models(const Dataset& ds, std::span<const std::size_t> ids);

/// Fiducials carried through a model's deformation field.
metrics::FiducialSet deformed_fiducials(const Dataset& ds, std::size_t id);

// --- Training ------------------------------------------------------------------------

struct TrainRunConfig {
    fs::path dataset;
    fs::path output;  // directory: model.params, train_record.json, checkpoint files
    nn::Architecture arch;
    train::TrainConfig train;
    RotationMode test_rotation = RotationMode::so3;  // recorded for evaluation; never used in training
    std::uint64_t init_seed = 7;
    int checkpoint_every = 0;  // epochs; 0 disables checkpoints
    bool resume = false;       // continue from output/checkpoint.bin when present
};

struct TrainRun {
    nn::NetworkParams params;  // best epoch
    train::TrainResult result;
};

TrainRun run_training(const TrainRunConfig& cfg, const train::EpochCallback& on_epoch = {});

// --- Completion evaluation -----------------------------------------------------------

struct CompletionEvalConfig {
    fs::path dataset;
    fs::path model;
    std::string label;
    RotationMode test_rotation = RotationMode::so3;
    double rotation_lo = -std::numbers::pi / 2;
    double rotation_hi = std::numbers::pi / 2;
    train::TargetConfig target;
    extract::ExtractConfig extract;
    bool surfaces = true;       // extract meshes for chamfer and f-score
    double fscore_threshold = 1.0;  // mm
    std::size_t max_models = 0;     // 0 = every test model
    std::uint64_t seed = 11;
};

struct CompletionCase {
    std::size_t model = 0;
    int viewpoint = 0;
    double iou = 0.0;
    double chamfer = 0.0;  // mm, NaN when surfaces are off or empty
    double fscore = 0.0;
    bool empty_surface = false;
};

struct CompletionEval {
    std::string label;
    std::string encoder;
    std::string train_rotation;
    std::string test_rotation;
    std::vector<CompletionCase> cases;
};

/// Every test model seen from the five fixed viewpoints under a seeded rotation.
CompletionEval evaluate_completion(const CompletionEvalConfig& cfg);

/// The canonical extraction cube for a dataset: wide enough to hold every model
/// around any partial-view centroid.
extract::ExtractConfig dataset_extract_config(int initial_res = 32, int final_res = 128, double threshold = 0.4);

// --- Registration experiment ---------------------------------------------------------

struct RegistrationExperimentConfig {
    fs::path dataset;
    fs::path model;  // required when the completion arm runs
    int viewpoints = 5;
    int rotations = 20;
    double rotation_lo = -std::numbers::pi / 2;
    double rotation_hi = std::numbers::pi / 2;
    double translation_mm = 20.0;  // magnitude of the random target offset
    std::vector<std::size_t> raw_downsample{1000, 750, 600};  // D per raw arm
    std::vector<std::size_t> completed_downsample{1000};
    std::size_t nearest = 300;            // N
    std::size_t source_points = 500;
    std::size_t completed_points = 500;
    reg::RegistrationConfig registration;
    extract::ExtractConfig extract = dataset_extract_config();
    std::uint64_t seed = 21;
};

struct RegistrationCase {
    std::string arm;     // "raw" or "completed"
    std::size_t downsample = 0;
    int viewpoint = 0;
    int rotation = 0;
    std::size_t model = 0;
    RigidTransform truth;     // model frame -> intra-operative frame
    RigidTransform estimate;  // source -> target
    double residual = 0.0;    // mm^2
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    std::size_t iterations = 0;
    bool budget_exhausted = false;
    bool empty_surface = false;  // completion produced no surface; estimate is identity
    double seconds = 0.0;        // not part of the record
};

std::vector<RegistrationCase> run_registration_experiment(const RegistrationExperimentConfig& cfg);

/// Target registration error of one case against the dataset fiducials.
double case_tre(const Dataset& ds, const RegistrationCase& c);

// --- Records -------------------------------------------------------------------------

std::string to_json(const CompletionEval& e);
CompletionEval completion_eval_from_json(const std::string& text);
std::string to_json(const std::vector<RegistrationCase>& cases);
std::vector<RegistrationCase> registration_cases_from_json(const std::string& text);

/// Full registration record: the cases plus the config echo and input hashes.
std::string registration_record(const RegistrationExperimentConfig& cfg, const std::vector<RegistrationCase>& cases);

/// 64-bit FNV-1a of `data` as 16 hex digits.
std::string content_hash(const std::string& data);

/// Whole-file helpers that map I/O failures to DataError.
std::string read_text(const fs::path& path);
void write_text(const fs::path& path, const std::string& text);

}  // namespace occreg::pipeline
