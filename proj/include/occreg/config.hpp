#pragma once

// JSON run configurations. Unknown keys and out-of-range values raise
// ConfigError; relative paths resolve against `base` (the config file's folder).

#include "occreg/experiment.hpp"

#include <string>
#include <vector>

namespace occreg::pipeline {

struct EvaluateConfig {
    fs::path output;                               // directory for evaluation.json, report and plots
    std::vector<CompletionEvalConfig> completion;  // one entry per trained model / protocol
    fs::path registration_records;                 // optional
    fs::path registration_dataset;                 // fiducials for the records
};

SimulateConfig simulate_config_from_json(const std::string& text, const fs::path& base = {});
TrainRunConfig train_config_from_json(const std::string& text, const fs::path& base = {});
CompletionEvalConfig completion_config_from_json(const std::string& text, const fs::path& base = {});
RegistrationExperimentConfig registration_config_from_json(const std::string& text, const fs::path& base = {});
EvaluateConfig evaluate_config_from_json(const std::string& text, const fs::path& base = {});
reg::RegistrationConfig registration_params_from_json(const std::string& text);
extract::ExtractConfig extract_config_from_json(const std::string& text);

/// Canonical JSON echo of a configuration with every default filled in.
std::string to_json(const SimulateConfig& cfg);
std::string to_json(const TrainRunConfig& cfg);
std::string to_json(const RegistrationExperimentConfig& cfg);

}  // namespace occreg::pipeline
