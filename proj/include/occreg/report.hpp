#pragma once

// Aggregation of completion and registration records into tables and plots.

#include "occreg/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace occreg::pipeline {

/// TRE of every case of one registration arm, in record order.
struct TreArm {
    std::string arm;  // "raw" or "completed"
    std::size_t downsample = 0;
    std::vector<double> tre;  // mm
    std::size_t budget_exhausted = 0;
    std::size_t empty_surface = 0;
};

struct Evaluation {
    std::vector<CompletionEval> completion;
    std::size_t nearest = 0;  // N of the registration record; visibility is N / D
    std::vector<TreArm> registration;
};

/// Groups cases by (arm, downsample) in order of first appearance. Throws
/// DataError when arms disagree on their (viewpoint, rotation) pairs.
std::vector<TreArm> tre_arms(const Dataset& ds, const std::vector<RegistrationCase>& cases);

/// Runs every completion evaluation and scores the registration record.
Evaluation evaluate(const EvaluateConfig& cfg);

std::string to_json(const Evaluation& e);
Evaluation evaluation_from_json(const std::string& text);

/// Two-sided rank-sum p-value of `arm` against the first completed arm, when both exist.
std::optional<metrics::WilcoxonResult> compare_to_completed(const Evaluation& e, const TreArm& arm);

/// Markdown report: completion table and TRE table with mean +- std and p-values.
std::string render_report(const Evaluation& e);
/// SVG bar charts with one-std error bars.
std::string completion_plot_svg(const Evaluation& e);
std::string tre_plot_svg(const Evaluation& e);

/// Writes report.md, completion.svg and tre.svg into `dir`.
void write_report(const fs::path& dir, const Evaluation& e);

}  // namespace occreg::pipeline
