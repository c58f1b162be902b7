#pragma once

#include "esd/data.hpp"
#include "esd/model.hpp"
#include "esd/trainer.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace esd {

struct EvalReport {
    double target_accuracy = 0.0;
    std::vector<double> per_class_accuracy;   // length num_classes
    double mean_per_class = 0.0;
    double discriminator_accuracy = 0.0;
    double hard_agreement = 0.0;
};

/// Pure target-domain evaluation: classifier accuracy on labeled target
/// features, per-class breakdown, threshold-0.5 discriminator accuracy over
/// both domains, and the hard agreement fraction between the two prediction
/// routes. Requires target labels.
EvalReport evaluate(const ModelState& m, const DatasetSplit& split);

/// Key-value text serialization of a report.
std::string format_eval_report(const EvalReport& r);

struct AblationRow {
    std::string variant;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    std::vector<double> per_seed;
};

/// Trains every variant (full, no step 2, no step 3, neither) once per seed
/// and aggregates target accuracy. Variants run on independent model states
/// and may train in parallel; rows join in fixed variant order.
std::vector<AblationRow> ablate(const DatasetSplit& split, const TrainConfig& cfg,
                                std::span<const std::uint64_t> seeds);

/// Comma-separated rows: variant,mean_acc,std_acc,per-seed accuracies.
std::string format_ablation_csv(std::span<const AblationRow> rows);

/// Centers the data, finds the top-2 principal directions by power
/// iteration, and writes one "x,y,label" line per sample. Zero-variance data
/// degrades to an axis-aligned projection with a warning on stderr.
void project_2d(const Matrix& features, std::span<const int> labels,
                const std::filesystem::path& path);

} // namespace esd
