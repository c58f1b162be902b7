#pragma once

#include "esd/trainer.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace esd {

/// Fully resolved run description: the training hyperparameters plus data
/// inputs, synthesis parameters and output locations. Serializes to and from
/// flat "key = value" text; the manifest written next to every run's outputs
/// is exactly this serialization.
struct RunConfig {
    std::string command;                    // gen-synth | train | eval | ablate | project
    TrainConfig train;

    std::string source;                     // source feature file
    std::string target;                     // target feature file
    std::string checkpoint;                 // model checkpoint file
    std::string features;                   // feature file for project
    std::string out = ".";                  // output directory

    std::optional<std::size_t> classes;     // class count (synthesis or file override)
    std::size_t dim = 20;
    std::size_t samples_per_class = 200;
    double cov_scale = 1.0;
    double separation = 2.6;
    double shift = 2.0;

    std::vector<std::uint64_t> seeds;       // ablate; empty -> seed..seed+4
    std::string space = "raw";              // project input space: raw | di | ds
};

/// Applies one key/value pair. Unknown keys and malformed values raise
/// ConfigError.
void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Line-oriented "key = value" text; '#' starts a comment.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::filesystem::path& path);

/// Every key materialized with its resolved value, defaults included.
std::string manifest_text(const RunConfig& cfg);
void write_manifest(const RunConfig& cfg, const std::filesystem::path& out_dir);

std::vector<std::uint64_t> resolve_ablate_seeds(const RunConfig& cfg);

} // namespace esd
