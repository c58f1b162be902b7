#pragma once

#include "esd/data.hpp"
#include "esd/losses.hpp"
#include "esd/model.hpp"
#include "esd/tape.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

namespace esd {

enum class AblationMode { full, no_step2, no_step3, no_step2_no_step3 };

AblationMode ablation_from_string(const std::string& s);
std::string to_string(AblationMode m);

struct TrainConfig {
    double alpha = 0.3;
    double beta = 0.1;
    double lr = 0.001;
    std::size_t batch_size = 32;
    std::size_t iterations = 100;
    double c1 = 1e-4;   // 0.01^2
    double c2 = 9e-4;   // 0.03^2
    std::uint64_t seed = 0;
    AblationMode ablation = AblationMode::full;
    std::size_t hidden_width = 512;
};

/// Which loss terms enter the combined objective. Exposed for gradient
/// routing diagnostics; normal training derives it from the ablation mode.
struct TermMask {
    bool di = true, ds = true;      // step 1
    bool s = true, o = true, a = true;  // step 2
    bool r = true, t = true;        // step 3

    static TermMask for_mode(AblationMode mode);
};

/// The combined objective as tape variables, with the per-term values
/// extracted. norm_sites lists the minmax-normalize nodes in creation order
/// so their per-batch bounds can be captured and replayed.
struct ObjectiveVars {
    Tape::Var total;
    Tape::Var l_di, l_ds, l_s, l_o, l_a, l_r, l_t;
    std::vector<Tape::Var> norm_sites;
    LossReport values;
};

/// Builds the three-step objective on one tape:
///  step 1: classification of source f_di and domain discrimination of f_ds;
///  step 2: per-domain structural similarity of the normalized pair, the
///          flipped-label discriminator loss against a fixed c_ds, and the
///          soft agreement penalty against a fixed c_di;
///  step 3: reconstruction of both domains from the detached pair, plus the
///          step-1/2 losses replayed on re-disentangled reconstructions with
///          everything but the reconstructor fixed.
/// Per-term freeze masks are encoded with stop-gradient leaves, so a single
/// backward pass routes every gradient exactly as scheduled.
ObjectiveVars build_objective(Tape& tape, ModelState& m, const FeatureBatch& src,
                              const FeatureBatch& tgt, const TrainConfig& cfg,
                              TermMask mask,
                              const std::vector<std::pair<double, double>>* frozen_norm_bounds = nullptr);

/// One combined backward pass and one SGD update. Returns every component
/// value and the combined objective.
LossReport train_step(ModelState& m, const FeatureBatch& src, const FeatureBatch& tgt,
                      const TrainConfig& cfg);
LossReport train_step_masked(ModelState& m, const FeatureBatch& src,
                             const FeatureBatch& tgt, const TrainConfig& cfg,
                             TermMask mask);

struct TrainResult {
    ModelState state;
    std::vector<LossReport> reports;
};

using LossObserver = std::function<void(const LossReport&)>;

/// Initializes a model for the split's dimensions and runs cfg.iterations
/// optimizer steps over the paired batch stream. Deterministic per seed.
TrainResult train(const DatasetSplit& split, const TrainConfig& cfg);
TrainResult train(const DatasetSplit& split, const TrainConfig& cfg,
                  const LossObserver& observer);

/// One line per step: step,l_di,l_ds,l_s,l_o,l_a,l_r,l_t,total with
/// 17-significant-digit reals.
void write_metrics_csv(const std::filesystem::path& path,
                       std::span<const LossReport> reports);

} // namespace esd
