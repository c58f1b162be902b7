#pragma once

#include "esd/matrix.hpp"
#include "esd/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

namespace esd {

enum class Domain { source, target };

/// One mini-batch of feature rows. Target batches never carry labels; the
/// batching layer strips them by construction so no training path can read
/// them.
struct FeatureBatch {
    Matrix features;
    std::vector<int> labels;            // empty when absent
    Domain domain = Domain::source;
    std::vector<std::size_t> indices;   // row positions in the originating split

    bool has_labels() const { return !labels.empty(); }
};

/// Full two-domain dataset. target_labels exist for evaluation only and are
/// quarantined from every training path.
struct DatasetSplit {
    Matrix source_features;
    std::vector<int> source_labels;
    Matrix target_features;
    std::optional<std::vector<int>> target_labels;
    std::size_t num_classes = 0;
    std::size_t feature_dim = 0;
};

/// Recipe for a two-domain Gaussian-blob dataset: per-class source means,
/// per-class displacement applied to the target means, isotropic noise scale
/// and a seed that fully determines the draw.
struct SynthSpec {
    std::size_t num_classes = 3;
    std::size_t dim = 20;
    std::size_t samples_per_class = 200;
    double cov_scale = 1.0;
    std::vector<std::vector<double>> source_means;   // K x dim, pairwise distinct
    std::vector<std::vector<double>> target_shift;   // K x dim displacement
    std::uint64_t seed = 0;
};

/// Ring geometry: class means sit on a circle of radius separation*cov_scale
/// inside a seeded random 2-plane; the domain gap rotates the ring so every
/// class mean moves by shift_sigmas*cov_scale. shift_sigmas = 0 gives
/// identical class-conditional distributions in both domains.
SynthSpec make_blob_spec(std::size_t classes, std::size_t dim,
                         std::size_t samples_per_class, double cov_scale,
                         double separation, double shift_sigmas,
                         std::uint64_t seed);

DatasetSplit gen_synthetic(const SynthSpec& spec);

/// One loaded feature file. Text files declare their class count in the
/// header; binary files carry labels only.
struct LoadedDomain {
    Matrix features;
    std::optional<std::vector<int>> labels;
    std::optional<std::size_t> declared_classes;
};

/// Reads either format:
///  binary: magic "ESDF", u32 n, u32 d, u8 has_labels, row-major 32-bit
///          little-endian reals, then n u32 labels if present;
///  text:   header "d,K", one sample per line (d comma-separated reals,
///          optional trailing integer label).
/// Values are widened to 64-bit internally.
LoadedDomain load_features(const std::filesystem::path& path);

void save_features(const std::filesystem::path& path, const Matrix& features,
                   const std::vector<int>* labels);
void save_features_text(const std::filesystem::path& path, const Matrix& features,
                        const std::vector<int>* labels, std::size_t num_classes);

/// Assembles a training split from two loaded domains. Source labels are
/// required; target labels, when present, go to the evaluation-only field.
/// The class count comes from classes_override, a text-format declaration,
/// or max(label)+1, in that order of precedence.
DatasetSplit make_split(LoadedDomain source, LoadedDomain target,
                        std::optional<std::size_t> classes_override);

/// (x - min) / (max - min) over the whole batch; a constant batch maps to
/// all 0.5.
Matrix minmax_normalize(const Matrix& x);

/// Seeded paired batch stream. Each epoch shuffles both domains
/// independently and draws pairs until the larger domain is exhausted, the
/// smaller domain cycling with fresh shuffles; short final batches are
/// dropped.
class BatchStream {
public:
    BatchStream(const DatasetSplit& split, std::size_t batch_size, std::uint64_t seed);

    std::pair<FeatureBatch, FeatureBatch> next();
    std::size_t pairs_per_epoch() const { return pairs_per_epoch_; }

private:
    const DatasetSplit& split_;
    std::size_t batch_size_;
    Rng rng_;
    std::vector<std::size_t> src_order_, tgt_order_;
    std::size_t src_pos_ = 0, tgt_pos_ = 0;
    std::size_t pairs_per_epoch_ = 0;
    std::size_t pairs_left_ = 0;

    void start_epoch();
    std::vector<std::size_t> take(std::vector<std::size_t>& order, std::size_t& pos);
};

} // namespace esd
