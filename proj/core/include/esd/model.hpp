#pragma once

#include "esd/param.hpp"
#include "esd/tape.hpp"

#include <array>
#include <cstdint>
#include <filesystem>

namespace esd {

struct ModelDims {
    std::size_t feature_dim = 1000;
    std::size_t hidden = 512;
    std::size_t num_classes = 2;
};

/// All learnable parameters: a shared trunk feeding two disentangling heads,
/// the invariant classifier, the domain discriminator, and the two-layer
/// reconstructor that maps the concatenated pair back to feature space.
struct ModelState {
    ModelDims dims;
    ParamGroup trunk;    // feature_dim -> feature_dim, relu
    ParamGroup head_di;  // feature_dim -> hidden, relu
    ParamGroup head_ds;  // feature_dim -> hidden, relu
    ParamGroup c_di;     // hidden -> num_classes (logits)
    ParamGroup c_ds;     // hidden -> 1 (sigmoid applied downstream)
    ParamGroup recon;    // 2*hidden -> hidden relu, hidden -> feature_dim

    /// Uniform +/- sqrt(6 / (fan_in + fan_out)) weights, zero biases, fully
    /// determined by the seed.
    static ModelState init(const ModelDims& dims, std::uint64_t seed);

    std::array<ParamGroup*, 6> groups();
    std::array<const ParamGroup*, 6> groups() const;
    void freeze_all(bool frozen);
};

/// Tape-level forward passes. frozen_params routes the op through
/// stop-gradient leaves so the touched groups receive no gradient from this
/// use site (their values still feed the computation).
struct DisentangledVars {
    Tape::Var f_di;
    Tape::Var f_ds;
};

DisentangledVars disentangle(Tape& tape, ModelState& m, Tape::Var f_g,
                             bool frozen_params = false);
Tape::Var classify_di(Tape& tape, ModelState& m, Tape::Var f,
                      bool frozen_params = false);
Tape::Var discriminate_ds(Tape& tape, ModelState& m, Tape::Var f,
                          bool frozen_params = false);
Tape::Var reconstruct(Tape& tape, ModelState& m, DisentangledVars pair);

/// Plain-value forwards for inference and evaluation.
struct DisentangledPair {
    Matrix f_di;
    Matrix f_ds;
};

DisentangledPair disentangle(const ModelState& m, const Matrix& f_g);
Matrix classify_di(const ModelState& m, const Matrix& f);
Matrix discriminate_ds(const ModelState& m, const Matrix& f);
Matrix reconstruct(const ModelState& m, const DisentangledPair& pair);

/// Checkpoint format: magic "ESDM", format version u16, K u32, feature_dim
/// u32, then each group as (name length u16, name bytes, tensor count u16,
/// per tensor rows u32, cols u32, row-major 64-bit little-endian reals).
/// Round-trips bit-exactly.
void save_checkpoint(const ModelState& m, const std::filesystem::path& path);
ModelState load_checkpoint(const std::filesystem::path& path);

} // namespace esd
