#pragma once

#include "esd/matrix.hpp"
#include "esd/param.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <utility>
#include <vector>

namespace esd {

enum class Activation { relu, sigmoid, softmax_rows };

/// Reverse-mode differentiation over an explicit operation record.
///
/// Every op appends one node holding its output value and an adjoint rule;
/// backward() replays the record once in reverse, accumulating parameter
/// gradients into the ParamGroups referenced by leaf(). A tape describes a
/// single forward pass and is discarded after the optimizer step.
class Tape {
public:
    struct Var {
        std::uint32_t id = kInvalid;
        bool valid() const { return id != kInvalid; }
    };

    // ---- graph inputs ----

    /// Untracked value (no gradient flows into it).
    Var constant(Matrix value);

    /// Tracked view of group.tensors[tensor_index]. Frozen groups produce
    /// untracked leaves, so their gradients stay zero.
    Var leaf(ParamGroup& group, std::size_t tensor_index);

    /// Identity in the forward pass, blocks gradient flow in the backward
    /// pass. Used both to freeze a parameter at a single use site and to
    /// detach an activation.
    Var stop_gradient(Var v);

    // ---- differentiable primitives ----

    /// x[n x d_in] * w[d_in x d_out] + row-broadcast b[1 x d_out].
    Var linear(Var x, Var w, Var b);
    Var activation(Activation kind, Var x);
    Var relu(Var x);
    Var sigmoid(Var x);
    Var softmax_rows(Var x);
    Var concat_cols(Var a, Var b);
    Var add(Var a, Var b);
    Var scale(Var a, double k);

    /// Affine map of the whole batch into [0, 1]. The batch minimum and
    /// maximum act as per-batch constants: gradients flow only through the
    /// rescaled entries, never through the extrema themselves. A constant
    /// batch maps to all 0.5 with zero gradient.
    Var minmax_normalize(Var x);
    /// Same map with explicitly supplied bounds (diagnostic replay).
    Var minmax_normalize(Var x, double lo, double hi);
    /// Bounds recorded by a minmax_normalize node.
    std::pair<double, double> minmax_bounds(Var normalized) const;

    // ---- scalar-valued losses (1x1 outputs) ----

    Var cross_entropy(Var logits, std::vector<int> labels);
    Var domain_bce(Var p_source, Var p_target);
    Var opposite_bce(Var p_source, Var p_target);
    Var ssim_similarity(Var b1, Var b2, double c1, double c2);
    Var soft_agreement(Var p, Var q);
    Var reconstruction_mse(Var recon, Var original);

    // ---- access / backward ----

    const Matrix& value(Var v) const;
    double scalar(Var v) const;
    std::size_t size() const { return nodes_.size(); }

    /// Backward from a 1x1 root with seed 1.0, resetting accumulated
    /// gradients of every group referenced by this tape first.
    void backward(Var root);
    /// Backward with an explicit seed. With accumulate = false the grads of
    /// all referenced groups are zeroed before accumulation, so repeated
    /// calls yield identical results.
    void backward(Var root, const Matrix& seed, bool accumulate);

private:
    static constexpr std::uint32_t kInvalid = 0xFFFFFFFFu;

    struct Node {
        Matrix owned;
        const Matrix* val = nullptr;
        Matrix grad;
        bool grad_live = false;
        bool requires_grad = false;
        ParamGroup* group = nullptr;
        std::size_t tensor_index = 0;
        std::function<void(Tape&, Node&)> pull;
        double lo = 0.0, hi = 0.0;
        bool is_minmax = false;
    };

    // deque keeps node addresses stable while the record grows
    std::deque<Node> nodes_;
    std::vector<ParamGroup*> groups_;

    Var push(Matrix value, bool requires_grad, const char* op,
             std::function<void(Tape&, Node&)> pull);
    const Matrix& val(std::uint32_t id) const { return *nodes_[id].val; }
    Matrix& grad_ref(std::uint32_t id);
    void add_grad(std::uint32_t id, const Matrix& g);
    Node& node(Var v);
    const Node& node(Var v) const;
    Var check_var(Var v, const char* op) const;
    Var minmax_impl(Var x, double lo, double hi);
};

} // namespace esd
