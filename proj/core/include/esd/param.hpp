#pragma once

#include "esd/matrix.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace esd {

/// A named set of learnable tensors with shape-matched gradient buffers.
/// When frozen, optimizer steps leave the tensors bit-identical and backward
/// passes skip gradient accumulation entirely.
struct ParamGroup {
    std::string name;
    std::vector<Matrix> tensors;
    std::vector<Matrix> grads;
    bool frozen = false;

    void add(Matrix t) {
        grads.push_back(Matrix::zeros_like(t));
        tensors.push_back(std::move(t));
    }

    void zero_grads() {
        for (auto& g : grads) std::fill(g.data.begin(), g.data.end(), 0.0);
    }
};

/// Plain SGD update: tensor <- tensor - lr * grad for every non-frozen group,
/// then all gradients are zeroed. Negative learning rates are rejected;
/// lr = 0 is a valid no-op update.
void sgd_step(std::span<ParamGroup* const> groups, double lr);

/// Central finite-difference verification of analytic gradients.
///
/// loss_fn must rebuild the forward pass from the group's current tensors,
/// run backward and return the loss value; it is called repeatedly with
/// individual coordinates perturbed by +/-eps. Returns the worst relative
/// error max(|analytic - numeric| / max(1, |analytic| + |numeric|)) over all
/// coordinates. The group's gradients hold the analytic values on return.
double grad_check(const std::function<double()>& loss_fn, ParamGroup& params, double eps);

} // namespace esd
