#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "matformer/tensor.hpp"

namespace matformer::nn {

class Tape;

/// Handle to a node on a tape. Cheap to copy; valid while the tape lives.
struct Var {
    Tape* tape = nullptr;
    int id = -1;

    const Tensor& val() const;
    const Tensor& grad() const;
    bool defined() const { return tape != nullptr && id >= 0; }
};

enum class Activation { squared_relu, gelu };

/// Reverse-mode autodiff tape. Nodes are stored in creation order, which is a
/// topological order by construction; backward() walks it in exact reverse.
/// Gradients accumulate additively, so fan-out works without bookkeeping.
///
/// Prefix views (row_slice) share both value and gradient storage with their
/// parent: a gradient written through a view lands directly in the parent's
/// first k rows.
class Tape {
  public:
    explicit Tape(bool grads_enabled = true) : grads_enabled_(grads_enabled) {}
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    bool grads_enabled() const { return grads_enabled_; }

    /// Constant leaf; never receives gradient.
    Var constant(Tensor value);

    /// Leaf whose gradient buffer aliases external storage (parameters).
    Var leaf(Tensor value, Tensor grad);

    /// Internal: register an op output. `backward` may be empty.
    Var make(Tensor value, Tensor grad, std::function<void(Tape&)> backward,
             const char* op_name);

    /// Seeds d(loss)/d(loss)=1 and runs every node's backward in reverse
    /// creation order. `loss` must be a scalar (numel == 1).
    void backward(Var loss);

    const Tensor& value_of(int id) const { return nodes_[static_cast<size_t>(id)].value; }
    const Tensor& grad_of(int id) const { return nodes_[static_cast<size_t>(id)].grad; }
    size_t size() const { return nodes_.size(); }

  private:
    struct Node {
        Tensor value;
        Tensor grad;  // undefined when grads are disabled or node is constant
        std::function<void(Tape&)> backward;
    };
    std::vector<Node> nodes_;
    bool grads_enabled_;
};

// ---- operations ------------------------------------------------------------

/// C = A[m,k] * B[k,n]; backward dA += dC*B^T, dB += A^T*dC.
Var matmul(Var a, Var b);

/// C = A[m,k] * B[n,k]^T; rows of B are output features (the Eq.-1 layout).
Var matmul_nt(Var a, Var b);

/// Element-wise sum of two same-shape tensors.
Var add(Var a, Var b);

/// x * s for scalar s.
Var scale(Var x, double s);

/// 2-D transpose.
Var transpose(Var x);

/// Element-wise nonlinearity with analytic derivative.
Var activation(Var x, Activation kind);

/// Per-row layer norm over the last axis of x[T,d] with learned gain/bias[d].
Var layer_norm(Var x, Var gain, Var bias, double eps = 1e-5);

/// Gather rows of table[V,d] at ids; backward scatter-adds into the table.
Var embedding_lookup(Var table, std::span<const int> ids);

/// Zero-copy view of the first k rows; gradients alias the parent's buffer.
Var row_slice(Var x, int k);

/// Row-wise softmax (full rows, no mask).
Var softmax_rows(Var x);

/// Mean NLL of targets under softmax(logits[T,V]), max-stabilized.
Var softmax_cross_entropy(Var logits, std::span<const int> targets);

/// Causal multi-head self-attention core. q,k,v are [T, h*hd] tensors whose
/// columns are head-major; returns the concatenated per-head contexts
/// [T, h*hd]. Position i attends to positions <= i (plus `past` prepended
/// cache-free offset columns are not supported on the tape path; caches are
/// an inference-only concept).
Var causal_self_attention(Var q, Var k, Var v, int n_heads);

/// Mean of the first n_rows rows of x[T,d] -> [1,d].
Var mean_pool_rows(Var x, int n_rows);

}  // namespace matformer::nn
