#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "motordyn/rng.hpp"
#include "motordyn/tensor.hpp"

namespace motordyn {

/// Named trainable tensor plus its gradient accumulator (always same shape).
struct Param {
    std::string name;
    Tensor value;
    Tensor grad;

    Param() = default;
    Param(std::string n, Tensor v) : name(std::move(n)), value(std::move(v)) {
        grad = Tensor::zeros_like(value);
    }
};

struct NamedParam {
    std::string path;  // dotted path within the owning model
    Param* param;
};

enum class Act { Relu, Tanh };
enum class ScanDir { Forward, Backward };

// ---------------------------------------------------------------------------
// Stateless op kernels. Layers wrap these with caching and gradient plumbing;
// tests call them directly.
// ---------------------------------------------------------------------------

/// Cross-correlation, stride 1. x [C_in x T], w [C_out x C_in x K], b [C_out].
/// Out-of-range input reads as zero. Output [C_out x (T + 2p - K + 1)].
Tensor conv1d(const Tensor& x, const Tensor& w, const Tensor& b, std::size_t padding);

/// Exact adjoint of conv1d's linear map, plus bias.
/// x [C_in x T], w [C_in x C_out x K], b [C_out]. Output [C_out x (T + K - 1 - 2p)].
Tensor conv1d_transpose(const Tensor& x, const Tensor& w, const Tensor& b, std::size_t padding);

/// W*x + b. x may be [M] or [M x T] (applied per time column).
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

/// Elementwise relu/tanh. relu'(0) is defined as 0.
Tensor activation(const Tensor& x, Act kind);

/// h_t = tanh(W x + U h_prev + b). x [M], h_prev [N], W [N x M], U [N x N], b [N].
Tensor rnn_cell_step(const Tensor& x, const Tensor& h_prev, const Tensor& W, const Tensor& U,
                     const Tensor& b);

/// Diagonalized cell: h_t = tanh(w ⊙ x + u ⊙ h_prev + b); all operands length M.
Tensor diag_rnn_cell_step(const Tensor& x, const Tensor& h_prev, const Tensor& w, const Tensor& u,
                          const Tensor& b);

/// Standard LSTM step. Gate rows of wx [4N x M], wh [4N x N], b [4N] are stacked
/// in the order input, forget, cell candidate, output.
std::pair<Tensor, Tensor> lstm_cell_step(const Tensor& x, const Tensor& h_prev,
                                         const Tensor& c_prev, const Tensor& wx, const Tensor& wh,
                                         const Tensor& b);

/// One tanh cell shared by both directions, scanned left-to-right and
/// right-to-left over seq [C x T]; hidden size equals C. Row block [0, C) of the
/// output holds the forward states, [C, 2C) the backward states, both indexed
/// by the time step they were computed at.
Tensor bidirectional_scan(const Tensor& seq, const Tensor& W, const Tensor& U, const Tensor& b,
                          const Tensor& h0_fwd, const Tensor& h0_bwd);

// ---------------------------------------------------------------------------
// Layer modules: forward caches what backward needs; backward accumulates
// parameter gradients and returns the input gradient. Calling backward without
// a preceding forward throws std::logic_error. A layer instance is
// single-writer; clone() gives an independent deep copy.
// ---------------------------------------------------------------------------

class Layer {
public:
    virtual ~Layer() = default;
    virtual Tensor forward(const Tensor& x) = 0;
    virtual Tensor backward(const Tensor& grad_out) = 0;
    virtual void collect_params(const std::string& prefix, std::vector<NamedParam>& out) {}
    virtual std::unique_ptr<Layer> clone() const = 0;

    std::vector<Param*> params();
    void zero_grad();

protected:
    void require_cache(bool have, const char* who) const;
};

class Conv1d final : public Layer {
public:
    Conv1d(std::size_t in_ch, std::size_t out_ch, std::size_t kernel, std::size_t padding,
           Rng& rng);
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    Param weight;  // [C_out x C_in x K]
    Param bias;    // [C_out]
    std::size_t padding;

private:
    Tensor x_;
    bool have_cache_ = false;
};

class Conv1dTranspose final : public Layer {
public:
    Conv1dTranspose(std::size_t in_ch, std::size_t out_ch, std::size_t kernel, std::size_t padding,
                    Rng& rng);
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    Param weight;  // [C_in x C_out x K]
    Param bias;    // [C_out]
    std::size_t padding;

private:
    Tensor x_;
    bool have_cache_ = false;
};

class Linear final : public Layer {
public:
    Linear(std::size_t in_dim, std::size_t out_dim, Rng& rng);
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    Param weight;  // [N x M]
    Param bias;    // [N]

private:
    Tensor x_;
    bool have_cache_ = false;
};

class Activation final : public Layer {
public:
    explicit Activation(Act kind) : kind(kind) {}
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    std::unique_ptr<Layer> clone() const override;

    Act kind;

private:
    Tensor x_, y_;
    bool have_cache_ = false;
};

/// [C x T] -> [C*T] in row-major (channel-major) order.
class Flatten final : public Layer {
public:
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    std::unique_ptr<Layer> clone() const override;

private:
    std::vector<std::size_t> in_shape_;
    bool have_cache_ = false;
};

/// [N] -> [N x 1], so pointwise heads share the channels-by-time contract.
class ToColumn final : public Layer {
public:
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    std::unique_ptr<Layer> clone() const override;

private:
    std::size_t n_ = 0;
    bool have_cache_ = false;
};

/// Unidirectional full-matrix tanh scan over [M x T]; output [N x T].
/// Initial hidden state is zero. Direction Backward runs right-to-left and
/// stores the state computed at step t in column t.
class RnnScan final : public Layer {
public:
    RnnScan(std::size_t in_dim, std::size_t hidden, ScanDir dir, Rng& rng);
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    Param w_in;   // [N x M]
    Param w_rec;  // [N x N]
    Param bias;   // [N]
    ScanDir dir;

private:
    Tensor x_, h_;  // h_ [N x T], states in time order
    bool have_cache_ = false;
};

/// Diagonalized tanh scan (Hadamard cell); hidden size equals input size.
class DiagRnnScan final : public Layer {
public:
    DiagRnnScan(std::size_t dim, ScanDir dir, Rng& rng);
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    Param w_in;   // [M]
    Param w_rec;  // [M]
    Param bias;   // [M]
    ScanDir dir;

private:
    Tensor x_, h_;
    bool have_cache_ = false;
};

/// Unidirectional LSTM scan over [M x T]; output is the hidden sequence [N x T].
class LstmScan final : public Layer {
public:
    LstmScan(std::size_t in_dim, std::size_t hidden, Rng& rng);
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    Param w_in;   // [4N x M], gate rows i,f,g,o
    Param w_rec;  // [4N x N]
    Param bias;   // [4N]

private:
    Tensor x_, h_, c_, gates_;  // gates_ [4N x T] post-nonlinearity
    bool have_cache_ = false;
};

/// Layer form of bidirectional_scan: one shared cell, output [2C x T].
class BidirectionalScan final : public Layer {
public:
    explicit BidirectionalScan(std::size_t dim, Rng& rng);
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    Param w_in;   // [C x C]
    Param w_rec;  // [C x C]
    Param bias;   // [C]

private:
    Tensor x_, hf_, hb_;
    bool have_cache_ = false;
};

/// Plain layer chain.
class Sequential final : public Layer {
public:
    Sequential() = default;
    void add(std::unique_ptr<Layer> layer) { layers_.push_back(std::move(layer)); }
    Tensor forward(const Tensor& x) override;
    Tensor backward(const Tensor& gy) override;
    void collect_params(const std::string& prefix, std::vector<NamedParam>& out) override;
    std::unique_ptr<Layer> clone() const override;

    std::size_t size() const { return layers_.size(); }
    Layer& at(std::size_t i) { return *layers_[i]; }

private:
    std::vector<std::unique_ptr<Layer>> layers_;
};

}  // namespace motordyn
