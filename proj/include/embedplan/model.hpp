#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace embedplan::model {

using Mat = Eigen::MatrixXd;  // columns are samples
using Vec = Eigen::VectorXd;

inline constexpr std::size_t kLatentDim = 128;
inline constexpr std::size_t kTransitionBudget = 500'000;

// Flat storage of every trainable parameter with named, shaped segments.
// Values are kept in double but are always representable in f32 (they are
// rounded after initialization and after every optimizer step).
class ParamVector {
public:
    struct Segment {
        std::string name;
        std::size_t offset, rows, cols;
        std::size_t size() const { return rows * cols; }
    };

    std::size_t add_segment(std::string name, std::size_t rows, std::size_t cols);

    std::size_t size() const { return values_.size(); }
    const std::vector<Segment>& segments() const { return segments_; }
    const Segment& segment(std::size_t i) const { return segments_[i]; }
    std::size_t find(std::string_view name) const;  // throws if absent

    Eigen::Map<Mat> mat(std::size_t seg);
    Eigen::Map<const Mat> mat(std::size_t seg) const;

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    std::vector<double> flatten() const { return values_; }
    void unflatten(std::span<const double> flat);

    ParamVector zeros_like() const;
    void round_to_f32();
    void set_zero();

private:
    std::vector<double> values_;
    std::vector<Segment> segments_;
};

struct Linear {
    std::size_t weight = 0;
    std::size_t bias = npos;  // npos: no bias
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct LayerNormParams {
    std::size_t gain = 0;
    std::size_t bias = 0;
};

// pi(z) = W_L gelu(LN(... gelu(LN(W_1 z + b_1)) ...)) + b_L
struct ProjectionHead {
    std::size_t in_dim = 0;
    std::vector<Linear> layers;
    std::vector<LayerNormParams> norms;  // one per hidden layer (layers.size() - 1)
};

// LN(f([h_s; h_a]) + W_res h_s), f = three linear layers with GELU between.
struct ResidualMlp {
    Linear l1, l2, l3;
    std::size_t w_res = 0;
    LayerNormParams out_norm;
};

// g(h_a) = W_g2 gelu(W_g1 h_a + b) + b emits (scale, shift) pairs for each
// trunk layer: x_i = gelu((1 + A_i) * (W_i x_{i-1} + b_i) + B_i); out = LN(W_o x_L + b_o).
struct HyperNet {
    std::size_t film_layers = 2;
    std::size_t adapt_dim = 128;
    Linear g1, g2;
    std::vector<Linear> trunk;
    Linear out;
    LayerNormParams out_norm;
};

enum class Arch { Mlp, Hyper };
std::string to_string(Arch arch);
Arch arch_from_string(const std::string& s);

struct ModelConfig {
    Arch arch = Arch::Mlp;
    std::size_t state_dim = 256;
    std::size_t action_dim = 256;
    std::size_t projection_layers = 4;
    std::size_t film_layers = 2;
    std::size_t adapt_dim = 128;
    std::uint64_t seed = 42;
};

class TransitionModel {
public:
    ModelConfig config;
    ParamVector params;
    ProjectionHead state_head;
    ProjectionHead action_head;
    ResidualMlp mlp;    // valid when config.arch == Mlp
    HyperNet hyper;     // valid when config.arch == Hyper
    std::size_t transition_begin = 0;  // first transition-network segment
    std::size_t transition_end = 0;

    std::size_t transition_param_count() const;
    std::size_t head_param_count() const;
};

// Kaiming-uniform weights, zero biases, LayerNorm gain 1 / bias 0.
// Throws BudgetExceeded when the transition network has >= 500,000 parameters.
TransitionModel init_model(const ModelConfig& config);

// ---- layer-level passes (used by training) ----

struct HeadCache {
    std::vector<Mat> inputs;   // input to each linear layer
    std::vector<Mat> xhat;     // normalized pre-activations of hidden layers
    std::vector<Vec> rstd;     // per-column 1/sigma of hidden layers
    std::vector<Mat> normed;   // LN outputs (GELU inputs)
};

struct TransitionCache {
    // mlp
    Mat x, u1, a1, u2, a2;
    // hyper
    Mat g_in, g_pre, g_act, film;
    std::vector<Mat> trunk_in, trunk_lin, trunk_mod;
    Mat trunk_out;
    // shared
    Mat hs;
    Mat out_xhat;
    Vec out_rstd;
};

Mat project(const TransitionModel& m, const ProjectionHead& head, const Mat& z, HeadCache* cache = nullptr);
// Accumulates parameter gradients into grad. Inputs are frozen so no input gradient is returned.
void project_backward(const TransitionModel& m, const ProjectionHead& head, const HeadCache& cache,
                      const Mat& d_out, ParamVector& grad);

Mat transition(const TransitionModel& m, const Mat& hs, const Mat& ha, TransitionCache* cache = nullptr);
void transition_backward(const TransitionModel& m, const TransitionCache& cache, const Mat& d_out,
                         ParamVector& grad, Mat& d_hs, Mat& d_ha);

// ---- whole-model pass ----

struct Prediction {
    Mat h_s, h_a, h_hat;
};

struct Tape {
    HeadCache state, action;
    TransitionCache trans;
};

// Throws NonFiniteActivation if any output is not finite.
Prediction forward(const TransitionModel& m, const Mat& z_s, const Mat& z_a, Tape* tape = nullptr);
// Upstream gradients for h_hat and (optionally) directly for h_s / h_a.
void backward(const TransitionModel& m, const Tape& tape, const Mat& d_hhat, const Mat* d_hs,
              const Mat* d_ha, ParamVector& grad);

// ---- checkpoints: one JSON header line, then the f32 little-endian parameter block ----

struct CheckpointInfo {
    std::size_t step = 0;
    std::string config_hash;
};

std::vector<std::uint8_t> serialize_checkpoint(const TransitionModel& m, const CheckpointInfo& info);
TransitionModel deserialize_checkpoint(std::span<const std::uint8_t> bytes, CheckpointInfo* info = nullptr);
void save_checkpoint(const TransitionModel& m, const CheckpointInfo& info, const std::filesystem::path& path);
TransitionModel load_checkpoint(const std::filesystem::path& path, CheckpointInfo* info = nullptr);

double gelu(double x);
double gelu_grad(double x);

}  // namespace embedplan::model
