#ifndef FCN_TRAIN_HPP
#define FCN_TRAIN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcn/augment.hpp"
#include "fcn/dataset.hpp"
#include "fcn/network.hpp"

namespace fcn {

/// Raised when training produces a non-finite loss (CLI exit code 3).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

enum class OptimizerKind { Adam, Sgd };
OptimizerKind optimizer_from_name(const std::string& name);
std::string optimizer_name(OptimizerKind kind);

/// Adam (beta1 0.9, beta2 0.999, eps 1e-8) or plain SGD. Moment buffers
/// mirror parameter shapes; masked free-conv entries receive exactly zero
/// gradient, so their moments and updates stay exactly zero for the whole
/// run.
struct Optimizer {
    OptimizerKind kind = OptimizerKind::Adam;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    int step_count = 0;
    std::vector<Tensor> first_moment;   // aligned with Network::params()
    std::vector<Tensor> second_moment;

    static Optimizer create(OptimizerKind kind, double learning_rate, const Network& net);

    /// One update from summed gradients; grad_scale (typically 1/batch)
    /// converts the sums into means.
    void step(Network& net, const GradBuffer& grads, double grad_scale);
};

/// Accuracies on the augmented training stream and the five evaluation
/// sets, per epoch. The augmented validation variants all use intensity
/// 0.25 (the translated-validation convention; the same value is applied
/// to the rotation/noise/edge-noise variants).
struct EpochMetrics {
    int epoch = 0;
    double train_acc = 0;
    double val_acc = 0;
    double val_translate_acc = 0;
    double val_rotate_acc = 0;
    double val_noise_acc = 0;
    double val_edge_noise_acc = 0;
    double seconds = 0;
};

constexpr double kEvalAugIntensity = 0.25;

/// Fully resolved experiment configuration; (config, seed) determines every
/// metric bit-for-bit. Echoed as config.json into each run directory.
struct TrainConfig {
    std::string dataset = "mnist";
    std::string net = "cnn";
    AugmentationConfig aug;
    double vcp = 0.0;
    int folds = 5;
    int only_fold = -1;   // -1 runs every fold
    int epochs = 100;
    int batch_size = 256;
    std::uint64_t seed = 0;
    double learning_rate = 1e-3;
    OptimizerKind optimizer = OptimizerKind::Adam;
    int patience = 25;    // 0 disables early stopping
    int subset = 0;       // 0 = full dataset
    std::vector<int> distance_radii;  // per-epoch kernel-distance tracking
    bool save_epoch_checkpoints = false;
    std::string out_dir;  // empty = keep results in memory only
};

struct DistanceTrack {
    int radius = 0;
    std::vector<double> per_epoch;
};

struct RunRecord {
    TrainConfig config;
    int fold = 0;
    std::vector<EpochMetrics> epochs;
    std::vector<DistanceTrack> distances;
    std::string run_dir;
    Network final_net;
    double best_val_acc = 0;
    int best_epoch = 0;
};

/// One pass over the shuffled training fold; every sample is freshly
/// augmented before its forward pass. Returns the fraction classified
/// correctly as seen. Throws NumericError on a non-finite loss.
double train_epoch(Network& net, Optimizer& opt, const Dataset& data,
                   const std::vector<int>& train_indices, const AugmentationConfig& aug,
                   Rng& rng, int epoch, int batch_size);

/// Accuracy under a fixed augmentation stream: the transform drawn for
/// sample i depends only on (eval_seed, i), so per-epoch curves compare
/// like against like. Never mutates the network.
double evaluate(const Network& net, const Dataset& data, const std::vector<int>& indices,
                const AugmentationConfig& aug, std::uint64_t eval_seed);

RunRecord run_fold(const TrainConfig& config, const Dataset& data, const FoldSplit& split);

/// Five-fold protocol: each fold freshly initialized from a seed derived
/// from (base seed, fold), trained independently.
std::vector<RunRecord> run_cv(const TrainConfig& config, const Dataset& data);

void write_metrics_csv(const std::string& path, const std::vector<EpochMetrics>& metrics);
std::vector<EpochMetrics> read_metrics_csv(const std::string& path);
void write_config_json(const std::string& path, const TrainConfig& config);
TrainConfig read_config_json(const std::string& path);

}  // namespace fcn

#endif  // FCN_TRAIN_HPP
