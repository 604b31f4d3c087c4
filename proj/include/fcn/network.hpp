#ifndef FCN_NETWORK_HPP
#define FCN_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fcn/layers.hpp"
#include "fcn/tensor.hpp"

namespace fcn {

enum class LayerKind { Conv, FreeConv, Dense, Softmax };

/// One architecture row: Conv/FreeConv use (kernel, filters, stride),
/// Dense/Softmax use width. ReLU follows every row except the Softmax
/// output; flattening before the first dense row is implicit.
struct LayerSpec {
    LayerKind kind;
    int kernel = 0;
    int filters = 0;
    int stride = 1;
    int width = 0;
};

struct NetworkSpec {
    std::string dataset;           // "mnist", "cifar10", or a test tag
    std::vector<int> input_shape;  // [C, H, W]
    std::vector<LayerSpec> layers; // final row must be Softmax
    double learning_rate = 1e-3;
};

/// The grid-search architectures. net="cnn" uses shared-weight
/// convolutions, net="fcn" free convolutions.
NetworkSpec mnist_spec(const std::string& net);
NetworkSpec cifar10_spec(const std::string& net);
NetworkSpec spec_for(const std::string& dataset, const std::string& net);

struct ParamCountReport {
    std::vector<long long> per_layer;
    long long total = 0;
};

/// conv: F*C*kH*kW + F; free conv: H'*W'*F*C*kH*kW + H'*W'*F;
/// dense/softmax: out*(in+1).
ParamCountReport count_parameters(const NetworkSpec& spec);

using Layer = std::variant<Conv2d, FreeConv2d, Dense>;

/// Per-sample forward activations, reused across calls to avoid churn.
struct Workspace {
    std::vector<Tensor> inputs;  // input fed to each row (flattened for dense rows)
    std::vector<Tensor> preact;  // row output before ReLU
    Tensor logits;
};

/// Parameter gradients aligned with Network rows.
struct GradBuffer {
    std::vector<Tensor> gw;
    std::vector<Tensor> gb;

    void zero();
    GradBuffer& operator+=(const GradBuffer& other);
};

/// Batches the rank-1 dense weight-gradient updates of several samples so
/// a flush can accumulate them row by row while each row is cache-hot.
/// Entry-wise accumulation order matches the immediate path exactly, so
/// deferred and immediate gradients are bit-identical.
struct DenseGradBatch {
    struct RowStore {
        int in = 0, out = 0, count = 0;
        std::vector<double> inputs;     // [count][in]
        std::vector<double> grad_outs;  // [count][out]
    };
    std::vector<RowStore> rows;  // aligned with Network rows; unused for conv rows

    void clear();
};

class Network {
public:
    /// Fresh Xavier-initialized network. vcp > 0 samples a fixed
    /// connection mask on every free-conv weight bank.
    static Network build(const NetworkSpec& spec, Rng& rng, double vcp_probability = 0.0);

    const NetworkSpec& spec() const { return spec_; }
    const std::vector<Layer>& rows() const { return rows_; }
    std::vector<Layer>& rows() { return rows_; }
    std::size_t row_count() const { return rows_.size(); }

    Tensor forward(const Tensor& x, Workspace& ws) const;
    /// Accumulates parameter gradients of the whole stack into `gb`. When
    /// `defer` is given, dense weight gradients are queued there instead;
    /// call flush_dense_grads before reading gb.
    void backward(const Tensor& grad_logits, const Workspace& ws, GradBuffer& gb,
                  DenseGradBatch* defer = nullptr) const;

    void flush_dense_grads(DenseGradBatch& batch, GradBuffer& gb) const;

    GradBuffer make_grad_buffer() const;

    /// Flat list of parameter tensors in fixed (row, weight-then-bias) order.
    std::vector<Tensor*> params();
    std::vector<const Tensor*> params() const;
    /// Mask bits aligned with params(); nullptr where a parameter is unmasked.
    std::vector<const Tensor*> param_masks() const;

    void apply_masks();
    long long parameter_count() const;

    /// FNV-1a hash over all parameter bytes; used to assert evaluation
    /// never mutates the model.
    std::uint64_t param_checksum() const;

    int first_free_conv_row() const;  // -1 if none

    /// Checkpoint container (.fcnc), little-endian:
    ///   magic "FCNCKPT1", u32 version (= 1), u32 header length, then a
    ///   JSON header (dataset, input_shape, learning_rate, per-row kind/
    ///   kernel/filters/stride/width/has_mask/drop_probability), then per
    ///   row: weight tensor, bias tensor, mask bits when flagged. Tensors
    ///   are u32 rank, i64 dims, then raw f64 data.
    void save(const std::string& path) const;
    static Network load(const std::string& path);

private:
    NetworkSpec spec_;
    std::vector<Layer> rows_;
};

}  // namespace fcn

#endif  // FCN_NETWORK_HPP
