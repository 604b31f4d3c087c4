#ifndef FCN_LAYERS_HPP
#define FCN_LAYERS_HPP

#include <optional>
#include <vector>

#include "fcn/tensor.hpp"

namespace fcn {

/// Output extent of a valid (unpadded) convolution: floor((in - k)/stride) + 1.
/// Throws if the kernel does not fit at least once.
int conv_output_dim(int in_dim, int kernel, int stride);

/// Shared-kernel convolution, valid padding.
/// weight [F, C, kH, kW], bias [F].
struct Conv2d {
    Tensor weight;
    Tensor bias;
    int stride = 1;
};

/// out[f,i,j] = bias[f] + sum_{c,u,v} W[f,c,u,v] * x[c, i*s+u, j*s+v]
Tensor conv_forward(const Conv2d& layer, const Tensor& x);

/// Exact gradients of conv_forward. grad_w accumulates over all output
/// positions (that accumulation is the weight-sharing). grad_x is
/// overwritten when non-null; grad_w / grad_b are accumulated into, so a
/// caller can sum contributions across a batch.
void conv_backward(const Conv2d& layer, const Tensor& x, const Tensor& grad_out,
                   Tensor* grad_x, Tensor* grad_w, Tensor* grad_b);

/// Fixed binary connection mask over a free-conv weight bank. Sampled once,
/// identical at every training step and at test time. Masked weights and
/// their gradients stay exactly zero; biases are never masked.
struct ConnectionMask {
    Tensor bits;              // same shape as the weight bank, each entry 0 or 1
    double drop_probability;  // p in [0, 0.99]
};

/// Each entry dropped independently with probability p.
ConnectionMask make_mask(Rng& rng, const std::vector<int>& weight_bank_shape, double p);

/// Convolution without weight-sharing: an independent kernel and bias at
/// every output location of every filter.
/// weight [F, outH, outW, C, kH, kW], bias [F, outH, outW].
struct FreeConv2d {
    Tensor weight;
    Tensor bias;
    int stride = 1;
    std::optional<ConnectionMask> mask;

    /// Zeroes masked weight entries; call after any bulk weight assignment.
    void apply_mask();
};

/// out[f,i,j] = bias[f,i,j] + sum_{c,u,v} W[f,i,j,c,u,v] * x[c, i*s+u, j*s+v]
Tensor freeconv_forward(const FreeConv2d& layer, const Tensor& x);

/// Exact gradients. grad_w[f,i,j,...] depends only on grad_out[f,i,j] and
/// the receptive field at (i,j) -- no cross-location accumulation. Masked
/// entries get exactly zero gradient.
void freeconv_backward(const FreeConv2d& layer, const Tensor& x, const Tensor& grad_out,
                       Tensor* grad_x, Tensor* grad_w, Tensor* grad_b);

/// Affine map. weight [out, in], bias [out].
struct Dense {
    Tensor weight;
    Tensor bias;
};

Tensor dense_forward(const Dense& layer, const Tensor& x);
void dense_backward(const Dense& layer, const Tensor& x, const Tensor& grad_out,
                    Tensor* grad_x, Tensor* grad_w, Tensor* grad_b);

Tensor relu_forward(const Tensor& x);
/// x is the forward input; gradient passes where x > 0.
Tensor relu_backward(const Tensor& x, const Tensor& grad_out);

struct SoftmaxXent {
    double loss;
    Tensor probs;
};

/// Softmax over logits with categorical cross-entropy against `label`.
SoftmaxXent softmax_xent_forward(const Tensor& logits, int label);
/// Gradient with respect to the logits: probs - onehot(label).
Tensor softmax_xent_backward(const Tensor& probs, int label);

int argmax(const Tensor& t);

}  // namespace fcn

#endif  // FCN_LAYERS_HPP
