#ifndef FCN_AUGMENT_HPP
#define FCN_AUGMENT_HPP

#include <iosfwd>
#include <string>

#include "fcn/tensor.hpp"

namespace fcn {

enum class AugKind { None, Translation, Rotation, Noise, EdgeNoise, QuadrantSwap };

AugKind aug_kind_from_name(const std::string& name);
std::string aug_kind_name(AugKind kind);

/// Which transform to apply per example, and how hard. `intensity` is a
/// shift/angle fraction for translation/rotation and a standard deviation
/// for the noise variants; quadrant swap ignores it. Grid runs use
/// {0.0, 0.1, ..., 0.9, 0.99} but any value in [0, 1) is accepted.
struct AugmentationConfig {
    AugKind kind = AugKind::None;
    double intensity = 0.0;
    // Angle reached at intensity 1.0. The rotation unit is a convention,
    // not a dataset property; see README.
    double rotation_max_degrees = 180.0;
};

/// Shift content by (dx, dy) pixels (dx > 0 moves content right, dy > 0
/// down). Vacated pixels replicate the nearest edge pixel of the shifted
/// content. Requires |dx| < W and |dy| < H.
Tensor translate(const Tensor& img, int dx, int dy);

/// dx ~ U{-R..R} with R = min(round(intensity*W), W-1), dy analogous with H;
/// the two draws are independent (dx first).
Tensor random_translate(Rng& rng, const Tensor& img, double intensity);

/// Clockwise rotation about the image center, bilinear resampling,
/// out-of-bounds source pixels clamped to the nearest edge.
Tensor rotate_by_degrees(const Tensor& img, double degrees);

/// Angle ~ U[0, intensity * max_degrees] clockwise.
Tensor rotate(Rng& rng, const Tensor& img, double intensity, double max_degrees = 180.0);

/// img + N(0, std^2) per pixel, no clamping.
Tensor add_noise_raw(Rng& rng, const Tensor& img, double std);

/// img + N(0, std^2) per pixel, clamped to [0, 1].
Tensor add_noise(Rng& rng, const Tensor& img, double std);

/// Gaussian noise on the 5-pixel border frame only; interior pixels are
/// bit-identical to the input (no draws are consumed for them).
Tensor add_edge_noise(Rng& rng, const Tensor& img, double std);

/// Exchange quadrant I (top-right) and quadrant III (bottom-left);
/// quadrants II and IV untouched. Requires even H and W.
Tensor quadrant_swap(const Tensor& img);

Tensor apply_augmentation(Rng& rng, const AugmentationConfig& config, const Tensor& img);

/// Debug dump, one image per call. Line 1: "FCNIMG <C> <H> <W>"; then for
/// each channel H lines of W integers in 0..255 (pixel * 255, rounded),
/// channels separated by a blank line.
void dump_raster(std::ostream& os, const Tensor& img);

constexpr int kEdgeNoiseBorder = 5;

}  // namespace fcn

#endif  // FCN_AUGMENT_HPP
