#ifndef FCN_TENSOR_HPP
#define FCN_TENSOR_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fcn {

/// Dense N-dimensional array of doubles, row-major.
///
/// Tensors are plain values: copyable, movable, safe to share read-only
/// across threads. Layers own all index arithmetic; Tensor only provides
/// storage, shape bookkeeping and a few elementwise helpers.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape);  // zero-filled
    Tensor(std::vector<int> shape, std::vector<double> data);

    static Tensor full(std::vector<int> shape, double value);

    const std::vector<int>& shape() const { return shape_; }
    int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
    int rank() const { return static_cast<int>(shape_.size()); }
    std::size_t size() const { return data_.size(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    /// N-d element access; bounds-checked, for tests and cold paths.
    double& at(std::initializer_list<int> idx);
    double at(std::initializer_list<int> idx) const;

    /// Same data, new shape; element count must match.
    Tensor reshaped(std::vector<int> new_shape) const;

    void fill(double value);
    bool all_finite() const;
    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    Tensor& operator+=(const Tensor& other);
    Tensor& operator*=(double s);

    std::vector<double>& vec() { return data_; }
    const std::vector<double>& vec() const { return data_; }

private:
    std::size_t flat_index(std::initializer_list<int> idx) const;

    std::vector<int> shape_;
    std::vector<double> data_;
};

std::size_t shape_volume(const std::vector<int>& shape);

/// Largest absolute elementwise difference; shapes must match.
double max_abs_diff(const Tensor& a, const Tensor& b);

/// Deterministic random number generator: xoshiro256++ seeded via
/// splitmix64. The raw 64-bit stream is identical across platforms for a
/// given seed; doubles are derived with fixed bit arithmetic, gaussians
/// with the Marsaglia polar method (no std:: distributions anywhere, their
/// sequences are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double();

    /// Uniform integer in [lo, hi], inclusive; unbiased via rejection.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi);

    double next_gaussian();

    /// Independent generator derived from (seed, a, b, c). Used for
    /// per-sample augmentation streams and per-fold initialization so
    /// parallel workers never share state.
    Rng substream(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Elements i.i.d. from U[lo, hi). Requires lo < hi and a non-empty shape.
Tensor uniform(Rng& rng, const std::vector<int>& shape, double lo, double hi);

/// Elements i.i.d. normal; std = 0 gives a constant tensor. Requires std >= 0.
Tensor gaussian(Rng& rng, const std::vector<int>& shape, double mean, double std);

/// Xavier uniform: U[-L, L] with L = sqrt(6 / (fan_in + fan_out)).
Tensor xavier_uniform(Rng& rng, int fan_in, int fan_out, const std::vector<int>& shape);

}  // namespace fcn

#endif  // FCN_TENSOR_HPP
