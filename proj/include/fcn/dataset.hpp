#ifndef FCN_DATASET_HPP
#define FCN_DATASET_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fcn/tensor.hpp"

namespace fcn {

/// Raised for missing/corrupt dataset files (CLI exit code 2).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct Dataset {
    std::string name;
    Tensor images;            // [N, C, H, W], pixels in [0, 1]
    std::vector<int> labels;  // values in [0, 9]

    int count() const { return images.dim(0); }
    std::vector<int> sample_shape() const;  // [C, H, W]
    Tensor sample(int i) const;
    int label(int i) const { return labels[static_cast<std::size_t>(i)]; }

    /// First n samples (loading order is stable, so this is deterministic).
    Dataset subset(int n) const;
};

/// MNIST from the IDX container (train-images-idx3-ubyte /
/// train-labels-idx1-ubyte under `dir`). The canonical test files are the
/// held-out pair; pass include_test to append them.
Dataset load_mnist(const std::string& dir, bool include_test = false);

/// CIFAR-10 binary batches (data_batch_1.bin .. data_batch_5.bin under
/// `dir`; test_batch.bin appended when include_test). Each record is one
/// label byte followed by 1024-byte R, G, B planes.
Dataset load_cifar10(const std::string& dir, bool include_test = false);

Dataset load_dataset(const std::string& dataset, const std::string& dir);

struct FoldSplit {
    int fold = 0;
    std::vector<int> train_indices;
    std::vector<int> val_indices;
};

/// Random permutation of [0, n) split into k near-equal parts; fold i uses
/// part i as validation. Requires n >= k.
std::vector<FoldSplit> make_folds(Rng& rng, int n, int k);

}  // namespace fcn

#endif  // FCN_DATASET_HPP
