#ifndef FCN_ANALYSIS_HPP
#define FCN_ANALYSIS_HPP

#include <string>
#include <utility>
#include <vector>

#include "fcn/network.hpp"
#include "fcn/train.hpp"

namespace fcn {

/// Per-location kernel vectors of one free-conv layer: for filter f and
/// location (i,j), vec = W[f,i,j,:,:,:] flattened (length C*kH*kW).
struct FilterGrid {
    int grid_h = 0;
    int grid_w = 0;
    int filters = 0;
    int vec_len = 0;
    std::vector<double> vectors;  // [filters][grid_h*grid_w][vec_len]

    const double* vec(int f, int loc) const {
        return vectors.data() +
               (static_cast<std::size_t>(f) * grid_h * grid_w + static_cast<std::size_t>(loc)) * vec_len;
    }
};

FilterGrid make_filter_grid(const FreeConv2d& layer);
/// row_index must hold a free-conv layer.
FilterGrid filter_grid_from_network(const Network& net, int row_index);

/// Mean Euclidean distance between each location's kernel and every kernel
/// on its Chebyshev ring of radius exactly r (the square ring; radius 1 is
/// the 8-neighborhood), clipped at grid borders, over ordered pairs, per
/// filter, averaged over filters. Throws if no pair exists at radius r.
double mean_kernel_distance(const FilterGrid& grid, int radius);

struct DistanceCurve {
    int radius = 0;
    std::vector<std::pair<int, double>> points;  // (epoch, mean distance)
};

/// Distances over per-epoch checkpoints (pairs of epoch number and
/// checkpoint path), for the given network row.
std::vector<DistanceCurve> distance_curves(const std::vector<std::pair<int, std::string>>& checkpoints,
                                           int row_index, const std::vector<int>& radii);

void write_distance_csv(const std::string& path, const DistanceCurve& curve);

/// Accuracy on quadrant-swapped copies of the given samples.
double quadrant_swap_eval(const Network& net, const Dataset& data, const std::vector<int>& indices);

/// Median over folds of each metric, per (net, augmentation, intensity)
/// cell, at the final epoch (or the best-validation epoch).
struct MedianRow {
    std::string net;
    std::string aug;
    double intensity = 0;
    int folds = 0;
    EpochMetrics medians;
};

std::vector<MedianRow> median_table(const std::vector<RunRecord>& records, bool use_best_epoch = false);

/// Aligned text, one row per (aug intensity) with CNN/FCN column pairs
/// where both nets are present.
std::string render_median_table(const std::vector<MedianRow>& rows);
void write_median_table_csv(const std::string& path, const std::vector<MedianRow>& rows);

}  // namespace fcn

#endif  // FCN_ANALYSIS_HPP
