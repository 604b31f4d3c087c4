#ifndef FCN_GRADCHECK_HPP
#define FCN_GRADCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fcn/tensor.hpp"

namespace fcn {

struct GradCheckReport {
    std::string layer;
    int instances = 0;
    double max_rel_error = 0.0;
    bool pass = false;
};

/// Central finite differences against every backward pass, on randomized
/// small instances: conv, free conv (plain and masked), dense, relu,
/// softmax cross-entropy. The check never calls the backward path being
/// verified to produce its reference; numeric gradients come from forward
/// evaluations only. Masked weights are pinned parameters: their analytic
/// gradient must be exactly zero and they are excluded from the numeric
/// sweep.
std::vector<GradCheckReport> run_gradient_checks(std::uint64_t seed, int instances_per_layer,
                                                 double tolerance, double eps);

bool all_passed(const std::vector<GradCheckReport>& reports);

/// rel_err = |analytic - numeric| / max(1, |analytic|, |numeric|)
double gradcheck_rel_error(double analytic, double numeric);

}  // namespace fcn

#endif  // FCN_GRADCHECK_HPP
