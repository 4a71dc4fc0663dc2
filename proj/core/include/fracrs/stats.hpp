#pragma once

#include <cstdint>
#include <utility>

namespace fracrs {

/// Exact (Clopper-Pearson) two-sided binomial confidence interval for x
/// successes in n trials at the given confidence level. Returns
/// {lower, upper}; the lower limit is 0 when x = 0 and the upper is 1 when
/// x = n.
std::pair<double, double> clopper_pearson(std::uint64_t x, std::uint64_t n,
                                          double confidence = 0.95);

}  // namespace fracrs
