#pragma once

#include <vector>

namespace flowse {

/// Exact q-quantile of a multiset, computed by full sort with linear
/// interpolation between order statistics. q must lie in (0, 1); the input
/// must be non-empty.
double exact_quantile(std::vector<double> values, double q);

}  // namespace flowse
