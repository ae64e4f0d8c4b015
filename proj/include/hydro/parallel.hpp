#pragma once

#include <cstddef>
#include <functional>

namespace hydro {

/// Worker count used by internal loops. Results never depend on it:
/// reductions combine per-index partials in index order.
void set_num_threads(int n);
int num_threads();

/// Runs fn(i) for i in [0, n), split into contiguous chunks across workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Sums fn(i) over [0, n) in fixed index order.
double ordered_sum(std::size_t n, const std::function<double(std::size_t)>& fn);

/// Maximum of fn(i) over [0, n).
double ordered_max(std::size_t n, const std::function<double(std::size_t)>& fn);

}  // namespace hydro
