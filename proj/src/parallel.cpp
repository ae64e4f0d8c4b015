#include "hydro/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "hydro/error.hpp"

namespace hydro {

namespace {
std::atomic<int> g_threads{1};
}

void set_num_threads(int n) {
  if (n < 1) fail(ErrorKind::Parameter, "thread count must be >= 1");
  g_threads = n;
}

int num_threads() { return g_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(g_threads.load()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

double ordered_sum(std::size_t n, const std::function<double(std::size_t)>& fn) {
  std::vector<double> partial(n, 0.0);
  parallel_for(n, [&](std::size_t i) { partial[i] = fn(i); });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double ordered_max(std::size_t n, const std::function<double(std::size_t)>& fn) {
  std::vector<double> partial(n, 0.0);
  parallel_for(n, [&](std::size_t i) { partial[i] = fn(i); });
  double m = 0.0;
  for (double p : partial) m = std::max(m, p);
  return m;
}

}  // namespace hydro
