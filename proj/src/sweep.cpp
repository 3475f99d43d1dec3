#include "coulho/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace coulho {

void SweepConfig::validate() const {
  if (!std::isfinite(gamma) || !std::isfinite(a_min) || !std::isfinite(a_max))
    throw std::invalid_argument("sweep: gamma and the a range must be finite");
  if (!(a_min < a_max)) throw std::invalid_argument("sweep: a_min must be below a_max");
  if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
  if (levels < 1) throw std::invalid_argument("sweep: levels must be at least 1");
  if (n_max < 0) throw std::invalid_argument("sweep: n_max must be non-negative");
  if (basis_size < levels) throw std::invalid_argument("sweep: basis size must be at least the number of levels");
}

std::vector<double> sweep_grid(const SweepConfig& config) {
  config.validate();
  std::vector<double> grid(static_cast<std::size_t>(config.steps));
  const double span = config.a_max - config.a_min;
  for (int i = 0; i < config.steps; ++i)
    grid[static_cast<std::size_t>(i)] = config.a_min + span * static_cast<double>(i) / static_cast<double>(config.steps - 1);
  grid.back() = config.a_max;
  return grid;
}

namespace {

SweepRow solve_row(const SweepConfig& config, double a) {
  SweepRow row;
  row.a = a;
  row.W.assign(static_cast<std::size_t>(config.levels), std::numeric_limits<double>::quiet_NaN());
  SpectrumOptions opts;
  opts.min_levels = config.levels;
  try {
    const SpectrumResult res = spectrum({config.gamma, a}, config.basis_size, opts);
    row.usable_N = res.usable_N;
    for (std::size_t v = 0; v < row.W.size(); ++v) {
      row.W[v] = res.eigenvalues[v];
      row.max_convergence = std::max(row.max_convergence, res.convergence_estimate[v]);
    }
    const bool unconverged = !(row.max_convergence <= kSweepConvergenceTolerance);
    if (res.shrunk && unconverged)
      row.status = "shrunk;unconverged";
    else if (res.shrunk)
      row.status = "shrunk";
    else if (unconverged)
      row.status = "unconverged";
    else
      row.status = "ok";
  } catch (const BasisShortfall& e) {
    row.usable_N = e.usable();
    row.max_convergence = std::numeric_limits<double>::infinity();
    row.status = "shortfall";
  }
  return row;
}

template <class Task>
void run_parallel(std::size_t count, unsigned threads, Task task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) task(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

SweepTable compute_sweep(const SweepConfig& config) {
  const std::vector<double> grid = sweep_grid(config);
  SweepTable table;
  table.config = config;
  table.rows.resize(grid.size());

  struct Pending {
    int n;
    int k;
    double root;
    double W;
  };
  std::vector<Pending> pending;
  for (int n = 0; n <= config.n_max; ++n) {
    const TruncationSolution sol = truncation_spectrum(n, config.gamma);
    for (std::size_t i = 0; i < sol.roots.size(); ++i) {
      const double root = sol.roots.roots[i];
      if (root < config.a_min || root > config.a_max) continue;
      pending.push_back({n, static_cast<int>(i) + 1, root, sol.W});
    }
  }
  table.points.resize(pending.size());

  const std::size_t total = grid.size() + pending.size();
  run_parallel(total, config.threads, [&](std::size_t idx) {
    if (idx < grid.size()) {
      table.rows[idx] = solve_row(config, grid[idx]);
      return;
    }
    const Pending& p = pending[idx - grid.size()];
    SpectrumOptions opts;
    opts.estimate_convergence = false;
    opts.min_levels = p.k;
    const SpectrumResult res = spectrum({config.gamma, p.root}, config.basis_size, opts);
    SweepPoint& pt = table.points[idx - grid.size()];
    pt.n = p.n;
    pt.k = p.k;
    pt.a_root = p.root;
    pt.W = p.W;
    pt.matched_level = p.k - 1;
    pt.W_variational = res.eigenvalue(static_cast<std::size_t>(p.k - 1));
    pt.mismatch = std::abs(pt.W_variational - p.W);
  });
  return table;
}

}  // namespace coulho
