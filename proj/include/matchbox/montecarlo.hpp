#ifndef MATCHBOX_MONTECARLO_HPP
#define MATCHBOX_MONTECARLO_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "matchbox/distribution.hpp"
#include "matchbox/rational.hpp"

namespace matchbox {

// Counter-based per-trial randomness: the stream for trial i is a splitmix64
// sequence keyed by (seed, i). Trial outcomes depend only on that pair, so
// any partition of the trial range across workers reproduces the same draws.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : state_(mix(seed ^ mix(stream + kGamma))) {}

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

// Simulation settings. The exact p collapses to double precision exactly
// once, here; that single value drives every Bernoulli draw.
struct SimConfig {
  std::uint32_t n;
  Rational p;
  double p_sample;
  std::uint64_t trials;
  std::uint64_t seed;

  SimConfig(std::uint32_t n_, Rational p_, std::uint64_t trials_, std::uint64_t seed_)
      : n(n_), p(std::move(p_)), p_sample(to_double(p)), trials(trials_), seed(seed_) {
    if (p <= 0 || p >= 1) {
      throw std::domain_error("selection probability must satisfy 0 < p < 1, got " +
                              to_fraction_string(p));
    }
    if (trials == 0) throw std::domain_error("trials must be >= 1");
  }
};

struct SimReport {
  std::vector<std::uint64_t> counts;  // outcome histogram over r = 0..n
  std::uint64_t trials = 0;
  double tv_distance = 0.0;
  double chi_square = 0.0;
};

// One run of the drawing process: select box one with probability p else box
// two; a selected box with a match left loses it; a selected box found empty
// stops the run, and the other box's remaining count is the outcome. Finding
// a box empty is a failed draw attempt, not the moment its count reaches
// zero, which is what gives r = 0 positive probability.
inline std::uint32_t simulate_once(std::uint32_t n, double p, TrialRng& rng) {
  std::uint32_t box_one = n;
  std::uint32_t box_two = n;
  for (;;) {
    const bool picked_one = rng.next_unit() < p;
    std::uint32_t& picked = picked_one ? box_one : box_two;
    if (picked == 0) return picked_one ? box_two : box_one;
    --picked;
  }
}

struct Divergence {
  double tv_distance;
  double chi_square;
};

// Total variation distance (1/2) sum_r |counts_r/trials - exact_r| and the
// chi-square statistic against expected counts.
inline Divergence divergence(const std::vector<std::uint64_t>& counts,
                             std::uint64_t trials, const Pmf& exact) {
  if (counts.size() != exact.size()) {
    throw std::invalid_argument("histogram and pmf support sizes differ");
  }
  double tv = 0.0;
  double chi = 0.0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    const double expected = to_double(exact[r]);
    const double observed = static_cast<double>(counts[r]) / static_cast<double>(trials);
    tv += std::abs(observed - expected);
    const double expected_count = expected * static_cast<double>(trials);
    const double delta = static_cast<double>(counts[r]) - expected_count;
    chi += delta * delta / expected_count;
  }
  return {0.5 * tv, chi};
}

// Runs config.trials independent trials and scores the empirical histogram
// against the exact pmf. The report is identical for any worker count and
// any scheduling, given the same config: per-trial streams are keyed by
// (seed, trial index) and the per-worker histograms are summed in index
// order, which is an exact integer reduction.
inline SimReport run_simulation(const SimConfig& config, const Pmf& exact,
                                unsigned workers = 1) {
  if (exact.size() != static_cast<std::size_t>(config.n) + 1) {
    throw std::invalid_argument("exact pmf must have length n + 1");
  }
  if (workers == 0) workers = 1;

  std::vector<std::vector<std::uint64_t>> histograms(
      workers, std::vector<std::uint64_t>(config.n + 1, 0));

  const auto run_range = [&config, &histograms](unsigned w, std::uint64_t begin,
                                                std::uint64_t end) {
    auto& histogram = histograms[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      TrialRng rng(config.seed, i);
      ++histogram[simulate_once(config.n, config.p_sample, rng)];
    }
  };

  if (workers == 1) {
    run_range(0, 0, config.trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = config.trials / workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t end = (w + 1 == workers) ? config.trials : begin + chunk;
      pool.emplace_back(run_range, w, begin, end);
      begin = end;
    }
    for (auto& worker : pool) worker.join();
  }

  SimReport report;
  report.counts.assign(config.n + 1, 0);
  for (const auto& histogram : histograms) {
    for (std::size_t r = 0; r < report.counts.size(); ++r) {
      report.counts[r] += histogram[r];
    }
  }
  report.trials = config.trials;
  const Divergence scores = divergence(report.counts, config.trials, exact);
  report.tv_distance = scores.tv_distance;
  report.chi_square = scores.chi_square;
  return report;
}

}  // namespace matchbox

#endif  // MATCHBOX_MONTECARLO_HPP
