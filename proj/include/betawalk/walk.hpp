#pragma once

// Return probabilities of the simple symmetric walk on Z^k, with two
// independent oracles: exhaustive path enumeration and seeded Monte Carlo.

#include <betawalk/compositions.hpp>
#include <betawalk/exact.hpp>
#include <betawalk/numeric.hpp>
#include <betawalk/parallel.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace betawalk {

struct WalkSpec {
  unsigned dimension = 1;
  unsigned half_steps = 1;  // walk length 2n

  WalkSpec(unsigned k, unsigned n) : dimension(k), half_steps(n) {
    if (k < 1) throw std::invalid_argument("walk dimension must be >= 1");
    if (n < 1) throw std::invalid_argument("walk half-steps must be >= 1");
  }
  BigRational step_probability() const { return make_rational(1, 2 * dimension); }
  unsigned steps() const { return 2 * half_steps; }
};

/// N_2n paths back at the origin out of (2k)^(2n).
struct PathCount {
  BigInt count;
  BigInt total_paths;

  BigRational probability() const { return make_rational(count, total_paths); }
};

/// Exact count sum_{i_1+..+i_k=n} (2n)! / prod i_j!^2 with its total.
inline PathCount return_path_count(unsigned k, unsigned n) {
  const WalkSpec spec(k, n);
  BigInt sum = 0;
  const BigInt top = factorial(2 * n);
  for (const auto& comp : WeakCompositions(n, k)) {
    BigInt den = 1;
    for (unsigned i : comp.parts()) {
      const BigInt f = factorial(i);
      den *= f * f;
    }
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), den.get_mpz_t());
    sum += t;
  }
  return {sum, pow(BigInt(2 * k), 2 * n)};
}

/// P_00^(2n)(k) = (1/(2k))^(2n) sum_{i_1+..+i_k=n} (2n)! / prod i_j!^2.
inline BigRational return_probability(unsigned k, unsigned n) { return return_path_count(k, n).probability(); }

/// Zero: the walk changes parity at every step.
inline BigRational return_probability_odd(unsigned k, unsigned steps) {
  if (k < 1) throw std::invalid_argument("walk dimension must be >= 1");
  if (steps % 2 == 0) throw std::invalid_argument("return_probability_odd: steps must be odd");
  return 0;
}

/// C(2n,n) / 4^n
inline BigRational closed_form_1d(unsigned n) { return make_rational(binomial(2 * n, n), pow(BigInt(4), n)); }

/// C(2n,n)^2 / 16^n
inline BigRational closed_form_2d(unsigned n) {
  return make_rational(pow(binomial(2 * n, n), 2), pow(BigInt(16), n));
}

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(BigInt required, std::uint64_t budget)
      : std::runtime_error("path budget exceeded: enumeration needs " + required.get_str() + " paths, budget is " +
                           std::to_string(budget)),
        required_(std::move(required)),
        budget_(budget) {}
  const BigInt& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultPathBudget = 10'000'000;

/// Enumerates all (2k)^(2n) step sequences as base-2k odometer digits and
/// counts those with zero displacement on every axis. Direction d moves axis
/// d/2 by +1 (d even) or -1 (d odd).
inline PathCount brute_force_return(unsigned k, unsigned n, std::uint64_t budget = kDefaultPathBudget) {
  const WalkSpec spec(k, n);
  const BigInt total = pow(BigInt(2 * k), spec.steps());
  if (total > BigInt(std::to_string(budget))) throw BudgetExceeded(total, budget);

  const unsigned dirs = 2 * k;
  const unsigned len = spec.steps();
  std::vector<unsigned> digit(len, 0);
  std::vector<long> pos(k, 0);
  pos[0] = static_cast<long>(len);  // every step starts as direction 0 (+1 on axis 0)
  unsigned nonzero = 1;

  auto move = [&](unsigned d, int sign) {
    long& x = pos[d / 2];
    const bool was_zero = x == 0;
    x += (d % 2 == 0 ? 1 : -1) * sign;
    if (was_zero && x != 0) ++nonzero;
    if (!was_zero && x == 0) --nonzero;
  };

  std::uint64_t hits = 0;
  for (;;) {
    if (nonzero == 0) ++hits;
    unsigned i = 0;
    while (i < len && digit[i] == dirs - 1) {
      move(digit[i], -1);
      digit[i] = 0;
      move(0, +1);
      ++i;
    }
    if (i == len) break;
    move(digit[i], -1);
    ++digit[i];
    move(digit[i], +1);
  }
  return {BigInt(static_cast<unsigned long>(hits)), total};
}

struct SimulationResult {
  std::string kind;  // "walk" or "beta"
  unsigned dimension = 1;
  unsigned half_steps = 1;
  std::uint64_t trials = 0;
  /// Walks that ended at the origin (walk simulations only).
  std::uint64_t hits = 0;
  double estimate = 0;
  double std_error = 0;
  BigRational exact_reference;
  double z_score = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  bool within(double z) const { return std::fabs(z_score) < z; }
};

namespace detail {

/// Stream for one worker, a pure function of (seed, worker).
inline std::mt19937_64 worker_stream(std::uint64_t seed, unsigned worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker), 0x6a09e667u};
  return std::mt19937_64(seq);
}

/// Uniform integer in [0, bound) by rejection; the standard distributions are
/// not reproducible across library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

/// Uniform on the open interval (0, 1).
inline double uniform_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Trials handled by `worker` when trial t goes to worker t mod workers.
inline std::uint64_t trials_for(std::uint64_t trials, unsigned workers, unsigned worker) {
  return trials / workers + (worker < trials % workers ? 1 : 0);
}

inline double z_score(double estimate, double reference, double std_error) {
  if (std_error > 0) return (estimate - reference) / std_error;
  return estimate == reference ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace detail

/// Fraction of `trials` walks of 2n uniform unit steps that end at the origin.
inline SimulationResult simulate_walk(const WalkSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                      unsigned workers = 1) {
  if (trials < 1) throw std::invalid_argument("simulate_walk: trials must be >= 1");
  workers = std::max(1u, workers);
  const unsigned k = spec.dimension;
  const unsigned steps = spec.steps();

  const auto hits_per_worker = run_workers(workers, [&](unsigned w) {
    auto rng = detail::worker_stream(seed, w);
    std::vector<long> pos(k);
    std::uint64_t hits = 0;
    const std::uint64_t mine = detail::trials_for(trials, workers, w);
    for (std::uint64_t t = 0; t < mine; ++t) {
      std::fill(pos.begin(), pos.end(), 0);
      for (unsigned s = 0; s < steps; ++s) {
        const auto d = detail::uniform_below(rng, 2 * k);
        pos[d / 2] += (d % 2 == 0) ? 1 : -1;
      }
      bool home = true;
      for (long x : pos) home = home && x == 0;
      hits += home ? 1 : 0;
    }
    return hits;
  });

  SimulationResult r;
  r.kind = "walk";
  r.dimension = k;
  r.half_steps = spec.half_steps;
  r.trials = trials;
  r.seed = seed;
  r.workers = workers;
  for (auto h : hits_per_worker) r.hits += h;
  r.estimate = static_cast<double>(r.hits) / static_cast<double>(trials);
  r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(trials));
  r.exact_reference = return_probability(k, spec.half_steps);
  r.z_score = detail::z_score(r.estimate, to_double(r.exact_reference), r.std_error);
  return r;
}

/// Monte Carlo mean of ((V_1+..+V_k)/k)^(2n) with V_i = 2Y_i - 1, Y_i ~ Be(1/2,1/2),
/// sampled as V = -cos(pi W), W uniform on (0,1).
inline SimulationResult simulate_beta_moment(unsigned k, unsigned n, std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers = 1) {
  const WalkSpec spec(k, n);
  if (trials < 1) throw std::invalid_argument("simulate_beta_moment: trials must be >= 1");
  workers = std::max(1u, workers);

  struct Partial {
    CompensatedSum<double> sum;
    CompensatedSum<double> sum_sq;
  };
  const auto partials = run_workers(workers, [&](unsigned w) {
    auto rng = detail::worker_stream(seed, w);
    Partial acc;
    const std::uint64_t mine = detail::trials_for(trials, workers, w);
    for (std::uint64_t t = 0; t < mine; ++t) {
      double s = 0;
      for (unsigned i = 0; i < k; ++i) s += -std::cos(std::numbers::pi * detail::uniform_open(rng));
      const double x = std::pow(s / k, static_cast<int>(2 * n));
      acc.sum += x;
      acc.sum_sq += x * x;
    }
    return acc;
  });

  CompensatedSum<double> sum, sum_sq;
  for (const auto& p : partials) {
    sum.merge(p.sum);
    sum_sq.merge(p.sum_sq);
  }
  const auto N = static_cast<double>(trials);
  SimulationResult r;
  r.kind = "beta";
  r.dimension = k;
  r.half_steps = n;
  r.trials = trials;
  r.seed = seed;
  r.workers = workers;
  r.estimate = sum.value() / N;
  const double var = trials > 1 ? std::max(0.0, (sum_sq.value() - sum.value() * r.estimate) / (N - 1)) : 0.0;
  r.std_error = std::sqrt(var / N);
  r.exact_reference = return_probability(k, n);
  r.z_score = detail::z_score(r.estimate, to_double(r.exact_reference), r.std_error);
  return r;
}

}  // namespace betawalk
