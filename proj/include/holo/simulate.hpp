#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holo/code_builder.hpp"
#include "holo/erasure.hpp"
#include "holo/seed.hpp"
#include "holo/tiling.hpp"

namespace holo {

enum class DecoderKind { optimal, greedy };
[[nodiscard]] std::string to_string(DecoderKind d);
[[nodiscard]] DecoderKind parse_decoder(const std::string& name);

struct SimulationConfig {
  SeedKind seed = SeedKind::steane;
  std::size_t radius = 1;
  DecoderKind decoder = DecoderKind::optimal;
  std::size_t trials = 10000;
  std::uint64_t rng_seed = 1;
  /// Weights with at most this many patterns are enumerated exhaustively.
  std::uint64_t exact_cutoff = 1000000;
  std::size_t threads = 1;
  LogicalCheck check = LogicalCheck::both;
  std::size_t tile = 0;

  /// Throws std::invalid_argument for trials == 0, threads == 0 or radius == 0.
  void validate() const;
};

struct CurveEntry {
  std::size_t a = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
  bool exact = false;
};

struct RecoveryCurve {
  std::size_t n_sides = 0;
  std::size_t radius = 0;
  DecoderKind decoder = DecoderKind::optimal;
  std::size_t n = 0;
  /// One entry per a = 0..n.
  std::vector<CurveEntry> entries;
  /// Free-form provenance written as the leading comment line of the CSV.
  std::string metadata;
};

/// 95% Wilson score interval.
struct Interval {
  double low = 0;
  double high = 0;
};
[[nodiscard]] Interval wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// Deterministic generator for one trial: keyed by (master seed, sides, radius, trial).
[[nodiscard]] std::mt19937_64 trial_stream(std::uint64_t master, std::size_t n_sides, std::size_t radius,
                                           std::uint64_t trial);
/// Uniform integer in [0, bound) by rejection; identical on every platform.
[[nodiscard]] std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniformly random ordering of 0..n-1 (Fisher-Yates).
[[nodiscard]] std::vector<std::size_t> random_order(std::mt19937_64& rng, std::size_t n);

/// C(n, a), saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(std::size_t n, std::size_t a);
/// Lexicographic rank-th a-subset of 0..n-1.
[[nodiscard]] std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t a, std::uint64_t rank);

/// Recovery probability per erasure weight. Each trial draws one random
/// qubit ordering; the weight-a pattern of that trial is its first a qubits,
/// so every decoder and every weight sees the same pattern set. Weights with
/// at most exact_cutoff patterns are enumerated instead.
[[nodiscard]] RecoveryCurve estimate_Prec(const HolographicCode& code, const Tiling& tiling, const SeedCode& seed,
                                          const SimulationConfig& cfg);
/// Builds the tiling and code described by cfg, then estimates.
[[nodiscard]] RecoveryCurve estimate_Prec(const SimulationConfig& cfg);

/// p_rec(p) = sum_a C(n,a) p^a (1-p)^(n-a) P_rec(a).
[[nodiscard]] double binomial_mix(const RecoveryCurve& curve, double p);

struct PairCrossing {
  std::size_t radius_a = 0;
  std::size_t radius_b = 0;
  std::optional<double> crossing;
  std::size_t sign_changes = 0;
};

struct ThresholdReport {
  std::vector<PairCrossing> pairs;
  std::optional<double> mean;
  double spread = 0;  // largest distance of a crossing from the mean
  /// Every pair crosses and every crossing lies within `tolerance` of the mean.
  [[nodiscard]] bool stable(double tolerance) const;
};

/// Crossings of successive-radius p_rec curves on (0,1): grid scan for sign
/// changes of the difference (values below 1e-9 in magnitude carry no sign),
/// then bisection of the first change to 1e-4. Throws std::invalid_argument
/// for fewer than two curves or repeated radii.
[[nodiscard]] ThresholdReport find_threshold(std::vector<RecoveryCurve> curves);

void write_curve_csv(const RecoveryCurve& curve, std::ostream& os);
void write_curve_csv(const RecoveryCurve& curve, const std::string& path);
/// Throws parse_error (with line number) on malformed content, io_error if unreadable.
[[nodiscard]] RecoveryCurve read_curve_csv(std::istream& is);
[[nodiscard]] RecoveryCurve read_curve_csv(const std::string& path);

/// `R,p,p_rec` rows for p on a uniform grid of `points` values in [0,1].
void write_mixed_csv(const std::vector<RecoveryCurve>& curves, std::size_t points, std::ostream& os);

/// Line plot of p_rec against p, one polyline per curve.
void write_svg_plot(const std::vector<RecoveryCurve>& curves, std::ostream& os);

}  // namespace holo
