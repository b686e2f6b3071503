#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "holo/code_builder.hpp"
#include "holo/gf2.hpp"
#include "holo/seed.hpp"
#include "holo/tiling.hpp"

namespace holo {

/// Erased-qubit mask over the boundary (1 = lost).
struct ErasurePattern {
  BitVector mask;

  [[nodiscard]] std::size_t size() const noexcept { return mask.size(); }
  [[nodiscard]] std::size_t weight() const noexcept { return mask.popcount(); }
  /// Accepts a string over {0,1}; throws std::invalid_argument otherwise.
  static ErasurePattern parse(std::string_view bits);
  static ErasurePattern none(std::size_t n) { return {BitVector(n)}; }
  static ErasurePattern all(std::size_t n);
};

/// Which logical operators must avoid the erasure.
enum class LogicalCheck { both, x_only };

/// Entries of v at the erased positions, in qubit order.
[[nodiscard]] BitVector filter(const BitVector& v, const ErasurePattern& e);

struct OptimalVerdict {
  bool recoverable = false;
  /// Generator coefficients cleaning each logical off the erasure, when it exists.
  std::optional<BitVector> lambda_x;
  std::optional<BitVector> lambda_z;
};

/// Row-reduction decoder: for each required logical, solves for generator
/// coefficients whose product with the logical vanishes on every erased qubit
/// (both the x and the z part of each erased qubit are filtered).
[[nodiscard]] OptimalVerdict is_recoverable_optimal(const HolographicCode& code, const ErasurePattern& e,
                                                    std::size_t tile, LogicalCheck check = LogicalCheck::both,
                                                    EliminationStats* stats = nullptr);

/// Exhaustive search over all 2^(n-k) generator products. Throws capacity_error above 20 generators.
inline constexpr std::size_t kBruteForceMaxGenerators = 20;
[[nodiscard]] bool brute_force_recoverable(const HolographicCode& code, const ErasurePattern& e, std::size_t tile,
                                           LogicalCheck check = LogicalCheck::both);

/// Optimal decoder specialised to growing erasures: qubits are erased one at
/// a time and the verdict for the current set is available after each step.
/// Columns of the generator/logical matrix are kept in an echelon basis; the
/// logical becomes unrecoverable once the span of erased columns contains a
/// vector vanishing on every generator row but not on a logical row.
class IncrementalDecoder {
public:
  IncrementalDecoder(const HolographicCode& code, std::size_t tile, LogicalCheck check = LogicalCheck::both);

  /// Erases qubit q; returns whether the logical is still recoverable.
  bool erase(std::size_t q);
  [[nodiscard]] bool recoverable() const noexcept { return recoverable_; }
  void reset();

  /// Number of erasures along `order` before the first unrecoverable prefix
  /// (order.size() + 1 if every prefix is recoverable). Resets first.
  std::size_t first_failure(const std::vector<std::size_t>& order);

  [[nodiscard]] const EliminationStats& stats() const noexcept { return basis_.stats(); }

private:
  std::size_t generators_;
  LogicalCheck check_;
  std::vector<BitVector> x_columns_;
  std::vector<BitVector> z_columns_;
  XorBasis basis_;
  bool recoverable_ = true;
};

/// Geometric decoder. A tile joins the recovered region once the legs not yet
/// known, together with its logical leg, fit inside a set of at most half the
/// legs across which the seed is an isometry; for seeds that are not perfect
/// that set must be a contiguous window of the leg order. Boundary legs are
/// known when not erased, and every leg of a recovered tile becomes known.
class GreedyDecoder {
public:
  GreedyDecoder(const Tiling& t, const SeedCode& seed);

  /// Recovered flag per tile at the fixed point.
  [[nodiscard]] std::vector<bool> recovered_region(const ErasurePattern& e) const;
  [[nodiscard]] bool recoverable(const ErasurePattern& e, std::size_t tile) const;

  /// Whether a tile whose unknown slots are `unknown_mask` (bit s = slot s) can be absorbed.
  [[nodiscard]] bool absorbable(std::size_t tile, std::uint32_t unknown_mask) const;

private:
  const Tiling* tiling_;
  std::vector<bool> central_table_;
  std::vector<bool> outer_table_;
};

[[nodiscard]] bool is_recoverable_greedy(const Tiling& t, const SeedCode& seed, const ErasurePattern& e,
                                         std::size_t tile);

}  // namespace holo
