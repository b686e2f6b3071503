#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holo/seed.hpp"

namespace holo {

/// Input side A of a leg bipartition {A | complement}. |A| may not exceed half the legs.
class Bipartition {
public:
  /// Throws std::invalid_argument for repeated or out-of-range legs, or |A| > legs / 2.
  Bipartition(std::size_t leg_count, std::vector<std::size_t> a_legs);

  /// Cyclic window of `length` legs starting at `start`.
  static Bipartition window(std::size_t leg_count, std::size_t start, std::size_t length);

  [[nodiscard]] std::size_t leg_count() const noexcept { return leg_count_; }
  [[nodiscard]] const std::vector<std::size_t>& a_legs() const noexcept { return a_legs_; }
  [[nodiscard]] std::vector<std::size_t> complement() const;
  [[nodiscard]] bool contains(std::size_t leg) const;

private:
  std::size_t leg_count_;
  std::vector<std::size_t> a_legs_;
};

/// Whether the seed tensor, read as a map from A to its complement, is
/// proportional to an isometry. Holds iff no nontrivial element of the
/// tensor-state stabilizer group is supported inside A.
[[nodiscard]] bool is_isometry_for(const SeedCode& seed, const Bipartition& part);

/// Isometry for every cyclically contiguous window of at most half the legs.
[[nodiscard]] bool check_block_perfect(const SeedCode& seed);

/// Isometry for every subset of at most half the legs.
[[nodiscard]] bool check_perfect(const SeedCode& seed);

/// First subset (smallest size, then lexicographic) that fails the isometry
/// test, if any. Used for reporting.
[[nodiscard]] std::optional<Bipartition> find_non_isometric_subset(const SeedCode& seed);

/// Largest leg count the dense oracle accepts.
inline constexpr std::size_t kDenseOracleMaxLegs = 12;

/// Builds the tensor-state amplitudes by projecting onto the joint +1
/// eigenspace of the generators, reshapes them into a
/// 2^|complement| x 2^|A| matrix M and tests M^dagger M against a multiple of
/// the identity (max elementwise deviation 1e-9 after normalization).
/// Throws capacity_error above kDenseOracleMaxLegs legs.
[[nodiscard]] bool dense_isometry_oracle(const SeedCode& seed, const Bipartition& part);

}  // namespace holo
