#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "holo/pauli.hpp"

namespace holo {

enum class SeedKind { steane, five_qubit };

[[nodiscard]] std::string_view to_string(SeedKind kind);
/// Accepts "steane" and "five_qubit"; throws std::invalid_argument otherwise.
[[nodiscard]] SeedKind parse_seed_kind(std::string_view name);

/// Stabilizer presentation of a seed tensor.
///
/// The tensor has leg_count() = n_physical + 1 legs listed in a fixed cyclic
/// order; one of them (logical_leg) is the bulk input. Physical qubit p
/// (0-based, in the code's own numbering) sits at leg physical_legs[p].
struct SeedCode {
  std::size_t n_physical = 0;
  std::vector<std::string> leg_labels;
  std::size_t logical_leg = 0;
  std::vector<std::size_t> physical_legs;
  /// Generators of the tensor state, one PauliString over all legs each.
  std::vector<PauliString> stabilizers;
  /// Code stabilizers and logicals on the n_physical qubits (physical order).
  std::vector<PauliString> code_stabilizers;
  PauliString logical_x;
  PauliString logical_z;

  [[nodiscard]] std::size_t leg_count() const noexcept { return leg_labels.size(); }
  /// Physical qubit immediately before the logical leg in the cyclic order.
  [[nodiscard]] std::size_t physical_before_logical() const;
  /// Whether the 2-input window (before L, L, after L) is cyclically contiguous.
  [[nodiscard]] bool logical_between_adjacent_physicals() const;
  /// Lifts an operator on the physical qubits to the legs, identity on L.
  [[nodiscard]] PauliString lift_physical(const PauliString& op) const;
  /// Restricts a leg operator to the physical qubits.
  [[nodiscard]] PauliString restrict_physical(const PauliString& legs) const;
};

/// Steane tensor with leg order 1,2,3,4,5,6,L,7 and the eight generators
/// S_1..S_6, S_Xbar = X^8, S_Zbar = Z^8.
[[nodiscard]] SeedCode steane_seed();

/// [[5,1,3]] tensor: cyclic shifts of XZZXI, logicals X^5 and Z^5, leg order 1..5,L.
[[nodiscard]] SeedCode five_qubit_seed();

[[nodiscard]] SeedCode make_seed(SeedKind kind);

/// Tensor-state generators of an [[n,1]] code: each code stabilizer with
/// identity on L, plus Xbar (x) X_L and Zbar (x) Z_L.
[[nodiscard]] std::vector<PauliString> tensor_state_generators(const SeedCode& seed);

/// Returns a copy of `seed` whose cyclic leg order is permuted: new leg i is old leg order[i].
[[nodiscard]] SeedCode reorder_legs(const SeedCode& seed, const std::vector<std::size_t>& order);

}  // namespace holo
