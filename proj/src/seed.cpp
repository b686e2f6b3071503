#include "holo/seed.hpp"

#include <algorithm>
#include <stdexcept>

namespace holo {

std::string_view to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::steane:
      return "steane";
    case SeedKind::five_qubit:
      return "five_qubit";
  }
  return "unknown";
}

SeedKind parse_seed_kind(std::string_view name) {
  if (name == "steane") {
    return SeedKind::steane;
  }
  if (name == "five_qubit") {
    return SeedKind::five_qubit;
  }
  throw std::invalid_argument("unknown seed '" + std::string(name) + "' (expected steane or five_qubit)");
}

std::size_t SeedCode::physical_before_logical() const {
  const std::size_t legs = leg_count();
  const std::size_t before = (logical_leg + legs - 1) % legs;
  const auto it = std::find(physical_legs.begin(), physical_legs.end(), before);
  return static_cast<std::size_t>(it - physical_legs.begin());
}

bool SeedCode::logical_between_adjacent_physicals() const {
  const std::size_t legs = leg_count();
  const std::size_t p = physical_before_logical();
  return physical_legs[(p + 1) % n_physical] == (logical_leg + 1) % legs;
}

PauliString SeedCode::lift_physical(const PauliString& op) const {
  if (op.size() != n_physical) {
    throw std::invalid_argument("operator does not act on the seed's physical qubits");
  }
  PauliString out(leg_count());
  for (std::size_t p = 0; p < n_physical; ++p) {
    out.set_letter(physical_legs[p], op.letter(p));
  }
  out.set_phase_exponent(op.phase_exponent());
  return out;
}

PauliString SeedCode::restrict_physical(const PauliString& legs) const {
  PauliString out(n_physical);
  for (std::size_t p = 0; p < n_physical; ++p) {
    out.set_letter(p, legs.letter(physical_legs[p]));
  }
  out.set_phase_exponent(legs.phase_exponent());
  return out;
}

std::vector<PauliString> tensor_state_generators(const SeedCode& seed) {
  std::vector<PauliString> gens;
  gens.reserve(seed.code_stabilizers.size() + 2);
  for (const auto& s : seed.code_stabilizers) {
    gens.push_back(seed.lift_physical(s));
  }
  PauliString sx = seed.lift_physical(seed.logical_x);
  sx.set_letter(seed.logical_leg, 'X');
  PauliString sz = seed.lift_physical(seed.logical_z);
  sz.set_letter(seed.logical_leg, 'Z');
  gens.push_back(std::move(sx));
  gens.push_back(std::move(sz));
  return gens;
}

SeedCode steane_seed() {
  SeedCode seed;
  seed.n_physical = 7;
  seed.leg_labels = {"1", "2", "3", "4", "5", "6", "L", "7"};
  seed.logical_leg = 6;
  seed.physical_legs = {0, 1, 2, 3, 4, 5, 7};
  // Physical order 1..7.
  seed.code_stabilizers = {
      PauliString::parse("XXIIIXX"), PauliString::parse("IXXXIIX"), PauliString::parse("IIIXXXX"),
      PauliString::parse("ZZIIIZZ"), PauliString::parse("IZZZIIZ"), PauliString::parse("IIIZZZZ"),
  };
  seed.logical_x = PauliString::parse("XXXXXXX");
  seed.logical_z = PauliString::parse("ZZZZZZZ");
  seed.stabilizers = tensor_state_generators(seed);
  return seed;
}

SeedCode five_qubit_seed() {
  SeedCode seed;
  seed.n_physical = 5;
  seed.leg_labels = {"1", "2", "3", "4", "5", "L"};
  seed.logical_leg = 5;
  seed.physical_legs = {0, 1, 2, 3, 4};
  seed.code_stabilizers = {
      PauliString::parse("XZZXI"),
      PauliString::parse("IXZZX"),
      PauliString::parse("XIXZZ"),
      PauliString::parse("ZXIXZ"),
  };
  seed.logical_x = PauliString::parse("XXXXX");
  seed.logical_z = PauliString::parse("ZZZZZ");
  seed.stabilizers = tensor_state_generators(seed);
  return seed;
}

SeedCode make_seed(SeedKind kind) {
  return kind == SeedKind::steane ? steane_seed() : five_qubit_seed();
}

SeedCode reorder_legs(const SeedCode& seed, const std::vector<std::size_t>& order) {
  const std::size_t legs = seed.leg_count();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != legs || sorted[i] != i) {
      throw std::invalid_argument("leg order must be a permutation of all legs");
    }
  }
  std::vector<std::size_t> new_pos(legs);
  for (std::size_t i = 0; i < legs; ++i) {
    new_pos[order[i]] = i;
  }
  SeedCode out = seed;
  for (std::size_t i = 0; i < legs; ++i) {
    out.leg_labels[i] = seed.leg_labels[order[i]];
  }
  out.logical_leg = new_pos[seed.logical_leg];
  for (auto& leg : out.physical_legs) {
    leg = new_pos[leg];
  }
  for (std::size_t g = 0; g < seed.stabilizers.size(); ++g) {
    PauliString moved(legs);
    for (std::size_t i = 0; i < legs; ++i) {
      moved.set_letter(i, seed.stabilizers[g].letter(order[i]));
    }
    moved.set_phase_exponent(seed.stabilizers[g].phase_exponent());
    out.stabilizers[g] = std::move(moved);
  }
  return out;
}

}  // namespace holo
