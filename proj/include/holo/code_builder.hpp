#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "holo/pauli.hpp"
#include "holo/seed.hpp"
#include "holo/tiling.hpp"

namespace holo {

/// Boundary stabilizer code of a tiled network. Qubit i is the boundary leg
/// tiling.boundary()[i]; logicals are indexed by tile id.
struct HolographicCode {
  std::size_t n = 0;
  std::size_t k = 0;
  SeedKind seed = SeedKind::steane;
  std::size_t radius = 0;
  std::vector<PauliString> stabilizers;
  std::vector<std::size_t> stabilizer_tile;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;

  /// Ignores stabilizer_tile, which the file format does not carry.
  friend bool operator==(const HolographicCode& a, const HolographicCode& b);
};

/// Rewrites `op`, supported on `input_legs` of the seed tensor, as an
/// equivalent operator on the remaining physical legs. The returned operator
/// is over all seed legs (identity on the inputs and on L) and is the
/// representative whose interleaved (x, z) leg vector is lexicographically
/// smallest. If `op` acts on the logical leg it is pushed together with it.
/// Throws std::invalid_argument if op acts outside input_legs and L, and
/// std::logic_error if the seed admits no extension.
[[nodiscard]] PauliString push_operator(const SeedCode& seed, const std::vector<std::size_t>& input_legs,
                                        const PauliString& op);

/// Per-tile local stabilizers pushed to the boundary. The central tile
/// contributes the seed's code stabilizers verbatim.
[[nodiscard]] std::vector<PauliString> boundary_stabilizers(const Tiling& t, const SeedCode& seed);

struct LogicalPair {
  PauliString x;
  PauliString z;
};
[[nodiscard]] LogicalPair logical_operators(const Tiling& t, const SeedCode& seed, std::size_t tile);

/// Throws std::invalid_argument when the seed does not have one physical leg per tile side.
[[nodiscard]] HolographicCode build_code(const Tiling& t, const SeedCode& seed, SeedKind kind);
[[nodiscard]] HolographicCode build_code(SeedKind kind, std::size_t radius);

[[nodiscard]] std::size_t seed_sides(SeedKind kind);

/// Empty when the code is well formed; otherwise a description of the first violation.
/// Checks generator count, pairwise commutation, independence and logical pairing.
[[nodiscard]] std::string check_code(const HolographicCode& c);

/// True if every generator is X-only or Z-only and the X and Z supports coincide as multisets.
[[nodiscard]] bool is_self_dual_css(const HolographicCode& c);

[[nodiscard]] double asymptotic_rate(std::size_t n_sides);

struct Rational {
  std::size_t num = 0;
  std::size_t den = 1;
  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
[[nodiscard]] Rational code_rate(const HolographicCode& c);

/// Boundary and bulk counts from the layer recurrence, without building the code.
struct SizeRow {
  std::size_t radius = 0;
  std::size_t n = 0;
  std::size_t k = 0;
};
[[nodiscard]] std::vector<SizeRow> size_table(std::size_t n_sides, std::size_t max_radius);

/// Text format: header `n=<n> k=<k> seed=<name> R=<R>`, then `S <+|-> <IXYZ...>`
/// per generator and `LX|LZ <tile> <+|-> <IXYZ...>` per logical.
void export_code(const HolographicCode& c, std::ostream& os);
void export_code(const HolographicCode& c, const std::string& path);
/// Throws parse_error with the offending line number.
[[nodiscard]] HolographicCode import_code(std::istream& is);
[[nodiscard]] HolographicCode import_code(const std::string& path);

}  // namespace holo
