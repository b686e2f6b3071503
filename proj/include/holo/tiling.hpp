#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace holo {

/// One leg slot of one tile.
struct LegRef {
  std::size_t tile = 0;
  std::size_t slot = 0;
  friend bool operator==(const LegRef&, const LegRef&) = default;
};

/// An n-gon of the tiling. Slots are numbered clockwise; slot s is the edge
/// from corners[s] to corners[(s + 1) % n]. Input slots form the cyclic
/// window [input_start, input_start + input_count).
struct Tile {
  std::size_t id = 0;
  std::size_t layer = 0;
  std::size_t input_start = 0;
  std::size_t input_count = 0;
  /// Contracted partner per slot; nullopt marks a boundary (physical) leg.
  std::vector<std::optional<LegRef>> partners;
  std::vector<std::size_t> corners;

  [[nodiscard]] std::size_t sides() const noexcept { return partners.size(); }
  [[nodiscard]] bool is_input(std::size_t slot) const noexcept;
};

/// A contracted edge, directed from an output slot to an input slot.
struct Contraction {
  LegRef output;
  LegRef input;
};

struct TileCensus {
  std::size_t no_input = 0;
  std::size_t one_input = 0;
  std::size_t two_inputs = 0;
  friend bool operator==(const TileCensus&, const TileCensus&) = default;
};

/// Layered patch of the hyperbolic tiling by n-gons with four tiles at every vertex.
class Tiling {
public:
  Tiling(std::size_t n_sides, std::size_t radius, std::vector<Tile> tiles, std::vector<Contraction> contractions,
         std::vector<LegRef> boundary, std::size_t vertex_count);

  [[nodiscard]] std::size_t n_sides() const noexcept { return n_sides_; }
  [[nodiscard]] std::size_t radius() const noexcept { return radius_; }
  [[nodiscard]] const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  [[nodiscard]] const Tile& tile(std::size_t id) const { return tiles_.at(id); }
  [[nodiscard]] const std::vector<Contraction>& contractions() const noexcept { return contractions_; }
  [[nodiscard]] const std::vector<LegRef>& boundary() const noexcept { return boundary_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }

  /// Position of a boundary leg in the cyclic boundary order.
  [[nodiscard]] std::optional<std::size_t> boundary_index(LegRef leg) const;
  /// Tiles ordered so that every tile comes after the tiles feeding its inputs
  /// (ties broken by lowest id).
  [[nodiscard]] const std::vector<std::size_t>& push_order() const noexcept { return push_order_; }

  friend bool operator==(const Tiling& a, const Tiling& b);

private:
  std::size_t n_sides_;
  std::size_t radius_;
  std::vector<Tile> tiles_;
  std::vector<Contraction> contractions_;
  std::vector<LegRef> boundary_;
  std::size_t vertex_count_;
  std::vector<std::vector<std::size_t>> boundary_index_;  // [tile][slot] -> index or npos
  std::vector<std::size_t> push_order_;
};

/// Builds layers 0..radius-1: the central tile, then for every perimeter edge
/// a tile sharing that edge and for every perimeter vertex touched by a single
/// placed tile a tile sharing only that vertex. radius == 1 is the bare seed.
/// Throws std::invalid_argument for radius 0 or n_sides < 5, and
/// capacity_error when the boundary would exceed kMaxBoundaryLegs.
inline constexpr std::size_t kMaxBoundaryLegs = 40000;
[[nodiscard]] Tiling build_tiling(std::size_t n_sides, std::size_t radius);

[[nodiscard]] TileCensus tile_census(const Tiling& t);

/// Unpaired legs in cyclic boundary order.
[[nodiscard]] std::vector<LegRef> boundary_legs(const Tiling& t);

/// Plain-text adjacency listing: a header line, then one line per tile
/// `<id> <layer> in=<slots|-> <partner>...` with partners `tile.slot` or `B<index>`.
void write_tiling(std::ostream& os, const Tiling& t);
[[nodiscard]] std::string to_text(const Tiling& t);

}  // namespace holo
