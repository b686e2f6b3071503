#include "holo/erasure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "holo/errors.hpp"
#include "holo/tensor_analysis.hpp"

namespace holo {

ErasurePattern ErasurePattern::parse(std::string_view bits) {
  if (bits.find_first_not_of("01") != std::string_view::npos) {
    throw std::invalid_argument("erasure mask must be a string over {0,1}");
  }
  return {BitVector::from_string(bits)};
}

ErasurePattern ErasurePattern::all(std::size_t n) {
  BitVector m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i);
  }
  return {std::move(m)};
}

BitVector filter(const BitVector& v, const ErasurePattern& e) {
  if (v.size() != e.size()) {
    throw std::invalid_argument("filter: vector has " + std::to_string(v.size()) + " bits, erasure has " +
                                std::to_string(e.size()));
  }
  const auto positions = e.mask.set_bits();
  BitVector out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out.set(i, v.get(positions[i]));
  }
  return out;
}

namespace {

void require_pattern(const HolographicCode& code, const ErasurePattern& e, std::size_t tile) {
  if (e.size() != code.n) {
    throw std::invalid_argument("erasure has " + std::to_string(e.size()) + " bits but the code has " +
                                std::to_string(code.n) + " qubits");
  }
  if (tile >= code.k) {
    throw std::invalid_argument("tile " + std::to_string(tile) + " has no logical qubit in this code");
  }
}

// x and z parts of each erased qubit, side by side.
BitVector filtered_symplectic(const PauliString& p, const ErasurePattern& e) {
  const BitVector fx = filter(p.x_bits(), e);
  const BitVector fz = filter(p.z_bits(), e);
  BitVector out(2 * fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) {
    out.set(2 * i, fx.get(i));
    out.set(2 * i + 1, fz.get(i));
  }
  return out;
}

}  // namespace

OptimalVerdict is_recoverable_optimal(const HolographicCode& code, const ErasurePattern& e, std::size_t tile,
                                      LogicalCheck check, EliminationStats* stats) {
  require_pattern(code, e, tile);
  const std::size_t width = 2 * e.weight();
  BitMatrix rows(0, width);
  for (const auto& g : code.stabilizers) {
    rows.append_row(filtered_symplectic(g, e));
  }
  OptimalVerdict v;
  v.lambda_x = solve_combination(rows, filtered_symplectic(code.logical_x[tile], e), stats);
  if (check == LogicalCheck::both) {
    v.lambda_z = solve_combination(rows, filtered_symplectic(code.logical_z[tile], e), stats);
  }
  v.recoverable = v.lambda_x.has_value() && (check == LogicalCheck::x_only || v.lambda_z.has_value());
  return v;
}

bool brute_force_recoverable(const HolographicCode& code, const ErasurePattern& e, std::size_t tile,
                             LogicalCheck check) {
  require_pattern(code, e, tile);
  const std::size_t b = code.stabilizers.size();
  if (b > kBruteForceMaxGenerators) {
    throw capacity_error("brute force limited to " + std::to_string(kBruteForceMaxGenerators) + " generators, got " +
                         std::to_string(b));
  }
  auto cleanable = [&](const PauliString& logical) {
    BitVector x = logical.x_bits();
    BitVector z = logical.z_bits();
    // Gray-code walk visits every product of generators once.
    for (std::uint64_t step = 0;; ++step) {
      if ((x & e.mask).none() && (z & e.mask).none()) {
        return true;
      }
      if (step + 1 == (std::uint64_t{1} << b)) {
        return false;
      }
      const auto flip = static_cast<std::size_t>(std::countr_zero(step + 1));
      x ^= code.stabilizers[flip].x_bits();
      z ^= code.stabilizers[flip].z_bits();
    }
  };
  return cleanable(code.logical_x[tile]) && (check == LogicalCheck::x_only || cleanable(code.logical_z[tile]));
}

IncrementalDecoder::IncrementalDecoder(const HolographicCode& code, std::size_t tile, LogicalCheck check)
    : generators_(code.stabilizers.size()), check_(check), basis_(code.stabilizers.size() + 2) {
  if (tile >= code.k) {
    throw std::invalid_argument("tile " + std::to_string(tile) + " has no logical qubit in this code");
  }
  const std::size_t width = generators_ + 2;
  x_columns_.assign(code.n, BitVector(width));
  z_columns_.assign(code.n, BitVector(width));
  auto scatter = [&](const PauliString& p, std::size_t row) {
    for (const std::size_t q : p.x_bits().set_bits()) {
      x_columns_[q].set(row);
    }
    for (const std::size_t q : p.z_bits().set_bits()) {
      z_columns_[q].set(row);
    }
  };
  for (std::size_t r = 0; r < generators_; ++r) {
    scatter(code.stabilizers[r], r);
  }
  scatter(code.logical_x[tile], generators_);
  scatter(code.logical_z[tile], generators_ + 1);
}

bool IncrementalDecoder::erase(std::size_t q) {
  if (q >= x_columns_.size()) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
  }
  for (const BitVector* col : {&x_columns_[q], &z_columns_[q]}) {
    const auto pivot = basis_.insert(*col);
    if (!pivot || *pivot < generators_) {
      continue;
    }
    if (check_ == LogicalCheck::both || *pivot == generators_) {
      recoverable_ = false;
    }
  }
  return recoverable_;
}

void IncrementalDecoder::reset() {
  basis_.clear();
  recoverable_ = true;
}

std::size_t IncrementalDecoder::first_failure(const std::vector<std::size_t>& order) {
  reset();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!erase(order[i])) {
      return i + 1;
    }
  }
  return order.size() + 1;
}

GreedyDecoder::GreedyDecoder(const Tiling& t, const SeedCode& seed) : tiling_(&t) {
  const std::size_t n = seed.n_physical;
  if (n != t.n_sides()) {
    throw std::invalid_argument("seed does not match the tile size");
  }
  if (n > 16) {
    throw capacity_error("greedy lookup table limited to 16 sides");
  }
  const std::size_t legs = seed.leg_count();
  const bool perfect = check_perfect(seed);
  // Isometric sets of at most half the legs, as leg bitmasks.
  std::vector<std::uint32_t> isometric;
  if (perfect) {
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << legs); ++m) {
      if (2 * static_cast<std::size_t>(std::popcount(m)) <= legs) {
        isometric.push_back(m);
      }
    }
  } else {
    for (std::size_t len = 1; 2 * len <= legs; ++len) {
      for (std::size_t start = 0; start < legs; ++start) {
        const auto w = Bipartition::window(legs, start, len);
        if (is_isometry_for(seed, w)) {
          std::uint32_t m = 0;
          for (const std::size_t leg : w.a_legs()) {
            m |= std::uint32_t{1} << leg;
          }
          isometric.push_back(m);
        }
      }
    }
  }
  auto table = [&](std::size_t rotation) {
    std::vector<bool> ok(std::size_t{1} << n, false);
    for (std::uint32_t unknown = 0; unknown < ok.size(); ++unknown) {
      std::uint32_t need = std::uint32_t{1} << seed.logical_leg;
      for (std::size_t s = 0; s < n; ++s) {
        if ((unknown >> s) & 1U) {
          need |= std::uint32_t{1} << seed.physical_legs[(s + rotation) % n];
        }
      }
      ok[unknown] = std::any_of(isometric.begin(), isometric.end(), [&](std::uint32_t a) { return (need & ~a) == 0; });
    }
    return ok;
  };
  central_table_ = table(0);
  outer_table_ = table(seed.physical_before_logical());
}

bool GreedyDecoder::absorbable(std::size_t tile, std::uint32_t unknown_mask) const {
  const auto& table = tiling_->tile(tile).input_count == 0 ? central_table_ : outer_table_;
  return table.at(unknown_mask);
}

std::vector<bool> GreedyDecoder::recovered_region(const ErasurePattern& e) const {
  const Tiling& t = *tiling_;
  if (e.size() != t.boundary().size()) {
    throw std::invalid_argument("erasure has " + std::to_string(e.size()) + " bits but the tiling has " +
                                std::to_string(t.boundary().size()) + " boundary legs");
  }
  const std::size_t tiles = t.tiles().size();
  std::vector<std::uint32_t> unknown(tiles, 0);
  for (std::size_t id = 0; id < tiles; ++id) {
    const Tile& tile = t.tile(id);
    for (std::size_t s = 0; s < tile.sides(); ++s) {
      if (tile.partners[s]) {
        unknown[id] |= std::uint32_t{1} << s;
      }
    }
  }
  for (std::size_t i = 0; i < t.boundary().size(); ++i) {
    if (e.mask.get(i)) {
      unknown[t.boundary()[i].tile] |= std::uint32_t{1} << t.boundary()[i].slot;
    }
  }
  std::vector<bool> recovered(tiles, false);
  std::vector<std::size_t> work(tiles);
  for (std::size_t id = 0; id < tiles; ++id) {
    work[id] = tiles - 1 - id;
  }
  std::vector<bool> queued(tiles, true);
  while (!work.empty()) {
    const std::size_t id = work.back();
    work.pop_back();
    queued[id] = false;
    if (recovered[id] || !absorbable(id, unknown[id])) {
      continue;
    }
    recovered[id] = true;
    for (const auto& partner : t.tile(id).partners) {
      if (!partner) {
        continue;
      }
      unknown[partner->tile] &= ~(std::uint32_t{1} << partner->slot);
      if (!recovered[partner->tile] && !queued[partner->tile]) {
        queued[partner->tile] = true;
        work.push_back(partner->tile);
      }
    }
  }
  return recovered;
}

bool GreedyDecoder::recoverable(const ErasurePattern& e, std::size_t tile) const {
  if (tile >= tiling_->tiles().size()) {
    throw std::invalid_argument("tile " + std::to_string(tile) + " is not in the tiling");
  }
  return recovered_region(e)[tile];
}

bool is_recoverable_greedy(const Tiling& t, const SeedCode& seed, const ErasurePattern& e, std::size_t tile) {
  return GreedyDecoder(t, seed).recoverable(e, tile);
}

}  // namespace holo
