#include "holo/tiling.hpp"

#include <functional>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "holo/errors.hpp"

namespace holo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct PerimeterEdge {
  LegRef leg;
  std::size_t from;  // clockwise around the placed region
  std::size_t to;
};

class TilingBuilder {
public:
  explicit TilingBuilder(std::size_t n) : n_(n) {}

  void place_center() {
    Tile center;
    center.id = 0;
    center.layer = 0;
    center.partners.assign(n_, std::nullopt);
    for (std::size_t s = 0; s < n_; ++s) {
      center.corners.push_back(new_vertex());
    }
    for (std::size_t s = 0; s < n_; ++s) {
      perimeter_.push_back({{0, s}, center.corners[s], center.corners[(s + 1) % n_]});
    }
    add_tile(std::move(center));
  }

  void grow_layer(std::size_t layer) {
    const std::size_t m = perimeter_.size();
    // touching[j]: placed tiles at the vertex between perimeter edges j and j+1.
    std::vector<std::size_t> touching(m);
    for (std::size_t j = 0; j < m; ++j) {
      touching[j] = vertex_tiles_[perimeter_[j].to];
      if (touching[j] != 1 && touching[j] != 2) {
        throw std::logic_error("perimeter vertex touched by " + std::to_string(touching[j]) + " tiles");
      }
    }

    std::vector<std::size_t> edge_tile(m);
    std::vector<std::size_t> vertex_tile(m, kNone);
    std::size_t next = tiles_.size();
    for (std::size_t j = 0; j < m; ++j) {
      edge_tile[j] = next++;
      if (touching[j] == 1) {
        vertex_tile[j] = next++;
      }
    }

    // Spoke vertices: the far ends of the edges that leave each perimeter
    // vertex outward. left = on the side of edge tile j, right = edge tile j+1.
    std::vector<std::size_t> left_spoke(m);
    std::vector<std::size_t> right_spoke(m);
    for (std::size_t j = 0; j < m; ++j) {
      left_spoke[j] = new_vertex();
      right_spoke[j] = touching[j] == 2 ? left_spoke[j] : new_vertex();
    }

    const std::size_t first_fresh = tiles_.size();
    std::vector<Tile> fresh(next - first_fresh);
    auto at = [&](std::size_t id) -> Tile& { return fresh[id - first_fresh]; };

    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t prev = (j + m - 1) % m;
      Tile& t = at(edge_tile[j]);
      t.id = edge_tile[j];
      t.layer = layer;
      t.partners.assign(n_, std::nullopt);
      t.corners.assign(n_, 0);
      t.corners[0] = perimeter_[j].to;
      t.corners[1] = perimeter_[j].from;
      t.corners[2] = right_spoke[prev];
      for (std::size_t s = 3; s + 1 < n_; ++s) {
        t.corners[s] = new_vertex();
      }
      t.corners[n_ - 1] = left_spoke[j];
      t.input_start = 0;
      t.input_count = touching[prev] == 2 ? 2 : 1;
      const LegRef parent = perimeter_[j].leg;
      tiles_[parent.tile].partners[parent.slot] = LegRef{t.id, 0};
      t.partners[0] = parent;
      contractions_.push_back({parent, {t.id, 0}});
    }

    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t nj = (j + 1) % m;
      if (touching[j] == 2) {
        connect({edge_tile[j], n_ - 1}, {edge_tile[nj], 1}, at);
        continue;
      }
      Tile& v = at(vertex_tile[j]);
      v.id = vertex_tile[j];
      v.layer = layer;
      v.partners.assign(n_, std::nullopt);
      v.corners.assign(n_, 0);
      v.corners[0] = right_spoke[j];
      v.corners[1] = perimeter_[j].to;
      v.corners[2] = left_spoke[j];
      for (std::size_t s = 3; s < n_; ++s) {
        v.corners[s] = new_vertex();
      }
      v.input_start = 0;
      v.input_count = 2;
      connect({edge_tile[nj], 1}, {v.id, 0}, at);
      connect({edge_tile[j], n_ - 1}, {v.id, 1}, at);
    }

    std::vector<PerimeterEdge> outer;
    for (auto& t : fresh) {
      // Edge tiles keep their last slot as a side; vertex tiles expose it.
      const bool vertex_placed = !t.partners[0] || t.partners[0]->tile >= first_fresh;
      const std::size_t last = vertex_placed ? n_ : n_ - 1;
      for (std::size_t s = 2; s < last; ++s) {
        outer.push_back({{t.id, s}, t.corners[s], t.corners[(s + 1) % n_]});
      }
      add_tile(std::move(t));
    }
    perimeter_ = std::move(outer);
  }

  Tiling finish(std::size_t radius) {
    std::vector<LegRef> boundary;
    boundary.reserve(perimeter_.size());
    for (const auto& e : perimeter_) {
      boundary.push_back(e.leg);
    }
    return {n_, radius, std::move(tiles_), std::move(contractions_), std::move(boundary), vertex_tiles_.size()};
  }

private:
  std::size_t new_vertex() {
    vertex_tiles_.push_back(0);
    return vertex_tiles_.size() - 1;
  }

  void add_tile(Tile t) {
    for (const std::size_t v : t.corners) {
      ++vertex_tiles_[v];
    }
    tiles_.push_back(std::move(t));
  }

  template <typename At>
  void connect(LegRef output, LegRef input, At&& at) {
    at(output.tile).partners[output.slot] = input;
    at(input.tile).partners[input.slot] = output;
    contractions_.push_back({output, input});
  }

  std::size_t n_;
  std::vector<Tile> tiles_;
  std::vector<Contraction> contractions_;
  std::vector<PerimeterEdge> perimeter_;
  std::vector<std::size_t> vertex_tiles_;
};

}  // namespace

bool Tile::is_input(std::size_t slot) const noexcept {
  const std::size_t n = sides();
  return (slot + n - input_start) % n < input_count;
}

Tiling::Tiling(std::size_t n_sides, std::size_t radius, std::vector<Tile> tiles, std::vector<Contraction> contractions,
               std::vector<LegRef> boundary, std::size_t vertex_count)
    : n_sides_(n_sides),
      radius_(radius),
      tiles_(std::move(tiles)),
      contractions_(std::move(contractions)),
      boundary_(std::move(boundary)),
      vertex_count_(vertex_count) {
  boundary_index_.assign(tiles_.size(), std::vector<std::size_t>(n_sides_, kNone));
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    boundary_index_[boundary_[i].tile][boundary_[i].slot] = i;
  }
  std::vector<std::size_t> indegree(tiles_.size(), 0);
  std::vector<std::vector<std::size_t>> feeds(tiles_.size());
  for (const auto& c : contractions_) {
    feeds[c.output.tile].push_back(c.input.tile);
    ++indegree[c.input.tile];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t t = 0; t < tiles_.size(); ++t) {
    if (indegree[t] == 0) {
      ready.push(t);
    }
  }
  while (!ready.empty()) {
    const std::size_t t = ready.top();
    ready.pop();
    push_order_.push_back(t);
    for (const std::size_t child : feeds[t]) {
      if (--indegree[child] == 0) {
        ready.push(child);
      }
    }
  }
  if (push_order_.size() != tiles_.size()) {
    throw std::logic_error("contraction orientation contains a cycle");
  }
}

std::optional<std::size_t> Tiling::boundary_index(LegRef leg) const {
  const std::size_t i = boundary_index_.at(leg.tile).at(leg.slot);
  if (i == kNone) {
    return std::nullopt;
  }
  return i;
}

bool operator==(const Tiling& a, const Tiling& b) { return to_text(a) == to_text(b); }

Tiling build_tiling(std::size_t n_sides, std::size_t radius) {
  if (n_sides < 5) {
    throw std::invalid_argument("tiling needs at least 5 sides per tile, got " + std::to_string(n_sides));
  }
  if (radius == 0) {
    throw std::invalid_argument("radius must be at least 1");
  }
  // Perimeter edges and single-tile perimeter vertices grow by a fixed recurrence.
  std::size_t edges = n_sides;
  std::size_t lonely = n_sides;
  for (std::size_t layer = 1; layer < radius; ++layer) {
    const std::size_t e = (n_sides - 3) * edges + (n_sides - 2) * lonely;
    lonely = (n_sides - 4) * edges + (n_sides - 3) * lonely;
    edges = e;
    if (edges > kMaxBoundaryLegs) {
      throw capacity_error("radius " + std::to_string(radius) + " exceeds the supported boundary size of " +
                           std::to_string(kMaxBoundaryLegs) + " qubits");
    }
  }
  TilingBuilder builder(n_sides);
  builder.place_center();
  for (std::size_t layer = 1; layer < radius; ++layer) {
    builder.grow_layer(layer);
  }
  return builder.finish(radius);
}

TileCensus tile_census(const Tiling& t) {
  TileCensus c;
  for (const auto& tile : t.tiles()) {
    switch (tile.input_count) {
      case 0:
        ++c.no_input;
        break;
      case 1:
        ++c.one_input;
        break;
      default:
        ++c.two_inputs;
        break;
    }
  }
  return c;
}

std::vector<LegRef> boundary_legs(const Tiling& t) { return t.boundary(); }

void write_tiling(std::ostream& os, const Tiling& t) {
  os << "tiling n_sides=" << t.n_sides() << " radius=" << t.radius() << " tiles=" << t.tiles().size()
     << " boundary=" << t.boundary().size() << '\n';
  for (const auto& tile : t.tiles()) {
    os << tile.id << ' ' << tile.layer << " in=";
    if (tile.input_count == 0) {
      os << '-';
    }
    for (std::size_t i = 0; i < tile.input_count; ++i) {
      os << (i ? "," : "") << (tile.input_start + i) % tile.sides();
    }
    for (std::size_t s = 0; s < tile.sides(); ++s) {
      if (tile.partners[s]) {
        os << ' ' << tile.partners[s]->tile << '.' << tile.partners[s]->slot;
      } else {
        os << " B" << *t.boundary_index({tile.id, s});
      }
    }
    os << '\n';
  }
}

std::string to_text(const Tiling& t) {
  std::ostringstream os;
  write_tiling(os, t);
  return os.str();
}

}  // namespace holo
