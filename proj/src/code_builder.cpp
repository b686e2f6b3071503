#include "holo/code_builder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "holo/errors.hpp"
#include "holo/gf2.hpp"

namespace holo {

namespace {

// Letter codes ordered like the interleaved (x, z) bit pair: I=0, Z=1, X=2, Y=3.
std::uint8_t code_of(char c) {
  switch (c) {
    case 'Z':
      return 1;
    case 'X':
      return 2;
    case 'Y':
      return 3;
    default:
      return 0;
  }
}

char letter_of(std::uint8_t code) { return "IZXY"[code & 3U]; }

std::vector<PauliString> group_elements(const SeedCode& seed) {
  const std::size_t g = seed.stabilizers.size();
  if (g > 16) {
    throw capacity_error("seed stabilizer group too large to enumerate");
  }
  std::vector<PauliString> elems(std::size_t{1} << g);
  elems[0] = PauliString(seed.leg_count());
  for (std::size_t mask = 1; mask < elems.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    elems[mask] = multiply(elems[mask & (mask - 1)], seed.stabilizers[low]);
  }
  return elems;
}

struct LocalElement {
  std::vector<std::uint8_t> slots;
  std::uint8_t logical = 0;
  bool negative = false;
};

// Seed group seen from a tile: slot s carries seed physical position (s + rotation) mod n.
class TileKernel {
public:
  TileKernel(const SeedCode& seed, std::size_t rotation, std::size_t input_count)
      : n_(seed.n_physical), input_count_(input_count) {
    std::size_t keys = 4;
    for (std::size_t i = 0; i < input_count; ++i) {
      keys *= 4;
    }
    lifts_.assign(keys, std::nullopt);
    std::vector<LocalElement> subgroup;
    for (const auto& p : group_elements(seed)) {
      LocalElement e;
      e.slots.resize(n_);
      for (std::size_t s = 0; s < n_; ++s) {
        e.slots[s] = code_of(p.letter(seed.physical_legs[(s + rotation) % n_]));
      }
      e.logical = code_of(p.letter(seed.logical_leg));
      e.negative = p.phase_exponent() == 2;
      const std::size_t k = key(e.logical, e.slots.data());
      if (!lifts_[k] || e.slots < lifts_[k]->slots) {
        lifts_[k] = e;
      }
      if (k == 0) {
        subgroup.push_back(std::move(e));
      }
    }
    XorBasis basis(2 * n_, true);
    for (const auto& e : subgroup) {
      basis.insert(interleave(e));
    }
    auto vecs = basis.vectors();
    std::sort(vecs.begin(), vecs.end(), [](const BitVector& a, const BitVector& b) { return a.first_set() < b.first_set(); });
    for (const auto& v : vecs) {
      const auto it =
          std::find_if(subgroup.begin(), subgroup.end(), [&](const LocalElement& e) { return interleave(e) == v; });
      local_.push_back(*it);
    }
  }

  [[nodiscard]] const LocalElement& lift(std::uint8_t logical, const std::uint8_t* inputs) const {
    const auto& e = lifts_[key(logical, inputs)];
    if (!e) {
      throw std::logic_error("seed has no stabilizer extending the requested input operator");
    }
    return *e;
  }
  [[nodiscard]] const std::vector<LocalElement>& local_stabilizers() const noexcept { return local_; }

private:
  [[nodiscard]] std::size_t key(std::uint8_t logical, const std::uint8_t* inputs) const {
    std::size_t k = 0;
    for (std::size_t i = input_count_; i-- > 0;) {
      k = 4 * k + inputs[i];
    }
    return 4 * k + logical;
  }

  [[nodiscard]] BitVector interleave(const LocalElement& e) const {
    BitVector v(2 * n_);
    for (std::size_t s = 0; s < n_; ++s) {
      v.set(2 * s, (e.slots[s] & 2U) != 0);
      v.set(2 * s + 1, (e.slots[s] & 1U) != 0);
    }
    return v;
  }

  std::size_t n_;
  std::size_t input_count_;
  std::vector<std::optional<LocalElement>> lifts_;
  std::vector<LocalElement> local_;
};

class Pusher {
public:
  Pusher(const Tiling& t, const SeedCode& seed) : tiling_(t), seed_(seed) {
    if (seed.n_physical != t.n_sides()) {
      throw std::invalid_argument("seed has " + std::to_string(seed.n_physical) + " physical legs but tiles have " +
                                  std::to_string(t.n_sides()) + " sides");
    }
    const std::size_t rotation = seed.physical_before_logical();
    kernels_.emplace_back(seed, 0, 0);
    kernels_.emplace_back(seed, rotation, 1);
    kernels_.emplace_back(seed, rotation, 2);
    position_.resize(t.tiles().size());
    for (std::size_t i = 0; i < t.push_order().size(); ++i) {
      position_[t.push_order()[i]] = i;
    }
    pending_.assign(t.tiles().size(), {0, 0});
    scheduled_.assign(t.tiles().size(), false);
  }

  [[nodiscard]] const TileKernel& kernel(std::size_t tile) const {
    return kernels_[tiling_.tile(tile).input_count];
  }

  // Boundary operator equivalent to `start` placed on `tile` with its inputs untouched.
  PauliString push(std::size_t tile, const LocalElement& start) {
    PauliString out(tiling_.boundary().size());
    bool negative = start.negative;
    std::priority_queue<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>,
                        std::greater<>>
        queue;
    auto emit = [&](std::size_t id, const LocalElement& e) {
      const Tile& t = tiling_.tile(id);
      for (std::size_t s = 0; s < t.sides(); ++s) {
        if (t.is_input(s) || e.slots[s] == 0) {
          continue;
        }
        const auto& partner = t.partners[s];
        if (!partner) {
          out.set_letter(*tiling_.boundary_index({id, s}), letter_of(e.slots[s]));
          continue;
        }
        // <Bell| Y (x) Y = -<Bell|
        if (e.slots[s] == 3) {
          negative = !negative;
        }
        pending_[partner->tile][partner->slot] = e.slots[s];
        if (!scheduled_[partner->tile]) {
          scheduled_[partner->tile] = true;
          queue.push({position_[partner->tile], partner->tile});
        }
      }
    };
    emit(tile, start);
    while (!queue.empty()) {
      const std::size_t id = queue.top().second;
      queue.pop();
      const LocalElement& e = kernel(id).lift(0, pending_[id].data());
      negative = negative != e.negative;
      emit(id, e);
      pending_[id] = {0, 0};
      scheduled_[id] = false;
    }
    out.set_sign(negative ? -1 : 1);
    return out;
  }

  [[nodiscard]] LocalElement central_element(const PauliString& physical, std::uint8_t logical) const {
    LocalElement e;
    e.slots.resize(seed_.n_physical);
    for (std::size_t s = 0; s < seed_.n_physical; ++s) {
      e.slots[s] = code_of(physical.letter(s));
    }
    e.logical = logical;
    e.negative = physical.phase_exponent() == 2;
    return e;
  }

  std::vector<std::pair<PauliString, std::size_t>> stabilizers() {
    std::vector<std::pair<PauliString, std::size_t>> out;
    for (const std::size_t id : tiling_.push_order()) {
      if (tiling_.tile(id).input_count == 0) {
        for (const auto& s : seed_.code_stabilizers) {
          out.emplace_back(push(id, central_element(s, 0)), id);
        }
        continue;
      }
      for (const auto& e : kernel(id).local_stabilizers()) {
        out.emplace_back(push(id, e), id);
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
  }

  LogicalPair logicals(std::size_t tile) {
    if (tiling_.tile(tile).input_count == 0) {
      return {push(tile, central_element(seed_.logical_x, 2)), push(tile, central_element(seed_.logical_z, 1))};
    }
    const std::array<std::uint8_t, 2> none{0, 0};
    return {push(tile, kernel(tile).lift(2, none.data())), push(tile, kernel(tile).lift(1, none.data()))};
  }

private:
  const Tiling& tiling_;
  const SeedCode& seed_;
  std::vector<TileKernel> kernels_;
  std::vector<std::size_t> position_;
  std::vector<std::array<std::uint8_t, 2>> pending_;
  std::vector<bool> scheduled_;
};

std::string sign_token(const PauliString& p) { return p.phase_exponent() == 2 ? "-" : "+"; }

PauliString parse_operator(std::size_t line, const std::string& sign, const std::string& body, std::size_t n) {
  if (sign != "+" && sign != "-") {
    throw parse_error(line, "expected sign '+' or '-', got '" + sign + "'");
  }
  if (body.size() != n) {
    throw parse_error(line, "operator has " + std::to_string(body.size()) + " letters, expected " + std::to_string(n));
  }
  if (body.find_first_not_of("IXYZ") != std::string::npos) {
    throw parse_error(line, "operator contains a letter outside IXYZ");
  }
  PauliString p = PauliString::parse(body);
  p.set_sign(sign == "-" ? -1 : 1);
  return p;
}

}  // namespace

PauliString push_operator(const SeedCode& seed, const std::vector<std::size_t>& input_legs, const PauliString& op) {
  const std::size_t legs = seed.leg_count();
  if (op.size() != legs) {
    throw std::invalid_argument("operator must act on all " + std::to_string(legs) + " seed legs");
  }
  std::vector<bool> fixed(legs, false);
  for (const std::size_t leg : input_legs) {
    if (leg >= legs || leg == seed.logical_leg) {
      throw std::invalid_argument("input leg " + std::to_string(leg) + " is not a physical leg");
    }
    fixed[leg] = true;
  }
  fixed[seed.logical_leg] = true;
  for (std::size_t leg = 0; leg < legs; ++leg) {
    if (!fixed[leg] && op.letter(leg) != 'I') {
      throw std::invalid_argument("operator acts on output leg " + std::to_string(leg));
    }
  }
  std::optional<PauliString> best;
  BitVector best_key;
  for (const auto& g : group_elements(seed)) {
    bool matches = true;
    for (std::size_t leg = 0; leg < legs && matches; ++leg) {
      matches = !fixed[leg] || g.letter(leg) == op.letter(leg);
    }
    if (!matches) {
      continue;
    }
    PauliString out(legs);
    for (std::size_t leg = 0; leg < legs; ++leg) {
      if (!fixed[leg]) {
        out.set_letter(leg, g.letter(leg));
      }
    }
    const BitVector k = out.interleaved();
    if (!best || k.lex_less(best_key)) {
      out.set_phase_exponent(static_cast<std::uint8_t>(g.phase_exponent() + op.phase_exponent()));
      best = std::move(out);
      best_key = k;
    }
  }
  if (!best) {
    throw std::logic_error("seed has no stabilizer extending the operator");
  }
  return *best;
}

std::vector<PauliString> boundary_stabilizers(const Tiling& t, const SeedCode& seed) {
  Pusher pusher(t, seed);
  std::vector<PauliString> out;
  for (auto& [p, tile] : pusher.stabilizers()) {
    out.push_back(std::move(p));
  }
  return out;
}

LogicalPair logical_operators(const Tiling& t, const SeedCode& seed, std::size_t tile) {
  if (tile >= t.tiles().size()) {
    throw std::invalid_argument("tile " + std::to_string(tile) + " is not in the tiling");
  }
  Pusher pusher(t, seed);
  return pusher.logicals(tile);
}

HolographicCode build_code(const Tiling& t, const SeedCode& seed, SeedKind kind) {
  Pusher pusher(t, seed);
  HolographicCode c;
  c.n = t.boundary().size();
  c.k = t.tiles().size();
  c.seed = kind;
  c.radius = t.radius();
  for (auto& [p, tile] : pusher.stabilizers()) {
    c.stabilizers.push_back(std::move(p));
    c.stabilizer_tile.push_back(tile);
  }
  for (std::size_t tile = 0; tile < c.k; ++tile) {
    auto [x, z] = pusher.logicals(tile);
    c.logical_x.push_back(std::move(x));
    c.logical_z.push_back(std::move(z));
  }
  return c;
}

bool operator==(const HolographicCode& a, const HolographicCode& b) {
  return a.n == b.n && a.k == b.k && a.seed == b.seed && a.radius == b.radius && a.stabilizers == b.stabilizers &&
         a.logical_x == b.logical_x && a.logical_z == b.logical_z;
}

std::size_t seed_sides(SeedKind kind) { return kind == SeedKind::steane ? 7 : 5; }

HolographicCode build_code(SeedKind kind, std::size_t radius) {
  return build_code(build_tiling(seed_sides(kind), radius), make_seed(kind), kind);
}

std::string check_code(const HolographicCode& c) {
  const auto& s = c.stabilizers;
  if (c.k > c.n || s.size() != c.n - c.k) {
    return "generator count " + std::to_string(s.size()) + " differs from n - k = " +
           std::to_string(c.n) + " - " + std::to_string(c.k);
  }
  if (c.logical_x.size() != c.k || c.logical_z.size() != c.k) {
    return "expected one logical pair per bulk tile";
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!commutes(s[i], s[j])) {
        return "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute";
      }
    }
  }
  std::vector<const PauliString*> logicals;
  for (std::size_t t = 0; t < c.k; ++t) {
    logicals.push_back(&c.logical_x[t]);
    logicals.push_back(&c.logical_z[t]);
  }
  for (std::size_t a = 0; a < logicals.size(); ++a) {
    for (const auto& g : s) {
      if (!commutes(*logicals[a], g)) {
        return "logical of tile " + std::to_string(a / 2) + " anticommutes with a generator";
      }
    }
    for (std::size_t b = a + 1; b < logicals.size(); ++b) {
      const bool partners = a / 2 == b / 2;
      if (commutes(*logicals[a], *logicals[b]) == partners) {
        return "logicals of tiles " + std::to_string(a / 2) + " and " + std::to_string(b / 2) +
               (partners ? " commute" : " anticommute");
      }
    }
  }
  BitMatrix m(0, 2 * c.n);
  for (const auto& g : s) {
    m.append_row(g.interleaved());
  }
  if (rank(m) != s.size()) {
    return "generators are not independent";
  }
  for (const auto* l : logicals) {
    m.append_row(l->interleaved());
  }
  if (rank(m) != m.rows()) {
    return "logicals are not independent of the stabilizer group";
  }
  return {};
}

bool is_self_dual_css(const HolographicCode& c) {
  std::vector<std::string> xs;
  std::vector<std::string> zs;
  for (const auto& g : c.stabilizers) {
    const bool has_x = g.x_bits().any();
    const bool has_z = g.z_bits().any();
    if (has_x && has_z) {
      return false;
    }
    (has_x ? xs : zs).push_back(support(g).to_string());
  }
  std::sort(xs.begin(), xs.end());
  std::sort(zs.begin(), zs.end());
  return xs == zs;
}

double asymptotic_rate(std::size_t n_sides) {
  if (n_sides == 5) {
    return 1.0 / std::sqrt(5.0);
  }
  if (n_sides == 7) {
    return 1.0 / std::sqrt(21.0);
  }
  throw std::invalid_argument("asymptotic rate known only for 5 and 7 sides");
}

Rational code_rate(const HolographicCode& c) {
  if (c.n == 0) {
    throw std::invalid_argument("empty code has no rate");
  }
  const std::size_t g = std::gcd(c.k, c.n);
  return {c.k / g, c.n / g};
}

std::vector<SizeRow> size_table(std::size_t n_sides, std::size_t max_radius) {
  if (n_sides < 5) {
    throw std::invalid_argument("tiling needs at least 5 sides per tile");
  }
  std::vector<SizeRow> rows;
  std::size_t edges = n_sides;   // perimeter edges
  std::size_t lonely = n_sides;  // perimeter vertices touched by one tile
  std::size_t k = 1;
  for (std::size_t r = 1; r <= max_radius; ++r) {
    rows.push_back({r, edges, k});
    k += edges + lonely;
    const std::size_t e = (n_sides - 3) * edges + (n_sides - 2) * lonely;
    const std::size_t a = (n_sides - 4) * edges + (n_sides - 3) * lonely;
    if (e < edges) {
      throw capacity_error("boundary size overflows");
    }
    edges = e;
    lonely = a;
  }
  return rows;
}

void export_code(const HolographicCode& c, std::ostream& os) {
  os << "n=" << c.n << " k=" << c.k << " seed=" << to_string(c.seed) << " R=" << c.radius << '\n';
  for (const auto& g : c.stabilizers) {
    os << "S " << sign_token(g) << ' ' << g.letters() << '\n';
  }
  for (std::size_t t = 0; t < c.k; ++t) {
    os << "LX " << t << ' ' << sign_token(c.logical_x[t]) << ' ' << c.logical_x[t].letters() << '\n';
    os << "LZ " << t << ' ' << sign_token(c.logical_z[t]) << ' ' << c.logical_z[t].letters() << '\n';
  }
}

void export_code(const HolographicCode& c, const std::string& path) {
  std::ofstream os(path);
  if (!os) {
    throw io_error("cannot open '" + path + "' for writing");
  }
  export_code(c, os);
  if (!os) {
    throw io_error("failed writing '" + path + "'");
  }
}

HolographicCode import_code(std::istream& is) {
  HolographicCode c;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<bool> seen_x;
  std::vector<bool> seen_z;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::istringstream ls(line);
    if (!have_header) {
      std::string tok;
      std::size_t fields = 0;
      while (ls >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
          throw parse_error(line_no, "header token '" + tok + "' is not key=value");
        }
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        try {
          if (key == "n") {
            c.n = std::stoul(value);
          } else if (key == "k") {
            c.k = std::stoul(value);
          } else if (key == "R") {
            c.radius = std::stoul(value);
          } else if (key == "seed") {
            c.seed = parse_seed_kind(value);
          } else {
            throw parse_error(line_no, "unknown header key '" + key + "'");
          }
        } catch (const std::invalid_argument& e) {
          throw parse_error(line_no, "bad value for '" + key + "': " + e.what());
        }
        ++fields;
      }
      if (fields != 4) {
        throw parse_error(line_no, "header needs n=, k=, seed= and R=");
      }
      if (c.n == 0 || c.k > c.n) {
        throw parse_error(line_no, "header sizes are inconsistent");
      }
      c.logical_x.assign(c.k, PauliString(c.n));
      c.logical_z.assign(c.k, PauliString(c.n));
      seen_x.assign(c.k, false);
      seen_z.assign(c.k, false);
      have_header = true;
      continue;
    }
    std::string kind;
    ls >> kind;
    std::string sign;
    std::string body;
    std::string extra;
    if (kind == "S") {
      if (!(ls >> sign >> body) || (ls >> extra)) {
        throw parse_error(line_no, "expected 'S <sign> <operator>'");
      }
      c.stabilizers.push_back(parse_operator(line_no, sign, body, c.n));
    } else if (kind == "LX" || kind == "LZ") {
      std::string tile_tok;
      if (!(ls >> tile_tok >> sign >> body) || (ls >> extra)) {
        throw parse_error(line_no, "expected '" + kind + " <tile> <sign> <operator>'");
      }
      std::size_t tile = 0;
      try {
        std::size_t used = 0;
        tile = std::stoul(tile_tok, &used);
        if (used != tile_tok.size()) {
          throw std::invalid_argument("trailing characters");
        }
      } catch (const std::exception&) {
        throw parse_error(line_no, "bad tile id '" + tile_tok + "'");
      }
      if (tile >= c.k) {
        throw parse_error(line_no, "tile id " + tile_tok + " out of range");
      }
      auto& seen = kind == "LX" ? seen_x : seen_z;
      if (seen[tile]) {
        throw parse_error(line_no, "duplicate " + kind + " for tile " + tile_tok);
      }
      seen[tile] = true;
      (kind == "LX" ? c.logical_x : c.logical_z)[tile] = parse_operator(line_no, sign, body, c.n);
    } else {
      throw parse_error(line_no, "unknown record '" + kind + "'");
    }
  }
  if (!have_header) {
    throw parse_error(line_no, "missing header");
  }
  for (std::size_t t = 0; t < c.k; ++t) {
    if (!seen_x[t] || !seen_z[t]) {
      throw parse_error(line_no, "missing logical pair for tile " + std::to_string(t));
    }
  }
  return c;
}

HolographicCode import_code(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    throw io_error("cannot open '" + path + "'");
  }
  return import_code(is);
}

}  // namespace holo
