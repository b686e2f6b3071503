#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "holo/code_builder.hpp"
#include "holo/errors.hpp"
#include "holo/gf2.hpp"
#include "holo/tiling.hpp"

using namespace holo;

namespace {

bool in_group(const std::vector<PauliString>& generators, const PauliString& p) {
  BitMatrix m(0, 2 * p.size());
  for (const auto& g : generators) {
    m.append_row(g.interleaved());
  }
  const std::size_t r = rank(m);
  m.append_row(p.interleaved());
  return rank(m) == r;
}

// Leg operator on the Steane legs 1..6, L, 7 from a letter per physical label.
PauliString steane_legs(const std::string& letters) { return PauliString::parse(letters); }

// GF(2) rank of the symplectic (interleaved x, z) vectors.
std::size_t span_rank(const std::vector<PauliString>& ps) {
  BitMatrix m(0, 2 * ps.front().size());
  for (const auto& p : ps) {
    m.append_row(p.interleaved());
  }
  return rank(m);
}

bool same_span(const std::vector<PauliString>& a, const std::vector<PauliString>& b) {
  std::vector<PauliString> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(a) == span_rank(b) && span_rank(both) == span_rank(a);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

struct PushCase {
  std::vector<std::size_t> inputs;
  std::string op;        // on legs 1..6, L, 7
  std::string expected;  // known pushed representative, inputs cleared
};

class SteanePush : public ::testing::TestWithParam<PushCase> {};

TEST_P(SteanePush, AgreesWithReferenceUpToStabilizers) {
  const SeedCode seed = steane_seed();
  const auto& c = GetParam();
  const PauliString out = push_operator(seed, c.inputs, steane_legs(c.op));
  for (const std::size_t leg : c.inputs) {
    EXPECT_EQ(out.letter(leg), 'I');
  }
  EXPECT_EQ(out.letter(seed.logical_leg), 'I');
  // out * op lies in the tensor-state group, and so does out * expected.
  EXPECT_TRUE(in_group(seed.stabilizers, multiply(out, steane_legs(c.op))));
  EXPECT_TRUE(in_group(seed.stabilizers, multiply(out, steane_legs(c.expected))));
  // Deterministic choice.
  EXPECT_EQ(push_operator(seed, c.inputs, steane_legs(c.op)), out);
}

// Leg indices: "6" is 5 and "7" is 7.
INSTANTIATE_TEST_SUITE_P(
    Reference, SteanePush,
    ::testing::Values(PushCase{{5}, "IIIIIXII", "XIXXIIII"},    // S1 S2
                      PushCase{{5}, "IIIIIZII", "ZIZZIIII"},    // S4 S5
                      PushCase{{5, 7}, "IIIIIXII", "XIXXIIII"}, // S1 S2
                      PushCase{{5, 7}, "IIIIIIIX", "IXXXIIII"}, // S2
                      PushCase{{5, 7}, "IIIIIXIX", "XXIIIIII"}, // S1
                      PushCase{{5, 7}, "IIIIIZII", "ZIZZIIII"}, // S4 S5
                      PushCase{{5, 7}, "IIIIIIIZ", "IZZZIIII"}, // S5
                      PushCase{{5, 7}, "IIIIIZIZ", "ZZIIIIII"}  // S4
                      ));

TEST(Push, IdentityPushesToIdentity) {
  const SeedCode seed = steane_seed();
  EXPECT_TRUE(push_operator(seed, {5}, PauliString(8)).is_identity());
  EXPECT_TRUE(push_operator(seed, {5, 7}, PauliString(8)).is_identity());
  EXPECT_TRUE(push_operator(five_qubit_seed(), {4}, PauliString(6)).is_identity());
}

TEST(Push, LogicalLegPushesWithIt) {
  const SeedCode seed = steane_seed();
  const PauliString xl = steane_legs("IIIIIIXI");
  const PauliString out = push_operator(seed, {5}, xl);
  EXPECT_EQ(out.letter(5), 'I');
  EXPECT_EQ(out.letter(6), 'I');
  EXPECT_TRUE(in_group(seed.stabilizers, multiply(out, xl)));
}

TEST(Push, RejectsOperatorsOffTheInputs) {
  EXPECT_THROW((void)push_operator(steane_seed(), {5}, steane_legs("XIIIIIII")), std::invalid_argument);
}

TEST(Push, LexSmallestRepresentative) {
  // Among the four valid single-input X pushes, the chosen one has the
  // smallest interleaved leg vector.
  const SeedCode seed = steane_seed();
  const PauliString out = push_operator(seed, {5}, steane_legs("IIIIIXII"));
  for (const std::string alt : {"XIXXIIII", "XXIIIIIX", "IXXIXIII", "IIIXXIIX"}) {
    EXPECT_TRUE(in_group(seed.stabilizers, multiply(out, steane_legs(alt)))) << alt;
    EXPECT_FALSE(steane_legs(alt).interleaved().lex_less(out.interleaved())) << alt;
  }
}

TEST(Build, HeptagonRadiusOneIsSteane) {
  const HolographicCode c = build_code(SeedKind::steane, 1);
  const std::vector<PauliString> table{PauliString::parse("XXIIIXX"), PauliString::parse("IXXXIIX"),
                                       PauliString::parse("IIIXXXX"), PauliString::parse("ZZIIIZZ"),
                                       PauliString::parse("IZZZIIZ"), PauliString::parse("IIIZZZZ")};
  EXPECT_TRUE(same_span(c.stabilizers, table));
  EXPECT_EQ(c.logical_x.at(0).to_string(), "+XXXXXXX");
  EXPECT_EQ(c.logical_z.at(0).to_string(), "+ZZZZZZZ");
  std::ostringstream os;
  export_code(c, os);
  EXPECT_EQ(os.str(), slurp(HOLO_TEST_DATA "/steane_R1.code"));
}

TEST(Build, PentagonRadiusOneIsFiveQubitCode) {
  const HolographicCode c = build_code(SeedKind::five_qubit, 1);
  const SeedCode s = five_qubit_seed();
  EXPECT_TRUE(same_span(c.stabilizers, s.code_stabilizers));
  EXPECT_EQ(c.logical_x.at(0).to_string(), "+XXXXX");
  EXPECT_EQ(c.logical_z.at(0).to_string(), "+ZZZZZ");
}

class Structure : public ::testing::TestWithParam<std::pair<SeedKind, std::size_t>> {};

TEST_P(Structure, Invariants) {
  const auto [kind, radius] = GetParam();
  const Tiling t = build_tiling(seed_sides(kind), radius);
  const HolographicCode c = build_code(t, make_seed(kind), kind);
  EXPECT_EQ(c.n, t.boundary().size());
  EXPECT_EQ(c.k, t.tiles().size());
  EXPECT_EQ(c.stabilizers.size(), c.n - c.k);
  EXPECT_EQ(check_code(c), "");
  EXPECT_EQ(span_rank(c.stabilizers), c.n - c.k);
  const TileCensus census = tile_census(t);
  if (kind == SeedKind::steane) {
    EXPECT_TRUE(is_self_dual_css(c));
    EXPECT_EQ(6 * census.no_input + 4 * census.one_input + 2 * census.two_inputs, c.n - c.k);
  } else {
    EXPECT_EQ(4 * census.no_input + 2 * census.one_input, c.n - c.k);
  }
  // Provenance counts follow the per-tile local stabilizer counts.
  std::vector<std::size_t> per_tile(c.k, 0);
  for (const std::size_t tile : c.stabilizer_tile) {
    ++per_tile.at(tile);
  }
  const std::size_t base = c.seed == SeedKind::steane ? 6 : 4;
  for (const auto& tile : t.tiles()) {
    EXPECT_EQ(per_tile[tile.id], base - 2 * tile.input_count);
  }
}

INSTANTIATE_TEST_SUITE_P(Codes, Structure,
                         ::testing::Values(std::pair{SeedKind::steane, std::size_t{1}},
                                           std::pair{SeedKind::steane, std::size_t{2}},
                                           std::pair{SeedKind::steane, std::size_t{3}},
                                           std::pair{SeedKind::five_qubit, std::size_t{1}},
                                           std::pair{SeedKind::five_qubit, std::size_t{2}},
                                           std::pair{SeedKind::five_qubit, std::size_t{3}}));

TEST(Build, CheckCodeCatchesDamage) {
  HolographicCode c = build_code(SeedKind::steane, 2);
  HolographicCode dropped = c;
  dropped.stabilizers.pop_back();
  EXPECT_NE(check_code(dropped), "");
  HolographicCode anti = c;
  anti.stabilizers[0] = multiply(anti.stabilizers[0], PauliString::parse("Z" + std::string(c.n - 1, 'I')));
  if (commutes(anti.stabilizers[0], c.stabilizers[0])) {
    anti.stabilizers[0] = multiply(anti.stabilizers[0], PauliString::parse("X" + std::string(c.n - 1, 'I')));
  }
  EXPECT_NE(check_code(anti), "");
  HolographicCode dependent = c;
  dependent.stabilizers[1] = dependent.stabilizers[0];
  EXPECT_NE(check_code(dependent), "");
}

TEST(Logicals, LayerOneTileSitsOnAWedge) {
  const Tiling t = build_tiling(7, 2);
  const SeedCode seed = steane_seed();
  for (const auto& tile : t.tiles()) {
    if (tile.layer != 1) {
      continue;
    }
    const LogicalPair l = logical_operators(t, seed, tile.id);
    EXPECT_FALSE(commutes(l.x, l.z));
    for (const PauliString* op : {&l.x, &l.z}) {
      const auto bits = support(*op).set_bits();
      ASSERT_FALSE(bits.empty());
      EXPECT_LT(bits.size(), t.boundary().size());
      // The shortest boundary arc covering the support is a small wedge.
      const BitVector s = support(*op);
      std::size_t longest_gap = 0;
      for (std::size_t start = 0; start < s.size(); ++start) {
        std::size_t len = 0;
        while (len < s.size() && !s.get((start + len) % s.size())) {
          ++len;
        }
        longest_gap = std::max(longest_gap, len);
      }
      const std::size_t arc = s.size() - longest_gap;
      EXPECT_LE(arc, 2 * t.n_sides()) << "tile " << tile.id;
      // Only the tile's own boundary legs and those of tiles it feeds are involved.
      for (const std::size_t q : bits) {
        const std::size_t owner = t.boundary()[q].tile;
        bool fed = owner == tile.id;
        for (const auto& p : tile.partners) {
          fed |= p && p->tile == owner && t.tile(owner).is_input(p->slot);
        }
        EXPECT_TRUE(fed) << "tile " << tile.id << " qubit " << q;
      }
    }
  }
}

TEST(Logicals, CentralLogicalsAgreeWithBuiltCode) {
  const Tiling t = build_tiling(7, 2);
  const HolographicCode c = build_code(t, steane_seed(), SeedKind::steane);
  const LogicalPair l = logical_operators(t, steane_seed(), 0);
  EXPECT_EQ(l.x, c.logical_x[0]);
  EXPECT_EQ(l.z, c.logical_z[0]);
}

TEST(Rates, AsymptoticConstants) {
  EXPECT_DOUBLE_EQ(asymptotic_rate(7), 1.0 / std::sqrt(21.0));
  EXPECT_DOUBLE_EQ(asymptotic_rate(5), 1.0 / std::sqrt(5.0));
  EXPECT_NEAR(asymptotic_rate(7), 0.21821789, 1e-8);
  EXPECT_NEAR(asymptotic_rate(5), 0.44721359, 1e-8);
  EXPECT_THROW((void)asymptotic_rate(6), std::invalid_argument);
}

TEST(Rates, ExactRationalAndSizeTable) {
  const HolographicCode c = build_code(SeedKind::steane, 2);
  const Rational r = code_rate(c);
  EXPECT_EQ(r.num, 5U);
  EXPECT_EQ(r.den, 21U);
  for (const std::size_t n_sides : {5U, 7U}) {
    const auto rows = size_table(n_sides, 3);
    for (const auto& row : rows) {
      const Tiling t = build_tiling(n_sides, row.radius);
      EXPECT_EQ(row.n, t.boundary().size());
      EXPECT_EQ(row.k, t.tiles().size());
    }
  }
}

TEST(Rates, HeptagonSequenceMonotoneFromRadiusTwo) {
  const auto rows = size_table(7, 8);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const double prev = static_cast<double>(rows[i - 1].k) / static_cast<double>(rows[i - 1].n);
    const double cur = static_cast<double>(rows[i].k) / static_cast<double>(rows[i].n);
    EXPECT_GE(cur, prev);
  }
}

TEST(Export, RoundTrip) {
  for (const auto kind : {SeedKind::steane, SeedKind::five_qubit}) {
    const HolographicCode c = build_code(kind, 3);
    std::stringstream ss;
    export_code(c, ss);
    const HolographicCode back = import_code(ss);
    EXPECT_EQ(back, c);
  }
}

TEST(Export, ParseErrorsNameTheLine) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream is(text);
    try {
      (void)import_code(is);
    } catch (const parse_error& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n=2 k=1 seed=steane\n"), 1U);
  EXPECT_EQ(line_of("n=3 k=1 seed=steane R=1\nS + XXQ\n"), 2U);
  EXPECT_EQ(line_of("n=3 k=1 seed=steane R=1\nS + XX\n"), 2U);
  EXPECT_EQ(line_of("n=3 k=1 seed=steane R=1\nS + XXI\nS * ZZI\n"), 3U);
  EXPECT_EQ(line_of("n=3 k=1 seed=steane R=1\nS + XXI\nLX 4 + XXX\n"), 3U);
  EXPECT_THROW((void)import_code(std::string("/nonexistent/code.txt")), io_error);
}
