#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "holo/errors.hpp"
#include "holo/simulate.hpp"

using namespace holo;

namespace {

SimulationConfig config(SeedKind seed, std::size_t radius) {
  SimulationConfig cfg;
  cfg.seed = seed;
  cfg.radius = radius;
  return cfg;
}

RecoveryCurve synthetic(std::size_t radius, std::vector<double> p_rec) {
  RecoveryCurve c;
  c.n_sides = 5;
  c.radius = radius;
  c.n = p_rec.size() - 1;
  for (std::size_t a = 0; a < p_rec.size(); ++a) {
    CurveEntry e;
    e.a = a;
    e.trials = 1000;
    e.successes = static_cast<std::uint64_t>(std::llround(p_rec[a] * 1000));
    e.estimate = p_rec[a];
    e.ci_low = e.ci_high = p_rec[a];
    e.exact = true;
    c.entries.push_back(e);
  }
  return c;
}

std::string csv(const RecoveryCurve& c) {
  std::ostringstream os;
  write_curve_csv(c, os);
  return os.str();
}

}  // namespace

TEST(Wilson, KnownValues) {
  const auto half = wilson_interval(5, 10);
  EXPECT_NEAR(half.low, 0.2366, 1e-4);
  EXPECT_NEAR(half.high, 0.7634, 1e-4);
  const auto none = wilson_interval(0, 10);
  EXPECT_DOUBLE_EQ(none.low, 0.0);
  EXPECT_NEAR(none.high, 0.2775, 1e-4);
  const auto all = wilson_interval(10, 10);
  EXPECT_NEAR(all.low, 0.7225, 1e-4);
  EXPECT_DOUBLE_EQ(all.high, 1.0);
}

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10U);
  EXPECT_EQ(binomial(7, 0), 1U);
  EXPECT_EQ(binomial(7, 8), 0U);
  EXPECT_EQ(binomial(497, 3), 20337240U);
  EXPECT_EQ(binomial(62, 31), 465428353255261088ULL);
  EXPECT_EQ(binomial(1000, 500), UINT64_MAX);
}

TEST(Combinatorics, UnrankIsLexicographic) {
  EXPECT_EQ(unrank_combination(5, 2, 0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(unrank_combination(5, 2, 9), (std::vector<std::size_t>{3, 4}));
  std::vector<std::size_t> prev;
  for (std::uint64_t r = 0; r < binomial(9, 4); ++r) {
    const auto c = unrank_combination(9, 4, r);
    ASSERT_EQ(c.size(), 4U);
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    EXPECT_LT(c.back(), 9U);
    if (r > 0) {
      EXPECT_LT(prev, c);
    }
    prev = c;
  }
  EXPECT_THROW((void)unrank_combination(5, 2, 10), std::out_of_range);
}

TEST(Rng, StreamsAreKeyed) {
  auto a = trial_stream(1, 7, 2, 5);
  auto b = trial_stream(1, 7, 2, 5);
  EXPECT_EQ(a(), b());
  std::set<std::uint64_t> firsts;
  for (std::uint64_t t = 0; t < 100; ++t) {
    firsts.insert(trial_stream(1, 7, 2, t)());
  }
  firsts.insert(trial_stream(2, 7, 2, 0)());
  firsts.insert(trial_stream(1, 5, 2, 0)());
  firsts.insert(trial_stream(1, 7, 3, 0)());
  EXPECT_EQ(firsts.size(), 103U);
}

TEST(Rng, UniformBelowAndOrders) {
  std::mt19937_64 rng(1);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) {
    const auto v = uniform_below(rng, 6);
    ASSERT_LT(v, 6U);
    ++counts[v];
  }
  for (const int c : counts) {
    EXPECT_NEAR(c, 10000, 500);
  }
  for (int i = 0; i < 20; ++i) {
    auto order = random_order(rng, 30);
    std::sort(order.begin(), order.end());
    for (std::size_t q = 0; q < 30; ++q) {
      EXPECT_EQ(order[q], q);
    }
  }
  // First position of a random ordering is uniform.
  std::vector<int> first(5, 0);
  for (int i = 0; i < 50000; ++i) {
    ++first[random_order(rng, 5)[0]];
  }
  for (const int c : first) {
    EXPECT_NEAR(c, 10000, 500);
  }
}

TEST(Config, Validation) {
  SimulationConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SimulationConfig{};
  cfg.threads = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SimulationConfig{};
  cfg.radius = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_EQ(parse_decoder("greedy"), DecoderKind::greedy);
  EXPECT_EQ(to_string(DecoderKind::optimal), "optimal");
  EXPECT_THROW((void)parse_decoder("best"), std::invalid_argument);
}

TEST(Estimate, SteaneRadiusOneExact) {
  // Erasures fail exactly when they cover one of the seven weight-3 logical supports.
  const auto c = estimate_Prec(config(SeedKind::steane, 1));
  const std::vector<double> expected{1, 1, 1, 28.0 / 35, 7.0 / 35, 0, 0, 0};
  ASSERT_EQ(c.entries.size(), expected.size());
  for (std::size_t a = 0; a < expected.size(); ++a) {
    EXPECT_TRUE(c.entries[a].exact);
    EXPECT_EQ(c.entries[a].trials, binomial(7, a));
    EXPECT_DOUBLE_EQ(c.entries[a].estimate, expected[a]) << a;
  }
  // Direct sum over all 2^7 patterns at p = 0.3.
  double direct = 0;
  const double p = 0.3;
  for (std::size_t a = 0; a <= 7; ++a) {
    direct += static_cast<double>(binomial(7, a)) * std::pow(p, a) * std::pow(1 - p, 7 - a) * expected[a];
  }
  EXPECT_NEAR(binomial_mix(c, p), direct, 1e-12);
}

TEST(Estimate, FiveQubitRadiusOneExact) {
  const auto c = estimate_Prec(config(SeedKind::five_qubit, 1));
  const std::vector<double> expected{1, 1, 1, 0, 0, 0};
  for (std::size_t a = 0; a < expected.size(); ++a) {
    EXPECT_DOUBLE_EQ(c.entries[a].estimate, expected[a]) << a;
  }
}

TEST(Estimate, SampledMatchesExact) {
  auto cfg = config(SeedKind::steane, 2);
  const auto exact = estimate_Prec(cfg);
  cfg.exact_cutoff = 0;
  cfg.trials = 20000;
  const auto sampled = estimate_Prec(cfg);
  for (std::size_t a = 1; a < exact.entries.size(); ++a) {
    const auto& s = sampled.entries[a];
    if (s.exact) {
      EXPECT_EQ(exact.entries[a].successes, 0U);
      continue;
    }
    const double sigma = std::sqrt(std::max(1e-4, exact.entries[a].estimate * (1 - exact.entries[a].estimate)) / 20000);
    EXPECT_NEAR(s.estimate, exact.entries[a].estimate, 5 * sigma) << a;
    EXPECT_LE(s.ci_low, s.estimate);
    EXPECT_GE(s.ci_high, s.estimate);
  }
}

TEST(Estimate, Endpoints) {
  for (const auto kind : {SeedKind::steane, SeedKind::five_qubit}) {
    for (const auto dec : {DecoderKind::optimal, DecoderKind::greedy}) {
      auto cfg = config(kind, 2);
      cfg.decoder = dec;
      cfg.trials = 500;
      cfg.exact_cutoff = 10;
      const auto c = estimate_Prec(cfg);
      EXPECT_DOUBLE_EQ(c.entries.front().estimate, 1.0);
      EXPECT_DOUBLE_EQ(c.entries.back().estimate, 0.0);
      for (std::size_t a = 1; a < c.entries.size(); ++a) {
        EXPECT_LE(c.entries[a].estimate, c.entries[a - 1].estimate + 1e-12);
      }
    }
  }
}

TEST(Estimate, GreedyNeverAboveOptimal) {
  auto cfg = config(SeedKind::five_qubit, 3);
  cfg.trials = 2000;
  cfg.exact_cutoff = 1000;
  const auto opt = estimate_Prec(cfg);
  cfg.decoder = DecoderKind::greedy;
  const auto greedy = estimate_Prec(cfg);
  for (std::size_t a = 0; a < opt.entries.size(); ++a) {
    EXPECT_LE(greedy.entries[a].successes * opt.entries[a].trials,
              opt.entries[a].successes * greedy.entries[a].trials)
        << a;
  }
}

TEST(Estimate, DeterministicAcrossRunsAndThreads) {
  auto cfg = config(SeedKind::five_qubit, 2);
  cfg.trials = 3000;
  cfg.exact_cutoff = 100;
  const std::string one = csv(estimate_Prec(cfg));
  EXPECT_EQ(csv(estimate_Prec(cfg)), one);
  cfg.threads = 3;
  EXPECT_EQ(csv(estimate_Prec(cfg)), one);
  cfg.threads = 1;
  cfg.rng_seed = 2;
  EXPECT_NE(csv(estimate_Prec(cfg)), one);
}

TEST(Mix, ClosedForms) {
  const auto ones = synthetic(1, {1, 1, 1, 1});
  const auto first = synthetic(1, {1, 0, 0, 0});
  for (const double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(binomial_mix(ones, p), 1.0, 1e-12);
    EXPECT_NEAR(binomial_mix(first, p), std::pow(1 - p, 3), 1e-12);
  }
  EXPECT_THROW((void)binomial_mix(ones, 1.5), std::invalid_argument);
}

TEST(Threshold, SyntheticCrossings) {
  // (1-p) against majority-of-three against majority-of-five: all cross at 1/2.
  const auto r1 = synthetic(1, {1, 0});
  const auto r2 = synthetic(2, {1, 1, 0, 0});
  const auto r3 = synthetic(3, {1, 1, 1, 0, 0, 0});
  const auto report = find_threshold({r3, r1, r2});
  ASSERT_EQ(report.pairs.size(), 2U);
  EXPECT_EQ(report.pairs[0].radius_a, 1U);
  EXPECT_EQ(report.pairs[0].radius_b, 2U);
  for (const auto& pair : report.pairs) {
    ASSERT_TRUE(pair.crossing);
    EXPECT_NEAR(*pair.crossing, 0.5, 1e-4);
    EXPECT_EQ(pair.sign_changes, 1U);
  }
  ASSERT_TRUE(report.mean);
  EXPECT_NEAR(*report.mean, 0.5, 1e-4);
  EXPECT_TRUE(report.stable(0.05));
}

TEST(Threshold, IdenticalCurvesDoNotCross) {
  const auto a = synthetic(1, {1, 1, 0.5, 0});
  auto b = a;
  b.radius = 2;
  const auto report = find_threshold({a, b});
  EXPECT_FALSE(report.pairs[0].crossing);
  EXPECT_FALSE(report.mean);
  EXPECT_FALSE(report.stable(0.05));
}

TEST(Threshold, Errors) {
  const auto a = synthetic(1, {1, 0});
  EXPECT_THROW((void)find_threshold({a}), std::invalid_argument);
  EXPECT_THROW((void)find_threshold({a, a}), std::invalid_argument);
}

TEST(Csv, RoundTrip) {
  auto cfg = config(SeedKind::steane, 2);
  cfg.trials = 500;
  cfg.exact_cutoff = 100;
  const auto c = estimate_Prec(cfg);
  std::istringstream is(csv(c));
  const auto back = read_curve_csv(is);
  EXPECT_EQ(back.n_sides, 7U);
  EXPECT_EQ(back.radius, 2U);
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.metadata, c.metadata);
  ASSERT_EQ(back.entries.size(), c.entries.size());
  for (std::size_t a = 0; a < c.entries.size(); ++a) {
    EXPECT_EQ(back.entries[a].successes, c.entries[a].successes);
    EXPECT_EQ(back.entries[a].trials, c.entries[a].trials);
    EXPECT_EQ(back.entries[a].exact, c.entries[a].exact);
    EXPECT_DOUBLE_EQ(back.entries[a].estimate, c.entries[a].estimate);
    EXPECT_DOUBLE_EQ(back.entries[a].ci_low, c.entries[a].ci_low);
  }
  EXPECT_EQ(csv(back), csv(c));
}

TEST(Csv, ParseErrors) {
  const std::string good = csv(estimate_Prec(config(SeedKind::five_qubit, 1)));
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream is(text);
    try {
      (void)read_curve_csv(is);
      ADD_FAILURE() << "no error for:\n" << text;
    } catch (const parse_error& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  std::string bad_cell = good;
  bad_cell.replace(bad_cell.find("5,1,optimal,2"), 13, "5,1,optimal,x");
  expect_line(bad_cell, 5);
  expect_line("# m\nnope\n", 2);
  std::string missing_row = good.substr(0, good.rfind("5,1,optimal,5"));
  expect_line(missing_row, 7);
  std::string too_many = good;
  too_many.replace(too_many.find("5,1,optimal,3,5,10,0"), 20, "5,1,optimal,3,5,10,11");
  EXPECT_THROW(
      {
        std::istringstream is(too_many);
        (void)read_curve_csv(is);
      },
      parse_error);
  EXPECT_THROW((void)read_curve_csv(std::string("/nonexistent/curve.csv")), io_error);
}

TEST(Output, MixedCsvAndSvg) {
  const auto r1 = synthetic(1, {1, 0});
  const auto r2 = synthetic(2, {1, 1, 0, 0});
  std::ostringstream mixed;
  write_mixed_csv({r1, r2}, 11, mixed);
  std::istringstream lines(mixed.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "R,p,p_rec");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
  }
  EXPECT_EQ(rows, 22U);
  EXPECT_NE(mixed.str().find("1,0.5,0.5"), std::string::npos);

  std::ostringstream svg;
  write_svg_plot({r1, r2}, svg);
  const std::string s = svg.str();
  EXPECT_EQ(s.rfind("<svg", 0), 0U);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  std::size_t polylines = 0;
  for (auto pos = s.find("<polyline"); pos != std::string::npos; pos = s.find("<polyline", pos + 1)) {
    ++polylines;
  }
  EXPECT_EQ(polylines, 2U);
}
