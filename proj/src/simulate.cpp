#include "holo/simulate.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "holo/errors.hpp"

namespace holo {

std::string to_string(DecoderKind d) { return d == DecoderKind::optimal ? "optimal" : "greedy"; }

DecoderKind parse_decoder(const std::string& name) {
  if (name == "optimal") {
    return DecoderKind::optimal;
  }
  if (name == "greedy") {
    return DecoderKind::greedy;
  }
  throw std::invalid_argument("unknown decoder '" + name + "' (expected optimal or greedy)");
}

void SimulationConfig::validate() const {
  if (radius == 0) {
    throw std::invalid_argument("radius must be at least 1");
  }
  if (trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (threads == 0) {
    throw std::invalid_argument("threads must be at least 1");
  }
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) {
    return {0.0, 1.0};
  }
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  return {successes == 0 ? 0.0 : std::max(0.0, center - half),
          successes == trials ? 1.0 : std::min(1.0, center + half)};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 trial_stream(std::uint64_t master, std::size_t n_sides, std::size_t radius, std::uint64_t trial) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ n_sides);
  h = splitmix64(h ^ radius);
  h = splitmix64(h ^ trial);
  return std::mt19937_64(h);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below: empty range");
  }
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

std::vector<std::size_t> random_order(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
    std::swap(order[i], order[j]);
  }
  return order;
}

std::uint64_t binomial(std::size_t n, std::size_t a) {
  if (a > n) {
    return 0;
  }
  a = std::min(a, n - a);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= a; ++i) {
    // c * (n - a + i) / i is exact at every step; guard the product.
    const std::uint64_t num = n - a + i;
    const std::uint64_t g = std::gcd(c, static_cast<std::uint64_t>(i));
    const std::uint64_t cg = c / g;
    const std::uint64_t ig = i / g;
    const std::uint64_t numg = num / ig;
    if (numg != 0 && cg > kMax / numg) {
      return kMax;
    }
    c = cg * numg;
  }
  return c;
}

std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t a, std::uint64_t rank) {
  if (rank >= binomial(n, a)) {
    throw std::out_of_range("combination rank out of range");
  }
  std::vector<std::size_t> out;
  out.reserve(a);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < a; ++slot) {
    for (;; ++next) {
      const std::uint64_t with_next = binomial(n - next - 1, a - slot - 1);
      if (rank < with_next) {
        break;
      }
      rank -= with_next;
    }
    out.push_back(next++);
  }
  return out;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t a = c.size();
  for (std::size_t i = a; i-- > 0;) {
    if (c[i] < n - a + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < a; ++j) {
        c[j] = c[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

// Runs body(begin, end, worker) over [0, count) split into contiguous chunks.
void parallel_chunks(std::uint64_t count, std::size_t threads,
                     const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body) {
  const std::size_t workers = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count)));
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

// One decoder instance per worker; answers pattern and prefix queries.
class Decider {
public:
  Decider(const HolographicCode& code, const GreedyDecoder* greedy, const SimulationConfig& cfg)
      : n_(code.n), greedy_(greedy), tile_(cfg.tile) {
    if (!greedy_) {
      optimal_.emplace(code, cfg.tile, cfg.check);
    }
  }

  bool recoverable(const std::vector<std::size_t>& erased) {
    if (optimal_) {
      return optimal_->first_failure(erased) > erased.size();
    }
    ErasurePattern e = ErasurePattern::none(n_);
    for (const std::size_t q : erased) {
      e.mask.set(q);
    }
    return greedy_->recoverable(e, tile_);
  }

  // Smallest a whose length-a prefix of order is unrecoverable, or n + 1.
  std::size_t first_failure(const std::vector<std::size_t>& order) {
    if (optimal_) {
      return optimal_->first_failure(order);
    }
    auto prefix_ok = [&](std::size_t a) {
      ErasurePattern e = ErasurePattern::none(n_);
      for (std::size_t i = 0; i < a; ++i) {
        e.mask.set(order[i]);
      }
      return greedy_->recoverable(e, tile_);
    };
    std::size_t lo = 0;  // prefix lo is recoverable
    std::size_t hi = order.size() + 1;
    if (prefix_ok(order.size())) {
      return hi;
    }
    hi = order.size();  // prefix hi fails
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      (prefix_ok(mid) ? lo : hi) = mid;
    }
    return hi;
  }

private:
  std::size_t n_;
  const GreedyDecoder* greedy_;
  std::size_t tile_;
  std::optional<IncrementalDecoder> optimal_;
};

// Erasure sets known to be unrecoverable; any superset is unrecoverable too.
class FailureCertificates {
public:
  void add(BitVector set) { sets_.push_back(std::move(set)); }

  // Whether some certificate avoids every qubit in `kept`.
  [[nodiscard]] bool covers_complement_of(const std::vector<std::size_t>& kept) const {
    return std::any_of(sets_.begin(), sets_.end(), [&](const BitVector& f) {
      return std::none_of(kept.begin(), kept.end(), [&](std::size_t q) { return f.get(q); });
    });
  }

private:
  std::vector<BitVector> sets_;
};

FailureCertificates initial_certificates(const HolographicCode& code, const SimulationConfig& cfg) {
  FailureCertificates certs;
  // Operators that commute with the stabilizers but anticommute with a required
  // logical cannot be cleaned away, so their supports block recovery.
  std::vector<const PauliString*> blockers{&code.logical_z[cfg.tile]};
  if (cfg.check == LogicalCheck::both) {
    blockers.push_back(&code.logical_x[cfg.tile]);
  }
  for (const auto* l : blockers) {
    certs.add(support(*l));
    for (const auto& g : code.stabilizers) {
      certs.add(support(multiply(*l, g)));
    }
  }
  return certs;
}

}  // namespace

RecoveryCurve estimate_Prec(const HolographicCode& code, const Tiling& tiling, const SeedCode& seed,
                            const SimulationConfig& cfg) {
  cfg.validate();
  if (cfg.tile >= code.k) {
    throw std::invalid_argument("tile " + std::to_string(cfg.tile) + " has no logical qubit");
  }
  const std::size_t n = code.n;
  std::optional<GreedyDecoder> greedy;
  if (cfg.decoder == DecoderKind::greedy) {
    greedy.emplace(tiling, seed);
  }
  auto make_decider = [&] { return Decider(code, greedy ? &*greedy : nullptr, cfg); };

  RecoveryCurve curve;
  curve.n_sides = tiling.n_sides();
  curve.radius = tiling.radius();
  curve.decoder = cfg.decoder;
  curve.n = n;
  std::ostringstream meta;
  meta << "seed=" << to_string(cfg.seed) << " radius=" << cfg.radius << " decoder=" << to_string(cfg.decoder)
       << " trials=" << cfg.trials << " rng_seed=" << cfg.rng_seed << " exact_cutoff=" << cfg.exact_cutoff
       << " logicals=" << (cfg.check == LogicalCheck::both ? "both" : "x_only") << " tile=" << cfg.tile
       << " sampling=shared-ordering interval=wilson95";
  curve.metadata = meta.str();

  std::vector<bool> exact(n + 1, false);
  for (std::size_t a = 0; a <= n; ++a) {
    exact[a] = binomial(n, a) <= cfg.exact_cutoff;
  }
  const bool any_sampled = std::find(exact.begin(), exact.end(), false) != exact.end();

  // Sampling: one random ordering per trial, shared by every weight.
  std::vector<std::size_t> first_fail(any_sampled ? cfg.trials : 0);
  std::vector<std::vector<std::size_t>> orders(first_fail.size());
  parallel_chunks(first_fail.size(), cfg.threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    Decider d = make_decider();
    for (std::uint64_t t = begin; t < end; ++t) {
      auto rng = trial_stream(cfg.rng_seed, tiling.n_sides(), tiling.radius(), t);
      orders[t] = random_order(rng, n);
      first_fail[t] = d.first_failure(orders[t]);
    }
  });

  FailureCertificates certs = initial_certificates(code, cfg);
  for (std::size_t t = 0; t < first_fail.size(); ++t) {
    if (first_fail[t] <= n) {
      BitVector f(n);
      for (std::size_t i = 0; i < first_fail[t]; ++i) {
        f.set(orders[t][i]);
      }
      certs.add(std::move(f));
    }
  }
  orders.clear();

  curve.entries.resize(n + 1);
  std::optional<std::size_t> all_fail_from;
  for (std::size_t a = 0; a <= n; ++a) {
    CurveEntry& entry = curve.entries[a];
    entry.a = a;
    if (all_fail_from && a > *all_fail_from) {
      // Every weight-a pattern contains an unrecoverable pattern of lower weight.
      entry.trials = binomial(n, a);
      entry.successes = 0;
      entry.exact = true;
    } else if (exact[a]) {
      const std::uint64_t total = binomial(n, a);
      const bool by_complement = 2 * a > n;
      const std::size_t chosen = by_complement ? n - a : a;
      std::vector<std::uint64_t> counts(cfg.threads, 0);
      parallel_chunks(total, cfg.threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t w) {
        if (begin == end) {
          return;
        }
        Decider d = make_decider();
        std::vector<std::size_t> comb = unrank_combination(n, chosen, begin);
        std::vector<bool> kept(n);
        std::vector<std::size_t> erased;
        for (std::uint64_t r = begin; r < end; ++r) {
          if (!by_complement) {
            counts[w] += d.recoverable(comb) ? 1 : 0;
          } else if (!certs.covers_complement_of(comb)) {
            std::fill(kept.begin(), kept.end(), false);
            for (const std::size_t q : comb) {
              kept[q] = true;
            }
            erased.clear();
            for (std::size_t q = 0; q < n; ++q) {
              if (!kept[q]) {
                erased.push_back(q);
              }
            }
            counts[w] += d.recoverable(erased) ? 1 : 0;
          }
          if (r + 1 < end) {
            next_combination(comb, n);
          }
        }
      });
      entry.trials = total;
      entry.successes = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
      entry.exact = true;
      if (entry.successes == 0 && !all_fail_from) {
        all_fail_from = a;
      }
    } else {
      entry.trials = cfg.trials;
      entry.successes = static_cast<std::uint64_t>(
          std::count_if(first_fail.begin(), first_fail.end(), [a](std::size_t f) { return a < f; }));
    }
    entry.estimate = static_cast<double>(entry.successes) / static_cast<double>(entry.trials);
    if (entry.exact) {
      entry.ci_low = entry.ci_high = entry.estimate;
    } else {
      const Interval ci = wilson_interval(entry.successes, entry.trials);
      entry.ci_low = ci.low;
      entry.ci_high = ci.high;
    }
  }
  return curve;
}

RecoveryCurve estimate_Prec(const SimulationConfig& cfg) {
  cfg.validate();
  const Tiling t = build_tiling(seed_sides(cfg.seed), cfg.radius);
  const SeedCode seed = make_seed(cfg.seed);
  const HolographicCode code = build_code(t, seed, cfg.seed);
  return estimate_Prec(code, t, seed, cfg);
}

double binomial_mix(const RecoveryCurve& curve, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability must lie in [0,1]");
  }
  const std::size_t n = curve.n;
  if (curve.entries.size() != n + 1) {
    throw std::invalid_argument("curve needs one entry per weight 0..n");
  }
  if (p == 0.0) {
    return curve.entries.front().estimate;
  }
  if (p == 1.0) {
    return curve.entries.back().estimate;
  }
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double ln_fact_n = std::lgamma(static_cast<double>(n) + 1.0);
  double sum = 0.0;
  for (std::size_t a = 0; a <= n; ++a) {
    const double w = ln_fact_n - std::lgamma(static_cast<double>(a) + 1.0) -
                     std::lgamma(static_cast<double>(n - a) + 1.0) + static_cast<double>(a) * lp +
                     static_cast<double>(n - a) * lq;
    sum += std::exp(w) * curve.entries[a].estimate;
  }
  return std::clamp(sum, 0.0, 1.0);
}

bool ThresholdReport::stable(double tolerance) const {
  if (pairs.empty() || !mean) {
    return false;
  }
  for (const auto& pc : pairs) {
    if (!pc.crossing) {
      return false;
    }
  }
  return spread <= tolerance;
}

ThresholdReport find_threshold(std::vector<RecoveryCurve> curves) {
  if (curves.size() < 2) {
    throw std::invalid_argument("threshold needs at least two curves");
  }
  std::sort(curves.begin(), curves.end(), [](const auto& x, const auto& y) { return x.radius < y.radius; });
  for (std::size_t i = 1; i < curves.size(); ++i) {
    if (curves[i].radius == curves[i - 1].radius) {
      throw std::invalid_argument("threshold needs distinct radii");
    }
  }
  constexpr std::size_t kGrid = 2000;
  constexpr double kFlat = 1e-9;
  ThresholdReport report;
  for (std::size_t i = 1; i < curves.size(); ++i) {
    const RecoveryCurve& lo = curves[i - 1];
    const RecoveryCurve& hi = curves[i];
    auto diff = [&](double p) { return binomial_mix(hi, p) - binomial_mix(lo, p); };
    PairCrossing pc{lo.radius, hi.radius, std::nullopt, 0};
    int last_sign = 0;
    double last_p = 0.0;
    for (std::size_t g = 1; g < kGrid; ++g) {
      const double p = static_cast<double>(g) / kGrid;
      const double f = diff(p);
      if (std::abs(f) < kFlat) {
        continue;
      }
      const int sign = f > 0 ? 1 : -1;
      if (last_sign != 0 && sign != last_sign) {
        ++pc.sign_changes;
        if (!pc.crossing) {
          double a = last_p;
          double b = p;
          while (b - a > 1e-4) {
            const double m = 0.5 * (a + b);
            const double fm = diff(m);
            ((fm > 0 ? 1 : -1) == last_sign ? a : b) = m;
          }
          pc.crossing = 0.5 * (a + b);
        }
      }
      last_sign = sign;
      last_p = p;
    }
    report.pairs.push_back(pc);
  }
  std::vector<double> xs;
  for (const auto& pc : report.pairs) {
    if (pc.crossing) {
      xs.push_back(*pc.crossing);
    }
  }
  if (!xs.empty()) {
    report.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    for (const double x : xs) {
      report.spread = std::max(report.spread, std::abs(x - *report.mean));
    }
  }
  return report;
}

namespace {

constexpr const char* kCurveHeader = "n_sides,R,decoder,a,n,trials,successes,p_rec_hat,ci_low,ci_high,exact";

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

std::uint64_t parse_count(const std::string& s, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    if (s.empty() || s[0] == '-') {
      throw std::invalid_argument("negative");
    }
    const auto v = std::stoull(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument("trailing");
    }
    return v;
  } catch (const std::exception&) {
    throw parse_error(line, std::string("bad ") + what + " '" + s + "'");
  }
}

}  // namespace

void write_curve_csv(const RecoveryCurve& curve, std::ostream& os) {
  os << "# " << curve.metadata << '\n' << kCurveHeader << '\n';
  for (const auto& e : curve.entries) {
    os << curve.n_sides << ',' << curve.radius << ',' << to_string(curve.decoder) << ',' << e.a << ',' << curve.n
       << ',' << e.trials << ',' << e.successes << ',' << fmt_double(e.estimate) << ',' << fmt_double(e.ci_low) << ','
       << fmt_double(e.ci_high) << ',' << (e.exact ? 1 : 0) << '\n';
  }
}

void write_curve_csv(const RecoveryCurve& curve, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw io_error("cannot open '" + path + "' for writing");
  }
  write_curve_csv(curve, os);
  if (!os) {
    throw io_error("failed writing '" + path + "'");
  }
}

RecoveryCurve read_curve_csv(std::istream& is) {
  RecoveryCurve curve;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (line[0] == '#') {
      if (!header && curve.metadata.empty()) {
        curve.metadata = line.substr(line.find_first_not_of("# ") == std::string::npos ? line.size()
                                                                                       : line.find_first_not_of("# "));
      }
      continue;
    }
    if (!header) {
      if (line != kCurveHeader) {
        throw parse_error(line_no, "expected header '" + std::string(kCurveHeader) + "'");
      }
      header = true;
      continue;
    }
    const auto cells = split_csv(line);
    if (cells.size() != 11) {
      throw parse_error(line_no, "expected 11 columns, got " + std::to_string(cells.size()));
    }
    const auto n_sides = static_cast<std::size_t>(parse_count(cells[0], line_no, "n_sides"));
    const auto radius = static_cast<std::size_t>(parse_count(cells[1], line_no, "R"));
    DecoderKind decoder{};
    try {
      decoder = parse_decoder(cells[2]);
    } catch (const std::invalid_argument& e) {
      throw parse_error(line_no, e.what());
    }
    CurveEntry e;
    e.a = static_cast<std::size_t>(parse_count(cells[3], line_no, "a"));
    const auto n = static_cast<std::size_t>(parse_count(cells[4], line_no, "n"));
    e.trials = parse_count(cells[5], line_no, "trials");
    e.successes = parse_count(cells[6], line_no, "successes");
    const auto exact_flag = parse_count(cells[10], line_no, "exact");
    if (curve.entries.empty()) {
      curve.n_sides = n_sides;
      curve.radius = radius;
      curve.decoder = decoder;
      curve.n = n;
    } else if (n_sides != curve.n_sides || radius != curve.radius || decoder != curve.decoder || n != curve.n) {
      throw parse_error(line_no, "row belongs to a different curve");
    }
    if (e.a != curve.entries.size()) {
      throw parse_error(line_no, "expected weight a=" + std::to_string(curve.entries.size()));
    }
    if (e.trials == 0 || e.successes > e.trials || exact_flag > 1) {
      throw parse_error(line_no, "inconsistent counts");
    }
    e.exact = exact_flag == 1;
    e.estimate = static_cast<double>(e.successes) / static_cast<double>(e.trials);
    if (e.exact) {
      e.ci_low = e.ci_high = e.estimate;
    } else {
      const Interval ci = wilson_interval(e.successes, e.trials);
      e.ci_low = ci.low;
      e.ci_high = ci.high;
    }
    curve.entries.push_back(e);
  }
  if (!header) {
    throw parse_error(line_no, "missing header");
  }
  if (curve.entries.size() != curve.n + 1) {
    throw parse_error(line_no, "expected " + std::to_string(curve.n + 1) + " rows, got " +
                                   std::to_string(curve.entries.size()));
  }
  return curve;
}

RecoveryCurve read_curve_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw io_error("cannot open '" + path + "'");
  }
  return read_curve_csv(is);
}

void write_mixed_csv(const std::vector<RecoveryCurve>& curves, std::size_t points, std::ostream& os) {
  if (points < 2) {
    throw std::invalid_argument("need at least two grid points");
  }
  os << "R,p,p_rec\n";
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < points; ++i) {
      const double p = static_cast<double>(i) / static_cast<double>(points - 1);
      os << c.radius << ',' << fmt_double(p) << ',' << fmt_double(binomial_mix(c, p)) << '\n';
    }
  }
}

void write_svg_plot(const std::vector<RecoveryCurve>& curves, std::ostream& os) {
  constexpr double kW = 640;
  constexpr double kH = 480;
  constexpr double kLeft = 60;
  constexpr double kRight = 20;
  constexpr double kTop = 20;
  constexpr double kBottom = 50;
  constexpr std::size_t kSamples = 200;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
  const double pw = kW - kLeft - kRight;
  const double ph = kH - kTop - kBottom;
  auto x_of = [&](double p) { return kLeft + p * pw; };
  auto y_of = [&](double v) { return kTop + (1.0 - v) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" viewBox=\"0 0 "
     << kW << ' ' << kH << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"black\" fill=\"none\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
     << "\" height=\"" << ph << "\"/></g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    os << "<text x=\"" << fmt_double(x_of(v)) << "\" y=\"" << fmt_double(kTop + ph + 16)
       << "\" text-anchor=\"middle\">" << fmt_double(v) << "</text>\n";
    os << "<text x=\"" << fmt_double(kLeft - 6) << "\" y=\"" << fmt_double(y_of(v) + 4)
       << "\" text-anchor=\"end\">" << fmt_double(v) << "</text>\n";
  }
  os << "<text x=\"" << fmt_double(kLeft + pw / 2) << "\" y=\"" << fmt_double(kH - 10)
     << "\" text-anchor=\"middle\">erasure probability p</text>\n";
  os << "<text x=\"14\" y=\"" << fmt_double(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
     << fmt_double(kTop + ph / 2) << ")\">recovery probability</text>\n";
  os << "</g>\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* color = kColors[c % (sizeof kColors / sizeof kColors[0])];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i <= kSamples; ++i) {
      const double p = static_cast<double>(i) / kSamples;
      os << (i ? " " : "") << fmt_double(x_of(p)) << ',' << fmt_double(y_of(binomial_mix(curves[c], p)));
    }
    os << "\"/>\n";
    os << "<text x=\"" << fmt_double(kLeft + pw - 90) << "\" y=\"" << fmt_double(kTop + 18 + 16.0 * static_cast<double>(c))
       << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">R=" << curves[c].radius << ' '
       << to_string(curves[c].decoder) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace holo
