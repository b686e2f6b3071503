// Command-line front end: seed checks, code construction, decoding and simulation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holo/code_builder.hpp"
#include "holo/erasure.hpp"
#include "holo/errors.hpp"
#include "holo/seed.hpp"
#include "holo/simulate.hpp"
#include "holo/tensor_analysis.hpp"
#include "holo/tiling.hpp"

namespace {

using namespace holo;

enum Exit { kOk = 0, kUsage = 1, kCapacity = 2, kIo = 3 };

std::string legs_to_string(const SeedCode& seed, const Bipartition& part) {
  std::string out = "{";
  for (std::size_t i = 0; i < part.a_legs().size(); ++i) {
    out += (i ? "," : "") + seed.leg_labels[part.a_legs()[i]];
  }
  return out + "}";
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Writes to `path`, or stdout when it is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw io_error("cannot open '" + path + "' for writing");
  }
  fn(os);
  if (!os) {
    throw io_error("failed writing '" + path + "'");
  }
}

struct CheckSeedArgs {
  std::string seed = "steane";
  std::string mode = "all";
};

int run_check_seed(const CheckSeedArgs& a) {
  const SeedCode seed = make_seed(parse_seed_kind(a.seed));
  int status = kOk;
  if (a.mode == "perfect" || a.mode == "all") {
    const auto witness = find_non_isometric_subset(seed);
    std::cout << "perfect: " << (witness ? "no" : "yes");
    if (witness) {
      std::cout << " (not an isometry from A=" << legs_to_string(seed, *witness) << ")";
    }
    std::cout << '\n';
  }
  if (a.mode == "block" || a.mode == "all") {
    std::cout << "block perfect: " << (check_block_perfect(seed) ? "yes" : "no") << '\n';
  }
  return status;
}

struct BuildArgs {
  std::string seed = "steane";
  std::size_t radius = 1;
  std::string out;
  std::string tiling_out;
};

int run_build(const BuildArgs& a) {
  const SeedKind kind = parse_seed_kind(a.seed);
  const Tiling t = build_tiling(seed_sides(kind), a.radius);
  const HolographicCode code = build_code(t, make_seed(kind), kind);
  with_output(a.out, [&](std::ostream& os) { export_code(code, os); });
  if (!a.tiling_out.empty()) {
    with_output(a.tiling_out, [&](std::ostream& os) { write_tiling(os, t); });
  }
  const TileCensus census = tile_census(t);
  std::cerr << "n=" << code.n << " k=" << code.k << " generators=" << code.stabilizers.size()
            << " rate=" << code_rate(code).num << '/' << code_rate(code).den << " tiles(0/1/2 inputs)="
            << census.no_input << '/' << census.one_input << '/' << census.two_inputs << '\n';
  return kOk;
}

struct DecodeArgs {
  std::string code;
  std::string erasure;
  std::string decoder = "both";
  std::string logicals = "both";
  std::size_t tile = 0;
  bool witness = false;
};

LogicalCheck parse_check(const std::string& s) {
  if (s == "both") {
    return LogicalCheck::both;
  }
  if (s == "x_only") {
    return LogicalCheck::x_only;
  }
  throw std::invalid_argument("unknown logical check '" + s + "' (expected both or x_only)");
}

int run_decode(const DecodeArgs& a) {
  const HolographicCode code = import_code(a.code);
  const ErasurePattern e = ErasurePattern::parse(a.erasure);
  if (e.size() != code.n) {
    throw std::invalid_argument("erasure has " + std::to_string(e.size()) + " bits but the code has " +
                                std::to_string(code.n) + " qubits");
  }
  const LogicalCheck check = parse_check(a.logicals);
  if (a.decoder == "optimal" || a.decoder == "both") {
    const OptimalVerdict v = is_recoverable_optimal(code, e, a.tile, check);
    std::cout << "optimal: " << (v.recoverable ? "recoverable" : "unrecoverable") << '\n';
    if (a.witness) {
      std::cout << "lambda_x: " << (v.lambda_x ? v.lambda_x->to_string() : "none") << '\n';
      if (check == LogicalCheck::both) {
        std::cout << "lambda_z: " << (v.lambda_z ? v.lambda_z->to_string() : "none") << '\n';
      }
    }
  }
  if (a.decoder == "greedy" || a.decoder == "both") {
    const Tiling t = build_tiling(seed_sides(code.seed), code.radius);
    const bool ok = is_recoverable_greedy(t, make_seed(code.seed), e, a.tile);
    std::cout << "greedy: " << (ok ? "recoverable" : "unrecoverable") << '\n';
  }
  if (a.decoder != "optimal" && a.decoder != "greedy" && a.decoder != "both") {
    throw std::invalid_argument("unknown decoder '" + a.decoder + "'");
  }
  return kOk;
}

struct SimulateArgs {
  std::string seed = "steane";
  std::string decoder = "optimal";
  std::string logicals = "both";
  std::string out;
  SimulationConfig cfg;
};

int run_simulate(SimulateArgs a) {
  a.cfg.seed = parse_seed_kind(a.seed);
  a.cfg.decoder = parse_decoder(a.decoder);
  a.cfg.check = parse_check(a.logicals);
  const RecoveryCurve curve = estimate_Prec(a.cfg);
  with_output(a.out, [&](std::ostream& os) { write_curve_csv(curve, os); });
  return kOk;
}

struct ThresholdArgs {
  std::vector<std::string> curves;
  std::string mixed;
  std::size_t points = 101;
  double tolerance = 0.05;
};

int run_threshold(const ThresholdArgs& a) {
  std::vector<RecoveryCurve> curves;
  for (const auto& path : a.curves) {
    curves.push_back(read_curve_csv(path));
  }
  const ThresholdReport r = find_threshold(curves);
  for (const auto& pc : r.pairs) {
    std::cout << "R=" << pc.radius_a << " vs R=" << pc.radius_b << ": ";
    if (pc.crossing) {
      std::cout << "crossing at p=" << fixed(*pc.crossing) << " (" << pc.sign_changes << " sign change"
                << (pc.sign_changes == 1 ? "" : "s") << ")\n";
    } else {
      std::cout << "no crossing\n";
    }
  }
  if (r.mean) {
    std::cout << "mean crossing: " << fixed(*r.mean) << " spread: " << fixed(r.spread) << '\n';
  }
  std::cout << "threshold: " << (r.stable(a.tolerance) ? "stable" : "not stable") << " (tolerance "
            << fixed(a.tolerance, 3) << ")\n";
  if (!a.mixed.empty()) {
    with_output(a.mixed, [&](std::ostream& os) { write_mixed_csv(curves, a.points, os); });
  }
  return kOk;
}

struct PlotArgs {
  std::vector<std::string> curves;
  std::string out;
};

int run_plot(const PlotArgs& a) {
  std::vector<RecoveryCurve> curves;
  for (const auto& path : a.curves) {
    curves.push_back(read_curve_csv(path));
  }
  with_output(a.out, [&](std::ostream& os) { write_svg_plot(curves, os); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holographic stabilizer codes on {4,n} tilings: construction and erasure decoding"};
  app.require_subcommand(1);
  const std::vector<std::string> seeds{"steane", "five_qubit"};

  CheckSeedArgs check_args;
  auto* check = app.add_subcommand("check-seed", "Test a seed tensor for (block) perfection");
  check->add_option("--seed", check_args.seed, "steane or five_qubit")->check(CLI::IsMember(seeds));
  check->add_option("--mode", check_args.mode, "perfect, block or all")
      ->check(CLI::IsMember({"perfect", "block", "all"}));

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Build the boundary code of a radius-R network");
  build->add_option("--seed", build_args.seed, "steane or five_qubit")->check(CLI::IsMember(seeds));
  build->add_option("--radius,-R", build_args.radius, "network radius")->required()->check(CLI::PositiveNumber);
  build->add_option("--out,-o", build_args.out, "code file (stdout if omitted)");
  build->add_option("--tiling-out", build_args.tiling_out, "also write the tiling");

  DecodeArgs decode_args;
  auto* decode = app.add_subcommand("decode", "Decide recoverability of one erasure pattern");
  decode->add_option("--code", decode_args.code, "code file from `build`")->required();
  decode->add_option("--erasure", decode_args.erasure, "bitstring, 1 = erased")->required();
  decode->add_option("--decoder", decode_args.decoder, "optimal, greedy or both")
      ->check(CLI::IsMember({"optimal", "greedy", "both"}));
  decode->add_option("--logicals", decode_args.logicals, "both or x_only")
      ->check(CLI::IsMember({"both", "x_only"}));
  decode->add_option("--tile", decode_args.tile, "bulk tile whose logical is decoded");
  decode->add_flag("--witness", decode_args.witness, "print the cleaning coefficients");

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Estimate the recovery curve P_rec(a)");
  sim->add_option("--seed", sim_args.seed, "steane or five_qubit")->check(CLI::IsMember(seeds));
  sim->add_option("--radius,-R", sim_args.cfg.radius, "network radius")->required()->check(CLI::PositiveNumber);
  sim->add_option("--decoder", sim_args.decoder, "optimal or greedy")
      ->check(CLI::IsMember({"optimal", "greedy"}));
  sim->add_option("--trials", sim_args.cfg.trials, "sampled patterns per weight")->check(CLI::PositiveNumber);
  sim->add_option("--rng-seed", sim_args.cfg.rng_seed, "master seed");
  sim->add_option("--exact-cutoff", sim_args.cfg.exact_cutoff, "enumerate weights with at most this many patterns");
  sim->add_option("--threads,-j", sim_args.cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  sim->add_option("--logicals", sim_args.logicals, "both or x_only")->check(CLI::IsMember({"both", "x_only"}));
  sim->add_option("--tile", sim_args.cfg.tile, "bulk tile whose logical is decoded");
  sim->add_option("--out,-o", sim_args.out, "curve CSV (stdout if omitted)");

  ThresholdArgs thr_args;
  auto* thr = app.add_subcommand("threshold", "Locate crossings of p_rec(p) between successive radii");
  thr->add_option("--curves", thr_args.curves, "curve CSV files")->required()->expected(2, -1);
  thr->add_option("--mixed", thr_args.mixed, "write R,p,p_rec rows to this file");
  thr->add_option("--points", thr_args.points, "grid points for --mixed")->check(CLI::Range(2, 100000));
  thr->add_option("--tolerance", thr_args.tolerance, "allowed spread of crossings");

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "SVG plot of p_rec(p) per curve");
  plot->add_option("--curves", plot_args.curves, "curve CSV files")->required()->expected(1, -1);
  plot->add_option("--out,-o", plot_args.out, "SVG file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      return run_check_seed(check_args);
    }
    if (*build) {
      return run_build(build_args);
    }
    if (*decode) {
      return run_decode(decode_args);
    }
    if (*sim) {
      return run_simulate(sim_args);
    }
    if (*thr) {
      return run_threshold(thr_args);
    }
    if (*plot) {
      return run_plot(plot_args);
    }
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
