#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "quasiaffine/closed_form.hpp"
#include "quasiaffine/omega.hpp"
#include "quasiaffine/oracle.hpp"
#include "quasiaffine/rational.hpp"
#include "quasiaffine/render.hpp"
#include "quasiaffine/scan.hpp"

namespace quasiaffine::cli {

enum ExitCode : int { kOk = 0, kDisagree = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational rational_flag(std::string_view flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

inline std::pair<std::string, std::string> split_range(std::string_view flag, const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(std::string(flag) + ": expected A..B, got '" + text + "'");
  return {text.substr(0, dots), text.substr(dots + 2)};
}

/// "A..B" with rational endpoints.
inline std::pair<Rational, Rational> rational_range(std::string_view flag, const std::string& text) {
  auto [a, b] = split_range(flag, text);
  return {rational_flag(flag, a), rational_flag(flag, b)};
}

/// "LO..HI" with integer endpoints.
inline Window window_flag(std::string_view flag, const std::string& text) {
  auto [a, b] = split_range(flag, text);
  const Rational lo = rational_flag(flag, a);
  const Rational hi = rational_flag(flag, b);
  if (!lo.is_integer() || !hi.is_integer())
    throw UsageError(std::string(flag) + ": window endpoints must be integers, got '" + text + "'");
  if (hi < lo) throw UsageError(std::string(flag) + ": window has LO > HI in '" + text + "'");
  return Window(lo.num(), hi.num());
}

inline GridAxis axis_flags(std::string_view range_flag, const std::string& range, std::string_view step_flag,
                           const std::string& step) {
  auto [from, to] = rational_range(range_flag, range);
  const Rational s = rational_flag(step_flag, step);
  if (s <= Rational(0)) throw UsageError(std::string(step_flag) + ": step must be positive");
  if (to < from) throw UsageError(std::string(range_flag) + ": range must have A <= B");
  return {from, to, s};
}

/// Uniform rationals num/den in [lo, hi] with den in 1..20.
inline std::vector<Rational> sample_points(const Window& w, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> den_dist(1, 20);
  const long long lo = w.lo.convert_to<long long>();
  const long long hi = w.hi.convert_to<long long>();
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long den = den_dist(rng);
    std::uniform_int_distribution<long long> num_dist(lo * den, hi * den);
    out.emplace_back(Integer(num_dist(rng)), Integer(den));
  }
  return out;
}

/*
 * Runs one command line (args excludes the program name). Output goes to out,
 * diagnostics to err. Returns 0 on success, 1 when verify finds a
 * disagreement, 2 on usage errors.
 */
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamics of the quasi-affine map x -> floor(lambda*x + mu) over exact rationals", "qamap"};
  app.require_subcommand(1);
  app.fallthrough();
  bool plain = false;
  app.add_flag("--plain", plain, "Human-readable text instead of JSON");

  std::string lambda_text;
  std::string mu_text;
  std::string x_text;
  std::string window_text;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--lambda", lambda_text, "Slope lambda as p/q")->required();
    sub->add_option("--mu", mu_text, "Offset mu as p/q")->required();
  };

  auto* fix = app.add_subcommand("fix", "Fixed-point set");
  add_params(fix);

  auto* cycles = app.add_subcommand("cycles", "Set of 2-cycles");
  add_params(cycles);
  cycles->add_option("--window", window_text, "Clip to integer window LO..HI");

  auto* omega = app.add_subcommand("omega", "Omega-limit set of a point, with its case");
  add_params(omega);
  omega->add_option("--x", x_text, "Start point as p/q")->required();

  auto* orbit = app.add_subcommand("orbit", "Orbit tail f(x), f^2(x), ..., one value per line");
  add_params(orbit);
  orbit->add_option("--x", x_text, "Start point as p/q")->required();
  std::size_t steps = 0;
  orbit->add_option("--steps", steps, "Number of iterates")->required();

  auto* classify = app.add_subcommand("classify", "Parameter case i..ix");
  add_params(classify);

  auto* scan = app.add_subcommand("scan", "Bifurcation sweep to CSV or JSON lines");
  std::string target_text = "fix";
  std::string lambda_range;
  std::string lambda_step = "1";
  std::string mu_range;
  std::string mu_step = "1";
  std::string out_path = "-";
  std::string format = "csv";
  scan->add_option("--target", target_text, "fix or per2")->check(CLI::IsMember({"fix", "per2"}));
  scan->add_option("--lambda-range", lambda_range, "A..B")->required();
  scan->add_option("--lambda-step", lambda_step, "Grid step for lambda");
  scan->add_option("--mu-range", mu_range, "A..B (A..A for a single mu)")->required();
  scan->add_option("--mu-step", mu_step, "Grid step for mu");
  scan->add_option("--x-window", window_text, "Integer window LO..HI")->required();
  scan->add_option("--out", out_path, "Output path, - for standard output");
  scan->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against brute force on a grid");
  std::string v_lambda_step = "1/7";
  std::string v_mu_step = "1/5";
  std::size_t samples = 16;
  std::uint64_t seed = 1;
  std::size_t n_max = 8;
  std::size_t max_steps = oracle::kDefaultMaxSteps;
  std::string escape_bound = oracle::kDefaultEscapeBound.str();
  verify->add_option("--lambda-range", lambda_range, "A..B")->required();
  verify->add_option("--lambda-step", v_lambda_step, "Grid step for lambda");
  verify->add_option("--mu-range", mu_range, "A..B")->required();
  verify->add_option("--mu-step", v_mu_step, "Grid step for mu");
  verify->add_option("--window", window_text, "Integer window LO..HI")->required();
  verify->add_option("--samples", samples, "Random start points per grid cell");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--n-max", n_max, "Longest period searched for")->check(CLI::Range(3, 64));
  verify->add_option("--max-steps", max_steps, "Orbit length for the brute omega check")->check(CLI::Range(2, 1 << 20));
  verify->add_option("--escape-bound", escape_bound, "Escape threshold for the brute omega check");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit = [&](const render::json& j, const std::string& text) {
    if (plain)
      out << text << '\n';
    else
      out << j.dump() << '\n';
  };

  try {
    auto params = [&] { return Params{rational_flag("--lambda", lambda_text), rational_flag("--mu", mu_text)}; };

    if (fix->parsed()) {
      const auto set = fixed_points(params());
      emit(render::to_json(set), render::plain(set));
    } else if (cycles->parsed()) {
      const auto set = two_cycles(params());
      if (window_text.empty()) {
        emit(render::to_json(set), render::plain(set));
      } else {
        const auto clipped = clip(set, window_flag("--window", window_text));
        emit(render::to_json(clipped), render::plain(clipped));
      }
    } else if (omega->parsed()) {
      const Params p = params();
      const auto limit = omega_limit(p, rational_flag("--x", x_text));
      const auto tag = classify_case(p);
      render::json j = render::to_json(tag);
      j["omega"] = render::to_json(limit);
      emit(j, render::plain(limit) + " (case " + std::string(to_string(tag)) + ")");
    } else if (orbit->parsed()) {
      for (const auto& z : iterate_orbit(params(), rational_flag("--x", x_text), steps).tail) out << z << '\n';
    } else if (classify->parsed()) {
      const auto tag = classify_case(params());
      emit(render::to_json(tag), std::string(to_string(tag)));
    } else if (scan->parsed()) {
      const SweepSpec spec{axis_flags("--lambda-range", lambda_range, "--lambda-step", lambda_step),
                           axis_flags("--mu-range", mu_range, "--mu-step", mu_step),
                           window_flag("--x-window", window_text),
                           target_text == "fix" ? SweepTarget::FixedPoints : SweepTarget::Period2Points};
      const auto rows = sweep(spec);
      auto write = [&](std::ostream& sink) {
        return format == "csv" ? write_csv(rows, sink) : write_jsonl(rows, sink);
      };
      if (out_path == "-") {
        write(out);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        const auto n = write(file);
        emit(render::json{{"rows", n}, {"path", out_path}}, std::to_string(n) + " rows written to " + out_path);
      }
    } else if (verify->parsed()) {
      const auto lambdas = axis_flags("--lambda-range", lambda_range, "--lambda-step", v_lambda_step).values();
      const auto mus = axis_flags("--mu-range", mu_range, "--mu-step", v_mu_step).values();
      const Window w = window_flag("--window", window_text);
      const auto xs = sample_points(w, samples, seed);
      const Rational bound = rational_flag("--escape-bound", escape_bound);
      if (!bound.is_integer() || bound.sign() <= 0) throw UsageError("--escape-bound must be a positive integer");

      oracle::Verdict total;
      std::size_t grid_points = 0;
      for (const auto& lambda : lambdas) {
        for (const auto& mu : mus) {
          const Params p{lambda, mu};
          ++grid_points;
          for (const auto& v : {oracle::cross_check(p, w, xs, max_steps, bound.num()), oracle::check_no_long_cycles(p, w, n_max)}) {
            total.agrees = total.agrees && v.agrees;
            total.detail += v.detail;
            total.unchecked += v.unchecked;
          }
        }
      }
      render::json j = render::to_json(total);
      j["grid_points"] = grid_points;
      j["samples_per_point"] = samples;
      j["unchecked_cycle_starts"] = total.unchecked;
      emit(j, std::string(total.agrees ? "agree" : "DISAGREE") + " on " + std::to_string(grid_points) +
                  " grid points" + (total.detail.empty() ? "" : ": " + total.detail));
      return total.agrees ? kOk : kDisagree;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace quasiaffine::cli
