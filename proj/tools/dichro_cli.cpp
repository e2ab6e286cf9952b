// dichro: acyclic coloring of digraphs with digirth-based color bounds.
//
// Commands: color, exact, verify, gen, digirth, stats, bench.
// Exit codes: 0 ok, 1 verification failure, 2 parse/usage error,
// 3 precondition violation, 4 size cap exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dichro/acyclic_sdr.hpp"
#include "dichro/coloring.hpp"
#include "dichro/cycles.hpp"
#include "dichro/degree_split.hpp"
#include "dichro/digraph.hpp"
#include "dichro/edgelist.hpp"
#include "dichro/exact.hpp"
#include "dichro/generators.hpp"
#include "dichro/prng.hpp"

namespace {

using dichro::Digraph;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTooLarge = 4;

int exit_code_for(const dichro::Error& e) {
  switch (e.code()) {
    case dichro::errc::precondition_violated:
    case dichro::errc::digirth_too_small:
    case dichro::errc::not_found:
      return kExitPrecondition;
    case dichro::errc::too_large:
      return kExitTooLarge;
    default:
      return kExitParse;
  }
}

json digirth_to_json(dichro::DigirthValue girth) {
  if (girth.is_infinite()) return json("inf");
  return json(girth.length());
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw dichro::Error(dichro::errc::parse_error,
                                   "cannot open '" + path + "' for writing");
    stream = &file;
  }
};

int cmd_color(const std::string& input, std::optional<int> g_override) {
  const Digraph d = dichro::read_edge_list_file(input);
  const int g = g_override ? *g_override : dichro::auto_g(d);
  if (g < 2)
    throw dichro::Error(dichro::errc::parse_error, "--g must be at least 2");
  auto [coloring, bound] = dichro::split_color(d, g);

  const auto report = dichro::verify_coloring(d, coloring);
  if (!report.valid) {
    std::cerr << "internal error: produced coloring failed verification\n";
    return kExitInvalid;
  }
  json out;
  out["n"] = d.n();
  out["m"] = d.m();
  out["delta"] = d.n() > 0 ? dichro::degree_stats(d).delta : 0;
  out["digirth"] = digirth_to_json(dichro::digirth(d));
  out["g"] = g;
  out["ell"] = bound.ell;
  out["colors_used"] = coloring.colors_used;
  out["integer_bound"] = bound.integer_bound;
  out["real_bound"] = bound.real_bound;
  out["assignment"] = coloring.assignment;
  out["valid"] = true;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_exact(const std::string& input, int cap) {
  const Digraph d = dichro::read_edge_list_file(input);
  std::cout << dichro::dichromatic_number(d, cap) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
  const Digraph d = dichro::read_edge_list_file(graph_path);
  std::ifstream in(coloring_path);
  if (!in)
    throw dichro::Error(dichro::errc::parse_error,
                        "cannot open '" + coloring_path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw dichro::Error(dichro::errc::parse_error,
                        std::string("coloring JSON: ") + e.what());
  }
  if (!doc.contains("assignment") || !doc["assignment"].is_array())
    throw dichro::Error(dichro::errc::parse_error,
                        "coloring JSON lacks an 'assignment' array");
  dichro::Coloring coloring;
  coloring.assignment = doc["assignment"].get<std::vector<int>>();
  for (int c : coloring.assignment)
    coloring.colors_used = std::max(coloring.colors_used, c + 1);

  dichro::VerificationReport report;
  try {
    report = dichro::verify_coloring(d, coloring);
  } catch (const dichro::Error& e) {
    // Mismatched vertex count or an unassigned vertex is an input error.
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  if (report.valid) {
    std::cout << "valid: every color class is acyclic\n";
    return kExitOk;
  }
  std::cout << "invalid: " << report.violations.size() << " cyclic class(es)\n";
  for (const auto& [color, cycle] : report.violations) {
    std::cout << "  color " << color << " has directed cycle:";
    for (int v : cycle) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kExitInvalid;
}

int cmd_digirth(const std::string& input) {
  const Digraph d = dichro::read_edge_list_file(input);
  const auto girth = dichro::digirth(d);
  if (girth.is_infinite())
    std::cout << "inf\n";
  else
    std::cout << girth.length() << '\n';
  return kExitOk;
}

int cmd_stats(const std::string& input) {
  const Digraph d = dichro::read_edge_list_file(input);
  const auto s = dichro::degree_stats(d);
  std::cout << "n " << d.n() << '\n'
            << "m " << d.m() << '\n'
            << "delta " << s.delta << '\n'
            << "delta_out " << s.delta_out << '\n'
            << "delta_in " << s.delta_in << '\n'
            << "min_out " << s.min_out << '\n'
            << "min_in " << s.min_in << '\n'
            << "delta_tilde " << s.delta_tilde << '\n';
  return kExitOk;
}

int cmd_bench(int count, unsigned seed, int cap, int n_min, int n_max,
              const std::string& out_path, bool time_runs) {
  OutputTarget out(out_path);
  std::ostream& os = *out.stream;
  os << "instance_id,n,m,delta,digirth,g,colors_theorem,integer_bound,"
        "colors_greedy,chi_exact_or_blank,ms_theorem,ms_greedy\n";

  constexpr int kGammas[] = {3, 5, 7, 11};
  constexpr double kBaseP[] = {0.25, 0.12, 0.08, 0.05};
  std::mt19937 master(seed);
  for (int i = 0; i < count; ++i) {
    const int gamma = kGammas[i % 4];
    const double p = kBaseP[i % 4] * (0.5 + dichro::unit_real(master));
    const int n = n_min + static_cast<int>(dichro::bounded_uniform(
                              master, static_cast<unsigned>(n_max - n_min + 1)));
    const unsigned inst_seed = master();
    const Digraph d = dichro::gen_random_digirth(n, p, gamma, inst_seed);
    const int g = (gamma + 1) / 2;

    const auto t0 = std::chrono::steady_clock::now();
    const auto [coloring, bound] = dichro::split_color(d, g);
    const auto t1 = std::chrono::steady_clock::now();
    const auto greedy = dichro::greedy_baseline(d);
    const auto t2 = std::chrono::steady_clock::now();

    std::string chi;
    if (n <= cap) chi = std::to_string(dichro::dichromatic_number(d, cap));

    const double ms_theorem =
        time_runs ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
    const double ms_greedy =
        time_runs ? std::chrono::duration<double, std::milli>(t2 - t1).count() : 0.0;

    const auto girth = dichro::digirth(d);
    os << i << ',' << n << ',' << d.m() << ','
       << (n > 0 ? dichro::degree_stats(d).delta : 0) << ','
       << (girth.is_infinite() ? std::string("inf") : std::to_string(girth.length()))
       << ',' << g << ',' << coloring.colors_used << ',' << bound.integer_bound
       << ',' << greedy.colors_used << ',' << chi << ',' << format_ms(ms_theorem)
       << ',' << format_ms(ms_greedy) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acyclic coloring of digraphs with digirth-based color bounds"};
  app.require_subcommand(1);

  std::string input, coloring_path, out_path;
  std::optional<int> g_override;
  int cap = dichro::kDefaultExactCap;
  bool check = false;

  auto* color = app.add_subcommand("color", "color a digraph, print JSON");
  color->add_option("input", input, "edge-list file")->required();
  color->add_option("--g", g_override, "girth parameter (default: auto)");
  color->add_flag("--check", check,
                  "re-verify the coloring before printing (always done)");

  auto* exact = app.add_subcommand("exact", "exact dichromatic number");
  exact->add_option("input", input, "edge-list file")->required();
  exact->add_option("--cap", cap, "max vertex count for exhaustive search");

  auto* verify = app.add_subcommand("verify", "check a coloring JSON");
  verify->add_option("graph", input, "edge-list file")->required();
  verify->add_option("coloring", coloring_path, "coloring JSON file")->required();

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  int gen_n = 0, gen_gamma = 2;
  unsigned gen_seed = 0;
  double gen_p = 0.1;
  std::vector<int> gen_steps;
  auto* gen_cycle = gen->add_subcommand("cycle", "directed cycle");
  gen_cycle->add_option("--n", gen_n, "vertex count")->required();
  gen_cycle->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_circ = gen->add_subcommand("circulant", "circulant digraph");
  gen_circ->add_option("--n", gen_n, "vertex count")->required();
  gen_circ->add_option("--steps", gen_steps, "step set")->required()->delimiter(',');
  gen_circ->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_rand = gen->add_subcommand("random", "random digraph with digirth floor");
  gen_rand->add_option("--n", gen_n, "vertex count")->required();
  gen_rand->add_option("--p", gen_p, "arc probability");
  gen_rand->add_option("--gamma", gen_gamma, "minimum digirth");
  gen_rand->add_option("--seed", gen_seed, "PRNG seed");
  gen_rand->add_option("--out", out_path, "output file (default stdout)");

  auto* digirth_cmd = app.add_subcommand("digirth", "shortest directed cycle length");
  digirth_cmd->add_option("input", input, "edge-list file")->required();

  auto* stats = app.add_subcommand("stats", "degree statistics");
  stats->add_option("input", input, "edge-list file")->required();

  auto* bench = app.add_subcommand("bench", "benchmark ensemble, CSV output");
  int bench_count = 50, bench_nmin = 10, bench_nmax = 40;
  unsigned bench_seed = 0;
  bool bench_time = false;
  bench->add_option("--count", bench_count, "number of instances");
  bench->add_option("--seed", bench_seed, "ensemble seed");
  bench->add_option("--cap", cap, "exact-solver vertex cap");
  bench->add_option("--nmin", bench_nmin, "smallest instance size");
  bench->add_option("--nmax", bench_nmax, "largest instance size");
  bench->add_option("--out", out_path, "output file (default stdout)");
  bench->add_flag("--time", bench_time,
                  "fill ms columns with wall-clock times (breaks byte-for-byte "
                  "reproducibility of the CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*color) return cmd_color(input, g_override);
    if (*exact) return cmd_exact(input, cap);
    if (*verify) return cmd_verify(input, coloring_path);
    if (*gen_cycle) {
      OutputTarget out(out_path);
      dichro::write_edge_list(dichro::gen_directed_cycle(gen_n), *out.stream);
      return kExitOk;
    }
    if (*gen_circ) {
      OutputTarget out(out_path);
      dichro::write_edge_list(dichro::gen_circulant(gen_n, gen_steps), *out.stream);
      return kExitOk;
    }
    if (*gen_rand) {
      OutputTarget out(out_path);
      dichro::write_edge_list(
          dichro::gen_random_digirth(gen_n, gen_p, gen_gamma, gen_seed),
          *out.stream);
      return kExitOk;
    }
    if (*digirth_cmd) return cmd_digirth(input);
    if (*stats) return cmd_stats(input);
    if (*bench)
      return cmd_bench(bench_count, bench_seed, cap, bench_nmin, bench_nmax,
                       out_path, bench_time);
  } catch (const dichro::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
