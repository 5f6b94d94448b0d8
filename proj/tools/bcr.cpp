// bcr: exact bipartite crossing number.
//
//   bcr decide --k <K> <file>
//   bcr exact [--kmax <K>] <file>
//   bcr census --k <K> <file>
//
// Exit status: 0 finished (the answer is in the report), 1 usage or I/O
// error, 2 graph parse error, 3 resource limit hit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bcr/io.hpp"
#include "bcr/report.hpp"
#include "bcr/solver.hpp"
#include "bcr/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

struct Common {
  std::string input;
  std::string json_out;
  std::string svg_out;
  std::string format = "bigraph";
  unsigned threads = 1;
  std::uint64_t limit_candidates = std::uint64_t{1} << 24;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.input, "graph file")->required();
  cmd->add_option("--json", c.json_out, "write the JSON report to this path ('-' for stdout)");
  cmd->add_option("--svg", c.svg_out, "write the witness drawing as SVG");
  cmd->add_option("--threads", c.threads, "worker threads for the pair search")->check(CLI::PositiveNumber);
  cmd->add_option("--limit-candidates", c.limit_candidates, "per-side candidate ceiling")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "input format")->check(CLI::IsMember({"bigraph", "edgelist"}));
}

bcr::BipartiteGraph load(const Common& c) {
  return c.format == "edgelist" ? bcr::io::parse_edge_list_file(c.input) : bcr::io::parse_graph_file(c.input);
}

void publish(const Common& c, const bcr::report::Document& doc) {
  if (c.json_out == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  bcr::report::write_table(std::cout, doc);
  if (!c.json_out.empty()) {
    std::ofstream out(c.json_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + c.json_out);
    out << doc.dump(2) << '\n';
  }
}

void maybe_svg(const Common& c, const bcr::BipartiteGraph& g, const std::optional<bcr::Drawing>& witness) {
  if (c.svg_out.empty()) return;
  if (!witness) {
    std::cerr << "bcr: no witness drawing within the budget; SVG not written\n";
    return;
  }
  bcr::svg::write_svg(c.svg_out, g, *witness);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-layer (bipartite) crossing number"};
  app.require_subcommand(1);

  Common decide_opts, exact_opts, census_opts;
  std::uint64_t decide_k = 0, census_k = 0, k_max = bcr::kDefaultKMax;

  auto* decide = app.add_subcommand("decide", "decide whether bcr(G) <= k");
  decide->add_option("--k", decide_k, "crossing budget")->required();
  add_common(decide, decide_opts);

  auto* exact = app.add_subcommand("exact", "compute bcr(G) up to --kmax");
  exact->add_option("--kmax", k_max, "largest k tried");
  add_common(exact, exact_opts);

  auto* census = app.add_subcommand("census", "count drawings with at most k crossings");
  census->add_option("--k", census_k, "crossing budget")->required();
  add_common(census, census_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Common& opts = decide->parsed() ? decide_opts : exact->parsed() ? exact_opts : census_opts;
  bcr::SolverOptions solver;
  solver.threads = opts.threads;
  solver.max_candidates_per_side = opts.limit_candidates;

  try {
    const bcr::BipartiteGraph g = load(opts);
    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    if (census->parsed()) {
      const bcr::CensusReport c = bcr::run_census(g, census_k, solver);
      const bcr::report::RunInfo run{"census", opts.input, elapsed_ms()};
      publish(opts, bcr::report::census_document(run, g, c));
      maybe_svg(opts, g, c.count > 0 ? std::optional<bcr::Drawing>(c.best.witness) : std::nullopt);
    } else {
      const bool is_decide = decide->parsed();
      const bcr::SolveReport r = is_decide ? bcr::bcr_decide(g, decide_k, solver) : bcr::bcr_exact(g, k_max, solver);
      const bcr::report::RunInfo run{is_decide ? "decide" : "exact", opts.input, elapsed_ms()};
      publish(opts, bcr::report::solve_document(run, g, r));
      maybe_svg(opts, g, r.witness);
    }
  } catch (const bcr::io::ParseError& e) {
    std::cerr << "bcr: " << opts.input << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const bcr::ResourceError& e) {
    std::cerr << "bcr: resource limit " << e.limit() << ": " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "bcr: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
