// Command-line harness: generation, simulation, verification, reporting.
// Every command is reproducible from (inputs, seed), and exits 0 only when
// all in-report validity checks pass.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "bcc/apsp.hpp"
#include "bcc/error.hpp"
#include "bcc/gadget.hpp"
#include "bcc/gen.hpp"
#include "bcc/report.hpp"

namespace fs = std::filesystem;
using namespace bcc;

namespace {

fs::path resolve_out(const std::string& out) {
  fs::path p(out);
  if (p.is_absolute()) return p;
  const char* dir = std::getenv("BCCSIM_OUT_DIR");
  if (dir && *dir) return fs::path(dir) / p;
  return p;
}

void write_or_print(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
    return;
  }
  auto path = resolve_out(out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  f << content;
  std::cerr << "wrote " << path.string() << "\n";
}

std::vector<NodeId> parse_id_list(const std::string& csv) {
  std::vector<NodeId> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(static_cast<NodeId>(std::stol(cur)));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return out;
}

template <typename MakeReport>
int run_reps(int reps, const MakeReport& make_report) {
  // Repetitions are independent runs; the report must not depend on which
  // repetition produced it.
  std::string first;
  bool valid = true;
  for (int i = 0; i < reps; ++i) {
    auto [text, ok] = make_report();
    if (i == 0)
      first = text;
    else if (text != first) {
      std::cerr << "repetition " << i << " diverged from the first run\n";
      return 1;
    }
    valid = ok;
  }
  std::cout << first;
  if (reps > 1) std::cerr << "reps=" << reps << " identical=yes\n";
  return valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bccsim: round-synchronous CONGEST/BCC simulator and experiment harness"};
  app.require_subcommand(1);

  // gen-random
  int n = 16;
  std::int64_t p = 16;
  double density = 0.3;
  std::uint64_t seed = 1;
  std::string out;
  auto* gen = app.add_subcommand("gen-random", "generate a connected random weighted graph");
  gen->add_option("--n", n, "node count")->required();
  gen->add_option("--p", p, "weight denominator");
  gen->add_option("--density", density, "edge density in [0,1]");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--out", out, "output path (default stdout)");

  // gen-gadget
  int gk = 4;
  std::int64_t gp = 16;
  std::string a_hex, b_hex;
  bool unweighted = false;
  std::string labels_out, spec_out;
  std::uint64_t gseed = 1;
  bool grandom = false;
  auto* gg = app.add_subcommand("gen-gadget", "generate the disjointness diameter gadget");
  gg->add_option("--k", gk, "gadget parameter (k^2 input bits per side)")->required();
  gg->add_option("--p", gp, "weight denominator");
  gg->add_option("--a", a_hex, "hex bits for side A (defaults to random)");
  gg->add_option("--b", b_hex, "hex bits for side B");
  gg->add_flag("--unweighted", unweighted, "unit weights everywhere");
  gg->add_flag("--random", grandom, "draw the inputs from --seed");
  gg->add_option("--seed", gseed, "rng seed for --random");
  gg->add_option("--out", out, "graph output path");
  gg->add_option("--labels-out", labels_out, "labels sidecar path");
  gg->add_option("--spec-out", spec_out, "instance spec path");

  // run-apsp
  std::string graph_file, trace_out, format = "json";
  bool entries = false;
  int reps = 1;
  auto* ra = app.add_subcommand("run-apsp", "approximate APSP on the simulator, check vs oracle");
  ra->add_option("--graph", graph_file, "graph file")->required();
  ra->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  ra->add_flag("--entries", entries, "include the full matrix in JSON");
  ra->add_option("--trace", trace_out, "write the simulation trace JSON here");
  ra->add_option("--out", out, "report path (default stdout)");
  ra->add_option("--reps", reps, "repetitions (all must agree)");

  // run-hitting-set
  int hk = 2;
  auto* rh = app.add_subcommand("run-hitting-set", "distributed hitting set, check vs reference");
  rh->add_option("--graph", graph_file, "graph file")->required();
  rh->add_option("--k", hk, "closest-set size")->required();
  rh->add_option("--out", out, "report path");
  rh->add_option("--reps", reps, "repetitions (all must agree)");

  // run-source-detection
  std::string sources_csv;
  std::int64_t H = 4, K = 2;
  auto* rs = app.add_subcommand("run-source-detection",
                                "source detection on the simulator, check vs oracle");
  rs->add_option("--graph", graph_file, "graph file")->required();
  rs->add_option("--sources", sources_csv, "comma-separated source ids")->required();
  rs->add_option("--H", H, "hop budget")->required();
  rs->add_option("--K", K, "sources to detect")->required();
  rs->add_option("--out", out, "report path");
  rs->add_option("--reps", reps, "repetitions (all must agree)");

  // verify-gadget
  int vcount = 0;
  std::uint64_t vseed = 1;
  auto* vg = app.add_subcommand("verify-gadget", "diameter dichotomy table for gadget instances");
  vg->add_option("--k", gk, "gadget parameter")->required();
  vg->add_option("--p", gp, "weight denominator");
  vg->add_option("--a", a_hex, "hex bits for side A");
  vg->add_option("--b", b_hex, "hex bits for side B");
  vg->add_option("--random", vcount, "verify this many random instances");
  vg->add_option("--seed", vseed, "rng seed for --random");
  vg->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  vg->add_option("--out", out, "report path");

  // bench
  std::string sizes_csv = "64,256";
  auto* be = app.add_subcommand("bench", "round counts across sizes (scaling check)");
  be->add_option("--sizes", sizes_csv, "comma-separated node counts");
  be->add_option("--p", p, "weight denominator");
  be->add_option("--density", density, "edge density");
  be->add_option("--seed", seed, "rng seed");
  be->add_option("--out", out, "report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      auto g = gen_random(n, p, density, seed);
      write_or_print(out, g.to_text());
      return 0;
    }

    if (*gg) {
      DisjointnessInstance inst;
      if (grandom || a_hex.empty()) {
        Rng rng(gseed);
        inst = DisjointnessInstance::random(gk, rng);
      } else {
        inst = DisjointnessInstance::from_hex(gk, a_hex, b_hex.empty() ? a_hex : b_hex);
      }
      auto gadget = build_gab(inst, gp, !unweighted);
      write_or_print(out, gadget.graph.to_text());
      if (!labels_out.empty()) write_or_print(labels_out, gadget.labels_json());
      if (!spec_out.empty()) write_or_print(spec_out, gadget_spec_json(inst, gp, !unweighted));
      return 0;
    }

    if (*ra) {
      auto g = WeightedGraph::load(graph_file);
      return run_reps(reps, [&]() -> std::pair<std::string, bool> {
        SimulationTrace trace;
        auto result = apsp_approx(g, &trace);
        auto rep = make_apsp_report(g, result);
        if (!trace_out.empty()) write_or_print(trace_out, trace.to_json());
        std::string text = format == "csv" ? rep.to_csv() : rep.to_json(entries);
        return {text, rep.valid()};
      });
    }

    if (*rh) {
      auto g = WeightedGraph::load(graph_file);
      return run_reps(reps, [&]() -> std::pair<std::string, bool> {
        auto rep = make_hitting_set_report(g, hk);
        return {rep.to_json(), rep.valid()};
      });
    }

    if (*rs) {
      auto g = WeightedGraph::load(graph_file);
      auto sources = parse_id_list(sources_csv);
      return run_reps(reps, [&]() -> std::pair<std::string, bool> {
        auto rep = make_source_detection_report(g, sources, H, K);
        return {rep.to_json(), rep.valid()};
      });
    }

    if (*vg) {
      std::vector<DisjointnessInstance> instances;
      if (!a_hex.empty())
        instances.push_back(DisjointnessInstance::from_hex(gk, a_hex, b_hex));
      if (vcount > 0) {
        Rng rng(vseed);
        for (int i = 0; i < vcount; ++i)
          instances.push_back(DisjointnessInstance::random(gk, rng));
      }
      if (instances.empty()) {
        instances.push_back(DisjointnessInstance::all_zero(gk));
        instances.push_back(DisjointnessInstance::all_one(gk));
      }
      auto rep = verify_gadget_instances(gk, gp, instances);
      write_or_print(out, format == "table" ? rep.to_table() : rep.to_json());
      return rep.all_weighted_consistent && rep.all_within_upper_bound &&
                     rep.all_unweighted_consistent
                 ? 0
                 : 1;
    }

    if (*be) {
      auto sizes = parse_id_list(sizes_csv);
      std::string report = "n,k,h,levels,hitting_set_size,rounds\n";
      std::vector<std::int64_t> rounds;
      for (NodeId size : sizes) {
        auto g = gen_random(size, p, density, seed);
        auto result = apsp_approx(g);
        rounds.push_back(result.rounds);
        report += std::to_string(size) + "," + std::to_string(result.k) + "," +
                  std::to_string(result.h) + "," + std::to_string(result.levels) + "," +
                  std::to_string(result.hitting_set.size()) + "," +
                  std::to_string(result.rounds) + "\n";
      }
      write_or_print(out, report);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
