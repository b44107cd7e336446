// Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
// Run all criteria with no arguments, or a single one with --criterion N.

#include <cmath>
#include <cstring>
#include <iostream>
#include <queue>
#include <sstream>

#include "bcc/apsp.hpp"
#include "bcc/error.hpp"
#include "bcc/gadget.hpp"
#include "bcc/gen.hpp"
#include "bcc/hitting_set.hpp"
#include "bcc/mssp.hpp"
#include "bcc/report.hpp"
#include "bcc/rng.hpp"
#include "bcc/source_detect.hpp"

using namespace bcc;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++failures;
}

std::vector<DisjointnessInstance> gadget_instances(int k) {
  std::vector<DisjointnessInstance> instances;
  instances.push_back(DisjointnessInstance::all_zero(k));
  instances.push_back(DisjointnessInstance::all_one(k));
  Rng rng(8800 + static_cast<std::uint64_t>(k));
  for (int i = 0; i < 200; ++i) instances.push_back(DisjointnessInstance::random(k, rng));
  return instances;
}

// --- criterion 1: weighted gadget dichotomy, exact equality ---------------
void criterion_1() {
  const std::int64_t p = 16;
  std::int64_t checked = 0, inconsistent = 0;
  std::string first_bad;
  for (int k = 2; k <= 6; ++k) {
    for (const auto& inst : gadget_instances(k)) {
      auto gadget = build_gab(inst, p, true);
      auto rep = verify_diameter_gap(gadget, inst);
      ++checked;
      if (!rep.consistent) {
        ++inconsistent;
        if (first_bad.empty()) {
          std::ostringstream os;
          os << "k=" << k << " a=" << inst.a_hex() << " b=" << inst.b_hex()
             << " disjoint=" << rep.disjoint << " observed=" << rep.observed.str()
             << " predicted=" << rep.predicted.str();
          first_bad = os.str();
        }
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " instances, " << inconsistent << " off the predicted value";
  if (!first_bad.empty()) detail << "; first: " << first_bad;
  report(1, inconsistent == 0, "weighted diameter equals 17/16 iff disjoint else 33/16",
         detail.str());
}

// --- criterion 2: weighted diameter upper bound ---------------------------
void criterion_2() {
  const std::int64_t p = 16;
  Rat upper(2 * p + 1, p);
  std::int64_t checked = 0, violations = 0;
  for (int k = 2; k <= 6; ++k) {
    for (const auto& inst : gadget_instances(k)) {
      auto gadget = build_gab(inst, p, true);
      ++checked;
      if (exact_diameter(gadget.graph) > upper) ++violations;
    }
  }
  report(2, violations == 0, "weighted gadget diameter never exceeds 2 + 1/p",
         std::to_string(checked) + " instances");
}

// --- criterion 3: unweighted gadget dichotomy -----------------------------
void criterion_3() {
  std::int64_t checked = 0, bad = 0;
  for (int k = 2; k <= 6; ++k) {
    for (const auto& inst : gadget_instances(k)) {
      auto gadget = build_gab(inst, 1, false);
      auto rep = verify_unweighted_gap(gadget, inst);
      ++checked;
      if (!rep.consistent || (rep.observed != 2 && rep.observed != 3)) ++bad;
    }
  }
  report(3, bad == 0, "unweighted diameter is 2 iff disjoint else 3",
         std::to_string(checked) + " instances");
}

// --- criterion 4: hitting set contract -------------------------------------
void criterion_4() {
  std::int64_t cases = 0, bad = 0;
  std::string first_bad;
  for (int i = 0; i < 50; ++i) {
    int n = 8 + (i % 15) * 4;  // 8..64
    auto g = gen_random(n, 16, 0.3, 4000 + static_cast<std::uint64_t>(i));
    int root = 1;
    while (root * root < n) ++root;
    for (int k : {2, root, n}) {
      auto dist = hitting_set_distributed(g, k);
      auto ref = hitting_set_reference(g, k);
      bool ok = dist.hitting_set == ref.hitting_set && dist.family == ref.family &&
                dist.rounds_used == 2 * static_cast<std::int64_t>(k);
      // validity: S hits S^k(v) for every v
      for (NodeId v = 0; ok && v < g.n(); ++v) {
        bool hit = false;
        for (NodeId s : ref.family[v])
          if (std::binary_search(dist.hitting_set.begin(), dist.hitting_set.end(), s)) hit = true;
        ok = hit;
      }
      ++cases;
      if (!ok) {
        ++bad;
        if (first_bad.empty())
          first_bad = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " seed=" + std::to_string(4000 + i);
      }
    }
  }

  // Exhaustive optimum comparison on n <= 12.
  std::int64_t opt_cases = 0, opt_bad = 0;
  for (int i = 0; i < 12; ++i) {
    int n = 5 + (i % 8);  // 5..12
    auto g = gen_random(n, 4, 0.4, 4600 + static_cast<std::uint64_t>(i));
    int k = 2 + (i % 2);
    auto ref = hitting_set_reference(g, k);
    // exhaustive minimum hitting set by subset size
    int opt = n;
    bool found = false;
    for (int size = 1; size <= n && !found; ++size) {
      std::vector<int> idx(size);
      for (int j = 0; j < size; ++j) idx[j] = j;
      for (;;) {
        bool hits = true;
        for (const auto& set : ref.family) {
          bool hit = false;
          for (NodeId v : set)
            for (int j = 0; j < size; ++j)
              if (idx[j] == v) hit = true;
          if (!hit) {
            hits = false;
            break;
          }
        }
        if (hits) {
          opt = size;
          found = true;
          break;
        }
        int j = size - 1;
        while (j >= 0 && idx[j] == n - size + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < size; ++l) idx[l] = idx[l - 1] + 1;
      }
    }
    ++opt_cases;
    if (static_cast<double>(ref.hitting_set.size()) > (std::log(n) + 1.0) * opt) ++opt_bad;
  }

  std::ostringstream detail;
  detail << cases << " distributed runs, " << bad << " mismatched; " << opt_cases
         << " exhaustive-optimum checks, " << opt_bad << " over the (ln n + 1) factor";
  if (!first_bad.empty()) detail << "; first: " << first_bad;
  report(4, bad == 0 && opt_bad == 0,
         "distributed hitting set equals reference, 2k rounds, near-optimal size", detail.str());
}

// --- criterion 5: source detection ----------------------------------------
void criterion_5() {
  Rng rng(5500);
  std::int64_t cases = 0, bad = 0;
  std::string first_bad;
  for (int i = 0; i < 50; ++i) {
    int n = 6 + (i % 30) * 2;  // 6..64
    auto g = gen_random(n, 1, 0.25, 5000 + static_cast<std::uint64_t>(i));
    int n_sources = 1 + static_cast<int>(rng.below(6));
    std::vector<NodeId> sources;
    for (int s = 0; s < n_sources; ++s) sources.push_back(static_cast<NodeId>(rng.below(n)));
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    std::int64_t H = 1 + static_cast<std::int64_t>(rng.below(n));
    std::int64_t K = 1 + static_cast<std::int64_t>(rng.below(sources.size() + 2));

    auto res = source_detection(g, sources, H, K);
    auto oracle = source_lists_oracle(IntGraph::from_graph(g), sources, H, K);
    std::int64_t bound = std::min<std::int64_t>(H, hop_diameter(g)) +
                         std::min<std::int64_t>(K, static_cast<std::int64_t>(sources.size()));
    bool ok = res.lists == oracle && res.rounds <= bound;
    ++cases;
    if (!ok) {
      ++bad;
      if (first_bad.empty())
        first_bad = "seed=" + std::to_string(5000 + i) + " n=" + std::to_string(n) +
                    " H=" + std::to_string(H) + " K=" + std::to_string(K) +
                    " rounds=" + std::to_string(res.rounds) + "/" + std::to_string(bound);
    }
  }
  std::ostringstream detail;
  detail << cases << " runs, " << bad << " mismatched";
  if (!first_bad.empty()) detail << "; first: " << first_bad;
  report(5, bad == 0, "source detection lists equal the oracle within the round bound",
         detail.str());
}

// --- criterion 6: weight-rounding sandwich ---------------------------------
void criterion_6() {
  std::int64_t pairs = 0, left_bad = 0, right_bad = 0, unreachable_bad = 0;
  std::string first_bad;
  for (int i = 0; i < 30; ++i) {
    int n = 8 + (i % 13) * 2;  // 8..32
    auto g = gen_random(n, 16, 0.35, 6000 + static_cast<std::uint64_t>(i));
    auto sg = build_shortcut_graph(g, 1);  // identity weights: the raw graph
    std::int64_t eps_den = std::max(1, ceil_log2(n));
    Rat factor(eps_den + 1, eps_den);
    int root = 1;
    while (root * root < n) ++root;
    for (std::int64_t h : {static_cast<std::int64_t>(2), static_cast<std::int64_t>(root),
                           static_cast<std::int64_t>(n)}) {
      std::vector<NodeId> all;
      for (NodeId u = 0; u < n; ++u) all.push_back(u);
      auto res = mssp_approx(sg, all, h, eps_den);
      for (NodeId u = 0; u < n; ++u) {
        auto oracle = h_hop_distances(g, u, h);
        for (NodeId v = 0; v < n; ++v) {
          ++pairs;
          auto est = res.value(u, v);
          if (!oracle[v]) {
            if (est) {
              ++unreachable_bad;
              if (first_bad.empty())
                first_bad = "seed=" + std::to_string(6000 + i) + " h=" + std::to_string(h) +
                            " (" + std::to_string(u) + "," + std::to_string(v) +
                            ") finite estimate for an h-unreachable pair";
            }
            continue;
          }
          Rat d(*oracle[v], g.p());
          if (est && *est < d) {
            ++left_bad;
            if (first_bad.empty())
              first_bad = "seed=" + std::to_string(6000 + i) + " h=" + std::to_string(h) + " (" +
                          std::to_string(u) + "," + std::to_string(v) + ") est=" + est->str() +
                          " < d^h=" + d.str();
          }
          if (!est || *est > factor * d) {
            ++right_bad;
            if (first_bad.empty())
              first_bad = "seed=" + std::to_string(6000 + i) + " h=" + std::to_string(h) + " (" +
                          std::to_string(u) + "," + std::to_string(v) + ") upper bound violated";
          }
        }
      }
    }
  }
  std::ostringstream detail;
  detail << pairs << " (pair,h) checks; lower-side violations " << left_bad
         << ", upper-side violations " << right_bad << ", finite-on-unreachable "
         << unreachable_bad;
  if (!first_bad.empty()) detail << "; first: " << first_bad;
  report(6, left_bad == 0 && right_bad == 0 && unreachable_bad == 0,
         "rescaled level minimum sandwiches the h-hop distance", detail.str());
}

// --- criterion 7: end-to-end APSP ------------------------------------------
void criterion_7() {
  std::int64_t graphs = 0, bad_graphs = 0;
  std::string first_bad;
  for (int n : {16, 32, 64}) {
    for (int i = 0; i < 30; ++i) {
      auto g = gen_random(n, 16, 0.3, 7000 + static_cast<std::uint64_t>(100 * n + i));
      auto res = apsp_approx(g);
      auto rep = make_apsp_report(g, res);
      ++graphs;
      if (!rep.valid()) {
        ++bad_graphs;
        if (first_bad.empty()) {
          std::ostringstream os;
          os << "n=" << n << " seed=" << 7000 + 100 * n + i << " sound=" << rep.sound
             << " within_bound=" << rep.within_bound << " symmetric=" << rep.symmetric
             << " zero_diagonal=" << rep.zero_diagonal
             << " max_ratio_milli=" << rep.max_ratio_milli;
          first_bad = os.str();
        }
      }
    }
  }
  std::ostringstream detail;
  detail << graphs << " graphs, " << bad_graphs << " with a violated bound";
  if (!first_bad.empty()) detail << "; first: " << first_bad;
  report(7, bad_graphs == 0, "apsp estimates within [d, 2(1+eps)^2 d], symmetric, zero diagonal",
         detail.str());
}

// --- criterion 8: round scaling --------------------------------------------
void criterion_8() {
  // Densities hold the expected hop radius of a k-ball comparable across
  // sizes (average degree proportional to k(n)).
  auto g64 = gen_random(64, 16, 6.0 / 63.0, 880064);
  auto g256 = gen_random(256, 16, 12.0 / 255.0, 880256);
  auto r64 = apsp_approx(g64);
  auto r256 = apsp_approx(g256);
  double ratio = static_cast<double>(r256.rounds) / static_cast<double>(r64.rounds);
  std::ostringstream detail;
  detail << "rounds(256)=" << r256.rounds << " rounds(64)=" << r64.rounds << " ratio=" << ratio
         << " levels=" << r256.levels << "/" << r64.levels << " |R|=" << r256.hitting_set.size()
         << "/" << r64.hitting_set.size();
  report(8, ratio <= 3.0, "apsp round count grows like sqrt(n) (ratio <= 3 from 64 to 256)",
         detail.str());
}

// --- criterion 9: bandwidth budget ------------------------------------------
void criterion_9() {
  Rng rng(9900);
  auto inst = DisjointnessInstance::random(4, rng);
  auto gadget = build_gab(inst, 16, true);
  SimulationTrace trace;
  apsp_approx(gadget.graph, &trace);
  auto audit = bandwidth_audit(trace, gadget);
  std::ostringstream detail;
  detail << "rounds=" << trace.rounds << " budget=" << trace.n * trace.B
         << " bits/round, cumulative cut bits=" << audit.total_cut_bits;
  report(9, audit.all_within_budget, "every round's cross-cut bits within n*B on the k=4 gadget",
         detail.str());
}

// --- criterion 10: shortcut metric preservation -----------------------------
void criterion_10() {
  std::int64_t cases = 0, bad = 0;
  for (int i = 0; i < 30; ++i) {
    int n = 6 + (i % 14) * 2;  // 6..32
    auto g = gen_random(n, 16, 0.3, 10000 + static_cast<std::uint64_t>(i));
    auto m = exact_apsp(g);
    int root = 1;
    while (root * root < n) ++root;
    for (int k : {1, root, n}) {
      auto sg = build_shortcut_graph(g, k);
      bool ok = true;
      for (NodeId s = 0; s < n && ok; ++s) {
        // Dijkstra over the combined adjacency.
        const std::int64_t inf = INT64_MAX;
        std::vector<std::int64_t> dist(n, inf);
        std::priority_queue<std::pair<std::int64_t, NodeId>,
                            std::vector<std::pair<std::int64_t, NodeId>>, std::greater<>>
            pq;
        dist[s] = 0;
        pq.push({0, s});
        while (!pq.empty()) {
          auto [d, u] = pq.top();
          pq.pop();
          if (d != dist[u]) continue;
          for (const auto& a : sg.adj[u])
            if (dist[a.to] > d + a.num) {
              dist[a.to] = d + a.num;
              pq.push({dist[a.to], a.to});
            }
        }
        for (NodeId v = 0; v < n; ++v)
          if (dist[v] != m.at(s, v)) ok = false;
      }
      ++cases;
      if (!ok) ++bad;
    }
  }
  report(10, bad == 0, "shortcut graph distances equal base graph distances exactly",
         std::to_string(cases) + " (graph,k) cases, " + std::to_string(bad) + " mismatched");
}

// --- criterion 11: determinism ----------------------------------------------
void criterion_11() {
  bool ok = true;
  std::string detail;

  // Criterion 4 flow.
  {
    auto g = gen_random(24, 16, 0.3, 4007);
    auto a = make_hitting_set_report(g, 5).to_json();
    auto b = make_hitting_set_report(g, 5).to_json();
    if (a != b) {
      ok = false;
      detail += "hitting-set report diverged; ";
    }
  }
  // Criterion 5 flow.
  {
    auto g = gen_random(30, 1, 0.25, 5012);
    auto a = make_source_detection_report(g, {1, 7, 11}, 9, 2).to_json();
    auto b = make_source_detection_report(g, {1, 7, 11}, 9, 2).to_json();
    if (a != b) {
      ok = false;
      detail += "source-detection report diverged; ";
    }
  }
  // Criterion 7 flow, including the trace.
  {
    auto g = gen_random(32, 16, 0.3, 7103200);
    SimulationTrace t1, t2;
    auto r1 = apsp_approx(g, &t1);
    auto r2 = apsp_approx(g, &t2);
    if (make_apsp_report(g, r1).to_json(true) != make_apsp_report(g, r2).to_json(true) ||
        t1.to_json() != t2.to_json()) {
      ok = false;
      detail += "apsp report or trace diverged; ";
    }
  }
  // Generation itself.
  {
    if (gen_random(40, 16, 0.2, 99).to_text() != gen_random(40, 16, 0.2, 99).to_text()) {
      ok = false;
      detail += "generator diverged; ";
    }
  }
  report(11, ok, "identical seeds give byte-identical reports and traces",
         detail.empty() ? "hitting-set, source-detection, apsp, generator" : detail);
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

  using Fn = void (*)();
  Fn criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5, criterion_6,
                   criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
  try {
    if (only >= 1 && only <= 11) {
      criteria[only - 1]();
    } else {
      for (auto fn : criteria) fn();
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL (exception): " << e.what() << "\n";
    return 1;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
