#include "bcc/report.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "bcc/error.hpp"

#include "json.hpp"

namespace bcc {

std::vector<SourceList> source_lists_oracle(const IntGraph& g, const std::vector<NodeId>& sources,
                                            std::int64_t H, std::int64_t K) {
  std::vector<NodeId> srcs = sources;
  std::sort(srcs.begin(), srcs.end());
  srcs.erase(std::unique(srcs.begin(), srcs.end()), srcs.end());

  std::vector<SourceList> lists(g.n);
  for (NodeId s : srcs) {
    const std::int64_t inf = INT64_MAX;
    std::vector<std::int64_t> dist(g.n, inf);
    using Item = std::pair<std::int64_t, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d != dist[u]) continue;
      for (const auto& a : g.adj[u]) {
        std::int64_t nd = d + a.num;
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          pq.push({nd, a.to});
        }
      }
    }
    for (NodeId u = 0; u < g.n; ++u)
      if (dist[u] <= H) lists[u].push_back({dist[u], s});
  }
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    if (static_cast<std::int64_t>(list.size()) > K) list.resize(K);
  }
  return lists;
}

namespace {

nlohmann::ordered_json node_array(const std::vector<NodeId>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (NodeId x : v) arr.push_back(x);
  return arr;
}

}  // namespace

ApspReport make_apsp_report(const WeightedGraph& g, const ApspResult& result) {
  ApspReport rep;
  rep.n = g.n();
  rep.k = result.k;
  rep.h = result.h;
  rep.eps_den = result.eps_den;
  rep.levels = result.levels;
  rep.rounds = result.rounds;
  rep.hitting_set = result.hitting_set;
  rep.denominator_exact = g.p();
  rep.denominator_approx = g.p() * 2 * result.h * result.eps_den;

  auto exact = exact_apsp(g);
  const auto& m = result.matrix;
  // 2 (1 + eps)^2 = 2 (eps_den+1)^2 / eps_den^2
  Rat bound_factor(2 * (result.eps_den + 1) * (result.eps_den + 1),
                   result.eps_den * result.eps_den);

  for (NodeId u = 0; u < g.n(); ++u) {
    if (!m.at(u, u) || *m.at(u, u) != Rat::zero()) rep.zero_diagonal = false;
    for (NodeId v = u + 1; v < g.n(); ++v) {
      const auto& est = m.at(u, v);
      Rat ex(exact.at(u, v), g.p());
      ApspReport::Entry entry;
      entry.u = u;
      entry.v = v;
      entry.exact_num = exact.at(u, v);
      if (!est) {
        rep.within_bound = false;  // unreachable estimate on a connected graph
        entry.approx_num = -1;
        entry.ratio_milli = -1;
        rep.entries.push_back(entry);
        continue;
      }
      if (m.at(v, u) != est) rep.symmetric = false;
      if (*est < ex) rep.sound = false;
      if (*est > bound_factor * ex) rep.within_bound = false;
      // est = a/b over denominator_approx: approx_num = a * (D / b).
      Rat norm = est->normalized();
      entry.approx_num = norm.num * (rep.denominator_approx / norm.den);
      __int128 milli = (static_cast<__int128>(1000) * norm.num * g.p()) /
                       (static_cast<__int128>(norm.den) * exact.at(u, v));
      entry.ratio_milli = static_cast<std::int64_t>(milli);
      rep.max_ratio_milli = std::max(rep.max_ratio_milli, entry.ratio_milli);
      rep.entries.push_back(entry);
    }
  }
  return rep;
}

std::string ApspReport::to_json(bool include_entries) const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["h"] = h;
  j["epsilon_denominator"] = eps_den;
  j["levels"] = levels;
  j["hitting_set"] = node_array(hitting_set);
  j["rounds"] = rounds;
  j["max_ratio_milli"] = max_ratio_milli;
  j["denominator_exact"] = denominator_exact;
  j["denominator_approx"] = denominator_approx;
  j["sound"] = sound;
  j["within_bound"] = within_bound;
  j["symmetric"] = symmetric;
  j["zero_diagonal"] = zero_diagonal;
  j["valid"] = valid();
  if (include_entries) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries)
      arr.push_back({e.u, e.v, e.exact_num, e.approx_num, e.ratio_milli});
    j["entries"] = std::move(arr);
  }
  return j.dump(2) + "\n";
}

std::string ApspReport::to_csv() const {
  std::ostringstream os;
  os << "u,v,exact_num,approx_num,ratio_milli\n";
  for (const auto& e : entries)
    os << e.u << "," << e.v << "," << e.exact_num << "," << e.approx_num << ","
       << e.ratio_milli << "\n";
  return os.str();
}

HittingSetReport make_hitting_set_report(const WeightedGraph& g, int k) {
  HittingSetReport rep;
  rep.n = g.n();
  rep.k = k;
  auto dist = hitting_set_distributed(g, k);
  auto ref = hitting_set_reference(g, k);
  rep.rounds = dist.rounds_used;
  rep.hitting_set = dist.hitting_set;
  rep.matches_reference = dist.hitting_set == ref.hitting_set;
  rep.rounds_exact = dist.rounds_used == 2 * static_cast<std::int64_t>(k);
  for (NodeId v = 0; v < g.n(); ++v) {
    bool hit = false;
    for (NodeId s : ref.family[v])
      if (std::binary_search(dist.hitting_set.begin(), dist.hitting_set.end(), s)) {
        hit = true;
        break;
      }
    if (!hit) rep.hits_every_set = false;
  }
  return rep;
}

std::string HittingSetReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["rounds"] = rounds;
  j["hitting_set"] = node_array(hitting_set);
  j["matches_reference"] = matches_reference;
  j["hits_every_set"] = hits_every_set;
  j["rounds_exact"] = rounds_exact;
  j["valid"] = valid();
  return j.dump(2) + "\n";
}

SourceDetectionReport make_source_detection_report(const WeightedGraph& comm,
                                                   const std::vector<NodeId>& sources,
                                                   std::int64_t H, std::int64_t K) {
  SourceDetectionReport rep;
  rep.n = comm.n();
  rep.H = H;
  rep.K = K;
  auto result = source_detection(comm, sources, H, K);
  auto ig = IntGraph::from_graph(comm);
  auto oracle = source_lists_oracle(ig, sources, H, K);
  std::vector<NodeId> srcs = sources;
  std::sort(srcs.begin(), srcs.end());
  srcs.erase(std::unique(srcs.begin(), srcs.end()), srcs.end());
  rep.n_sources = static_cast<std::int64_t>(srcs.size());
  rep.rounds = result.rounds;
  rep.rounds_bound = std::min<std::int64_t>(H, hop_diameter(comm)) +
                     std::min<std::int64_t>(K, rep.n_sources);
  rep.lists_match_oracle = result.lists == oracle;
  rep.rounds_within_bound = result.rounds <= rep.rounds_bound;
  return rep;
}

std::string SourceDetectionReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["H"] = H;
  j["K"] = K;
  j["sources"] = n_sources;
  j["rounds"] = rounds;
  j["rounds_bound"] = rounds_bound;
  j["lists_match_oracle"] = lists_match_oracle;
  j["rounds_within_bound"] = rounds_within_bound;
  j["valid"] = valid();
  return j.dump(2) + "\n";
}

GadgetVerifyReport verify_gadget_instances(int k, std::int64_t p,
                                           const std::vector<DisjointnessInstance>& instances) {
  GadgetVerifyReport rep;
  rep.k = k;
  rep.p = p;
  Rat upper(2 * p + 1, p);
  for (const auto& inst : instances) {
    auto weighted = build_gab(inst, p, true);
    auto unweighted = build_gab(inst, 1, false);
    auto wrep = verify_diameter_gap(weighted, inst);
    auto urep = verify_unweighted_gap(unweighted, inst);
    GadgetVerifyReport::Row row;
    row.a_hex = inst.a_hex();
    row.b_hex = inst.b_hex();
    row.disjoint = wrep.disjoint;
    row.weighted_observed = wrep.observed.str();
    row.weighted_predicted = wrep.predicted.str();
    row.weighted_consistent = wrep.consistent;
    row.within_upper_bound = wrep.observed <= upper;
    row.unweighted_observed = urep.observed;
    row.unweighted_predicted = urep.predicted;
    row.unweighted_consistent = urep.consistent;
    rep.rows.push_back(row);
    rep.all_weighted_consistent = rep.all_weighted_consistent && row.weighted_consistent;
    rep.all_unweighted_consistent = rep.all_unweighted_consistent && row.unweighted_consistent;
    rep.all_within_upper_bound = rep.all_within_upper_bound && row.within_upper_bound;
  }
  return rep;
}

std::string GadgetVerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["p"] = p;
  j["instances"] = static_cast<int>(rows.size());
  j["all_weighted_consistent"] = all_weighted_consistent;
  j["all_unweighted_consistent"] = all_unweighted_consistent;
  j["all_within_upper_bound"] = all_within_upper_bound;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"a", r.a_hex},
                   {"b", r.b_hex},
                   {"disjoint", r.disjoint},
                   {"weighted_observed", r.weighted_observed},
                   {"weighted_predicted", r.weighted_predicted},
                   {"weighted_consistent", r.weighted_consistent},
                   {"within_upper_bound", r.within_upper_bound},
                   {"unweighted_observed", r.unweighted_observed},
                   {"unweighted_predicted", r.unweighted_predicted},
                   {"unweighted_consistent", r.unweighted_consistent}});
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string GadgetVerifyReport::to_table() const {
  std::ostringstream os;
  os << "a\tb\tdisjoint\tobserved\tpredicted\tconsistent\tunweighted\n";
  for (const auto& r : rows)
    os << r.a_hex << "\t" << r.b_hex << "\t" << r.disjoint << "\t" << r.weighted_observed << "\t"
       << r.weighted_predicted << "\t" << (r.weighted_consistent ? "yes" : "NO") << "\t"
       << r.unweighted_observed << (r.unweighted_consistent ? "" : " (NO)") << "\n";
  return os.str();
}

}  // namespace bcc
