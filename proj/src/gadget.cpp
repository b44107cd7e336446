#include "bcc/gadget.hpp"

#include <algorithm>

#include "bcc/error.hpp"

#include "json.hpp"

namespace bcc {

DisjointnessInstance DisjointnessInstance::all_zero(int k) {
  DisjointnessInstance inst;
  inst.k = k;
  inst.a.assign(static_cast<std::size_t>(k) * k, 0);
  inst.b.assign(static_cast<std::size_t>(k) * k, 0);
  return inst;
}

DisjointnessInstance DisjointnessInstance::all_one(int k) {
  auto inst = all_zero(k);
  std::fill(inst.a.begin(), inst.a.end(), 1);
  std::fill(inst.b.begin(), inst.b.end(), 1);
  return inst;
}

DisjointnessInstance DisjointnessInstance::random(int k, Rng& rng) {
  auto inst = all_zero(k);
  for (auto& bit : inst.a) bit = static_cast<std::uint8_t>(rng.below(2));
  for (auto& bit : inst.b) bit = static_cast<std::uint8_t>(rng.below(2));
  return inst;
}

namespace {

std::vector<std::uint8_t> bits_from_hex(int k, const std::string& hex) {
  int nbits = k * k;
  if (nbits > 63) throw Error(ErrorCode::InvalidParameter, "k too large for hex encoding");
  std::uint64_t value = 0;
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else throw Error(ErrorCode::InvalidParameter, "bad hex digit");
    value = (value << 4) | static_cast<std::uint64_t>(digit);
  }
  std::vector<std::uint8_t> bits(nbits);
  for (int i = 0; i < nbits; ++i) bits[i] = static_cast<std::uint8_t>((value >> i) & 1);
  return bits;
}

std::string bits_to_hex(const std::vector<std::uint8_t>& bits) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) value |= (1ull << i);
  int digits = static_cast<int>((bits.size() + 3) / 4);
  std::string out;
  for (int d = digits - 1; d >= 0; --d) {
    int nibble = static_cast<int>((value >> (4 * d)) & 0xf);
    out.push_back(nibble < 10 ? static_cast<char>('0' + nibble)
                              : static_cast<char>('a' + nibble - 10));
  }
  return out;
}

}  // namespace

DisjointnessInstance DisjointnessInstance::from_hex(int k, const std::string& a_hex,
                                                    const std::string& b_hex) {
  DisjointnessInstance inst;
  inst.k = k;
  inst.a = bits_from_hex(k, a_hex);
  inst.b = bits_from_hex(k, b_hex);
  return inst;
}

std::string DisjointnessInstance::a_hex() const { return bits_to_hex(a); }
std::string DisjointnessInstance::b_hex() const { return bits_to_hex(b); }

int disjointness(const DisjointnessInstance& inst) {
  for (std::size_t i = 0; i < inst.a.size(); ++i)
    if (inst.a[i] && inst.b[i]) return 0;
  return 1;
}

std::pair<int, int> bit_index_map(int i, int k) {
  if (i < 0 || i >= k * k) throw Error(ErrorCode::IndexOutOfRange, "bit index outside [0, k^2)");
  return {i % k, k + i / k};
}

int k_of_n(int n) { return n / 10; }

std::vector<NodeId> GadgetGraph::side_a() const {
  std::vector<NodeId> out;
  for (NodeId u = 0; u < graph.n(); ++u)
    if (!side[u]) out.push_back(u);
  return out;
}

GadgetGraph build_gab(const DisjointnessInstance& inst, std::int64_t p, bool weighted) {
  const int k = inst.k;
  if (k < 2) throw Error(ErrorCode::InvalidParameter, "k must be at least 2");
  if (weighted && p < 2)
    throw Error(ErrorCode::InvalidParameter, "weighted gadget needs p >= 2 so 1/p < 1");
  if (static_cast<int>(inst.a.size()) != k * k || static_cast<int>(inst.b.size()) != k * k)
    throw Error(ErrorCode::InvalidParameter, "instance bit length must be k^2");
  if (!weighted) p = 1;

  // Node ids: l_v = v, r_v = 2k + v, c_L = 4k, c_R = 4k + 1.
  const int n = 4 * k + 2;
  const NodeId cl = 4 * k, cr = 4 * k + 1;
  const std::int64_t unit = p;  // weight 1
  const std::int64_t light = 1; // weight 1/p (equals 1 when unweighted)
  auto l = [&](int v) { return static_cast<NodeId>(v); };
  auto r = [&](int v) { return static_cast<NodeId>(2 * k + v); };

  std::vector<Edge> edges;
  // Cliques on L1, L2, R1, R2.
  auto clique = [&](int base, int offset) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        edges.push_back({static_cast<NodeId>(base + offset + i),
                         static_cast<NodeId>(base + offset + j), unit});
  };
  clique(0, 0);      // L1
  clique(0, k);      // L2
  clique(2 * k, 0);  // R1
  clique(2 * k, k);  // R2
  // Centers.
  for (int v = 0; v < 2 * k; ++v) {
    edges.push_back({cl, l(v), unit});
    edges.push_back({cr, r(v), unit});
  }
  // Input-dependent edges: bit value 0 means the edge is present.
  for (int i = 0; i < k * k; ++i) {
    auto [ui, vi] = bit_index_map(i, k);
    if (!inst.a[i]) edges.push_back({l(ui), l(vi), unit});
    if (!inst.b[i]) edges.push_back({r(ui), r(vi), unit});
  }
  // Cut edges.
  std::vector<std::pair<NodeId, NodeId>> cut;
  for (int v = 0; v < 2 * k; ++v) {
    edges.push_back({l(v), r(v), light});
    cut.push_back({l(v), r(v)});
  }
  edges.push_back({cl, cr, light});
  cut.push_back({cl, cr});

  GadgetGraph g;
  g.graph = WeightedGraph::make(n, p, std::move(edges));
  g.k = k;
  g.weighted = weighted;
  g.cut_edges = std::move(cut);
  g.side.assign(n, 0);
  g.role.resize(n);
  for (int v = 0; v < k; ++v) g.role[l(v)] = {GadgetGraph::Group::L1, v};
  for (int v = k; v < 2 * k; ++v) g.role[l(v)] = {GadgetGraph::Group::L2, v};
  for (int v = 0; v < k; ++v) g.role[r(v)] = {GadgetGraph::Group::R1, v};
  for (int v = k; v < 2 * k; ++v) g.role[r(v)] = {GadgetGraph::Group::R2, v};
  g.role[cl] = {GadgetGraph::Group::CL, -1};
  g.role[cr] = {GadgetGraph::Group::CR, -1};
  for (int v = 0; v < 2 * k; ++v) g.side[r(v)] = 1;
  g.side[cr] = 1;
  return g;
}

namespace {
const char* group_name(GadgetGraph::Group g) {
  switch (g) {
    case GadgetGraph::Group::L1: return "L1";
    case GadgetGraph::Group::L2: return "L2";
    case GadgetGraph::Group::R1: return "R1";
    case GadgetGraph::Group::R2: return "R2";
    case GadgetGraph::Group::CL: return "cL";
    case GadgetGraph::Group::CR: return "cR";
  }
  return "?";
}
}  // namespace

std::string GadgetGraph::labels_json() const {
  nlohmann::ordered_json j;
  auto sides = nlohmann::ordered_json::array();
  for (char s : side) sides.push_back(s ? "B" : "A");
  j["side"] = std::move(sides);
  auto roles = nlohmann::ordered_json::array();
  for (const auto& ro : role) {
    nlohmann::ordered_json rj;
    rj["group"] = group_name(ro.group);
    if (ro.index >= 0) rj["index"] = ro.index;
    roles.push_back(std::move(rj));
  }
  j["role"] = std::move(roles);
  return j.dump(2) + "\n";
}

DiameterReport verify_diameter_gap(const GadgetGraph& gadget, const DisjointnessInstance& inst) {
  if (!gadget.weighted)
    throw Error(ErrorCode::InvalidParameter, "diameter gap check needs the weighted gadget");
  DiameterReport rep;
  rep.disjoint = disjointness(inst);
  rep.observed = exact_diameter(gadget.graph);
  std::int64_t p = gadget.graph.p();
  rep.predicted = rep.disjoint ? Rat(p + 1, p) : Rat(2 * p + 1, p);
  rep.consistent = rep.observed == rep.predicted;
  return rep;
}

UnweightedReport verify_unweighted_gap(const GadgetGraph& gadget,
                                       const DisjointnessInstance& inst) {
  if (gadget.weighted)
    throw Error(ErrorCode::InvalidParameter, "unweighted gap check needs the unweighted gadget");
  UnweightedReport rep;
  rep.disjoint = disjointness(inst);
  Rat d = exact_diameter(gadget.graph);
  rep.observed = d.normalized().num;  // denominator is 1
  rep.predicted = rep.disjoint ? 2 : 3;
  rep.consistent = rep.observed == rep.predicted;
  return rep;
}

BandwidthAudit bandwidth_audit(const SimulationTrace& trace, const GadgetGraph& gadget) {
  BandwidthAudit audit;
  std::int64_t budget = static_cast<std::int64_t>(trace.n) * trace.B;
  auto cut = cut_traffic(trace, gadget.side_a());
  for (const auto& round : cut) {
    bool within = round.total() <= budget;
    audit.rounds.push_back({round.round, round.total(), budget, within});
    audit.total_cut_bits += round.total();
    audit.all_within_budget = audit.all_within_budget && within;
  }
  return audit;
}

std::string gadget_spec_json(const DisjointnessInstance& inst, std::int64_t p, bool weighted) {
  nlohmann::ordered_json j;
  j["k"] = inst.k;
  j["p"] = p;
  j["a"] = inst.a_hex();
  j["b"] = inst.b_hex();
  j["weighted"] = weighted;
  return j.dump(2) + "\n";
}

GadgetSpec parse_gadget_spec(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::IoError, "bad gadget spec JSON");
  GadgetSpec spec;
  int k = j.at("k").get<int>();
  spec.inst = DisjointnessInstance::from_hex(k, j.at("a").get<std::string>(),
                                             j.at("b").get<std::string>());
  spec.p = j.at("p").get<std::int64_t>();
  spec.weighted = j.at("weighted").get<bool>();
  return spec;
}

}  // namespace bcc
