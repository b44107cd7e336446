#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcc/apsp.hpp"
#include "bcc/gen.hpp"
#include "bcc/report.hpp"
#include "bcc/rng.hpp"

using namespace bcc;

TEST_CASE("pipeline parameters") {
  auto p16 = ApspParams::for_n(16);
  CHECK(p16.k == 4);
  CHECK(p16.h == 16);
  CHECK(p16.eps_den == 4);
  auto p2 = ApspParams::for_n(2);
  CHECK(p2.k == 2);
  CHECK(p2.eps_den == 1);
}

TEST_CASE("single edge: estimate is exact") {
  auto g = WeightedGraph::make(2, 4, {{0, 1, 9}});
  auto res = apsp_approx(g);
  REQUIRE(res.matrix.at(0, 1).has_value());
  CHECK(*res.matrix.at(0, 1) == Rat(9, 4));
  CHECK(*res.matrix.at(0, 0) == Rat::zero());
  CHECK(*res.matrix.at(1, 1) == Rat::zero());
  CHECK(res.matrix.tag[res.matrix.idx(0, 1)] == Provenance::Shortcut);
}

TEST_CASE("diagonal is zero and the matrix is symmetric") {
  auto g = gen_random(12, 8, 0.3, 5);
  auto res = apsp_approx(g);
  for (NodeId u = 0; u < g.n(); ++u) {
    REQUIRE(res.matrix.at(u, u).has_value());
    CHECK(*res.matrix.at(u, u) == Rat::zero());
    for (NodeId v = 0; v < g.n(); ++v) {
      REQUIRE(res.matrix.at(u, v).has_value());
      CHECK(*res.matrix.at(u, v) == *res.matrix.at(v, u));
    }
  }
}

TEST_CASE("estimates are sound and within the approximation bound") {
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 8 + static_cast<int>(rng.below(17));
    auto g = gen_random(n, 16, 0.3, 3000 + trial);
    auto res = apsp_approx(g);
    auto m = exact_apsp(g);
    Rat factor(2 * (res.eps_den + 1) * (res.eps_den + 1), res.eps_den * res.eps_den);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v) {
        REQUIRE(res.matrix.at(u, v).has_value());
        Rat d(m.at(u, v), g.p());
        CHECK(*res.matrix.at(u, v) >= d);
        CHECK(*res.matrix.at(u, v) <= factor * d);
      }
  }
}

TEST_CASE("simulated pipeline equals the reference pipeline") {
  Rng rng(72);
  for (int trial = 0; trial < 4; ++trial) {
    int n = 6 + static_cast<int>(rng.below(15));
    auto g = gen_random(n, 8, 0.35, 3100 + trial);
    auto sim = apsp_approx(g);
    auto ref = apsp_reference(g);
    CHECK(sim.hitting_set == ref.hitting_set);
    CHECK(sim.levels == ref.levels);
    REQUIRE(sim.matrix.est.size() == ref.matrix.est.size());
    for (std::size_t i = 0; i < sim.matrix.est.size(); ++i) {
      REQUIRE(sim.matrix.est[i].has_value() == ref.matrix.est[i].has_value());
      if (sim.matrix.est[i]) CHECK(*sim.matrix.est[i] == *ref.matrix.est[i]);
    }
  }
}

TEST_CASE("high-diameter shapes stay within bound") {
  // Paths maximize hop diameter (the stress case for hub routing); a ring
  // with a heavy chord forces genuine via-hub detours.
  for (int n : {17, 48}) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 16});
    auto g = WeightedGraph::make(n, 16, std::move(edges));
    auto rep = make_apsp_report(g, apsp_approx(g));
    CHECK(rep.valid());
  }
  int n = 40;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1 + (i % 16)});
  edges.push_back({0, 20, 256});
  auto ring = WeightedGraph::make(n, 16, std::move(edges));
  auto rep = make_apsp_report(ring, apsp_approx(ring));
  CHECK(rep.valid());
}

TEST_CASE("provenance tags are populated") {
  auto g = gen_random(14, 8, 0.3, 6);
  auto res = apsp_approx(g);
  int via_hub = 0, shortcut = 0;
  for (NodeId u = 0; u < g.n(); ++u)
    for (NodeId v = 0; v < g.n(); ++v) {
      auto tag = res.matrix.tag[res.matrix.idx(u, v)];
      if (u == v) {
        CHECK(tag == Provenance::Diagonal);
        continue;
      }
      if (tag == Provenance::ViaHub) {
        ++via_hub;
        CHECK(res.matrix.hub[res.matrix.idx(u, v)] >= 0);
      } else {
        ++shortcut;
      }
    }
  CHECK(shortcut > 0);  // at least the broadcast edges resolve as shortcuts
}

TEST_CASE("deterministic: identical inputs, identical runs") {
  auto g = gen_random(10, 8, 0.35, 7);
  SimulationTrace t1, t2;
  auto r1 = apsp_approx(g, &t1);
  auto r2 = apsp_approx(g, &t2);
  CHECK(r1.rounds == r2.rounds);
  CHECK(t1.to_json() == t2.to_json());
  CHECK(make_apsp_report(g, r1).to_json(true) == make_apsp_report(g, r2).to_json(true));
}

TEST_CASE("every round respects the broadcast discipline") {
  auto g = gen_random(9, 4, 0.4, 8);
  SimulationTrace trace;
  apsp_approx(g, &trace);
  CHECK(audit_broadcast_only(trace));
}

TEST_CASE("diameter estimate sandwiches the true diameter") {
  auto single = WeightedGraph::make(2, 4, {{0, 1, 9}});
  CHECK(diameter_estimate(apsp_approx(single).matrix) == Rat(9, 4));

  std::vector<Edge> star;
  for (int i = 1; i < 6; ++i) star.push_back({0, i, 1});
  auto s = WeightedGraph::make(6, 1, std::move(star));
  auto est = diameter_estimate(apsp_approx(s).matrix);
  auto params = ApspParams::for_n(6);
  Rat factor(2 * (params.eps_den + 1) * (params.eps_den + 1),
             params.eps_den * params.eps_den);
  CHECK(est >= Rat(2, 1));
  CHECK(est <= factor * Rat(2, 1));

  Rng rng(73);
  for (int trial = 0; trial < 3; ++trial) {
    int n = 8 + static_cast<int>(rng.below(9));
    auto g = gen_random(n, 8, 0.3, 3300 + trial);
    auto res = apsp_approx(g);
    Rat d = exact_diameter(g);
    Rat f(2 * (res.eps_den + 1) * (res.eps_den + 1), res.eps_den * res.eps_den);
    auto e = diameter_estimate(res.matrix);
    CHECK(e >= d);
    CHECK(e <= f * d);
  }
}
