#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcc/gen.hpp"
#include "bcc/graph.hpp"
#include "bcc/mssp.hpp"
#include "bcc/rng.hpp"

using namespace bcc;

TEST_CASE("a hub estimates itself at zero on every level") {
  auto g = gen_random(10, 4, 0.3, 2);
  auto sg = build_shortcut_graph(g, 3);
  auto res = mssp_reference(sg, {4}, /*h=*/5, /*eps_den=*/3);
  REQUIRE(res.est[0][4].has_value());
  CHECK(res.value(0, 4) == Rat::zero());
}

TEST_CASE("single edge estimate lands in [w, (1+eps) w]") {
  auto g = WeightedGraph::make(2, 4, {{0, 1, 9}});
  auto sg = build_shortcut_graph(g, 1);
  std::int64_t eps_den = 3;
  for (auto* route : {"sim", "ref"}) {
    auto res = std::string(route) == "sim" ? mssp_approx(sg, {0}, 1, eps_den)
                                           : mssp_reference(sg, {0}, 1, eps_den);
    auto est = res.value(0, 1);
    REQUIRE(est.has_value());
    Rat w(9, 4);
    CHECK(*est >= w);
    CHECK(*est <= Rat(eps_den + 1, eps_den) * w);
  }
}

TEST_CASE("mssp with h=n stays within (1+eps) of the true distance") {
  // With an ample hop budget the h-hop metric is the full metric, so the
  // sandwich pins every estimate to [d, (1+eps) d].
  Rng rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 6 + static_cast<int>(rng.below(11));
    auto g = gen_random(n, 4, 0.35, 1700 + trial);
    auto sg = build_shortcut_graph(g, 1);
    std::int64_t eps_den = std::max(1, ceil_log2(n));
    std::vector<NodeId> hubs;
    for (NodeId u = 0; u < n; ++u) hubs.push_back(u);
    auto res = mssp_reference(sg, hubs, n, eps_den);
    auto m = exact_apsp(g);
    Rat factor(eps_den + 1, eps_den);
    for (std::size_t r = 0; r < hubs.size(); ++r)
      for (NodeId u = 0; u < n; ++u) {
        auto est = res.value(r, u);
        REQUIRE(est.has_value());
        Rat d(m.at(hubs[r], u), g.p());
        CHECK(*est >= d);
        CHECK(*est <= factor * d);
      }
  }
}

TEST_CASE("estimates never undershoot the true distance at any h") {
  Rng rng(62);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 6 + static_cast<int>(rng.below(9));
    auto g = gen_random(n, 4, 0.3, 1800 + trial);
    auto sg = build_shortcut_graph(g, 2);
    auto m = exact_apsp(g);
    std::int64_t eps_den = std::max(1, ceil_log2(n));
    for (std::int64_t h : {2, 5}) {
      auto res = mssp_reference(sg, {0, 1}, h, eps_den);
      for (std::size_t r = 0; r < res.sources.size(); ++r)
        for (NodeId u = 0; u < n; ++u) {
          auto est = res.value(r, u);
          if (est) CHECK(*est >= Rat(m.at(res.sources[r], u), g.p()));
        }
    }
  }
}

TEST_CASE("estimates stay within (1+eps) of the h-hop oracle when it is finite") {
  Rng rng(63);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 6 + static_cast<int>(rng.below(9));
    auto g = gen_random(n, 4, 0.3, 1900 + trial);
    auto sg = build_shortcut_graph(g, 1);
    std::int64_t eps_den = std::max(1, ceil_log2(n));
    for (std::int64_t h : {2, 4}) {
      auto res = mssp_reference(sg, {0}, h, eps_den);
      auto oracle = h_hop_distances(g, 0, h);
      Rat factor(eps_den + 1, eps_den);
      for (NodeId u = 0; u < n; ++u) {
        if (!oracle[u]) continue;
        auto est = res.value(0, u);
        REQUIRE(est.has_value());  // a finite h-hop distance always qualifies somewhere
        CHECK(*est <= factor * Rat(*oracle[u], g.p()));
      }
    }
  }
}

TEST_CASE("simulated mssp equals the reference route") {
  Rng rng(64);
  for (int trial = 0; trial < 4; ++trial) {
    int n = 5 + static_cast<int>(rng.below(9));
    auto g = gen_random(n, 4, 0.35, 2000 + trial);
    auto sg = build_shortcut_graph(g, 2);
    std::int64_t eps_den = std::max(1, ceil_log2(n));
    std::vector<NodeId> hubs{0, static_cast<NodeId>(n / 2)};
    for (std::int64_t h : {static_cast<std::int64_t>(2), static_cast<std::int64_t>(n)}) {
      auto sim = mssp_approx(sg, hubs, h, eps_den);
      auto ref = mssp_reference(sg, hubs, h, eps_den);
      REQUIRE(sim.sources == ref.sources);
      REQUIRE(sim.levels == ref.levels);
      for (std::size_t r = 0; r < sim.sources.size(); ++r)
        for (NodeId u = 0; u < n; ++u) {
          auto a = sim.value(r, u);
          auto b = ref.value(r, u);
          CHECK(a.has_value() == b.has_value());
          if (a && b) CHECK(*a == *b);
        }
    }
  }
}
