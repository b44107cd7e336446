#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcc/apsp.hpp"
#include "bcc/gadget.hpp"
#include "bcc/hitting_set.hpp"
#include "bcc/source_detect.hpp"

namespace bcc {

// Exact K-closest-sources-within-H lists, (distance, id)-lexicographic.
// The independent route the simulated runs are compared against.
std::vector<SourceList> source_lists_oracle(const IntGraph& g, const std::vector<NodeId>& sources,
                                            std::int64_t H, std::int64_t K);

// Approximation report against the exact oracle. Ratios are integer
// milliunits so diffs never see float drift.
struct ApspReport {
  int n = 0;
  int k = 1;
  std::int64_t h = 1;
  std::int64_t eps_den = 1;
  int levels = 0;
  std::int64_t rounds = 0;
  std::vector<NodeId> hitting_set;
  std::int64_t denominator_exact = 1;   // p
  std::int64_t denominator_approx = 1;  // p * 2 h eps_den
  std::int64_t max_ratio_milli = 1000;
  bool sound = true;         // estimate >= exact everywhere
  bool within_bound = true;  // estimate <= 2 (1+eps)^2 exact everywhere
  bool symmetric = true;
  bool zero_diagonal = true;

  struct Entry {
    NodeId u, v;
    std::int64_t exact_num;   // over denominator_exact
    std::int64_t approx_num;  // over denominator_approx
    std::int64_t ratio_milli;
  };
  std::vector<Entry> entries;  // u < v

  bool valid() const { return sound && within_bound && symmetric && zero_diagonal; }
  std::string to_json(bool include_entries) const;
  std::string to_csv() const;
};

ApspReport make_apsp_report(const WeightedGraph& g, const ApspResult& result);

struct HittingSetReport {
  int n = 0;
  int k = 1;
  std::int64_t rounds = 0;
  std::vector<NodeId> hitting_set;
  bool matches_reference = true;
  bool hits_every_set = true;
  bool rounds_exact = true;  // rounds == 2k

  bool valid() const { return matches_reference && hits_every_set && rounds_exact; }
  std::string to_json() const;
};

HittingSetReport make_hitting_set_report(const WeightedGraph& g, int k);

struct SourceDetectionReport {
  int n = 0;
  std::int64_t H = 1, K = 1;
  std::int64_t n_sources = 0;
  std::int64_t rounds = 0;
  std::int64_t rounds_bound = 0;  // min(H, D) + min(K, |S|)
  bool lists_match_oracle = true;
  bool rounds_within_bound = true;

  bool valid() const { return lists_match_oracle && rounds_within_bound; }
  std::string to_json() const;
};

SourceDetectionReport make_source_detection_report(const WeightedGraph& comm,
                                                   const std::vector<NodeId>& sources,
                                                   std::int64_t H, std::int64_t K);

struct GadgetVerifyReport {
  struct Row {
    std::string a_hex, b_hex;
    int disjoint;
    std::string weighted_observed, weighted_predicted;
    bool weighted_consistent;
    bool within_upper_bound;  // observed <= 2 + 1/p
    std::int64_t unweighted_observed, unweighted_predicted;
    bool unweighted_consistent;
  };
  int k = 2;
  std::int64_t p = 16;
  std::vector<Row> rows;
  bool all_weighted_consistent = true;
  bool all_unweighted_consistent = true;
  bool all_within_upper_bound = true;

  std::string to_json() const;
  std::string to_table() const;
};

GadgetVerifyReport verify_gadget_instances(int k, std::int64_t p,
                                           const std::vector<DisjointnessInstance>& instances);

}  // namespace bcc
