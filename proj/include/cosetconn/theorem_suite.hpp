#ifndef COSETCONN_THEOREM_SUITE_HPP
#define COSETCONN_THEOREM_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosetconn/coset_digraph.hpp"

namespace cosetconn {

enum class TheoremId {
  decomposition,
  corollary1,
  corollary1_1,
  hierarchical_gen,
  hier1,
  hierarchical_cayley,
  hierarchical_gen_c,
  edgec,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

struct Hypothesis {
  std::string description;
  bool holds;
  std::optional<std::string> witness;  // set when the hypothesis fails
};

// Hypotheses are listed in a fixed order. Conclusions are checked with the
// flow oracle; `consistent` is false only if every hypothesis holds and the
// oracle contradicts the conclusion.
struct HypothesisReport {
  TheoremId theorem_id;
  std::vector<Hypothesis> hypotheses;
  bool applicable = false;
  std::optional<std::size_t> implied_bound;
  std::optional<std::size_t> computed_kappa;
  std::optional<std::size_t> computed_lambda;
  bool consistent = true;
  // Intermediate quantities (|V(G')|, d_R2, the ordering used, ...), in order.
  std::vector<std::pair<std::string, std::string>> details;
};

using LabelSet = std::vector<std::string>;

// kappa >= min(|V(G')|, kappa(G') + d_R2) with G' = <H, R1>.
// Throws InputError unless R1, R2 partition the labels, PreconditionError if
// cd is disconnected.
HypothesisReport check_decomposition(const CosetDigraph& cd, const LabelSet& r1, const LabelSet& r2);

enum class TowerVariant { corollary1, corollary1_1 };
HypothesisReport check_tower(const CosetDigraph& cd, const std::vector<LabelSet>& partition,
                             TowerVariant variant);

// First ordering (depth-first, spec order) whose prefixes generate strictly
// growing subgroups with H; class indices. CapExceeded above
// max_scan_generators generators.
std::optional<std::vector<std::size_t>> hierarchical_order_search(const CosetDigraph& cd);
// No proper subset of S generates G together with H.
bool is_minimal(const CosetDigraph& cd);

enum class HierarchicalVariant { standard, hier1 };
HypothesisReport check_hierarchical_gen(const CosetDigraph& cd, const LabelSet& ordering,
                                        HierarchicalVariant variant);

// H trivial and some hierarchical ordering exists => kappa = |S|. Failed
// hypotheses yield applicable = false.
HypothesisReport verify_hierarchical_cayley(const CosetDigraph& cd);

HypothesisReport check_hierarchical_gen_c(const CosetDigraph& cd, const LabelSet& s, const LabelSet& s_prime);

// lambda = d, and e-atoms are singletons (brute force when the digraph has at
// most `cap` vertices).
HypothesisReport verify_edge_connectivity(const CosetDigraph& cd, std::size_t cap = 18);

} // namespace cosetconn

#endif // COSETCONN_THEOREM_SUITE_HPP
