#ifndef COSETCONN_ATOM_ANALYSIS_HPP
#define COSETCONN_ATOM_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cosetconn/coset_digraph.hpp"
#include "cosetconn/digraph.hpp"

namespace cosetconn {

inline constexpr std::size_t max_scan_generators = 12;

// The vertex set K/H for K = <H, S0>, with its neighbours counted as
// |K S1 H / H|, S1 = S \ K.
struct AtomCandidate {
  std::vector<std::size_t> s0;  // class indices with s in K, ascending
  std::vector<std::string> s0_labels;
  SubgroupHandle subgroup;
  std::vector<Vertex> vertex_set;
  bool is_part;
  std::size_t neighbor_count;
};

struct AtomAnalysis {
  Side side;
  std::size_t kappa_group;               // min(d, neighbour counts of part candidates)
  std::vector<AtomCandidate> candidates;
  std::vector<std::size_t> winning;      // part candidates attaining kappa_group
  bool size_assumption_ok = false;       // some winner has |A| <= (n - kappa) / 2
  std::optional<std::size_t> oracle_kappa;
};

// One candidate per distinct K = <H,S0> != G over S0 ⊊ S, in order of the
// canonical mask S ∩ K. Each count is cross-checked against neighbor_set on
// the digraph. Throws PreconditionError if cd is disconnected and CapExceeded
// for more than max_scan_generators generators.
std::vector<AtomCandidate> subgroup_atom_scan(const CosetDigraph& cd);

struct GroupKappa {
  std::size_t kappa;
  AtomAnalysis forward;
  AtomAnalysis transpose;
};

// kappa as the smaller of the two sides' group-theoretic minima. With
// `run_oracle` the flow oracle runs too and any disagreement, or a failed size
// assumption on both sides, throws InconsistencyError.
GroupKappa kappa_group_theoretic(const CosetDigraph& cd, bool run_oracle = true);

struct AtomTheoryReport {
  Side side;
  std::size_t kappa;
  std::size_t atom_size;
  std::size_t atom_count;
  std::vector<std::string> s0_labels;
  std::size_t neighbor_count;   // |N(A0)|
  std::size_t d_s1;
  bool partition_ok;            // atoms are disjoint and cover V
  bool translates_ok;           // every atom is g A0
  bool subgroup_ok;             // union of A0 equals <H, S0>
  bool induced_edges_ok;        // edges inside A0 carry S0 labels only
  bool multiple_ok;             // |A0| divides |N(A0)|
  bool lower_bound_ok;          // |N(A0)| >= max(|A0|, d_S1)
  bool smaller_than_degree_ok;  // |A0| < d when d > 1

  bool all_ok() const
  {
    return partition_ok && translates_ok && subgroup_ok && induced_edges_ok && multiple_ok &&
           lower_bound_ok && smaller_than_degree_ok;
  }
};

// Brute-force atoms on whichever side (forward first) has atoms of size at
// most (n - kappa)/2, then the structural checks above. Throws
// PreconditionError for complete or disconnected digraphs and CapExceeded
// above `cap` vertices.
AtomTheoryReport verify_atom_theory(const CosetDigraph& cd, std::size_t cap = default_bruteforce_cap);

} // namespace cosetconn

#endif // COSETCONN_ATOM_ANALYSIS_HPP
