#ifndef COSETCONN_CP_FAMILY_HPP
#define COSETCONN_CP_FAMILY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cosetconn/coset_digraph.hpp"

namespace cosetconn {

// Cycle-prefix digraph CP(n, k): S_n acting on cosets of the pointwise
// stabiliser of {1..n-k}, with generators gamma(2) .. gamma(n-k+1).
struct CPParams {
  unsigned n;
  unsigned k;
};

// One-line form k 1 2 ... (k-1) (k+1) ... n. Requires 2 <= k <= n <= 16.
Permutation gamma(unsigned k, unsigned n);
std::string gamma_label(unsigned j);

// Throws InputError unless 2 <= n <= 16 and 1 <= k <= n-1.
void validate(const CPParams& p);

CosetDigraphSpec cp_spec(const CPParams& p, std::size_t enumeration_cap = GroupContext::default_cap);
// Also checks H_k against its defining property (fixes 1..n-k, order k!).
CosetDigraph cp_build(const CPParams& p, std::size_t enumeration_cap = GroupContext::default_cap);

using DegreeProfile = std::vector<std::pair<std::string, std::size_t>>;
// d_s per label as built.
DegreeProfile cp_degree_profile(const CosetDigraph& cd);
// gamma(i) -> 1 for i <= n-k, gamma(n-k+1) -> k.
DegreeProfile cp_expected_profile(const CPParams& p);

// G' = <H, gamma(2), ..., gamma(n-k)>.
SubgroupHandle cp_prefix_group(const CosetDigraph& cd, const CPParams& p);

// |F gamma(n-k+1) H / H| == |F/H| * k, by enumeration. Throws InputError
// unless H <= F <= G'.
bool verify_neighbor_multiplier(const CosetDigraph& cd, const CPParams& p, const SubgroupHandle& f);

struct PrefixStructureReport {
  std::vector<std::string> non_normalizing;  // gamma(j), j <= n-k, outside N(H)
  std::size_t prefix_vertex_count;           // |G'/H|
  std::size_t expected_vertex_count;         // (n-k)!
  bool isomorphic;                           // G-prime digraph vs CP(n-k, 1)
  bool last_generates;                       // <H, gamma(n-k+1)> = S_n

  bool all_ok() const
  {
    return non_normalizing.empty() && prefix_vertex_count == expected_vertex_count && isomorphic &&
           last_generates;
  }
};
// Requires 1 < k < n-1 (PreconditionError otherwise).
PrefixStructureReport verify_prefix_structure(const CPParams& p,
                                              std::size_t enumeration_cap = GroupContext::default_cap);

// Edge-label-preserving isomorphism a -> b built by following labels from
// the base vertices. Only valid when every class has d_s = 1 and labels
// match; returns false otherwise.
bool labeled_bfs_isomorphic(const CosetDigraph& a, const CosetDigraph& b);

} // namespace cosetconn

#endif // COSETCONN_CP_FAMILY_HPP
