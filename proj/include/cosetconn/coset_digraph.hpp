#ifndef COSETCONN_COSET_DIGRAPH_HPP
#define COSETCONN_COSET_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosetconn/digraph.hpp"
#include "cosetconn/group.hpp"
#include "cosetconn/permutation.hpp"

namespace cosetconn {

struct LabeledPermutation {
  std::string label;
  Permutation perm;
};

struct CosetDigraphSpec {
  std::size_t degree = 1;
  std::vector<Permutation> group_generators;
  std::vector<Permutation> subgroup_generators;
  std::vector<LabeledPermutation> connection_set;
  std::size_t enumeration_cap = GroupContext::default_cap;
};

// Edges contributed by one generator s: gH -> g r H for each r in HsH/H.
struct EdgeClass {
  std::string label;
  Permutation generator;
  std::size_t degree;                        // d_s = |HsH/H|
  std::vector<Permutation> coset_reps;       // canonical reps of the cosets in HsH
  std::vector<std::pair<Vertex, Vertex>> edges;
};

class CosetDigraph {
public:
  const CosetDigraphSpec& spec() const noexcept { return spec_; }
  const GroupPtr& group() const noexcept { return group_; }
  const SubgroupHandle& subgroup() const noexcept { return *subgroup_; }
  // Canonical coset representatives; vertex v is the coset vertices()[v] H.
  const std::vector<Permutation>& vertices() const noexcept { return cosets_.reps; }
  const Digraph& graph() const noexcept { return graph_; }
  // One class per surviving generator, in spec order.
  const std::vector<EdgeClass>& classes() const noexcept { return classes_; }
  // out_labels()[u][i] is the class index of the edge u -> graph().out(u)[i].
  const std::vector<std::vector<std::uint32_t>>& out_labels() const noexcept { return out_labels_; }
  // Labels dropped because an earlier generator shares their double coset.
  const std::vector<std::string>& dropped_labels() const noexcept { return dropped_; }

  Vertex base_vertex() const noexcept { return 0; }
  // The vertex gH. Throws InputError if g is not in G.
  Vertex vertex_of(const Permutation& g) const;
  // Sum of d_s: the out-degree of every vertex.
  std::size_t degree() const noexcept { return degree_; }
  std::optional<std::size_t> class_index(std::string_view label) const;
  // Throws InputError for unknown labels.
  const EdgeClass& edge_class(std::string_view label) const;
  std::vector<Permutation> generators() const;

private:
  friend CosetDigraph build(const CosetDigraphSpec& spec);
  CosetDigraph() = default;

  CosetDigraphSpec spec_;
  GroupPtr group_;
  std::optional<SubgroupHandle> subgroup_;
  LeftCosets cosets_;
  Digraph graph_{0, {}};
  std::vector<EdgeClass> classes_;
  std::vector<std::vector<std::uint32_t>> out_labels_;
  std::vector<std::string> dropped_;
  std::size_t degree_ = 0;
};

// Indices into s of one generator per distinct double coset HsH, first
// occurrence winning. Throws InputError if some s lies in H.
std::vector<std::size_t> dedupe_generator_indices(const SubgroupHandle& h,
                                                  std::span<const Permutation> s);
std::vector<Permutation> dedupe_generators(const SubgroupHandle& h, std::span<const Permutation> s);

// Throws InputError (bad degree, element outside G, s in H, duplicate label)
// or CapExceeded (group enumeration).
CosetDigraph build(const CosetDigraphSpec& spec);

struct GenerationConnectivity {
  bool connected;
  SubgroupHandle generated;                     // <H, S>
  std::vector<std::vector<Vertex>> components;  // (g<H,S>)/H, ordered by least member
};
// Components from the cosets of <H,S>, cross-checked against the SCCs of the
// digraph (InconsistencyError on disagreement).
GenerationConnectivity generation_connectivity(const CosetDigraph& cd);

// Vertex map of left multiplication by g.
std::vector<Vertex> left_translation(const CosetDigraph& cd, const Permutation& g);
// Whether left multiplication by g preserves every edge together with its label.
bool verify_automorphism(const CosetDigraph& cd, const Permutation& g);

// The coset digraph on S^-1 with the same vertex numbering; labels gain (or
// lose) a "^-1" suffix. Checked against transpose(cd.graph()).
CosetDigraph transpose_spec(const CosetDigraph& cd);

} // namespace cosetconn

#endif // COSETCONN_COSET_DIGRAPH_HPP
