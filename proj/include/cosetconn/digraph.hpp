#ifndef COSETCONN_DIGRAPH_HPP
#define COSETCONN_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cosetconn/vertex_set.hpp"

namespace cosetconn {

// Simple finite digraph: no loops, no parallel edges. Immutable.
class Digraph {
public:
  // Throws InputError on out-of-range targets, loops or repeated out-neighbours.
  Digraph(std::size_t vertex_count, std::vector<std::vector<Vertex>> adjacency);

  static Digraph complete(std::size_t n);
  static Digraph cycle(std::size_t n);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Vertex>& out(Vertex v) const { return adjacency_.at(v); }
  const VertexSet& out_set(Vertex v) const { return rows_.at(v); }
  std::size_t out_degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t min_out_degree() const;
  bool has_edge(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  bool is_complete() const;

  // Same vertex count and edge set; out-list order is ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) { return a.rows_ == b.rows_; }

private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

// Reverse every edge; out-lists come out sorted.
Digraph transpose(const Digraph& g);

// Single SCC; graphs with 0 or 1 vertex count as connected.
bool is_strongly_connected(const Digraph& g);
bool is_weakly_connected(const Digraph& g);
// Components sorted internally, ordered by least member.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);

struct NeighborSet {
  VertexSet neighbors;  // out-neighbours of A outside A
  bool is_part;         // V \ (A ∪ N(A)) non-empty
};
NeighborSet neighbor_set(const Digraph& g, const VertexSet& a);

// Number of edges leaving A.
std::size_t out_edge_count(const Digraph& g, const VertexSet& a);

struct CutCertificate {
  enum class Kind { vertex, edge };
  Kind kind;
  std::size_t size;
  std::vector<Vertex> separator_vertices;                    // kind == vertex
  std::vector<std::pair<Vertex, Vertex>> separator_edges;    // kind == edge
  Vertex source;
  Vertex sink;
};

struct Connectivity {
  std::size_t value;
  std::optional<CutCertificate> certificate;  // absent for complete digraphs
};

// Max number of internally vertex-disjoint s->t paths (s != t, (s,t) not an edge).
std::size_t local_vertex_connectivity(const Digraph& g, Vertex s, Vertex t);
// Max number of edge-disjoint s->t paths.
std::size_t local_edge_connectivity(const Digraph& g, Vertex s, Vertex t);

// Exact kappa by vertex-split unit max-flow. Complete digraphs give n-1 with no
// certificate. Throws PreconditionError if g is not strongly connected.
Connectivity vertex_connectivity(const Digraph& g);
// min over targets v of local connectivity base -> v. Only meaningful for
// vertex-transitive g; callers are expected to know that.
std::size_t vertex_connectivity_transitive(const Digraph& g, Vertex base);
// Exact lambda by unit-capacity max-flow from vertex 0 to every vertex and back.
Connectivity edge_connectivity(const Digraph& g);

enum class Side { forward, transpose };

struct AtomSet {
  enum class Kind { atom, e_atom };
  Kind kind;
  Side side;
  std::size_t boundary;            // kappa (atoms) or lambda (e-atoms)
  std::vector<VertexSet> members;  // all of equal size, sorted
};

inline constexpr std::size_t default_bruteforce_cap = 18;
inline constexpr std::size_t max_bruteforce_cap = 40;

// All minimum-size parts A with |N(A)| = kappa, by exhaustive subset scan.
// kappa is taken from the scan itself (min |N| over parts). Throws
// PreconditionError for complete or disconnected digraphs and CapExceeded
// above `cap` vertices.
AtomSet atoms_bruteforce(const Digraph& g, Side side = Side::forward,
                         std::size_t cap = default_bruteforce_cap);
// All minimum-size proper non-empty subsets with exactly lambda outgoing edges.
AtomSet e_atoms_bruteforce(const Digraph& g, Side side = Side::forward,
                           std::size_t cap = default_bruteforce_cap);
// Minimum-size parts containing v with exactly `kappa` neighbours, searching
// sizes 1..max_size in order. On a vertex-transitive digraph these are
// exactly the atoms through v. Throws CapExceeded if more than
// `max_subsets` subsets would be examined.
std::vector<VertexSet> atoms_containing(const Digraph& g, Vertex v, std::size_t kappa,
                                        std::size_t max_size, std::size_t max_subsets = 5'000'000);

} // namespace cosetconn

#endif // COSETCONN_DIGRAPH_HPP
