#include "cosetconn/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "cosetconn/error.hpp"

namespace cosetconn {

// ---- Digraph ----------------------------------------------------------------

Digraph::Digraph(std::size_t vertex_count, std::vector<std::vector<Vertex>> adjacency)
: adjacency_(std::move(adjacency))
{
  if (adjacency_.size() != vertex_count)
    throw InputError("adjacency has " + std::to_string(adjacency_.size()) + " rows for " +
                     std::to_string(vertex_count) + " vertices");
  rows_.reserve(vertex_count);
  for (std::size_t u = 0; u < vertex_count; ++u) {
    VertexSet row(vertex_count);
    for (Vertex v : adjacency_[u]) {
      if (v >= vertex_count)
        throw InputError("edge target " + std::to_string(v) + " out of range");
      if (v == u)
        throw InputError("self-loop at vertex " + std::to_string(u));
      if (row.contains(v))
        throw InputError("parallel edge " + std::to_string(u) + "->" + std::to_string(v));
      row.insert(v);
    }
    edge_count_ += adjacency_[u].size();
    rows_.push_back(std::move(row));
  }
}

Digraph Digraph::complete(std::size_t n)
{
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v)
        adj[u].push_back(v);
    }
  }
  return Digraph(n, std::move(adj));
}

Digraph Digraph::cycle(std::size_t n)
{
  std::vector<std::vector<Vertex>> adj(n);
  if (n > 1) {
    for (Vertex u = 0; u < n; ++u)
      adj[u].push_back(static_cast<Vertex>((u + 1) % n));
  }
  return Digraph(n, std::move(adj));
}

std::size_t Digraph::min_out_degree() const
{
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (const auto& row : adjacency_)
    m = std::min(m, row.size());
  return adjacency_.empty() ? 0 : m;
}

bool Digraph::is_complete() const
{
  const std::size_t n = vertex_count();
  return edge_count_ == n * (n == 0 ? 0 : n - 1);
}

Digraph transpose(const Digraph& g)
{
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.out(u))
      adj[v].push_back(u);
  }
  return Digraph(g.vertex_count(), std::move(adj));
}

// ---- reachability -----------------------------------------------------------

namespace {

std::vector<std::uint8_t> reach(const std::vector<std::vector<Vertex>>& adj, Vertex start)
{
  std::vector<std::uint8_t> seen(adj.size(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

std::vector<std::vector<Vertex>> adjacency_of(const Digraph& g)
{
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    adj[u] = g.out(u);
  return adj;
}

std::vector<std::vector<Vertex>> reverse_adjacency(const Digraph& g)
{
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.out(u))
      adj[v].push_back(u);
  }
  return adj;
}

bool all_set(const std::vector<std::uint8_t>& v)
{
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
}

} // namespace

bool is_strongly_connected(const Digraph& g)
{
  if (g.vertex_count() <= 1)
    return true;
  return all_set(reach(adjacency_of(g), 0)) && all_set(reach(reverse_adjacency(g), 0));
}

bool is_weakly_connected(const Digraph& g)
{
  if (g.vertex_count() <= 1)
    return true;
  auto adj = adjacency_of(g);
  auto rev = reverse_adjacency(g);
  for (std::size_t u = 0; u < adj.size(); ++u)
    adj[u].insert(adj[u].end(), rev[u].begin(), rev[u].end());
  return all_set(reach(adj, 0));
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g)
{
  // Kosaraju, iterative.
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> finish;
  finish.reserve(n);
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < g.out(u).size()) {
        Vertex v = g.out(u)[next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        finish.push_back(u);
        stack.pop_back();
      }
    }
  }
  auto rev = reverse_adjacency(g);
  std::vector<std::int64_t> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (comp[*it] >= 0)
      continue;
    std::vector<Vertex> members;
    std::vector<Vertex> stack{*it};
    comp[*it] = static_cast<std::int64_t>(out.size());
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex v : rev[u]) {
        if (comp[v] < 0) {
          comp[v] = static_cast<std::int64_t>(out.size());
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

NeighborSet neighbor_set(const Digraph& g, const VertexSet& a)
{
  if (a.universe() != g.vertex_count())
    throw InputError("vertex set universe does not match the digraph");
  VertexSet n(g.vertex_count());
  for (Vertex v : a.to_vector())
    n |= g.out_set(v);
  n -= a;
  const bool part = (a.size() + n.size()) < g.vertex_count();
  return {std::move(n), part};
}

std::size_t out_edge_count(const Digraph& g, const VertexSet& a)
{
  std::size_t count = 0;
  for (Vertex v : a.to_vector())
    count += g.out_set(v).count_minus(a);
  return count;
}

// ---- unit-capacity max-flow ---------------------------------------------------

namespace {

// Residual network with unit (or zero) capacities, augmented one shortest
// path at a time. Every augmenting path carries exactly one unit here.
class UnitFlow {
public:
  explicit UnitFlow(std::size_t nodes) : head_(nodes) {}

  void add_arc(std::uint32_t u, std::uint32_t v)
  {
    head_[u].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({v, 1});
    head_[v].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({u, 0});
  }

  void freeze() { initial_ = arcs_; }

  std::size_t max_flow(std::uint32_t s, std::uint32_t t, std::size_t limit)
  {
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      arcs_[i].cap = initial_[i].cap;
    std::size_t flow = 0;
    std::vector<std::int64_t> via(head_.size());
    std::vector<std::uint32_t> queue;
    queue.reserve(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      via[s] = -2;
      queue.clear();
      queue.push_back(s);
      for (std::size_t qi = 0; qi < queue.size() && via[t] == -1; ++qi) {
        const auto u = queue[qi];
        for (auto a : head_[u]) {
          const auto& arc = arcs_[a];
          if (arc.cap > 0 && via[arc.to] == -1) {
            via[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[t] == -1)
        break;
      for (auto v = t; v != s;) {
        const auto a = static_cast<std::uint32_t>(via[v]);
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        v = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

  // Nodes reachable from s in the current residual network.
  std::vector<std::uint8_t> source_side(std::uint32_t s) const
  {
    std::vector<std::uint8_t> seen(head_.size(), 0);
    std::vector<std::uint32_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto a : head_[u]) {
        const auto& arc = arcs_[a];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

private:
  struct Arc {
    std::uint32_t to;
    int cap;
  };
  std::vector<std::vector<std::uint32_t>> head_;
  std::vector<Arc> arcs_;
  std::vector<Arc> initial_;
};

// Node 2v is v's entry, 2v+1 its exit.
UnitFlow split_network(const Digraph& g)
{
  UnitFlow net(2 * g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    net.add_arc(2 * v, 2 * v + 1);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.out(u))
      net.add_arc(2 * u + 1, 2 * v);
  }
  net.freeze();
  return net;
}

UnitFlow edge_network(const Digraph& g)
{
  UnitFlow net(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.out(u))
      net.add_arc(u, v);
  }
  net.freeze();
  return net;
}

CutCertificate vertex_cut(const UnitFlow& net, const Digraph& g, Vertex s, Vertex t)
{
  const auto side = net.source_side(2 * s + 1);
  CutCertificate cert{CutCertificate::Kind::vertex, 0, {}, {}, s, t};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != s && v != t && side[2 * v] && !side[2 * v + 1])
      cert.separator_vertices.push_back(v);
  }
  cert.size = cert.separator_vertices.size();
  return cert;
}

CutCertificate edge_cut(const UnitFlow& net, const Digraph& g, Vertex s, Vertex t)
{
  const auto side = net.source_side(s);
  CutCertificate cert{CutCertificate::Kind::edge, 0, {}, {}, s, t};
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!side[u])
      continue;
    for (Vertex v : g.out(u)) {
      if (!side[v])
        cert.separator_edges.emplace_back(u, v);
    }
  }
  cert.size = cert.separator_edges.size();
  return cert;
}

void require_strong(const Digraph& g, const char* what)
{
  if (!is_strongly_connected(g))
    throw PreconditionError(std::string(what) + ": digraph is not strongly connected");
}

// N(v) for a vertex of minimum out-degree, with some vertex it cuts off.
CutCertificate degree_cut(const Digraph& g)
{
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) < g.out_degree(best))
      best = v;
  }
  Vertex other = best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != best && !g.has_edge(best, v)) {
      other = v;
      break;
    }
  }
  return {CutCertificate::Kind::vertex, g.out_degree(best), g.out(best), {}, best, other};
}

} // namespace

std::size_t local_vertex_connectivity(const Digraph& g, Vertex s, Vertex t)
{
  if (s == t || s >= g.vertex_count() || t >= g.vertex_count())
    throw InputError("local vertex connectivity needs two distinct vertices");
  if (g.has_edge(s, t))
    throw InputError("local vertex connectivity is undefined for adjacent s -> t");
  auto net = split_network(g);
  return net.max_flow(2 * s + 1, 2 * t, g.vertex_count());
}

std::size_t local_edge_connectivity(const Digraph& g, Vertex s, Vertex t)
{
  if (s == t || s >= g.vertex_count() || t >= g.vertex_count())
    throw InputError("local edge connectivity needs two distinct vertices");
  auto net = edge_network(g);
  return net.max_flow(s, t, g.edge_count());
}

Connectivity vertex_connectivity(const Digraph& g)
{
  require_strong(g, "vertex_connectivity");
  const std::size_t n = g.vertex_count();
  if (g.is_complete())
    return {n == 0 ? 0 : n - 1, std::nullopt};

  // Even's scheme: some vertex among the first kappa+1 avoids a minimum
  // separator, and every vertex before it lies in the separator, so pairs
  // (v_i, v_j), j > i, in both directions cover a separated pair.
  auto net = split_network(g);
  CutCertificate best = degree_cut(g);
  for (Vertex i = 0; i <= best.size && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (auto [s, t] : {std::pair{i, j}, std::pair{j, i}}) {
        if (g.has_edge(s, t))
          continue;
        const auto f = net.max_flow(2 * s + 1, 2 * t, best.size);
        if (f < best.size)
          best = vertex_cut(net, g, s, t);
      }
    }
  }
  return {best.size, best};
}

std::size_t vertex_connectivity_transitive(const Digraph& g, Vertex base)
{
  require_strong(g, "vertex_connectivity_transitive");
  const std::size_t n = g.vertex_count();
  if (base >= n)
    throw InputError("base vertex out of range");
  if (g.is_complete())
    return n == 0 ? 0 : n - 1;
  auto net = split_network(g);
  std::size_t best = g.out_degree(base);
  for (Vertex t = 0; t < n; ++t) {
    if (t == base || g.has_edge(base, t))
      continue;
    best = std::min(best, net.max_flow(2 * base + 1, 2 * t, best));
  }
  return best;
}

Connectivity edge_connectivity(const Digraph& g)
{
  require_strong(g, "edge_connectivity");
  const std::size_t n = g.vertex_count();
  if (n <= 1)
    return {0, std::nullopt};
  auto net = edge_network(g);

  Vertex low = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.out_degree(v) < g.out_degree(low))
      low = v;
  }
  CutCertificate best{CutCertificate::Kind::edge, g.out_degree(low), {}, {}, low,
                      low == 0 ? Vertex{1} : Vertex{0}};
  for (Vertex v : g.out(low))
    best.separator_edges.emplace_back(low, v);

  for (Vertex v = 1; v < n; ++v) {
    for (auto [s, t] : {std::pair<Vertex, Vertex>{0, v}, std::pair<Vertex, Vertex>{v, 0}}) {
      const auto f = net.max_flow(s, t, best.size);
      if (f < best.size)
        best = edge_cut(net, g, s, t);
    }
  }
  return {best.size, best};
}

// ---- brute-force atoms --------------------------------------------------------

namespace {

struct MaskGraph {
  std::size_t n;
  std::uint64_t full;
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> in;
};

MaskGraph to_masks(const Digraph& g, std::size_t cap, const char* what)
{
  const std::size_t n = g.vertex_count();
  const std::size_t limit = std::min(cap, max_bruteforce_cap);
  if (n > limit)
    throw CapExceeded(std::string(what) + ": digraph too large for exhaustive subset scan", limit, n);
  MaskGraph m{n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, std::vector<std::uint64_t>(n, 0),
              std::vector<std::uint64_t>(n, 0)};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.out(u)) {
      m.out[u] |= std::uint64_t{1} << v;
      m.in[v] |= std::uint64_t{1} << u;
    }
  }
  return m;
}

VertexSet from_mask(std::size_t n, std::uint64_t mask)
{
  VertexSet s(n);
  while (mask) {
    s.insert(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

// Keeps every subset attaining the lexicographically smallest (score, size).
struct BestSubsets {
  std::size_t score = std::numeric_limits<std::size_t>::max();
  std::size_t size = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint64_t> masks;

  void offer(std::size_t s, std::size_t k, std::uint64_t mask)
  {
    if (s < score || (s == score && k < size)) {
      score = s;
      size = k;
      masks.clear();
    }
    if (s == score && k == size)
      masks.push_back(mask);
  }
};

void scan_parts(const MaskGraph& m, std::size_t v, std::uint64_t a, std::uint64_t u, std::size_t k,
                BestSubsets& best)
{
  if (v == m.n) {
    if (a == 0)
      return;
    const std::uint64_t nb = u & ~a;
    if ((a | nb) != m.full)
      best.offer(static_cast<std::size_t>(std::popcount(nb)), k, a);
    return;
  }
  scan_parts(m, v + 1, a, u, k, best);
  scan_parts(m, v + 1, a | (std::uint64_t{1} << v), u | m.out[v], k + 1, best);
}

void scan_cuts(const MaskGraph& m, std::size_t v, std::uint64_t a, std::size_t edges_out, std::size_t k,
               BestSubsets& best)
{
  if (v == m.n) {
    if (a != 0 && a != m.full)
      best.offer(edges_out, k, a);
    return;
  }
  scan_cuts(m, v + 1, a, edges_out, k, best);
  const std::uint64_t bit = std::uint64_t{1} << v;
  const std::size_t gained = static_cast<std::size_t>(std::popcount(m.out[v] & ~a & ~bit));
  const std::size_t lost = static_cast<std::size_t>(std::popcount(m.in[v] & a));
  scan_cuts(m, v + 1, a | bit, edges_out + gained - lost, k + 1, best);
}

AtomSet collect(AtomSet::Kind kind, Side side, std::size_t n, const BestSubsets& best)
{
  AtomSet out{kind, side, best.score, {}};
  for (auto mask : best.masks)
    out.members.push_back(from_mask(n, mask));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

} // namespace

AtomSet atoms_bruteforce(const Digraph& g, Side side, std::size_t cap)
{
  const auto m = to_masks(g, cap, "atoms_bruteforce");
  if (g.is_complete())
    throw PreconditionError("complete digraphs have no atoms");
  require_strong(g, "atoms_bruteforce");
  BestSubsets best;
  scan_parts(m, 0, 0, 0, 0, best);
  return collect(AtomSet::Kind::atom, side, m.n, best);
}

AtomSet e_atoms_bruteforce(const Digraph& g, Side side, std::size_t cap)
{
  const auto m = to_masks(g, cap, "e_atoms_bruteforce");
  if (m.n < 2)
    throw PreconditionError("e-atoms need at least two vertices");
  BestSubsets best;
  scan_cuts(m, 0, 0, 0, 0, best);
  return collect(AtomSet::Kind::e_atom, side, m.n, best);
}

std::vector<VertexSet> atoms_containing(const Digraph& g, Vertex v, std::size_t kappa,
                                        std::size_t max_size, std::size_t max_subsets)
{
  const std::size_t n = g.vertex_count();
  if (v >= n)
    throw InputError("vertex out of range");
  std::vector<Vertex> others;
  for (Vertex u = 0; u < n; ++u) {
    if (u != v)
      others.push_back(u);
  }
  std::size_t examined = 0;
  for (std::size_t size = 1; size <= max_size && size <= n; ++size) {
    std::vector<VertexSet> found;
    // Combinations of size-1 further vertices, lexicographic.
    const std::size_t pick = size - 1;
    std::vector<std::size_t> idx(pick);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (++examined > max_subsets)
        throw CapExceeded("atoms_containing: too many candidate subsets", max_subsets, examined);
      VertexSet a(n);
      a.insert(v);
      for (auto i : idx)
        a.insert(others[i]);
      const auto nb = neighbor_set(g, a);
      if (nb.is_part && nb.neighbors.size() == kappa)
        found.push_back(std::move(a));
      // next combination
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == others.size() - pick + i - 1)
        --i;
      if (i == 0)
        break;
      ++idx[i - 1];
      for (std::size_t j = i; j < pick; ++j)
        idx[j] = idx[j - 1] + 1;
    }
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return found;
    }
  }
  return {};
}

} // namespace cosetconn
