#include "cosetconn/atom_analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "cosetconn/error.hpp"

namespace cosetconn {

namespace {

std::vector<Vertex> cosets_inside(const CosetDigraph& cd, const SubgroupHandle& k)
{
  std::vector<Vertex> out;
  for (const auto& x : k.elements())
    out.push_back(cd.vertex_of(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AtomAnalysis analyse_side(const CosetDigraph& cd, Side side)
{
  AtomAnalysis a{side, cd.degree(), subgroup_atom_scan(cd), {}, false, std::nullopt};
  for (const auto& c : a.candidates) {
    if (c.is_part)
      a.kappa_group = std::min(a.kappa_group, c.neighbor_count);
  }
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    const auto& c = a.candidates[i];
    if (c.is_part && c.neighbor_count == a.kappa_group)
      a.winning.push_back(i);
  }
  return a;
}

void settle_size_assumption(AtomAnalysis& a, std::size_t kappa, std::size_t n)
{
  a.size_assumption_ok = false;
  if (a.kappa_group != kappa)
    return;
  for (auto i : a.winning) {
    if (2 * a.candidates[i].vertex_set.size() <= n - kappa)
      a.size_assumption_ok = true;
  }
}

} // namespace

std::vector<AtomCandidate> subgroup_atom_scan(const CosetDigraph& cd)
{
  if (!is_strongly_connected(cd.graph()))
    throw PreconditionError("subgroup_atom_scan: coset digraph is disconnected");
  const auto& classes = cd.classes();
  const std::size_t m = classes.size();
  if (m > max_scan_generators)
    throw CapExceeded("subgroup_atom_scan: too many generators", max_scan_generators, m);
  const auto& group = cd.group();
  const std::size_t n = cd.vertices().size();

  std::vector<std::pair<std::uint32_t, AtomCandidate>> found;
  std::unordered_set<std::uint32_t> seen;
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u)
        gens.push_back(classes[i].generator);
    }
    auto k = subgroup_generated(group, cd.subgroup(), gens);
    if (k.order() == group->order())
      continue;
    std::uint32_t canon = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (k.contains(classes[i].generator))
        canon |= std::uint32_t{1} << i;
    }
    if (!seen.insert(canon).second)
      continue;

    AtomCandidate c{{}, {}, k, cosets_inside(cd, k), false, 0};
    std::vector<Permutation> s1;
    for (std::size_t i = 0; i < m; ++i) {
      if (canon >> i & 1u) {
        c.s0.push_back(i);
        c.s0_labels.push_back(classes[i].label);
      } else {
        s1.push_back(classes[i].generator);
      }
    }
    // K S1 H / H: since H <= K, the cosets k s H already cover it.
    std::vector<std::uint8_t> hit(n, 0);
    for (const auto& x : k.elements()) {
      for (const auto& s : s1) {
        const Vertex v = cd.vertex_of(compose(x, s));
        if (!hit[v]) {
          hit[v] = 1;
          ++c.neighbor_count;
        }
      }
    }
    c.is_part = c.vertex_set.size() + c.neighbor_count < n;

    const auto check = neighbor_set(cd.graph(), VertexSet(n, c.vertex_set));
    if (check.neighbors.size() != c.neighbor_count || check.is_part != c.is_part)
      throw InconsistencyError("neighbour count of <H,S0>/H disagrees with the digraph");
    found.emplace_back(canon, std::move(c));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AtomCandidate> out;
  for (auto& [mask, c] : found)
    out.push_back(std::move(c));
  return out;
}

GroupKappa kappa_group_theoretic(const CosetDigraph& cd, bool run_oracle)
{
  const auto t = transpose_spec(cd);
  GroupKappa r{0, analyse_side(cd, Side::forward), analyse_side(t, Side::transpose)};
  r.kappa = std::min(r.forward.kappa_group, r.transpose.kappa_group);
  const std::size_t n = cd.vertices().size();
  settle_size_assumption(r.forward, r.kappa, n);
  settle_size_assumption(r.transpose, r.kappa, n);
  if (cd.graph().is_complete()) {
    r.forward.size_assumption_ok = true;
    r.transpose.size_assumption_ok = true;
  }
  if (!r.forward.size_assumption_ok && !r.transpose.size_assumption_ok)
    throw InconsistencyError("no side has a minimum candidate of size at most (n - kappa)/2");
  if (run_oracle) {
    const auto oracle = vertex_connectivity(cd.graph()).value;
    r.forward.oracle_kappa = oracle;
    r.transpose.oracle_kappa = oracle;
    if (oracle != r.kappa)
      throw InconsistencyError("group-theoretic kappa " + std::to_string(r.kappa) +
                               " differs from flow kappa " + std::to_string(oracle));
  }
  return r;
}

AtomTheoryReport verify_atom_theory(const CosetDigraph& cd, std::size_t cap)
{
  const std::size_t n = cd.vertices().size();
  auto atoms = atoms_bruteforce(cd.graph(), Side::forward, cap);
  const std::size_t kappa = atoms.boundary;
  std::optional<CosetDigraph> transposed;
  if (2 * atoms.members.front().size() > n - kappa) {
    transposed = transpose_spec(cd);
    atoms = atoms_bruteforce(transposed->graph(), Side::transpose, cap);
    if (atoms.boundary != kappa)
      throw InconsistencyError("digraph and transpose have different kappa");
    if (2 * atoms.members.front().size() > n - kappa)
      throw InconsistencyError("atoms of both sides exceed (n - kappa)/2");
  }
  const CosetDigraph& w = transposed ? *transposed : cd;
  const auto& group = *w.group();
  const auto& h = w.subgroup();

  AtomTheoryReport r{};
  r.side = atoms.side;
  r.kappa = kappa;
  r.atom_size = atoms.members.front().size();
  r.atom_count = atoms.members.size();

  VertexSet covered(n);
  std::size_t total = 0;
  for (const auto& a : atoms.members) {
    covered |= a;
    total += a.size();
  }
  r.partition_ok = total == n && covered.size() == n;

  auto base = std::find_if(atoms.members.begin(), atoms.members.end(),
                           [&](const VertexSet& a) { return a.contains(w.base_vertex()); });
  if (base == atoms.members.end())
    throw InconsistencyError("no atom contains the base vertex");
  const VertexSet& a0 = *base;
  const auto a0_list = a0.to_vector();

  // Union of the cosets in A0, as group element indices.
  std::vector<std::uint8_t> in_union(group.order(), 0);
  std::vector<Permutation> uni;
  for (auto v : a0_list) {
    for (const auto& x : h.elements()) {
      auto p = compose(w.vertices()[v], x);
      in_union[group.require_index(p)] = 1;
      uni.push_back(std::move(p));
    }
  }
  bool closed = true;
  for (std::size_t i = 0; i < uni.size() && closed; ++i) {
    for (std::size_t j = 0; j < uni.size() && closed; ++j)
      closed = in_union[group.require_index(compose(uni[i], uni[j]))] != 0;
  }
  std::vector<Permutation> s0;
  std::vector<std::uint8_t> in_s0(w.classes().size(), 0);
  for (std::size_t i = 0; i < w.classes().size(); ++i) {
    const auto& c = w.classes()[i];
    if (in_union[group.require_index(c.generator)]) {
      s0.push_back(c.generator);
      r.s0_labels.push_back(c.label);
      in_s0[i] = 1;
    } else {
      r.d_s1 += c.degree;
    }
  }
  const auto k = subgroup_generated(w.group(), h, s0);
  r.subgroup_ok = closed && k.order() == uni.size() &&
                  std::all_of(k.members().begin(), k.members().end(),
                              [&](std::uint32_t i) { return in_union[i] != 0; });

  r.induced_edges_ok = true;
  for (auto u : a0_list) {
    const auto& outs = w.graph().out(u);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (a0.contains(outs[i]) && !in_s0[w.out_labels()[u][i]])
        r.induced_edges_ok = false;
    }
  }

  r.translates_ok = true;
  for (const auto& b : atoms.members) {
    const auto phi = left_translation(w, w.vertices()[b.to_vector().front()]);
    VertexSet image(n);
    for (auto v : a0_list)
      image.insert(phi[v]);
    if (!(image == b))
      r.translates_ok = false;
  }

  const auto nb = neighbor_set(w.graph(), a0);
  r.neighbor_count = nb.neighbors.size();
  if (r.neighbor_count != kappa)
    throw InconsistencyError("base atom does not have kappa neighbours");
  r.multiple_ok = r.neighbor_count % r.atom_size == 0;
  r.lower_bound_ok = r.neighbor_count >= std::max(r.atom_size, r.d_s1);
  r.smaller_than_degree_ok = w.degree() <= 1 || r.atom_size < w.degree();
  return r;
}

} // namespace cosetconn
