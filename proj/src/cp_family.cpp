#include "cosetconn/cp_family.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cosetconn/error.hpp"

namespace cosetconn {

namespace {

std::size_t factorial(std::size_t m)
{
  std::size_t f = 1;
  for (std::size_t i = 2; i <= m; ++i)
    f *= i;
  return f;
}

std::vector<Permutation> stabiliser_generators(const CPParams& p)
{
  std::vector<Permutation> gens;
  for (unsigned i = p.n - p.k + 1; i < p.n; ++i) {
    std::vector<unsigned> img(p.n);
    std::iota(img.begin(), img.end(), 1u);
    std::swap(img[i - 1], img[i]);
    gens.push_back(Permutation::from_one_line(img));
  }
  return gens;
}

} // namespace

Permutation gamma(unsigned k, unsigned n)
{
  if (n > Permutation::max_degree || k < 2 || k > n)
    throw InputError("gamma(" + std::to_string(k) + ") needs 2 <= k <= n <= 16, n = " + std::to_string(n));
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 1u);
  img[0] = k;
  for (unsigned i = 2; i <= k; ++i)
    img[i - 1] = i - 1;
  return Permutation::from_one_line(img);
}

std::string gamma_label(unsigned j)
{
  return "γ(" + std::to_string(j) + ")";
}

void validate(const CPParams& p)
{
  if (p.n < 2 || p.n > Permutation::max_degree)
    throw InputError("CP(n,k) needs 2 <= n <= 16, got n = " + std::to_string(p.n));
  if (p.k < 1 || p.k > p.n - 1)
    throw InputError("CP(n,k) needs 1 <= k <= n-1, got k = " + std::to_string(p.k));
}

CosetDigraphSpec cp_spec(const CPParams& p, std::size_t enumeration_cap)
{
  validate(p);
  std::vector<unsigned> cycle(p.n);
  for (unsigned i = 0; i < p.n; ++i)
    cycle[i] = (i + 1) % p.n + 1;
  CosetDigraphSpec spec;
  spec.degree = p.n;
  spec.group_generators = {gamma(2, p.n), Permutation::from_one_line(cycle)};
  spec.subgroup_generators = stabiliser_generators(p);
  for (unsigned j = 2; j <= p.n - p.k + 1; ++j)
    spec.connection_set.push_back({gamma_label(j), gamma(j, p.n)});
  spec.enumeration_cap = enumeration_cap;
  return spec;
}

CosetDigraph cp_build(const CPParams& p, std::size_t enumeration_cap)
{
  auto cd = build(cp_spec(p, enumeration_cap));
  const auto& h = cd.subgroup();
  if (h.order() != factorial(p.k))
    throw InconsistencyError("H_k has order " + std::to_string(h.order()) + ", expected k!");
  for (const auto& x : h.elements()) {
    for (unsigned i = 1; i <= p.n - p.k; ++i) {
      if (x(i) != i)
        throw InconsistencyError("H_k element " + print_cycles(x) + " moves a prefix point");
    }
  }
  return cd;
}

DegreeProfile cp_degree_profile(const CosetDigraph& cd)
{
  DegreeProfile out;
  for (const auto& c : cd.classes())
    out.emplace_back(c.label, c.degree);
  return out;
}

DegreeProfile cp_expected_profile(const CPParams& p)
{
  validate(p);
  DegreeProfile out;
  for (unsigned j = 2; j <= p.n - p.k; ++j)
    out.emplace_back(gamma_label(j), 1);
  out.emplace_back(gamma_label(p.n - p.k + 1), p.k);
  return out;
}

SubgroupHandle cp_prefix_group(const CosetDigraph& cd, const CPParams& p)
{
  std::vector<Permutation> gens;
  for (unsigned j = 2; j <= p.n - p.k; ++j)
    gens.push_back(gamma(j, p.n));
  return subgroup_generated(cd.group(), cd.subgroup(), gens);
}

bool verify_neighbor_multiplier(const CosetDigraph& cd, const CPParams& p, const SubgroupHandle& f)
{
  if (f.parent_ptr() != cd.group())
    throw InputError("F belongs to a different group");
  const auto prefix = cp_prefix_group(cd, p);
  if (!cd.subgroup().is_subgroup_of(f) || !f.is_subgroup_of(prefix))
    throw InputError("F must lie between H and G'");
  const auto last = gamma(p.n - p.k + 1, p.n);
  std::vector<std::uint8_t> hit(cd.vertices().size(), 0);
  std::size_t count = 0;
  for (const auto& x : f.elements()) {
    const Vertex v = cd.vertex_of(compose(x, last));
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  }
  return count == f.order() / cd.subgroup().order() * p.k;
}

bool labeled_bfs_isomorphic(const CosetDigraph& a, const CosetDigraph& b)
{
  const std::size_t n = a.vertices().size();
  if (n != b.vertices().size() || a.classes().size() != b.classes().size())
    return false;
  // Class i of a corresponds to class label_map[i] of b.
  std::vector<std::uint32_t> label_map;
  for (const auto& c : a.classes()) {
    auto j = b.class_index(c.label);
    if (!j || c.degree != 1 || b.classes()[*j].degree != 1)
      return false;
    label_map.push_back(static_cast<std::uint32_t>(*j));
  }
  auto follow = [](const CosetDigraph& cd, Vertex u, std::uint32_t cls) {
    const auto& labels = cd.out_labels()[u];
    auto it = std::find(labels.begin(), labels.end(), cls);
    return cd.graph().out(u)[static_cast<std::size_t>(it - labels.begin())];
  };

  constexpr auto unset = static_cast<Vertex>(-1);
  std::vector<Vertex> map(n, unset);
  std::vector<std::uint8_t> used(n, 0);
  map[a.base_vertex()] = b.base_vertex();
  used[b.base_vertex()] = 1;
  std::deque<Vertex> queue{a.base_vertex()};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (std::uint32_t c = 0; c < label_map.size(); ++c) {
      const Vertex v = follow(a, u, c);
      const Vertex w = follow(b, map[u], label_map[c]);
      if (map[v] == unset) {
        if (used[w])
          return false;
        map[v] = w;
        used[w] = 1;
        queue.push_back(v);
      } else if (map[v] != w) {
        return false;
      }
    }
  }
  return std::all_of(map.begin(), map.end(), [](Vertex v) { return v != unset; });
}

PrefixStructureReport verify_prefix_structure(const CPParams& p, std::size_t enumeration_cap)
{
  validate(p);
  if (!(1 < p.k && p.k < p.n - 1))
    throw PreconditionError("prefix structure needs 1 < k < n-1");
  const auto cd = cp_build(p, enumeration_cap);
  const auto& h = cd.subgroup();

  PrefixStructureReport r{};
  for (unsigned j = 2; j <= p.n - p.k; ++j) {
    if (!normalizes(gamma(j, p.n), h))
      r.non_normalizing.push_back(gamma_label(j));
  }
  const auto prefix = cp_prefix_group(cd, p);
  r.prefix_vertex_count = prefix.order() / h.order();
  r.expected_vertex_count = factorial(p.n - p.k);

  const Permutation last = gamma(p.n - p.k + 1, p.n);
  r.last_generates = subgroup_generated(cd.group(), h, std::span(&last, 1)).order() == cd.group()->order();

  CosetDigraphSpec spec;
  spec.degree = p.n;
  spec.subgroup_generators = cd.spec().subgroup_generators;
  spec.group_generators = spec.subgroup_generators;
  for (unsigned j = 2; j <= p.n - p.k; ++j) {
    spec.group_generators.push_back(gamma(j, p.n));
    spec.connection_set.push_back({gamma_label(j), gamma(j, p.n)});
  }
  spec.enumeration_cap = enumeration_cap;
  const auto prime = build(spec);
  const auto small = cp_build({p.n - p.k, 1}, enumeration_cap);
  r.isomorphic = labeled_bfs_isomorphic(prime, small);
  return r;
}

} // namespace cosetconn
