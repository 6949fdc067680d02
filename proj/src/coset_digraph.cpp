#include "cosetconn/coset_digraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "cosetconn/error.hpp"

namespace cosetconn {

Vertex CosetDigraph::vertex_of(const Permutation& g) const
{
  return cosets_.coset_of[group_->require_index(g)];
}

std::optional<std::size_t> CosetDigraph::class_index(std::string_view label) const
{
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].label == label)
      return i;
  }
  return std::nullopt;
}

const EdgeClass& CosetDigraph::edge_class(std::string_view label) const
{
  auto i = class_index(label);
  if (!i)
    throw InputError("unknown generator label '" + std::string(label) + "'");
  return classes_[*i];
}

std::vector<Permutation> CosetDigraph::generators() const
{
  std::vector<Permutation> out;
  for (const auto& c : classes_)
    out.push_back(c.generator);
  return out;
}

std::vector<std::size_t> dedupe_generator_indices(const SubgroupHandle& h,
                                                  std::span<const Permutation> s)
{
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (h.contains(s[i]))
      throw InputError("connection element " + print_cycles(s[i]) + " lies in H");
    const bool seen = std::any_of(kept.begin(), kept.end(),
                                  [&](std::size_t j) { return in_double_coset(h, s[j], s[i]); });
    if (!seen)
      kept.push_back(i);
  }
  return kept;
}

std::vector<Permutation> dedupe_generators(const SubgroupHandle& h, std::span<const Permutation> s)
{
  std::vector<Permutation> out;
  for (auto i : dedupe_generator_indices(h, s))
    out.push_back(s[i]);
  return out;
}

CosetDigraph build(const CosetDigraphSpec& spec)
{
  if (spec.degree == 0 || spec.degree > Permutation::max_degree)
    throw InputError("degree must be between 1 and " + std::to_string(Permutation::max_degree));
  auto check_degree = [&](const Permutation& p, const char* what) {
    if (p.degree() != spec.degree)
      throw InputError(std::string(what) + " " + print_cycles(p) + " has degree " +
                       std::to_string(p.degree()) + ", expected " + std::to_string(spec.degree));
  };
  for (const auto& p : spec.group_generators)
    check_degree(p, "group generator");
  for (const auto& p : spec.subgroup_generators)
    check_degree(p, "subgroup generator");
  std::unordered_set<std::string> labels;
  for (const auto& lp : spec.connection_set) {
    check_degree(lp.perm, "connection element");
    if (lp.label.empty())
      throw InputError("empty generator label");
    if (!labels.insert(lp.label).second)
      throw InputError("duplicate generator label '" + lp.label + "'");
  }

  CosetDigraph cd;
  cd.spec_ = spec;
  cd.group_ = GroupContext::enumerate(spec.degree, spec.group_generators, spec.enumeration_cap);
  const auto& g = *cd.group_;
  for (const auto& p : spec.subgroup_generators) {
    if (!g.contains(p))
      throw InputError("subgroup generator " + print_cycles(p) + " is not in G");
  }
  cd.subgroup_ = subgroup_generated(cd.group_, spec.subgroup_generators);
  const auto& h = *cd.subgroup_;

  std::vector<Permutation> perms;
  for (const auto& lp : spec.connection_set) {
    if (!g.contains(lp.perm))
      throw InputError("connection element '" + lp.label + "' = " + print_cycles(lp.perm) + " is not in G");
    perms.push_back(lp.perm);
  }
  const auto kept = dedupe_generator_indices(h, perms);
  for (std::size_t i = 0, k = 0; i < perms.size(); ++i) {
    if (k < kept.size() && kept[k] == i)
      ++k;
    else
      cd.dropped_.push_back(spec.connection_set[i].label);
  }

  cd.cosets_ = left_cosets(g, h);
  const std::size_t n = cd.cosets_.reps.size();
  for (auto i : kept) {
    const auto& lp = spec.connection_set[i];
    EdgeClass ec{lp.label, lp.perm, double_coset_index(h, lp.perm), double_coset_left_reps(h, lp.perm), {}};
    if (ec.coset_reps.size() != ec.degree)
      throw InconsistencyError("coset count in HsH disagrees with d_s for '" + lp.label + "'");
    cd.degree_ += ec.degree;
    cd.classes_.push_back(std::move(ec));
  }

  std::vector<std::vector<Vertex>> adjacency(n);
  cd.out_labels_.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    const auto& rep = cd.cosets_.reps[u];
    for (std::uint32_t c = 0; c < cd.classes_.size(); ++c) {
      auto& ec = cd.classes_[c];
      for (const auto& r : ec.coset_reps) {
        const Vertex v = cd.vertex_of(compose(rep, r));
        adjacency[u].push_back(v);
        cd.out_labels_[u].push_back(c);
        ec.edges.emplace_back(u, v);
      }
    }
  }
  try {
    cd.graph_ = Digraph(n, std::move(adjacency));
  } catch (const InputError& e) {
    // Loops or repeated targets cannot arise from valid input; reaching here
    // means the coset arithmetic is wrong.
    throw InconsistencyError(std::string("built coset digraph is not simple: ") + e.what());
  }
  return cd;
}

GenerationConnectivity generation_connectivity(const CosetDigraph& cd)
{
  const auto perms = cd.generators();
  auto k = subgroup_generated(cd.group(), cd.subgroup(), perms);
  const auto big = left_cosets(*cd.group(), k);

  std::vector<std::vector<Vertex>> components(big.reps.size());
  for (Vertex v = 0; v < cd.vertices().size(); ++v)
    components[big.coset_of[cd.group()->require_index(cd.vertices()[v])]].push_back(v);
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  if (components != strongly_connected_components(cd.graph()))
    throw InconsistencyError("components from cosets of <H,S> differ from the digraph's SCCs");
  const bool connected = k.order() == cd.group()->order();
  if (connected != (components.size() == 1))
    throw InconsistencyError("<H,S> = G disagrees with the component count");
  return {connected, std::move(k), std::move(components)};
}

std::vector<Vertex> left_translation(const CosetDigraph& cd, const Permutation& g)
{
  cd.group()->require_index(g);
  std::vector<Vertex> phi(cd.vertices().size());
  for (Vertex v = 0; v < phi.size(); ++v)
    phi[v] = cd.vertex_of(compose(g, cd.vertices()[v]));
  return phi;
}

bool verify_automorphism(const CosetDigraph& cd, const Permutation& g)
{
  const auto phi = left_translation(cd, g);
  const auto& graph = cd.graph();
  std::vector<std::uint8_t> hit(phi.size(), 0);
  for (auto v : phi) {
    if (hit[v])
      return false;
    hit[v] = 1;
  }
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    const auto& outs = graph.out(u);
    const auto& image_outs = graph.out(phi[u]);
    const auto& image_labels = cd.out_labels()[phi[u]];
    if (outs.size() != image_outs.size())
      return false;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      auto it = std::find(image_outs.begin(), image_outs.end(), phi[outs[i]]);
      if (it == image_outs.end())
        return false;
      if (image_labels[static_cast<std::size_t>(it - image_outs.begin())] != cd.out_labels()[u][i])
        return false;
    }
  }
  return true;
}

namespace {

std::string inverse_label(const std::string& label)
{
  constexpr std::string_view suffix = "^-1";
  if (label.size() > suffix.size() && label.ends_with(suffix))
    return label.substr(0, label.size() - suffix.size());
  return label + std::string(suffix);
}

std::vector<std::vector<Vertex>> sorted_adjacency(const Digraph& g)
{
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    adj[u] = g.out(u);
    std::sort(adj[u].begin(), adj[u].end());
  }
  return adj;
}

} // namespace

CosetDigraph transpose_spec(const CosetDigraph& cd)
{
  CosetDigraphSpec spec = cd.spec();
  spec.connection_set.clear();
  for (const auto& c : cd.classes())
    spec.connection_set.push_back({inverse_label(c.label), inverse(c.generator)});
  auto t = build(spec);
  if (t.vertices() != cd.vertices() || sorted_adjacency(t.graph()) != sorted_adjacency(transpose(cd.graph())))
    throw InconsistencyError("coset digraph on S^-1 is not the transpose");
  return t;
}

} // namespace cosetconn
