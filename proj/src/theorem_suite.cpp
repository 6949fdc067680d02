#include "cosetconn/theorem_suite.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "cosetconn/atom_analysis.hpp"
#include "cosetconn/error.hpp"

namespace cosetconn {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 8> theorem_names{{
  {TheoremId::decomposition, "decomposition"},
  {TheoremId::corollary1, "corollary1"},
  {TheoremId::corollary1_1, "corollary1_1"},
  {TheoremId::hierarchical_gen, "hierarchical_gen"},
  {TheoremId::hier1, "hier1"},
  {TheoremId::hierarchical_cayley, "hierarchical_cayley"},
  {TheoremId::hierarchical_gen_c, "hierarchical_gen_c"},
  {TheoremId::edgec, "edgec"},
}};

std::vector<std::size_t> resolve(const CosetDigraph& cd, const LabelSet& labels)
{
  std::vector<std::size_t> out;
  for (const auto& l : labels) {
    auto i = cd.class_index(l);
    if (!i)
      throw InputError("unknown generator label '" + l + "'");
    if (std::find(out.begin(), out.end(), *i) != out.end())
      throw InputError("generator label '" + l + "' listed twice");
    out.push_back(*i);
  }
  return out;
}

// Blocks must be non-empty, disjoint and cover every class.
std::vector<std::vector<std::size_t>> resolve_partition(const CosetDigraph& cd,
                                                        const std::vector<LabelSet>& blocks,
                                                        bool allow_empty)
{
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::uint8_t> seen(cd.classes().size(), 0);
  for (const auto& b : blocks) {
    if (b.empty() && !allow_empty)
      throw InputError("partition has an empty block");
    out.push_back(resolve(cd, b));
    for (auto i : out.back()) {
      if (seen[i])
        throw InputError("generator label '" + cd.classes()[i].label + "' appears in two blocks");
      seen[i] = 1;
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i])
      throw InputError("generator label '" + cd.classes()[i].label + "' is missing from the partition");
  }
  return out;
}

void require_connected(const CosetDigraph& cd)
{
  if (!is_strongly_connected(cd.graph()))
    throw PreconditionError("coset digraph is disconnected");
}

std::vector<Permutation> perms_of(const CosetDigraph& cd, const std::vector<std::size_t>& idx)
{
  std::vector<Permutation> out;
  for (auto i : idx)
    out.push_back(cd.classes()[i].generator);
  return out;
}

SubgroupHandle generated(const CosetDigraph& cd, const std::vector<std::size_t>& idx)
{
  return subgroup_generated(cd.group(), cd.subgroup(), perms_of(cd, idx));
}

std::size_t degree_sum(const CosetDigraph& cd, const std::vector<std::size_t>& idx)
{
  std::size_t d = 0;
  for (auto i : idx)
    d += cd.classes()[i].degree;
  return d;
}

std::string labels_of(const CosetDigraph& cd, const std::vector<std::size_t>& idx)
{
  std::string s;
  for (auto i : idx) {
    if (!s.empty())
      s += ", ";
    s += cd.classes()[i].label;
  }
  return s;
}

// G(<H, idx>, H, idx) as its own coset digraph.
CosetDigraph sub_digraph(const CosetDigraph& cd, const std::vector<std::size_t>& idx)
{
  CosetDigraphSpec spec;
  spec.degree = cd.spec().degree;
  spec.subgroup_generators = cd.spec().subgroup_generators;
  spec.group_generators = spec.subgroup_generators;
  for (auto i : idx) {
    spec.group_generators.push_back(cd.classes()[i].generator);
    spec.connection_set.push_back({cd.classes()[i].label, cd.classes()[i].generator});
  }
  spec.enumeration_cap = cd.spec().enumeration_cap;
  return build(spec);
}

std::size_t flow_kappa(const Digraph& g)
{
  return vertex_connectivity(g).value;
}

// K r K as a membership table over the parent group.
std::vector<std::uint8_t> double_coset_table(const SubgroupHandle& k, const Permutation& r)
{
  const auto& g = k.parent();
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<kernels::Image16> buf(k.order());
  for (const auto& x : k.images()) {
    kernels::compose_left(kernels::gather(x, r.image()), k.images(), buf);
    for (const auto& img : buf)
      in[g.require_index(Permutation::from_image_unchecked(g.degree(), img))] = 1;
  }
  return in;
}

// For r, s in `block` with K r K = K s K, <H,r> must equal <H,s>.
Hypothesis same_double_coset_condition(const CosetDigraph& cd, const SubgroupHandle& k,
                                       const std::vector<std::size_t>& block, std::string description)
{
  Hypothesis hyp{std::move(description), true, std::nullopt};
  std::vector<std::vector<std::uint8_t>> tables;
  for (auto i : block)
    tables.push_back(double_coset_table(k, cd.classes()[i].generator));
  for (std::size_t a = 0; a < block.size() && hyp.holds; ++a) {
    for (std::size_t b = a + 1; b < block.size() && hyp.holds; ++b) {
      if (tables[a] != tables[b])
        continue;
      if (!(generated(cd, {block[a]}) == generated(cd, {block[b]}))) {
        hyp.holds = false;
        hyp.witness = "(" + cd.classes()[block[a]].label + ", " + cd.classes()[block[b]].label +
                      "): same double coset of the smaller group, different <H,r> and <H,s>";
      }
    }
  }
  return hyp;
}

bool all_hold(const std::vector<Hypothesis>& hs)
{
  return std::all_of(hs.begin(), hs.end(), [](const Hypothesis& h) { return h.holds; });
}

struct OrderSearch {
  const CosetDigraph& cd;
  std::size_t m;
  std::unordered_map<std::uint32_t, std::size_t> orders;
  std::vector<std::uint8_t> dead;
  std::vector<std::size_t> path;
  std::vector<std::size_t> longest;

  std::size_t order_of(std::uint32_t mask)
  {
    auto it = orders.find(mask);
    if (it != orders.end())
      return it->second;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u)
        idx.push_back(i);
    }
    const auto o = generated(cd, idx).order();
    orders.emplace(mask, o);
    return o;
  }

  bool dfs(std::uint32_t mask, std::size_t current)
  {
    if (path.size() > longest.size())
      longest = path;
    if (path.size() == m)
      return true;
    if (dead[mask])
      return false;
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (mask & bit)
        continue;
      const auto o = order_of(mask | bit);
      if (o <= current)
        continue;
      path.push_back(i);
      if (dfs(mask | bit, o))
        return true;
      path.pop_back();
    }
    dead[mask] = 1;
    return false;
  }
};

// <H, s_1..s_i> strictly grows along `order`.
Hypothesis growing_chain(const CosetDigraph& cd, const std::vector<std::size_t>& order, bool with_h,
                         std::string description)
{
  Hypothesis hyp{std::move(description), true, std::nullopt};
  const auto base = with_h ? cd.subgroup() : SubgroupHandle::trivial(cd.group());
  std::size_t previous = base.order();
  for (std::size_t i = 1; i <= order.size(); ++i) {
    const std::vector<std::size_t> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
    const auto o = subgroup_generated(cd.group(), base, perms_of(cd, prefix)).order();
    if (o <= previous) {
      hyp.holds = false;
      hyp.witness = "G_" + std::to_string(i - 1) + " = G_" + std::to_string(i) + " (order " +
                    std::to_string(o) + ") after adding " + cd.classes()[order[i - 1]].label;
      break;
    }
    previous = o;
  }
  return hyp;
}

void conclude_optimal(const CosetDigraph& cd, HypothesisReport& r)
{
  r.applicable = all_hold(r.hypotheses);
  r.computed_kappa = flow_kappa(cd.graph());
  if (r.applicable) {
    r.implied_bound = cd.degree();
    r.consistent = *r.computed_kappa == cd.degree();
  }
}

} // namespace

std::string_view theorem_name(TheoremId id)
{
  for (const auto& [t, name] : theorem_names) {
    if (t == id)
      return name;
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name)
{
  for (const auto& [t, n] : theorem_names) {
    if (n == name)
      return t;
  }
  return std::nullopt;
}

HypothesisReport check_decomposition(const CosetDigraph& cd, const LabelSet& r1, const LabelSet& r2)
{
  const auto blocks = resolve_partition(cd, {r1, r2}, true);
  require_connected(cd);
  const auto& b1 = blocks[0];
  const auto& b2 = blocks[1];
  HypothesisReport r{TheoremId::decomposition, {}, false, std::nullopt, std::nullopt, std::nullopt, true, {}};

  const auto gp = generated(cd, b1);
  Hypothesis a{"G' = <H,R1> contains no element of R2", true, std::nullopt};
  for (auto i : b2) {
    if (gp.contains(cd.classes()[i].generator)) {
      a.holds = false;
      a.witness = cd.classes()[i].label + " lies in G'";
      break;
    }
  }
  r.hypotheses.push_back(std::move(a));
  r.hypotheses.push_back(same_double_coset_condition(
    cd, gp, b2, "r, s in R2 with G'rG' = G'sG' satisfy <H,r> = <H,s>"));
  r.applicable = all_hold(r.hypotheses);
  r.computed_kappa = flow_kappa(cd.graph());

  if (r.applicable) {
    const auto prime = sub_digraph(cd, b1);
    const std::size_t vp = prime.vertices().size();
    const std::size_t kp = flow_kappa(prime.graph());
    const std::size_t d2 = degree_sum(cd, b2);
    r.implied_bound = std::min(vp, kp + d2);
    r.details = {{"g_prime_vertices", std::to_string(vp)},
                 {"kappa_g_prime", std::to_string(kp)},
                 {"d_r2", std::to_string(d2)}};
    r.consistent = *r.computed_kappa >= *r.implied_bound;
  }
  return r;
}

HypothesisReport check_tower(const CosetDigraph& cd, const std::vector<LabelSet>& partition,
                             TowerVariant variant)
{
  if (partition.empty())
    throw InputError("partition has no blocks");
  const auto blocks = resolve_partition(cd, partition, false);
  require_connected(cd);
  const std::size_t k = blocks.size();
  HypothesisReport r{variant == TowerVariant::corollary1 ? TheoremId::corollary1 : TheoremId::corollary1_1,
                     {}, false, std::nullopt, std::nullopt, std::nullopt, true, {}};

  std::vector<SubgroupHandle> towers;
  std::vector<std::size_t> dcum;
  std::vector<std::size_t> upto;
  for (const auto& b : blocks) {
    upto.insert(upto.end(), b.begin(), b.end());
    towers.push_back(generated(cd, upto));
    dcum.push_back((dcum.empty() ? 0 : dcum.back()) + degree_sum(cd, b));
  }
  const std::size_t h_order = cd.subgroup().order();

  Hypothesis c1{"the subgroups G_i are distinct", true, std::nullopt};
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (towers[i + 1].order() == towers[i].order()) {
      c1.holds = false;
      c1.witness = "G_" + std::to_string(i + 1) + " = G_" + std::to_string(i + 2) + " (order " +
                   std::to_string(towers[i].order()) + ")";
      break;
    }
  }
  r.hypotheses.push_back(std::move(c1));

  Hypothesis c2{"r, s in S_{i+1} with G_i r G_i = G_i s G_i satisfy <H,r> = <H,s>", true, std::nullopt};
  for (std::size_t i = 0; i + 1 < k && c2.holds; ++i) {
    auto h = same_double_coset_condition(cd, towers[i], blocks[i + 1], c2.description);
    if (!h.holds) {
      c2.holds = false;
      c2.witness = "i = " + std::to_string(i + 1) + ": " + *h.witness;
    }
  }
  r.hypotheses.push_back(std::move(c2));

  const auto first = sub_digraph(cd, blocks[0]);
  const std::size_t k1 = flow_kappa(first.graph());
  Hypothesis c3{"kappa(G(G_1,H,S_1)) = d_1", k1 == dcum[0], std::nullopt};
  if (!c3.holds)
    c3.witness = "kappa = " + std::to_string(k1) + ", d_1 = " + std::to_string(dcum[0]);
  r.hypotheses.push_back(std::move(c3));

  if (variant == TowerVariant::corollary1) {
    Hypothesis c4{"|G_i/H| >= d_{i+1} for every i", true, std::nullopt};
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const auto idx = towers[i].order() / h_order;
      if (idx < dcum[i + 1]) {
        c4.holds = false;
        c4.witness = "|G_" + std::to_string(i + 1) + "/H| = " + std::to_string(idx) + " < d_" +
                     std::to_string(i + 2) + " = " + std::to_string(dcum[i + 1]);
        break;
      }
    }
    r.hypotheses.push_back(std::move(c4));
  } else {
    const auto idx = towers[0].order() / h_order;
    Hypothesis c4{"|G_1/H| >= d_2", k < 2 || idx >= dcum[1], std::nullopt};
    if (!c4.holds)
      c4.witness = "|G_1/H| = " + std::to_string(idx) + " < d_2 = " + std::to_string(dcum[1]);
    r.hypotheses.push_back(std::move(c4));
    Hypothesis c5{"d_{S_{i+1}} <= d_i for every i", true, std::nullopt};
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const auto step = dcum[i + 1] - dcum[i];
      if (step > dcum[i]) {
        c5.holds = false;
        c5.witness = "d_S" + std::to_string(i + 2) + " = " + std::to_string(step) + " > d_" +
                     std::to_string(i + 1) + " = " + std::to_string(dcum[i]);
        break;
      }
    }
    r.hypotheses.push_back(std::move(c5));
  }
  r.details = {{"kappa_g1", std::to_string(k1)}};
  conclude_optimal(cd, r);
  return r;
}

std::optional<std::vector<std::size_t>> hierarchical_order_search(const CosetDigraph& cd)
{
  const std::size_t m = cd.classes().size();
  if (m > max_scan_generators)
    throw CapExceeded("hierarchical_order_search: too many generators", max_scan_generators, m);
  OrderSearch s{cd, m, {}, std::vector<std::uint8_t>(std::size_t{1} << m, 0), {}, {}};
  if (s.dfs(0, cd.subgroup().order()))
    return s.path;
  return std::nullopt;
}

bool is_minimal(const CosetDigraph& cd)
{
  const std::size_t m = cd.classes().size();
  const auto full = cd.group()->order();
  for (std::size_t drop = 0; drop < m; ++drop) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != drop)
        rest.push_back(i);
    }
    if (generated(cd, rest).order() == full)
      return false;
  }
  return true;
}

HypothesisReport check_hierarchical_gen(const CosetDigraph& cd, const LabelSet& ordering,
                                        HierarchicalVariant variant)
{
  const auto order = resolve_partition(cd, {ordering}, false).front();
  require_connected(cd);
  HypothesisReport r{variant == HierarchicalVariant::standard ? TheoremId::hierarchical_gen : TheoremId::hier1,
                     {}, false, std::nullopt, std::nullopt, std::nullopt, true, {}};
  r.hypotheses.push_back(growing_chain(cd, order, true, "<H,s_1,...,s_i> are distinct (hierarchical)"));

  std::vector<std::size_t> dcum;
  for (auto i : order)
    dcum.push_back((dcum.empty() ? 0 : dcum.back()) + cd.classes()[i].degree);
  Hypothesis deg{"d_{s_{i+1}} <= d_i for every i", true, std::nullopt};
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto step = cd.classes()[order[i + 1]].degree;
    if (step > dcum[i]) {
      deg.holds = false;
      deg.witness = "d(" + cd.classes()[order[i + 1]].label + ") = " + std::to_string(step) + " > d_" +
                    std::to_string(i + 1) + " = " + std::to_string(dcum[i]);
      break;
    }
  }
  r.hypotheses.push_back(std::move(deg));

  const auto& s1 = cd.classes()[order[0]].generator;
  if (variant == HierarchicalVariant::standard) {
    const auto g1 = generated(cd, {order[0]}).order() / cd.subgroup().order();
    Hypothesis c{"|G_1/H| >= d_2", order.size() < 2 || g1 >= dcum[1], std::nullopt};
    if (!c.holds)
      c.witness = "|G_1/H| = " + std::to_string(g1) + " < d_2 = " + std::to_string(dcum[1]);
    r.hypotheses.push_back(std::move(c));
  } else {
    Hypothesis c{"H s_1^-1 H != H s_1 H", !in_double_coset(cd.subgroup(), s1, inverse(s1)), std::nullopt};
    if (!c.holds)
      c.witness = cd.classes()[order[0]].label + "^-1 lies in H " + cd.classes()[order[0]].label + " H";
    r.hypotheses.push_back(std::move(c));
  }
  conclude_optimal(cd, r);
  return r;
}

HypothesisReport verify_hierarchical_cayley(const CosetDigraph& cd)
{
  require_connected(cd);
  HypothesisReport r{TheoremId::hierarchical_cayley, {}, false, std::nullopt, std::nullopt, std::nullopt, true, {}};
  Hypothesis trivial{"H is trivial", cd.subgroup().order() == 1, std::nullopt};
  if (!trivial.holds)
    trivial.witness = "|H| = " + std::to_string(cd.subgroup().order());
  r.hypotheses.push_back(std::move(trivial));

  const std::size_t m = cd.classes().size();
  if (m > max_scan_generators)
    throw CapExceeded("hierarchical_order_search: too many generators", max_scan_generators, m);
  OrderSearch s{cd, m, {}, std::vector<std::uint8_t>(std::size_t{1} << m, 0), {}, {}};
  const bool found = s.dfs(0, cd.subgroup().order());
  Hypothesis hier{"some ordering of S is hierarchical", found, std::nullopt};
  if (found)
    r.details.emplace_back("ordering", labels_of(cd, s.path));
  else
    hier.witness = "longest growing chain: " + labels_of(cd, s.longest) + " (" +
                   std::to_string(s.longest.size()) + " of " + std::to_string(m) + " generators)";
  r.hypotheses.push_back(std::move(hier));
  conclude_optimal(cd, r);
  return r;
}

HypothesisReport check_hierarchical_gen_c(const CosetDigraph& cd, const LabelSet& s, const LabelSet& s_prime)
{
  const auto blocks = resolve_partition(cd, {s, s_prime}, true);
  const auto& sa = blocks[0];
  const auto& sb = blocks[1];
  if (sa.empty())
    throw InputError("S must not be empty");
  require_connected(cd);
  HypothesisReport r{TheoremId::hierarchical_gen_c, {}, false, std::nullopt, std::nullopt, std::nullopt, true, {}};

  Hypothesis trivial{"H is trivial", cd.subgroup().order() == 1, std::nullopt};
  if (!trivial.holds)
    trivial.witness = "|H| = " + std::to_string(cd.subgroup().order());
  r.hypotheses.push_back(std::move(trivial));

  Hypothesis inv{"S' is contained in S^-1", true, std::nullopt};
  for (auto j : sb) {
    const auto target = inverse(cd.classes()[j].generator);
    const bool ok = std::any_of(sa.begin(), sa.end(),
                                [&](std::size_t i) { return cd.classes()[i].generator == target; });
    if (!ok) {
      inv.holds = false;
      inv.witness = cd.classes()[j].label + " is not the inverse of an element of S";
      break;
    }
  }
  r.hypotheses.push_back(std::move(inv));

  Hypothesis ord{"every element of S' has order at least 3", true, std::nullopt};
  for (auto j : sb) {
    const auto o = order(cd.classes()[j].generator);
    if (o < 3) {
      ord.holds = false;
      ord.witness = cd.classes()[j].label + " has order " + std::to_string(o);
      break;
    }
  }
  r.hypotheses.push_back(std::move(ord));

  r.hypotheses.push_back(growing_chain(cd, sa, false, "G(G,{e},S) is hierarchical in the given order"));

  const std::vector<std::size_t> first_two(sa.begin(), sa.begin() + std::min<std::ptrdiff_t>(2, sa.size()));
  const auto o12 = subgroup_generated(cd.group(), perms_of(cd, first_two)).order();
  Hypothesis four{"|<s_1,s_2>| != 4", o12 != 4, std::nullopt};
  if (!four.holds)
    four.witness = "<" + labels_of(cd, first_two) + "> has order 4";
  r.hypotheses.push_back(std::move(four));
  r.details.emplace_back("order_s1_s2", std::to_string(o12));
  conclude_optimal(cd, r);
  return r;
}

HypothesisReport verify_edge_connectivity(const CosetDigraph& cd, std::size_t cap)
{
  const bool connected = is_strongly_connected(cd.graph());
  if (!connected)
    throw PreconditionError("coset digraph is disconnected");
  HypothesisReport r{TheoremId::edgec, {}, true, cd.degree(), std::nullopt, std::nullopt, true, {}};
  r.hypotheses.push_back({"the coset digraph is connected", true, std::nullopt});
  const auto lambda = edge_connectivity(cd.graph()).value;
  r.computed_lambda = lambda;
  bool singletons = lambda == cd.degree();
  const std::size_t n = cd.vertices().size();
  if (n >= 2 && n <= std::min(cap, max_bruteforce_cap)) {
    const auto atoms = e_atoms_bruteforce(cd.graph(), Side::forward, cap);
    singletons = atoms.boundary == lambda && atoms.members.size() == n &&
                 std::all_of(atoms.members.begin(), atoms.members.end(),
                             [](const VertexSet& a) { return a.size() == 1; });
    r.details.emplace_back("e_atoms", singletons ? "singletons (exhaustive)" : "not all singletons");
  } else {
    r.details.emplace_back("e_atoms", singletons ? "singletons (lambda equals degree)" : "not all singletons");
  }
  r.consistent = lambda == cd.degree() && singletons;
  return r;
}

} // namespace cosetconn
