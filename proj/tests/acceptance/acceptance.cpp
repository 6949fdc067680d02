// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cosetconn/atom_analysis.hpp"
#include "cosetconn/cp_family.hpp"
#include "cosetconn/error.hpp"
#include "cosetconn/report.hpp"
#include "cosetconn/spec_document.hpp"
#include "cosetconn/theorem_suite.hpp"
#include "support/corpus.hpp"

using namespace cosetconn;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::size_t atom_cap = 24;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures; everything computed is also written to `log`, which
// the determinism criterion compares across two runs.
struct Check {
  std::ostream& log;
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what)
  {
    ++checks;
    log << (ok ? "ok " : "FAILED ") << what << '\n';
    if (!ok)
      failures.push_back(what);
  }
  template <class T, class U>
  void equal(const T& got, const U& want, const std::string& what)
  {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    expect(got == want, s.str());
  }
};

std::string show(const VertexSet& s)
{
  std::string out = "{";
  for (auto v : s.to_vector())
    out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::size_t factorial(unsigned n)
{
  std::size_t f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::vector<corpus::Named> full_corpus()
{
  auto c = corpus::connected_corpus();
  c.push_back({"worked example n=5", corpus::worked_example(5)});
  c.push_back({"Z2^2", corpus::z2_squared()});
  c.push_back({"Z4", corpus::z4()});
  c.push_back({"CP(6,2)", cp_spec({6, 2})});
  return c;
}

VertexSet vertices_of(const CosetDigraph& cd, std::initializer_list<Permutation> elems)
{
  VertexSet s(cd.vertices().size());
  for (const auto& g : elems)
    s.insert(cd.vertex_of(g));
  return s;
}

// 1. the worked example
void worked_example(Check& c)
{
  for (unsigned n : {4u, 5u}) {
    const auto t0 = Clock::now();
    const std::string tag = "n=" + std::to_string(n) + " ";
    const auto cd = build(corpus::worked_example(n));
    const auto star = transpose_spec(cd);
    const auto kappa = vertex_connectivity(cd.graph()).value;
    c.equal(kappa, 2u, tag + "kappa");

    const Permutation e(n);
    const auto a = corpus::P("(1 2)", n);
    const auto b = cd.edge_class("b").generator;
    const auto ba = compose(b, a);
    const auto bi = inverse(b);
    const auto ab = compose(a, b);
    const auto aba = compose(ab, a);
    const auto abi = compose(a, bi);
    const auto ea = vertices_of(cd, {e, a});

    const auto atoms = atoms_containing(star.graph(), cd.vertex_of(e), kappa, cd.vertices().size());
    c.equal(atoms.size(), 1u, tag + "transpose-side atoms through e");
    if (!atoms.empty())
      c.equal(show(atoms.front()), show(ea), tag + "transpose-side atom through e");
    if (n == 4) {
      const auto all = atoms_bruteforce(star.graph(), Side::transpose, atom_cap);
      c.equal(all.boundary, 2u, tag + "exhaustive transpose-side kappa");
      bool found = false;
      for (const auto& m : all.members)
        found = found || (m.contains(0) && m == ea);
      c.expect(found, tag + "exhaustive scan finds {e,a}");
    }

    const auto eo = vertices_of(cd, {e});
    c.equal(show(neighbor_set(cd.graph(), eo).neighbors), show(vertices_of(cd, {a, b, ba})), tag + "N_1");
    c.equal(show(neighbor_set(star.graph(), eo).neighbors), show(vertices_of(cd, {a, bi, abi})), tag + "N*_1");
    c.equal(show(neighbor_set(cd.graph(), ea).neighbors), show(vertices_of(cd, {b, ba, ab, aba})), tag + "N_2");
    c.equal(show(neighbor_set(star.graph(), ea).neighbors), show(vertices_of(cd, {bi, abi})), tag + "N*_2");
    c.expect(seconds_since(t0) < 5.0, tag + "runtime under 5 s");
  }
}

// 2. the cycle-prefix family
void cp_family(Check& c)
{
  const auto t0 = Clock::now();
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      const CPParams p{n, k};
      const std::string tag = "CP(" + std::to_string(n) + "," + std::to_string(k) + ") ";
      const auto cd = cp_build(p);
      c.equal(cd.vertices().size(), factorial(n) / factorial(k), tag + "|V|");
      c.expect(cp_degree_profile(cd) == cp_expected_profile(p), tag + "degree profile");
      c.equal(vertex_connectivity(cd.graph()).value, n - 1, tag + "kappa");
      c.equal(edge_connectivity(cd.graph()).value, n - 1, tag + "lambda");
    }
  }
  c.expect(seconds_since(t0) < 120.0, "runtime under 2 min");
}

// 3. group-theoretic kappa against the flow oracle
void oracle_equivalence(Check& c)
{
  const auto t0 = Clock::now();
  const auto instances = corpus::connected_corpus();
  c.expect(instances.size() >= 15, "corpus has at least 15 instances");
  for (const auto& [name, spec] : instances) {
    const auto cd = build(spec);
    const auto oracle = vertex_connectivity(cd.graph()).value;
    const auto gk = kappa_group_theoretic(cd, false);
    c.equal(gk.kappa, oracle, name + " kappa");
  }
  c.expect(seconds_since(t0) < 120.0, "runtime under 2 min");
}

// 4. lambda = degree, e-atoms are singletons
void edge_connectivity_thm(Check& c)
{
  auto instances = full_corpus();
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned k = 1; k < n; ++k)
      instances.push_back({"CP(" + std::to_string(n) + "," + std::to_string(k) + ")", cp_spec({n, k})});
  }
  for (const auto& [name, spec] : instances) {
    const auto cd = build(spec);
    const auto lambda = edge_connectivity(cd.graph()).value;
    c.equal(lambda, cd.degree(), name + " lambda");
    const std::size_t n = cd.vertices().size();
    if (n <= atom_cap) {
      const auto atoms = e_atoms_bruteforce(cd.graph(), Side::forward, atom_cap);
      const bool singletons = atoms.members.size() == n && atoms.members.front().size() == 1;
      c.expect(singletons, name + " e-atoms are the " + std::to_string(n) + " singletons (exhaustive)");
    } else {
      // every singleton already has exactly d = lambda leaving edges
      c.expect(lambda == cd.graph().min_out_degree(), name + " e-atoms are singletons (lambda = out-degree)");
    }
  }
}

// 5. hierarchical Cayley digraphs
void hierarchical(Check& c)
{
  std::vector<corpus::Named> candidates{
    {"CP(3,1)", cp_spec({3, 1})},       {"CP(4,1)", cp_spec({4, 1})},
    {"CP(5,1)", cp_spec({5, 1})},       {"CP(6,1)", cp_spec({6, 1})},
    {"Z2^3", corpus::z2_cubed()},       {"Z2^2", corpus::z2_squared()},
    {"S4 {t,c}", corpus::s4_transposition_cycle()},
    {"S4 adjacent", corpus::s4_adjacent()},
    {"Q8 {i,j}", corpus::q8()},         {"D4", corpus::d4()},
    {"D5", corpus::d5()},               {"S3", corpus::s3()},
    {"Z4", corpus::z4()},
  };
  std::size_t verified = 0;
  for (const auto& [name, spec] : candidates) {
    const auto cd = build(spec);
    if (!hierarchical_order_search(cd))
      continue;
    const auto r = verify_hierarchical_cayley(cd);
    c.expect(r.applicable, name + " hypotheses hold");
    c.equal(r.computed_kappa.value_or(0), cd.classes().size(), name + " kappa = |S|");
    ++verified;
  }
  c.expect(verified >= 6, "at least 6 hierarchical Cayley digraphs (" + std::to_string(verified) + ")");
}

// 6. decomposition bound
void decomposition(Check& c)
{
  std::size_t applicable = 0;
  for (const auto& [name, spec] : full_corpus()) {
    const auto cd = build(spec);
    LabelSet labels;
    for (const auto& cl : cd.classes())
      labels.push_back(cl.label);
    std::set<std::pair<LabelSet, LabelSet>> splits;
    for (std::size_t i = 0; i <= labels.size(); ++i) {
      splits.insert({LabelSet(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i)),
                     LabelSet(labels.begin() + static_cast<std::ptrdiff_t>(i), labels.end())});
      if (i < labels.size()) {
        LabelSet rest;
        for (std::size_t j = 0; j < labels.size(); ++j) {
          if (j != i)
            rest.push_back(labels[j]);
        }
        splits.insert({rest, {labels[i]}});
      }
    }
    for (const auto& [r1, r2] : splits) {
      const auto r = check_decomposition(cd, r1, r2);
      if (!r.applicable)
        continue;
      ++applicable;
      c.expect(r.consistent && *r.computed_kappa >= *r.implied_bound,
               name + " R2=" + std::to_string(r2.size()) + " labels: kappa " +
                 std::to_string(*r.computed_kappa) + " >= bound " + std::to_string(*r.implied_bound));
    }
  }
  c.expect(applicable > 0, std::to_string(applicable) + " applicable invocations");
  const auto r = check_decomposition(cp_build({5, 2}), {"γ(2)", "γ(3)"}, {"γ(4)"});
  c.expect(r.applicable, "CP(5,2) hypotheses hold");
  c.equal(r.implied_bound.value_or(0), 4u, "CP(5,2) bound");
  c.equal(r.computed_kappa.value_or(0), 4u, "CP(5,2) kappa");
}

// 7. |HsH/H| = |H| / |H ∩ sHs^-1|
void coset_index(Check& c)
{
  std::mt19937 rng(314159);
  std::size_t pairs = 0;
  for (unsigned n = 3; n <= 6; ++n) {
    std::string cyc = "(";
    for (unsigned i = 1; i <= n; ++i)
      cyc += std::to_string(i) + (i < n ? " " : ")");
    auto g = GroupContext::enumerate(n, {corpus::P("(1 2)", n), corpus::P(cyc, n)});
    auto pick = [&] { return g->element(static_cast<std::uint32_t>(rng() % g->order())); };
    for (int t = 0; t < 30; ++t) {
      std::vector<Permutation> gens{pick()};
      if (t % 2 == 1)
        gens.push_back(pick());
      const auto h = subgroup_generated(g, gens);
      const auto s = pick();
      std::size_t meet = 0;
      for (const auto& x : h.elements())
        meet += h.contains(conjugate(x, s)) ? 1 : 0;
      const auto hsh = double_coset(h, s).size();
      const bool ok = hsh % h.order() == 0 && hsh / h.order() == h.order() / meet &&
                      double_coset_left_reps(h, s).size() == h.order() / meet &&
                      double_coset_index(h, s) == h.order() / meet;
      c.expect(ok, "S_" + std::to_string(n) + " |H|=" + std::to_string(h.order()) + " s=" + print_cycles(s) +
                     " d_s=" + std::to_string(hsh / h.order()));
      ++pairs;
    }
  }
  c.expect(pairs >= 100, std::to_string(pairs) + " pairs");
}

// 8. atom structure
void atom_structure(Check& c)
{
  std::mt19937 rng(2718);
  for (const auto& [name, spec] : full_corpus()) {
    const auto cd = build(spec);
    const std::size_t n = cd.vertices().size();
    if (n > atom_cap || cd.graph().is_complete())
      continue;
    const auto rep = verify_atom_theory(cd, atom_cap);
    c.expect(rep.partition_ok, name + " atoms partition V");
    c.expect(rep.subgroup_ok && rep.translates_ok, name + " base atom is <H,S0>/H and atoms are its translates");
    c.expect(rep.multiple_ok, name + " |N(A0)| multiple of |A0|");
    c.expect(rep.lower_bound_ok, name + " |N(A0)| >= max(|A0|, d_S1)");
    c.expect(rep.all_ok(), name + " all structure checks");

    const auto star = transpose_spec(cd);
    const auto& g = rep.side == Side::forward ? cd.graph() : star.graph();
    const auto atoms = atoms_bruteforce(g, rep.side, atom_cap);
    std::size_t simplec = 0;
    bool simplec_ok = true;
    for (const auto& a : atoms.members) {
      const auto na = neighbor_set(g, a).neighbors;
      for (int t = 0; t < 40; ++t) {
        VertexSet b(n);
        for (Vertex v = 0; v < n; ++v) {
          if (rng() % 3 == 0)
            b.insert(v);
        }
        const auto nb = neighbor_set(g, b);
        if (b.empty() || !nb.is_part || !a.intersects(b) || a.is_subset_of(b))
          continue;
        ++simplec;
        simplec_ok = simplec_ok && (na - (b | nb.neighbors)).size() < (nb.neighbors & a).size();
      }
    }
    c.expect(simplec_ok, name + " simplec inequality on " + std::to_string(simplec) + " sampled pairs");

    const auto lambda = edge_connectivity(cd.graph()).value;
    const auto eatoms = e_atoms_bruteforce(cd.graph(), Side::forward, atom_cap);
    std::vector<VertexSet> bs;
    for (Vertex v = 0; v < n; ++v) {
      auto b = VertexSet::full(n);
      b.erase(v);
      bs.push_back(std::move(b));
    }
    for (int t = 0; t < 400; ++t) {
      VertexSet b(n);
      for (Vertex v = 0; v < n; ++v) {
        if (rng() % 2 == 0)
          b.insert(v);
      }
      if (!b.empty() && b.size() < n && out_edge_count(cd.graph(), b) == lambda)
        bs.push_back(std::move(b));
    }
    bool eatom_ok = true;
    std::size_t eatom_pairs = 0;
    for (const auto& a : eatoms.members) {
      for (const auto& b : bs) {
        if (out_edge_count(cd.graph(), b) != lambda)
          continue;
        ++eatom_pairs;
        eatom_ok = eatom_ok && (a.is_subset_of(b) || !a.intersects(b) || (a | b).size() == n);
      }
    }
    c.expect(eatom_ok, name + " e-atom lemma on " + std::to_string(eatom_pairs) + " pairs");
  }
}

// 9. vertex transitivity and connectivity by generation
void transitivity(Check& c)
{
  std::mt19937 rng(1618);
  auto instances = full_corpus();
  instances.push_back({"Z6 by squares", corpus::z6_disconnected()});
  for (const auto& [name, spec] : instances) {
    const auto cd = build(spec);
    const auto& g = *cd.group();
    bool autos = verify_automorphism(cd, Permutation(spec.degree));
    for (int t = 0; t < 8; ++t)
      autos = autos && verify_automorphism(cd, g.element(static_cast<std::uint32_t>(rng() % g.order())));
    c.expect(autos, name + " sampled left translations are automorphisms");

    const auto gen = generation_connectivity(cd);
    const bool strong = is_strongly_connected(cd.graph());
    c.expect(gen.connected == strong && strong == (gen.generated.order() == g.order()),
             name + " strongly connected iff <H,S> = G (" + (strong ? "connected" : "disconnected") + ")");
  }

  const auto z6 = build(corpus::z6_disconnected());
  const auto gen = generation_connectivity(z6);
  c.equal(gen.components.size(), 2u, "Z6 component count");
  bool cosets = gen.components == strongly_connected_components(z6.graph());
  for (const auto& comp : gen.components) {
    const auto& x = z6.vertices()[comp.front()];
    std::set<Vertex> want;
    for (const auto& k : gen.generated.elements())
      want.insert(z6.vertex_of(compose(x, k)));
    cosets = cosets && want == std::set<Vertex>(comp.begin(), comp.end());
  }
  c.expect(cosets, "Z6 components are the cosets of <H,S>");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

const std::vector<Criterion>& criteria()
{
  static const std::vector<Criterion> list{
    {1, "worked example: kappa, transpose atom, neighbour sets", worked_example},
    {2, "cycle-prefix family n <= 6", cp_family},
    {3, "group-theoretic kappa equals the flow oracle", oracle_equivalence},
    {4, "edge connectivity equals the degree", edge_connectivity_thm},
    {5, "hierarchical Cayley digraphs are optimally connected", hierarchical},
    {6, "decomposition bound", decomposition},
    {7, "double coset index identity", coset_index},
    {8, "atom structure", atom_structure},
    {9, "automorphisms and connectivity by generation", transitivity},
  };
  return list;
}

struct Outcome {
  std::vector<std::string> failures;
  std::string log;
  std::size_t checks;
  double seconds;
};

Outcome run_criterion(const Criterion& cr)
{
  std::ostringstream log;
  Check c{log, {}};
  const auto t0 = Clock::now();
  try {
    cr.run(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  return {c.failures, log.str(), c.checks, seconds_since(t0)};
}

std::string export_digest()
{
  std::string out;
  for (const char* name : {"worked_example_n4.json", "cp_4_2.json", "cp_5_2.json", "q8_symmetric.json",
                           "z6_disconnected.json", "d5.json"}) {
    const auto doc = load_spec_document(std::string(COSETCONN_SPECS) + "/" + name);
    const auto cd = build_document(doc);
    out += analyze(doc).report.dump(2) + export_dot(cd) + export_edges(cd);
  }
  return out;
}

void print(int id, const char* title, const std::vector<std::string>& failures, std::size_t checks, double secs)
{
  std::printf("%s %2d  %s [%zu checks, %.2f s]\n", failures.empty() ? "PASS" : "FAIL", id, title, checks, secs);
  for (std::size_t i = 0; i < failures.size() && i < 10; ++i)
    std::printf("        %s\n", failures[i].c_str());
  std::fflush(stdout);
}

} // namespace

int main()
{
  const auto t0 = Clock::now();
  int failed = 0;
  std::vector<std::string> logs;
  for (const auto& cr : criteria()) {
    const auto out = run_criterion(cr);
    print(cr.id, cr.title, out.failures, out.checks, out.seconds);
    failed += out.failures.empty() ? 0 : 1;
    logs.push_back(out.log);
  }

  // 10. timing and byte determinism: everything above is recomputed and
  // compared, together with reports and exports.
  std::vector<std::string> failures;
  std::size_t checks = 0;
  const auto first_pass = seconds_since(t0);
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    ++checks;
    if (run_criterion(criteria()[i]).log != logs[i])
      failures.push_back("criterion " + std::to_string(criteria()[i].id) + " differs on a second run");
  }
  checks += 2;
  try {
    if (export_digest() != export_digest())
      failures.push_back("reports or exports differ between runs");
  } catch (const std::exception& e) {
    failures.push_back(std::string("exception: ") + e.what());
  }
  const auto total = seconds_since(t0);
  if (total >= 300.0)
    failures.push_back("acceptance run took " + std::to_string(total) + " s");
  char title[160];
  std::snprintf(title, sizeof title, "wall clock under 5 min, byte-deterministic (first pass %.1f s)", first_pass);
  print(10, title, failures, checks, total);
  failed += failures.empty() ? 0 : 1;

  std::printf("%d of 10 criteria failed\n", failed);
  return failed;
}
