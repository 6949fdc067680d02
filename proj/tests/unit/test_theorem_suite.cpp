#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cosetconn/error.hpp"
#include "cosetconn/theorem_suite.hpp"
#include "support/corpus.hpp"

using namespace cosetconn;

namespace {

std::string detail(const HypothesisReport& r, const std::string& key)
{
  for (const auto& [k, v] : r.details) {
    if (k == key)
      return v;
  }
  return "<missing>";
}

const Hypothesis* first_failure(const HypothesisReport& r)
{
  for (const auto& h : r.hypotheses) {
    if (!h.holds)
      return &h;
  }
  return nullptr;
}

LabelSet labels(const CosetDigraph& cd)
{
  LabelSet out;
  for (const auto& c : cd.classes())
    out.push_back(c.label);
  return out;
}

void check_failure_has_witness(const HypothesisReport& r)
{
  CHECK(r.applicable == std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                                    [](const Hypothesis& h) { return h.holds; }));
  for (const auto& h : r.hypotheses) {
    if (!h.holds) {
      CHECK(h.witness.has_value());
      CHECK_FALSE(h.witness->empty());
    }
  }
}

} // namespace

TEST_CASE("theorem names round-trip")
{
  for (auto id : {TheoremId::decomposition, TheoremId::corollary1, TheoremId::corollary1_1,
                  TheoremId::hierarchical_gen, TheoremId::hier1, TheoremId::hierarchical_cayley,
                  TheoremId::hierarchical_gen_c, TheoremId::edgec})
    CHECK(parse_theorem_id(theorem_name(id)) == id);
  CHECK_FALSE(parse_theorem_id("lemma9").has_value());
}

TEST_CASE("decomposition on CP(5,2)")
{
  const auto cd = cp_build({5, 2});
  const auto r = check_decomposition(cd, {"γ(2)", "γ(3)"}, {"γ(4)"});
  CHECK(r.applicable);
  CHECK(r.consistent);
  CHECK(r.implied_bound == 4);
  CHECK(r.computed_kappa == 4);
  CHECK(detail(r, "g_prime_vertices") == "6");
  CHECK(detail(r, "kappa_g_prime") == "2");
  CHECK(detail(r, "d_r2") == "2");
}

TEST_CASE("decomposition fails on the worked example")
{
  const auto cd = build(corpus::worked_example(4));
  const auto r = check_decomposition(cd, {"a"}, {"b", "ba"});
  CHECK_FALSE(r.applicable);
  CHECK(r.consistent);
  check_failure_has_witness(r);
  const auto* f = first_failure(r);
  REQUIRE(f != nullptr);
  CHECK(f->witness->find("b") != std::string::npos);
  CHECK(f->witness->find("ba") != std::string::npos);
  CHECK(r.computed_kappa == 2);
}

TEST_CASE("decomposition with empty R2")
{
  const auto cd = build(corpus::d5());
  const auto r = check_decomposition(cd, {"r", "f"}, {});
  CHECK(r.applicable);
  CHECK(r.consistent);
  CHECK(r.implied_bound == 2);
  CHECK(r.computed_kappa == 2);
}

TEST_CASE("decomposition argument checks")
{
  const auto cd = build(corpus::worked_example(4));
  CHECK_THROWS_AS(check_decomposition(cd, {"a"}, {"b"}), InputError);
  CHECK_THROWS_AS(check_decomposition(cd, {"a", "b"}, {"b", "ba"}), InputError);
  CHECK_THROWS_AS(check_decomposition(cd, {"a", "zz"}, {"b", "ba"}), InputError);
  CHECK_THROWS_AS(check_decomposition(build(corpus::z6_disconnected()), {}, {"r2"}), PreconditionError);
}

TEST_CASE("decomposition bound never exceeds kappa on the corpus")
{
  for (const auto& [name, spec] : corpus::connected_corpus()) {
    CAPTURE(name);
    const auto cd = build(spec);
    const auto ls = labels(cd);
    for (std::size_t split = 0; split <= ls.size(); ++split) {
      const LabelSet r1(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(split));
      const LabelSet r2(ls.begin() + static_cast<std::ptrdiff_t>(split), ls.end());
      const auto r = check_decomposition(cd, r1, r2);
      check_failure_has_witness(r);
      CHECK(r.consistent);
      if (r.applicable) {
        REQUIRE(r.implied_bound.has_value());
        CHECK(*r.computed_kappa >= *r.implied_bound);
      }
    }
  }
}

TEST_CASE("towers")
{
  const auto cp62 = cp_build({6, 2});
  const LabelSet l = labels(cp62);
  std::vector<LabelSet> singles;
  for (const auto& x : l)
    singles.push_back({x});
  for (auto variant : {TowerVariant::corollary1, TowerVariant::corollary1_1}) {
    const auto r = check_tower(cp62, singles, variant);
    CHECK(r.applicable);
    CHECK(r.consistent);
    CHECK(r.computed_kappa == 5);
    CHECK(r.implied_bound == 5);
  }

  const auto worked = build(corpus::worked_example(4));
  const auto r = check_tower(worked, {{"a"}, {"b"}, {"ba"}}, TowerVariant::corollary1);
  CHECK_FALSE(r.applicable);
  check_failure_has_witness(r);
  REQUIRE(first_failure(r) == &r.hypotheses[0]);
  CHECK(r.hypotheses[0].witness->find("G_2 = G_3") != std::string::npos);

  const auto one = check_tower(build(corpus::q8_symmetric()), {labels(build(corpus::q8_symmetric()))},
                               TowerVariant::corollary1);
  CHECK(one.applicable);
  CHECK(one.computed_kappa == 4);

  CHECK_THROWS_AS(check_tower(worked, {{"a"}, {"b"}}, TowerVariant::corollary1), InputError);
  CHECK_THROWS_AS(check_tower(worked, {{"a"}, {"b", "ba"}, {}}, TowerVariant::corollary1), InputError);
}

TEST_CASE("tower conclusions hold whenever the hypotheses do")
{
  for (const auto& [name, spec] : corpus::connected_corpus()) {
    CAPTURE(name);
    const auto cd = build(spec);
    std::vector<LabelSet> singles;
    for (const auto& x : labels(cd))
      singles.push_back({x});
    for (auto variant : {TowerVariant::corollary1, TowerVariant::corollary1_1}) {
      const auto r = check_tower(cd, singles, variant);
      check_failure_has_witness(r);
      CHECK(r.consistent);
      if (r.applicable)
        CHECK(r.computed_kappa == cd.degree());
    }
  }
}

TEST_CASE("hierarchical ordering search and minimality")
{
  for (unsigned n = 3; n <= 6; ++n) {
    for (unsigned k = 1; k + 1 < n; ++k) {
      const auto cd = cp_build({n, k});
      const auto order = hierarchical_order_search(cd);
      REQUIRE(order.has_value());
      std::vector<std::size_t> natural(cd.classes().size());
      for (std::size_t i = 0; i < natural.size(); ++i)
        natural[i] = i;
      CHECK(*order == natural);
    }
  }
  const auto worked = build(corpus::worked_example(4));
  CHECK_FALSE(hierarchical_order_search(worked).has_value());
  CHECK_FALSE(is_minimal(worked));

  const auto z4 = build(corpus::z4());
  CHECK(hierarchical_order_search(z4) == std::vector<std::size_t>{0});
  CHECK(is_minimal(z4));
  CHECK(is_minimal(build(corpus::z2_cubed())));
  CHECK_FALSE(is_minimal(build(corpus::q8_symmetric())));
}

TEST_CASE("hierarchical generators")
{
  const auto q8 = check_hierarchical_gen(build(corpus::q8()), {"i", "j"}, HierarchicalVariant::standard);
  CHECK(q8.applicable);
  CHECK(q8.computed_kappa == 2);

  const auto cp62 = cp_build({6, 2});
  const auto cp = check_hierarchical_gen(cp62, labels(cp62), HierarchicalVariant::standard);
  CHECK(cp.applicable);
  CHECK(cp.consistent);
  CHECK(cp.computed_kappa == 5);

  const auto z3 = check_hierarchical_gen(build(corpus::z3()), {"r"}, HierarchicalVariant::hier1);
  CHECK(z3.applicable);
  CHECK(z3.computed_kappa == 1);

  const auto worked = check_hierarchical_gen(build(corpus::worked_example(4)), {"a", "b", "ba"},
                                            HierarchicalVariant::standard);
  CHECK_FALSE(worked.applicable);
  check_failure_has_witness(worked);

  CHECK_THROWS_AS(check_hierarchical_gen(build(corpus::q8()), {"i"}, HierarchicalVariant::standard),
                  InputError);
  CHECK_THROWS_AS(check_hierarchical_gen(build(corpus::q8()), {"i", "i"}, HierarchicalVariant::standard),
                  InputError);
}

TEST_CASE("hierarchical Cayley digraphs are optimally connected")
{
  const auto s4 = verify_hierarchical_cayley(build(corpus::s4_transposition_cycle()));
  CHECK(s4.applicable);
  CHECK(s4.computed_kappa == 2);
  const auto cube = verify_hierarchical_cayley(build(corpus::z2_cubed()));
  CHECK(cube.applicable);
  CHECK(cube.computed_kappa == 3);
  const auto cyc = verify_hierarchical_cayley(build(corpus::z4()));
  CHECK(cyc.applicable);
  CHECK(cyc.computed_kappa == 1);

  const auto cp = verify_hierarchical_cayley(cp_build({4, 2}));
  CHECK_FALSE(cp.applicable);
  check_failure_has_witness(cp);
  const auto worked = verify_hierarchical_cayley(build(corpus::worked_example(4)));
  CHECK_FALSE(worked.applicable);
  check_failure_has_witness(worked);
}

TEST_CASE("hierarchical generators with inverses")
{
  const auto q8 = check_hierarchical_gen_c(build(corpus::q8_symmetric()), {"i", "j"}, {"i^-1", "j^-1"});
  CHECK(q8.applicable);
  CHECK(q8.consistent);
  CHECK(q8.computed_kappa == 4);

  const auto d5 = check_hierarchical_gen_c(build(corpus::d5_with_inverse()), {"r", "f"}, {"r^-1"});
  CHECK(d5.applicable);
  CHECK(d5.computed_kappa == 3);

  const auto v4 = check_hierarchical_gen_c(build(corpus::z2_squared()), {"x", "y"}, {});
  CHECK_FALSE(v4.applicable);
  check_failure_has_witness(v4);

  // an involution in S' is rejected
  const auto d5f = check_hierarchical_gen_c(build(corpus::d5_with_inverse()), {"r", "r^-1"}, {"f"});
  CHECK_FALSE(d5f.applicable);
  check_failure_has_witness(d5f);

  CHECK_THROWS_AS(check_hierarchical_gen_c(build(corpus::q8_symmetric()), {"i", "j"}, {"i^-1"}), InputError);
  CHECK_THROWS_AS(check_hierarchical_gen_c(build(corpus::q8_symmetric()), {"i", "j", "i^-1"}, {"i^-1", "j^-1"}),
                  InputError);
  CHECK_FALSE(check_hierarchical_gen_c(cp_build({4, 2}), {"γ(2)", "γ(3)"}, {}).applicable);
}

TEST_CASE("edge connectivity equals the degree")
{
  const auto worked = verify_edge_connectivity(build(corpus::worked_example(4)), 24);
  CHECK(worked.applicable);
  CHECK(worked.consistent);
  CHECK(worked.computed_lambda == 3);
  CHECK(verify_edge_connectivity(cp_build({4, 2})).computed_lambda == 3);
  CHECK(verify_edge_connectivity(build(corpus::z4())).computed_lambda == 1);
  for (const auto& [name, spec] : corpus::connected_corpus()) {
    CAPTURE(name);
    const auto cd = build(spec);
    const auto r = verify_edge_connectivity(cd);
    CHECK(r.applicable);
    CHECK(r.consistent);
    CHECK(r.computed_lambda == cd.degree());
  }
  CHECK_THROWS_AS(verify_edge_connectivity(build(corpus::z6_disconnected())), PreconditionError);
}
