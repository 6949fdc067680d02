#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cosetconn/error.hpp"
#include "cosetconn/group.hpp"
#include "cosetconn/permutation.hpp"
#include "support/corpus.hpp"

using namespace cosetconn;
using corpus::P;

namespace {

std::vector<unsigned> one_line(const Permutation& p) { return p.one_line(); }

GroupPtr symmetric(unsigned n)
{
  std::string cyc = "(";
  for (unsigned i = 1; i <= n; ++i)
    cyc += std::to_string(i) + (i < n ? " " : ")");
  return GroupContext::enumerate(n, {P("(1 2)", n), P(cyc, n)});
}

SubgroupHandle gen(const GroupPtr& g, std::initializer_list<Permutation> gens)
{
  std::vector<Permutation> v(gens);
  return subgroup_generated(g, v);
}

} // namespace

TEST_CASE("compose applies the left factor first")
{
  const auto e = Permutation(4);
  const auto a = P("(1 2)", 4);
  const auto b = P("(1 2 3 4)", 4);
  CHECK(compose(e, b) == b);
  CHECK(print_cycles(compose(b, a)) == "(2 3 4)");
  CHECK(print_cycles(compose(a, b)) == "(1 3 4)");
  CHECK(compose(b, a)(1) == 1);
  CHECK(compose(a, b)(1) == 3);
  CHECK_THROWS_AS(compose(a, P("(1 2)", 5)), InputError);
}

TEST_CASE("inverse")
{
  CHECK(inverse(Permutation(3)).is_identity());
  CHECK(inverse(P("(1 2)", 3)) == P("(1 2)", 3));
  CHECK(print_cycles(inverse(P("(1 2 3)", 3))) == "(1 3 2)");
  CHECK(print_cycles(inverse(P(corpus::q8_i, 8))) == corpus::q8_i_inv);
  CHECK(print_cycles(inverse(P(corpus::q8_j, 8))) == corpus::q8_j_inv);
}

TEST_CASE("order and conjugate")
{
  CHECK(order(Permutation(5)) == 1);
  CHECK(order(P("(1 2)(3 4 5)", 5)) == 6);
  const auto h = P("(1 2)", 3);
  const auto g = P("(1 2 3)", 3);
  CHECK(conjugate(h, g) == compose(compose(g, h), inverse(g)));
}

TEST_CASE("cycle notation")
{
  CHECK(one_line(P("(1 2)(3 4)", 4)) == std::vector<unsigned>{2, 1, 4, 3});
  CHECK(P("()", 5).is_identity());
  CHECK(print_cycles(Permutation(5)) == "()");
  CHECK(print_cycles(P("(3 1)(5 4 2)", 5)) == "(1 3)(2 5 4)");
  CHECK(P("(1)(2 3)", 3) == P("(2 3)", 3));
  CHECK_THROWS_AS(P("(1 2)(2 3)", 3), InputError);
  CHECK_THROWS_AS(P("(1 5)", 4), InputError);
  CHECK_THROWS_AS(P("(0 1)", 4), InputError);
  CHECK_THROWS_AS(P("(1 2", 4), InputError);
  CHECK_THROWS_AS(P("1 2)", 4), InputError);
  CHECK_THROWS_AS(P("((1 2))", 4), InputError);
  CHECK_THROWS_AS(P("(1 x)", 4), InputError);
  CHECK_THROWS_AS(P("(1 1)", 4), InputError);
}

TEST_CASE("print then parse is the identity on random permutations")
{
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const unsigned n = 1 + rng() % 16;
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i)
      img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const auto p = Permutation::from_one_line(img);
    CHECK(P(print_cycles(p), n) == p);
    CHECK(compose(p, inverse(p)).is_identity());
  }
}

TEST_CASE("from_one_line rejects non-bijections")
{
  const std::vector<unsigned> dup{1, 1, 2};
  const std::vector<unsigned> range{1, 4, 2};
  CHECK_THROWS_AS(Permutation::from_one_line(dup), InputError);
  CHECK_THROWS_AS(Permutation::from_one_line(range), InputError);
}

TEST_CASE("closure enumeration")
{
  CHECK(GroupContext::enumerate(4, {})->order() == 1);
  CHECK(GroupContext::enumerate(4, {P("(1 2 3 4)", 4)})->order() == 4);
  auto s3 = GroupContext::enumerate(3, {P("(1 2)", 3), P("(1 2 3)", 3)});
  CHECK(s3->order() == 6);
  CHECK(s3->element(0).is_identity());
  CHECK(symmetric(5)->order() == 120);
  CHECK_THROWS_AS(GroupContext::enumerate(6, {P("(1 2)", 6), P("(1 2 3 4 5 6)", 6)}, 100), CapExceeded);
  try {
    GroupContext::enumerate(6, {P("(1 2)", 6), P("(1 2 3 4 5 6)", 6)}, 100);
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == 100);
    CHECK(e.reached() > 100);
  }
  CHECK_THROWS_AS(GroupContext::enumerate(4, {P("(1 2)", 3)}), InputError);
}

TEST_CASE("element order is breadth-first discovery order")
{
  auto a = symmetric(4);
  auto b = symmetric(4);
  CHECK(a->elements() == b->elements());
  for (std::uint32_t i = 0; i < a->order(); ++i)
    CHECK(a->index_of(a->element(i)) == i);
}

TEST_CASE("subgroup_generated")
{
  auto s4 = symmetric(4);
  auto triv = subgroup_generated(s4, SubgroupHandle::trivial(s4), {});
  CHECK(triv.order() == 1);
  const auto t12 = P("(1 2)", 4);
  const auto c = P("(1 2 3 4)", 4);
  auto seed = gen(s4, {t12});
  CHECK(subgroup_generated(s4, seed, std::span(&c, 1)).order() == 24);
  auto h2 = gen(s4, {P("(3 4)", 4)});
  auto g2 = gamma(2, 4);
  CHECK(subgroup_generated(s4, h2, std::span(&g2, 1)).order() == 4);
  auto z4 = GroupContext::enumerate(4, {c});
  CHECK_THROWS_AS(gen(z4, {t12}), InputError);
}

TEST_CASE("left cosets and canonical representatives")
{
  auto s3 = symmetric(3);
  auto h = gen(s3, {P("(1 2)", 3)});
  CHECK(left_coset_reps(*s3, h).size() == 3);
  CHECK(left_coset_reps(*s3, SubgroupHandle::whole(s3)).size() == 1);
  CHECK(left_coset_reps(*s3, SubgroupHandle::trivial(s3)).size() == 6);

  const auto g = P("(1 3)", 3);
  CHECK(canonical_coset_rep(g, SubgroupHandle::trivial(s3)) == g);
  CHECK(canonical_coset_rep(P("(1 2)", 3), h).is_identity());
  for (const auto& x : h.elements())
    CHECK(canonical_coset_rep(compose(g, x), h) == canonical_coset_rep(g, h));
}

TEST_CASE("double cosets")
{
  auto s3 = symmetric(3);
  auto h = gen(s3, {P("(1 2)", 3)});
  const auto s = P("(1 2 3)", 3);
  CHECK(double_coset(h, s).size() == 4);
  CHECK(double_coset_index(h, s) == 2);
  CHECK(coset_index_formula(h, s) == 2);
  CHECK(double_coset_left_reps(h, s).size() == 2);

  auto triv = SubgroupHandle::trivial(s3);
  CHECK(double_coset(triv, s) == std::vector<Permutation>{s});
  CHECK(double_coset_index(triv, s) == 1);

  auto s4 = symmetric(4);
  auto h2 = gen(s4, {P("(3 4)", 4)});
  CHECK(double_coset_index(h2, gamma(3, 4)) == 2);
}

TEST_CASE("normalizes")
{
  auto s4 = symmetric(4);
  CHECK(normalizes(P("(1 2 3)", 4), SubgroupHandle::trivial(s4)));
  CHECK(normalizes(gamma(2, 4), gen(s4, {P("(3 4)", 4)})));
  auto s3 = symmetric(3);
  CHECK_FALSE(normalizes(P("(1 2 3)", 3), gen(s3, {P("(1 2)", 3)})));
}

TEST_CASE("associativity on random triples")
{
  std::mt19937 rng(11);
  auto s6 = symmetric(6);
  auto pick = [&] { return s6->element(static_cast<std::uint32_t>(rng() % s6->order())); };
  for (int t = 0; t < 300; ++t) {
    const auto a = pick(), b = pick(), c = pick();
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("Lagrange, coset representatives and the double coset partition")
{
  std::mt19937 rng(13);
  for (unsigned n : {4u, 5u}) {
    auto g = symmetric(n);
    auto pick = [&] { return g->element(static_cast<std::uint32_t>(rng() % g->order())); };
    for (int t = 0; t < 12; ++t) {
      auto h = t % 3 == 0 ? gen(g, {pick()}) : gen(g, {pick(), pick()});
      CHECK(g->order() % h.order() == 0);
      CHECK(left_coset_reps(*g, h).size() == g->order() / h.order());

      for (int u = 0; u < 20; ++u) {
        const auto x = pick(), y = pick();
        const bool same = canonical_coset_rep(x, h) == canonical_coset_rep(y, h);
        CHECK(same == h.contains(compose(inverse(x), y)));
      }

      const auto s = pick(), s2 = pick();
      CHECK(double_coset_index(h, s) * h.order() == double_coset(h, s).size());
      const auto a = double_coset(h, s);
      const auto b = double_coset(h, s2);
      const std::set<Permutation> sa(a.begin(), a.end());
      std::size_t common = 0;
      for (const auto& x : b)
        common += sa.count(x);
      CHECK((common == 0 || (common == a.size() && a.size() == b.size())));
    }
  }
}

TEST_CASE("double coset index matches the intersection formula")
{
  std::mt19937 rng(17);
  int pairs = 0;
  for (unsigned n = 3; n <= 6; ++n) {
    auto g = symmetric(n);
    auto pick = [&] { return g->element(static_cast<std::uint32_t>(rng() % g->order())); };
    for (int t = 0; t < 30; ++t) {
      auto h = gen(g, {pick(), t % 2 ? pick() : Permutation(n)});
      const auto s = pick();
      // |H ∩ sHs^-1| counted directly
      std::size_t meet = 0;
      for (const auto& x : h.elements())
        meet += h.contains(conjugate(x, s)) ? 1 : 0;
      CHECK(double_coset_index(h, s) == h.order() / meet);
      CHECK(double_coset_left_reps(h, s).size() == double_coset(h, s).size() / h.order());
      ++pairs;
    }
  }
  CHECK(pairs >= 100);
}
