#include "cosetconn/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "cosetconn/error.hpp"

namespace cosetconn {

// ---- GroupContext -----------------------------------------------------------

GroupPtr GroupContext::enumerate(std::size_t degree, std::vector<Permutation> generators,
                                 std::size_t cap)
{
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw InputError("generator " + print_cycles(g) + " has degree " + std::to_string(g.degree()) +
                       ", expected " + std::to_string(degree));
  }
  if (cap == 0)
    throw InputError("enumeration cap must be positive");

  std::shared_ptr<GroupContext> ctx(new GroupContext());
  ctx->degree_ = degree;
  ctx->generators_ = std::move(generators);

  const Permutation id(degree);
  ctx->elements_.push_back(id);
  ctx->images_.push_back(id.image());
  ctx->index_.emplace(id, 0);

  std::vector<std::vector<kernels::Image16>> products(ctx->generators_.size());
  std::size_t level_begin = 0;
  while (level_begin < ctx->elements_.size()) {
    const std::size_t level_end = ctx->elements_.size();
    const std::span<const kernels::Image16> frontier(ctx->images_.data() + level_begin,
                                                     level_end - level_begin);
    for (std::size_t j = 0; j < ctx->generators_.size(); ++j) {
      products[j].resize(frontier.size());
      kernels::compose_right(frontier, ctx->generators_[j].image(), products[j]);
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t j = 0; j < ctx->generators_.size(); ++j) {
        auto p = Permutation::from_image_unchecked(degree, products[j][i]);
        if (ctx->index_.contains(p))
          continue;
        if (ctx->elements_.size() >= cap)
          throw CapExceeded("group enumeration exceeded its cap", cap, ctx->elements_.size() + 1);
        ctx->index_.emplace(p, static_cast<std::uint32_t>(ctx->elements_.size()));
        ctx->images_.push_back(p.image());
        ctx->elements_.push_back(p);
      }
    }
    level_begin = level_end;
  }
  return ctx;
}

std::optional<std::uint32_t> GroupContext::index_of(const Permutation& p) const
{
  if (p.degree() != degree_)
    return std::nullopt;
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::uint32_t GroupContext::require_index(const Permutation& p) const
{
  auto i = index_of(p);
  if (!i)
    throw InputError("permutation " + print_cycles(p) + " is not an element of the group");
  return *i;
}

// ---- SubgroupHandle ---------------------------------------------------------

SubgroupHandle::SubgroupHandle(GroupPtr parent, std::vector<Permutation> generators,
                               std::vector<std::uint32_t> members)
: parent_(std::move(parent)), generators_(std::move(generators)), members_(std::move(members)),
  in_(parent_->order(), 0)
{
  images_.reserve(members_.size());
  for (auto i : members_) {
    in_[i] = 1;
    images_.push_back(parent_->images()[i]);
  }
}

SubgroupHandle SubgroupHandle::trivial(GroupPtr parent)
{
  return SubgroupHandle(std::move(parent), {}, {0});
}

SubgroupHandle SubgroupHandle::whole(GroupPtr parent)
{
  std::vector<std::uint32_t> all(parent->order());
  for (std::uint32_t i = 0; i < all.size(); ++i)
    all[i] = i;
  auto gens = parent->generators();
  return SubgroupHandle(std::move(parent), std::move(gens), std::move(all));
}

std::vector<Permutation> SubgroupHandle::elements() const
{
  std::vector<Permutation> out;
  out.reserve(members_.size());
  for (auto i : members_)
    out.push_back(parent_->element(i));
  return out;
}

bool SubgroupHandle::contains(const Permutation& p) const
{
  auto i = parent_->index_of(p);
  return i && contains_index(*i);
}

bool SubgroupHandle::is_subgroup_of(const SubgroupHandle& other) const
{
  if (parent_ != other.parent_)
    throw InputError("subgroups belong to different parent groups");
  return std::all_of(members_.begin(), members_.end(),
                     [&](std::uint32_t i) { return other.contains_index(i); });
}

bool operator==(const SubgroupHandle& a, const SubgroupHandle& b)
{
  return a.parent_ == b.parent_ && a.order() == b.order() && a.is_subgroup_of(b);
}

SubgroupHandle subgroup_generated(const GroupPtr& ctx, const SubgroupHandle& seed,
                                  std::span<const Permutation> extra)
{
  if (seed.parent_ptr() != ctx)
    throw InputError("seed subgroup belongs to a different group");
  std::vector<Permutation> gens = seed.generators();
  for (const auto& p : extra) {
    ctx->require_index(p);
    gens.push_back(p);
  }
  // Seed members enter as generators only if the seed has no recorded
  // generators (e.g. a hand-built handle); normally its generators suffice.
  if (seed.generators().empty() && seed.order() > 1) {
    for (auto i : seed.members())
      gens.push_back(ctx->element(i));
  }

  std::vector<std::uint32_t> members{0};
  std::vector<std::uint8_t> seen(ctx->order(), 0);
  seen[0] = 1;
  std::vector<kernels::Image16> frontier{ctx->images()[0]};
  std::vector<kernels::Image16> next;
  std::vector<kernels::Image16> buf;
  while (!frontier.empty()) {
    next.clear();
    for (const auto& g : gens) {
      buf.resize(frontier.size());
      kernels::compose_right(frontier, g.image(), buf);
      for (const auto& img : buf) {
        auto idx = ctx->require_index(Permutation::from_image_unchecked(ctx->degree(), img));
        if (seen[idx])
          continue;
        seen[idx] = 1;
        members.push_back(idx);
        next.push_back(img);
      }
    }
    frontier.swap(next);
  }
  return SubgroupHandle(ctx, std::move(gens), std::move(members));
}

SubgroupHandle subgroup_generated(const GroupPtr& ctx, std::span<const Permutation> gens)
{
  return subgroup_generated(ctx, SubgroupHandle::trivial(ctx), gens);
}

// ---- cosets -----------------------------------------------------------------

Permutation canonical_coset_rep(const Permutation& g, const SubgroupHandle& h)
{
  if (g.degree() != h.parent().degree())
    throw InputError("coset representative degree mismatch");
  const auto hs = h.images();
  thread_local std::vector<kernels::Image16> buf;
  buf.resize(hs.size());
  kernels::compose_left(g.image(), hs, buf);
  return Permutation::from_image_unchecked(g.degree(), buf[kernels::argmin_lex(buf)]);
}

LeftCosets left_cosets(const GroupContext& g, const SubgroupHandle& h)
{
  if (&h.parent() != &g)
    throw InputError("subgroup does not belong to this group");
  constexpr auto unassigned = static_cast<std::uint32_t>(-1);
  LeftCosets out;
  out.coset_of.assign(g.order(), unassigned);
  std::vector<kernels::Image16> buf(h.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (out.coset_of[i] != unassigned)
      continue;
    const auto c = static_cast<std::uint32_t>(out.reps.size());
    kernels::compose_left(g.images()[i], h.images(), buf);
    out.reps.push_back(Permutation::from_image_unchecked(g.degree(), buf[kernels::argmin_lex(buf)]));
    for (const auto& img : buf)
      out.coset_of[g.require_index(Permutation::from_image_unchecked(g.degree(), img))] = c;
  }
  return out;
}

std::vector<Permutation> left_coset_reps(const GroupContext& g, const SubgroupHandle& h)
{
  return left_cosets(g, h).reps;
}

std::vector<Permutation> double_coset(const SubgroupHandle& h, const Permutation& s)
{
  h.parent().require_index(s);
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<kernels::Image16> buf(h.order());
  for (const auto& h1 : h.images()) {
    const auto h1s = kernels::gather(h1, s.image());
    kernels::compose_left(h1s, h.images(), buf);
    for (const auto& img : buf) {
      auto p = Permutation::from_image_unchecked(s.degree(), img);
      if (seen.insert(p).second)
        out.push_back(p);
    }
  }
  return out;
}

bool in_double_coset(const SubgroupHandle& h, const Permutation& s, const Permutation& x)
{
  // x ∈ HsH  iff  h1^-1 x ∈ sH for some h1  iff  rep(h1^-1 x) == rep(s).
  const auto target = canonical_coset_rep(s, h);
  for (const auto& p : h.elements()) {
    if (canonical_coset_rep(compose(inverse(p), x), h) == target)
      return true;
  }
  return false;
}

std::vector<Permutation> double_coset_left_reps(const SubgroupHandle& h, const Permutation& s)
{
  h.parent().require_index(s);
  std::vector<Permutation> reps;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& h1 : h.images()) {
    auto hs = Permutation::from_image_unchecked(s.degree(), kernels::gather(h1, s.image()));
    auto rep = canonical_coset_rep(hs, h);
    if (seen.insert(rep).second)
      reps.push_back(rep);
  }
  return reps;
}

std::size_t coset_index_formula(const SubgroupHandle& h, const Permutation& s)
{
  const auto s_inv = inverse(s);
  std::size_t meet = 0;
  // h ∈ sHs^-1  iff  s^-1 h s ∈ H
  for (const auto& x : h.elements()) {
    if (h.contains(compose(compose(s_inv, x), s)))
      ++meet;
  }
  return h.order() / meet;
}

std::size_t double_coset_index(const SubgroupHandle& h, const Permutation& s)
{
  const auto elems = double_coset(h, s);
  std::unordered_set<Permutation, PermutationHash> cosets;
  for (const auto& x : elems)
    cosets.insert(canonical_coset_rep(x, h));
  const std::size_t counted = cosets.size();
  const std::size_t formula = coset_index_formula(h, s);
  if (counted != formula || counted * h.order() != elems.size())
    throw InconsistencyError("double coset index mismatch for s=" + print_cycles(s) + ": counted " +
                             std::to_string(counted) + ", |H|/|H ∩ sHs^-1| = " +
                             std::to_string(formula));
  return counted;
}

bool normalizes(const Permutation& g, const SubgroupHandle& h)
{
  h.parent().require_index(g);
  for (const auto& x : h.elements()) {
    if (!h.contains(conjugate(x, g)))
      return false;
  }
  return true;
}

} // namespace cosetconn
