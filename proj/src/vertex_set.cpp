#include "cosetconn/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "cosetconn/error.hpp"
#include "cosetconn/kernels.hpp"

namespace cosetconn {

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe)
{
  for (auto v : members) {
    if (v >= universe)
      throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                       std::to_string(universe));
    insert(v);
  }
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
: VertexSet(universe, std::span<const Vertex>(members.begin(), members.size()))
{}

VertexSet VertexSet::full(std::size_t universe)
{
  VertexSet s(universe);
  for (auto& w : s.words_)
    w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t VertexSet::size() const
{
  return kernels::popcount(words_);
}

bool VertexSet::empty() const
{
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator|=(const VertexSet& o)
{
  assert(universe_ == o.universe_);
  kernels::or_into(words_, o.words_);
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o)
{
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o)
{
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

std::size_t VertexSet::count_minus(const VertexSet& other) const
{
  assert(universe_ == other.universe_);
  return kernels::popcount_andnot(words_, other.words_);
}

bool VertexSet::intersects(const VertexSet& o) const
{
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i])
      return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const
{
  return count_minus(o) == 0;
}

std::vector<Vertex> VertexSet::to_vector() const
{
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

bool operator<(const VertexSet& a, const VertexSet& b)
{
  return a.to_vector() < b.to_vector();
}

} // namespace cosetconn
