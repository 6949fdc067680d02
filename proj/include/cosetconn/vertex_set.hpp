#ifndef COSETCONN_VERTEX_SET_HPP
#define COSETCONN_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cosetconn {

using Vertex = std::uint32_t;

// Fixed-universe bitset over {0..universe-1}.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // |this \ other|
  std::size_t count_minus(const VertexSet& other) const;
  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  std::vector<Vertex> to_vector() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic on the sorted member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace cosetconn

#endif // COSETCONN_VERTEX_SET_HPP
