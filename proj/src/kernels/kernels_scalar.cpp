#include "kernel_table.hpp"

#include <bit>
#include <cassert>

namespace cosetconn::kernels {

namespace reference {

Image16 gather(const Image16& idx, const Image16& table)
{
  Image16 out;
  for (std::size_t i = 0; i < 16; ++i)
    out.bytes[i] = table.bytes[idx.bytes[i] & 0x0F];
  return out;
}

void compose_right(std::span<const Image16> xs, const Image16& s, std::span<Image16> out)
{
  assert(out.size() >= xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    out[i] = reference::gather(xs[i], s);
}

void compose_left(const Image16& g, std::span<const Image16> hs, std::span<Image16> out)
{
  assert(out.size() >= hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i)
    out[i] = reference::gather(g, hs[i]);
}

int compare(const Image16& a, const Image16& b)
{
  for (std::size_t i = 0; i < 16; ++i) {
    if (a.bytes[i] != b.bytes[i])
      return a.bytes[i] < b.bytes[i] ? -1 : 1;
  }
  return 0;
}

std::size_t argmin_lex(std::span<const Image16> xs)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (reference::compare(xs[i], xs[best]) < 0)
      best = i;
  }
  return best;
}

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
  assert(dst.size() == src.size());
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] |= src[i];
}

std::size_t popcount(std::span<const std::uint64_t> words)
{
  std::size_t n = 0;
  for (auto w : words)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t popcount_andnot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
  assert(a.size() == b.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return n;
}

} // namespace reference

namespace detail {

const KernelTable& scalar_table()
{
  static const KernelTable table{
    Isa::scalar,
    &reference::gather,
    &reference::compose_right,
    &reference::compose_left,
    &reference::compare,
    &reference::argmin_lex,
    &reference::or_into,
    &reference::popcount,
    &reference::popcount_andnot,
  };
  return table;
}

} // namespace detail

} // namespace cosetconn::kernels
