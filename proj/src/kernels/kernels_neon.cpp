#include "kernel_table.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <cassert>

namespace cosetconn::kernels::detail {

namespace {

Image16 gather_neon(const Image16& idx, const Image16& table)
{
  Image16 out;
  vst1q_u8(out.bytes.data(), vqtbl1q_u8(vld1q_u8(table.bytes.data()), vld1q_u8(idx.bytes.data())));
  return out;
}

void compose_right_neon(std::span<const Image16> xs, const Image16& s, std::span<Image16> out)
{
  assert(out.size() >= xs.size());
  const uint8x16_t table = vld1q_u8(s.bytes.data());
  for (std::size_t i = 0; i < xs.size(); ++i)
    vst1q_u8(out[i].bytes.data(), vqtbl1q_u8(table, vld1q_u8(xs[i].bytes.data())));
}

void compose_left_neon(const Image16& g, std::span<const Image16> hs, std::span<Image16> out)
{
  assert(out.size() >= hs.size());
  const uint8x16_t idx = vld1q_u8(g.bytes.data());
  for (std::size_t i = 0; i < hs.size(); ++i)
    vst1q_u8(out[i].bytes.data(), vqtbl1q_u8(vld1q_u8(hs[i].bytes.data()), idx));
}

void or_into_neon(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
  assert(dst.size() == src.size());
  std::size_t i = 0;
  for (; i + 2 <= dst.size(); i += 2)
    vst1q_u64(dst.data() + i, vorrq_u64(vld1q_u64(dst.data() + i), vld1q_u64(src.data() + i)));
  for (; i < dst.size(); ++i)
    dst[i] |= src[i];
}

std::size_t popcount_andnot_neon(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
  assert(a.size() == b.size());
  std::size_t n = 0;
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2) {
    const uint64x2_t v = vbicq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i));
    n += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
  }
  for (; i < a.size(); ++i)
    n += static_cast<std::size_t>(__builtin_popcountll(a[i] & ~b[i]));
  return n;
}

} // namespace

const KernelTable* neon_table()
{
  static const KernelTable table{
    Isa::neon,
    &gather_neon,
    &compose_right_neon,
    &compose_left_neon,
    &reference::compare,
    &reference::argmin_lex,
    &or_into_neon,
    &reference::popcount,
    &popcount_andnot_neon,
  };
  return &table;
}

} // namespace cosetconn::kernels::detail

#else

namespace cosetconn::kernels::detail {

const KernelTable* neon_table() { return nullptr; }

} // namespace cosetconn::kernels::detail

#endif
