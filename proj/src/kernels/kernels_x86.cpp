#include "kernel_table.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)

#include <immintrin.h>

#include <bit>
#include <cassert>

#define COSETCONN_TARGET_SSSE3 __attribute__((target("ssse3")))
#define COSETCONN_TARGET_AVX2 __attribute__((target("avx2,popcnt")))

namespace cosetconn::kernels::detail {

namespace {

// ---- SSSE3 ---------------------------------------------------------------

COSETCONN_TARGET_SSSE3 inline __m128i load16(const Image16& x)
{
  return _mm_load_si128(reinterpret_cast<const __m128i*>(x.bytes.data()));
}

COSETCONN_TARGET_SSSE3 inline void store16(Image16& x, __m128i v)
{
  _mm_store_si128(reinterpret_cast<__m128i*>(x.bytes.data()), v);
}

COSETCONN_TARGET_SSSE3 Image16 gather_ssse3(const Image16& idx, const Image16& table)
{
  Image16 out;
  store16(out, _mm_shuffle_epi8(load16(table), load16(idx)));
  return out;
}

COSETCONN_TARGET_SSSE3 void compose_right_ssse3(std::span<const Image16> xs, const Image16& s,
                                                std::span<Image16> out)
{
  assert(out.size() >= xs.size());
  const __m128i table = load16(s);
  for (std::size_t i = 0; i < xs.size(); ++i)
    store16(out[i], _mm_shuffle_epi8(table, load16(xs[i])));
}

COSETCONN_TARGET_SSSE3 void compose_left_ssse3(const Image16& g, std::span<const Image16> hs,
                                               std::span<Image16> out)
{
  assert(out.size() >= hs.size());
  const __m128i idx = load16(g);
  for (std::size_t i = 0; i < hs.size(); ++i)
    store16(out[i], _mm_shuffle_epi8(load16(hs[i]), idx));
}

// SSE2 is enough here; lives with the SSSE3 set since both tables share it.
COSETCONN_TARGET_SSSE3 int compare_sse(const Image16& a, const Image16& b)
{
  const __m128i va = load16(a);
  const __m128i vb = load16(b);
  const unsigned differ = ~static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(va, vb))) & 0xFFFFu;
  if (differ == 0)
    return 0;
  const int i = std::countr_zero(differ);
  return a.bytes[i] < b.bytes[i] ? -1 : 1;
}

COSETCONN_TARGET_SSSE3 std::size_t argmin_lex_sse(std::span<const Image16> xs)
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (compare_sse(xs[i], xs[best]) < 0)
      best = i;
  }
  return best;
}

// ---- AVX2 ----------------------------------------------------------------
// vpshufb shuffles within each 128-bit lane, so one 256-bit register holds
// two independent permutations.

COSETCONN_TARGET_AVX2 void compose_right_avx2(std::span<const Image16> xs, const Image16& s,
                                              std::span<Image16> out)
{
  assert(out.size() >= xs.size());
  const __m256i table = _mm256_broadcastsi128_si256(
      _mm_load_si128(reinterpret_cast<const __m128i*>(s.bytes.data())));
  std::size_t i = 0;
  for (; i + 2 <= xs.size(); i += 2) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs[i].bytes.data()));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[i].bytes.data()),
                        _mm256_shuffle_epi8(table, idx));
  }
  if (i < xs.size()) {
    const __m128i t = _mm256_castsi256_si128(table);
    const __m128i idx = _mm_load_si128(reinterpret_cast<const __m128i*>(xs[i].bytes.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[i].bytes.data()), _mm_shuffle_epi8(t, idx));
  }
}

COSETCONN_TARGET_AVX2 void compose_left_avx2(const Image16& g, std::span<const Image16> hs,
                                             std::span<Image16> out)
{
  assert(out.size() >= hs.size());
  const __m128i idx128 = _mm_load_si128(reinterpret_cast<const __m128i*>(g.bytes.data()));
  const __m256i idx = _mm256_broadcastsi128_si256(idx128);
  std::size_t i = 0;
  for (; i + 2 <= hs.size(); i += 2) {
    const __m256i table = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hs[i].bytes.data()));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[i].bytes.data()),
                        _mm256_shuffle_epi8(table, idx));
  }
  if (i < hs.size()) {
    const __m128i table = _mm_load_si128(reinterpret_cast<const __m128i*>(hs[i].bytes.data()));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[i].bytes.data()), _mm_shuffle_epi8(table, idx128));
  }
}

COSETCONN_TARGET_AVX2 Image16 gather_avx2(const Image16& idx, const Image16& table)
{
  Image16 out;
  _mm_store_si128(reinterpret_cast<__m128i*>(out.bytes.data()),
                  _mm_shuffle_epi8(_mm_load_si128(reinterpret_cast<const __m128i*>(table.bytes.data())),
                                   _mm_load_si128(reinterpret_cast<const __m128i*>(idx.bytes.data()))));
  return out;
}

COSETCONN_TARGET_AVX2 void or_into_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
  assert(dst.size() == src.size());
  std::size_t i = 0;
  for (; i + 4 <= dst.size(); i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < dst.size(); ++i)
    dst[i] |= src[i];
}

COSETCONN_TARGET_AVX2 std::size_t popcount_avx2(std::span<const std::uint64_t> words)
{
  std::size_t n = 0;
  for (auto w : words)
    n += static_cast<std::size_t>(_mm_popcnt_u64(w));
  return n;
}

COSETCONN_TARGET_AVX2 std::size_t popcount_andnot_avx2(std::span<const std::uint64_t> a,
                                                       std::span<const std::uint64_t> b)
{
  assert(a.size() == b.size());
  std::size_t n = 0;
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= a.size(); i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_andnot_si256(vb, va));
    n += static_cast<std::size_t>(_mm_popcnt_u64(lanes[0]) + _mm_popcnt_u64(lanes[1]) +
                                  _mm_popcnt_u64(lanes[2]) + _mm_popcnt_u64(lanes[3]));
  }
  for (; i < a.size(); ++i)
    n += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & ~b[i]));
  return n;
}

} // namespace

bool cpu_has_ssse3()
{
  return __builtin_cpu_supports("ssse3");
}

bool cpu_has_avx2()
{
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}

const KernelTable* ssse3_table()
{
  static const KernelTable table{
    Isa::ssse3,
    &gather_ssse3,
    &compose_right_ssse3,
    &compose_left_ssse3,
    &compare_sse,
    &argmin_lex_sse,
    &reference::or_into,
    &reference::popcount,
    &reference::popcount_andnot,
  };
  return &table;
}

const KernelTable* avx2_table()
{
  static const KernelTable table{
    Isa::avx2,
    &gather_avx2,
    &compose_right_avx2,
    &compose_left_avx2,
    &compare_sse,
    &argmin_lex_sse,
    &or_into_avx2,
    &popcount_avx2,
    &popcount_andnot_avx2,
  };
  return &table;
}

} // namespace cosetconn::kernels::detail

#else // not x86

namespace cosetconn::kernels::detail {

bool cpu_has_ssse3() { return false; }
bool cpu_has_avx2() { return false; }
const KernelTable* ssse3_table() { return nullptr; }
const KernelTable* avx2_table() { return nullptr; }

} // namespace cosetconn::kernels::detail

#endif
