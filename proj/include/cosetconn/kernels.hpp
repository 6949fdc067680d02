#ifndef COSETCONN_KERNELS_HPP
#define COSETCONN_KERNELS_HPP

// Data-parallel inner loops shared by the group and graph code.
//
// A permutation of degree <= 16 lives in one 16-byte block (`Image16`), with
// unused tail bytes holding the identity. Composition is then a byte gather,
// i.e. a single pshufb/tbl. Vertex sets are packed 64-bit words.
//
// Every kernel has a scalar reference implementation. The best variant for
// the running CPU is picked once at first use; tests can pin a variant with
// set_isa() and compare it against the scalar one.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cosetconn::kernels {

struct alignas(16) Image16 {
  std::array<std::uint8_t, 16> bytes;

  friend bool operator==(const Image16&, const Image16&) = default;
};

static_assert(sizeof(Image16) == 16);

enum class Isa { scalar, ssse3, avx2, neon };

std::string_view isa_name(Isa isa);

// Best variant this CPU supports.
Isa detected_isa();
// Variant currently used by the dispatching entry points.
Isa active_isa();
bool isa_supported(Isa isa);
// Pins the dispatch to `isa`. Returns false (and changes nothing) if the CPU
// lacks it. Intended for tests and benchmarks.
bool set_isa(Isa isa);

// out.bytes[i] = table.bytes[idx.bytes[i]]. With permutations this is
// compose(idx, table): apply idx first, then table.
Image16 gather(const Image16& idx, const Image16& table);

// out[i] = compose(xs[i], s)
void compose_right(std::span<const Image16> xs, const Image16& s, std::span<Image16> out);
// out[i] = compose(g, hs[i])
void compose_left(const Image16& g, std::span<const Image16> hs, std::span<Image16> out);

// Lexicographic byte comparison: <0, 0, >0.
int compare(const Image16& a, const Image16& b);
// Index of the lexicographically smallest block (first one on ties). xs must be non-empty.
std::size_t argmin_lex(std::span<const Image16> xs);

// dst |= src
void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
std::size_t popcount(std::span<const std::uint64_t> words);
// popcount(a & ~b)
std::size_t popcount_andnot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// Scalar reference versions, always available regardless of the active ISA.
namespace reference {
Image16 gather(const Image16& idx, const Image16& table);
void compose_right(std::span<const Image16> xs, const Image16& s, std::span<Image16> out);
void compose_left(const Image16& g, std::span<const Image16> hs, std::span<Image16> out);
int compare(const Image16& a, const Image16& b);
std::size_t argmin_lex(std::span<const Image16> xs);
void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
std::size_t popcount(std::span<const std::uint64_t> words);
std::size_t popcount_andnot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
} // namespace reference

} // namespace cosetconn::kernels

#endif // COSETCONN_KERNELS_HPP
