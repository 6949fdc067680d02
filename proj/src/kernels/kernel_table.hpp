#ifndef COSETCONN_KERNEL_TABLE_HPP
#define COSETCONN_KERNEL_TABLE_HPP

#include "cosetconn/kernels.hpp"

namespace cosetconn::kernels::detail {

struct KernelTable {
  Isa isa;
  Image16 (*gather)(const Image16&, const Image16&);
  void (*compose_right)(std::span<const Image16>, const Image16&, std::span<Image16>);
  void (*compose_left)(const Image16&, std::span<const Image16>, std::span<Image16>);
  int (*compare)(const Image16&, const Image16&);
  std::size_t (*argmin_lex)(std::span<const Image16>);
  void (*or_into)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
  std::size_t (*popcount)(std::span<const std::uint64_t>);
  std::size_t (*popcount_andnot)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
};

const KernelTable& scalar_table();

// Null when the variant is not compiled for this architecture.
const KernelTable* ssse3_table();
const KernelTable* avx2_table();
const KernelTable* neon_table();

bool cpu_has_ssse3();
bool cpu_has_avx2();

} // namespace cosetconn::kernels::detail

#endif // COSETCONN_KERNEL_TABLE_HPP
