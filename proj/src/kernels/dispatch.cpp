#include "kernel_table.hpp"

#include <atomic>

namespace cosetconn::kernels {

namespace {

const detail::KernelTable* table_for(Isa isa)
{
  switch (isa) {
  case Isa::scalar:
    return &detail::scalar_table();
  case Isa::ssse3:
    return detail::cpu_has_ssse3() ? detail::ssse3_table() : nullptr;
  case Isa::avx2:
    return detail::cpu_has_avx2() ? detail::avx2_table() : nullptr;
  case Isa::neon:
    return detail::neon_table();
  }
  return nullptr;
}

const detail::KernelTable* best_table()
{
  for (Isa isa : {Isa::avx2, Isa::neon, Isa::ssse3}) {
    if (const auto* t = table_for(isa))
      return t;
  }
  return &detail::scalar_table();
}

std::atomic<const detail::KernelTable*>& active()
{
  static std::atomic<const detail::KernelTable*> table{best_table()};
  return table;
}

const detail::KernelTable& current()
{
  return *active().load(std::memory_order_relaxed);
}

} // namespace

std::string_view isa_name(Isa isa)
{
  switch (isa) {
  case Isa::scalar: return "scalar";
  case Isa::ssse3: return "ssse3";
  case Isa::avx2: return "avx2";
  case Isa::neon: return "neon";
  }
  return "unknown";
}

Isa detected_isa()
{
  return best_table()->isa;
}

Isa active_isa()
{
  return current().isa;
}

bool isa_supported(Isa isa)
{
  return table_for(isa) != nullptr;
}

bool set_isa(Isa isa)
{
  const auto* t = table_for(isa);
  if (t == nullptr)
    return false;
  active().store(t, std::memory_order_relaxed);
  return true;
}

Image16 gather(const Image16& idx, const Image16& table)
{
  return current().gather(idx, table);
}

void compose_right(std::span<const Image16> xs, const Image16& s, std::span<Image16> out)
{
  current().compose_right(xs, s, out);
}

void compose_left(const Image16& g, std::span<const Image16> hs, std::span<Image16> out)
{
  current().compose_left(g, hs, out);
}

int compare(const Image16& a, const Image16& b)
{
  return current().compare(a, b);
}

std::size_t argmin_lex(std::span<const Image16> xs)
{
  return current().argmin_lex(xs);
}

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
  current().or_into(dst, src);
}

std::size_t popcount(std::span<const std::uint64_t> words)
{
  return current().popcount(words);
}

std::size_t popcount_andnot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
  return current().popcount_andnot(a, b);
}

} // namespace cosetconn::kernels
