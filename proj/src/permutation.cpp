#include "cosetconn/permutation.hpp"

#include <array>
#include <cctype>
#include <cstring>
#include <numeric>

#include "cosetconn/error.hpp"

namespace cosetconn {

namespace {

kernels::Image16 identity_image()
{
  kernels::Image16 img;
  std::iota(img.bytes.begin(), img.bytes.end(), std::uint8_t{0});
  return img;
}

void check_degree(std::size_t degree)
{
  if (degree == 0 || degree > Permutation::max_degree)
    throw InputError("permutation degree must be in 1.." + std::to_string(Permutation::max_degree) +
                     ", got " + std::to_string(degree));
}

} // namespace

Permutation::Permutation(std::size_t degree) : degree_(degree), image_(identity_image())
{
  check_degree(degree);
}

Permutation Permutation::from_one_line(std::span<const unsigned> images)
{
  check_degree(images.size());
  auto img = identity_image();
  std::array<bool, max_degree> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    const unsigned v = images[i];
    if (v < 1 || v > images.size())
      throw InputError("one-line image " + std::to_string(v) + " out of range 1.." +
                       std::to_string(images.size()));
    if (seen[v - 1])
      throw InputError("one-line form repeats " + std::to_string(v));
    seen[v - 1] = true;
    img.bytes[i] = static_cast<std::uint8_t>(v - 1);
  }
  return Permutation(images.size(), img);
}

Permutation Permutation::from_zero_based(std::span<const std::uint8_t> images)
{
  std::vector<unsigned> one(images.begin(), images.end());
  for (auto& v : one)
    ++v;
  return from_one_line(one);
}

Permutation Permutation::from_image_unchecked(std::size_t degree, const kernels::Image16& image)
{
  return Permutation(degree, image);
}

std::vector<unsigned> Permutation::one_line() const
{
  std::vector<unsigned> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i)
    out[i] = image_.bytes[i] + 1u;
  return out;
}

bool Permutation::is_identity() const noexcept
{
  static const auto id = identity_image();
  return image_ == id;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept
{
  if (a.degree_ != b.degree_)
    return a.degree_ <=> b.degree_;
  return kernels::compare(a.image_, b.image_) <=> 0;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
  std::uint64_t lo, hi;
  std::memcpy(&lo, p.image().bytes.data(), 8);
  std::memcpy(&hi, p.image().bytes.data() + 8, 8);
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0xC2B2AE3D27D4EB4Full + (lo << 6) + (lo >> 2));
  h ^= h >> 31;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& pi, const Permutation& sigma)
{
  if (pi.degree() != sigma.degree())
    throw InputError("cannot compose permutations of degree " + std::to_string(pi.degree()) +
                     " and " + std::to_string(sigma.degree()));
  return Permutation::from_image_unchecked(pi.degree(), kernels::gather(pi.image(), sigma.image()));
}

Permutation inverse(const Permutation& pi)
{
  kernels::Image16 inv;
  for (std::size_t i = 0; i < 16; ++i)
    inv.bytes[pi.image().bytes[i]] = static_cast<std::uint8_t>(i);
  return Permutation::from_image_unchecked(pi.degree(), inv);
}

std::size_t order(const Permutation& pi)
{
  std::size_t result = 1;
  std::array<bool, Permutation::max_degree> seen{};
  for (std::size_t i = 0; i < pi.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = pi.image0(j)) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation conjugate(const Permutation& h, const Permutation& g)
{
  return compose(compose(g, h), inverse(g));
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  check_degree(degree);
  auto img = identity_image();
  std::array<bool, Permutation::max_degree> used{};
  std::size_t pos = 0;
  bool any_group = false;

  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("bad cycle notation \"" + std::string(text) + "\": " + why);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw fail("expected '(' at offset " + std::to_string(pos));
    ++pos;
    any_group = true;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size())
        throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw fail(std::string("unexpected character '") + text[pos] + "'");
      unsigned long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned>(text[pos] - '0');
        if (v > 1'000'000)
          throw fail("point too large");
        ++pos;
      }
      if (v < 1 || v > degree)
        throw fail("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      if (used[v - 1])
        throw fail("repeated point " + std::to_string(v));
      used[v - 1] = true;
      cycle.push_back(static_cast<unsigned>(v));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img.bytes[cycle[i] - 1] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()] - 1);
    skip_space();
  }
  if (!any_group)
    throw fail("empty text (use \"()\" for the identity)");
  return Permutation::from_image_unchecked(degree, img);
}

std::string print_cycles(const Permutation& pi)
{
  std::string out;
  std::array<bool, Permutation::max_degree> seen{};
  for (std::size_t i = 0; i < pi.degree(); ++i) {
    if (seen[i] || pi.image0(i) == i)
      continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = pi.image0(j)) {
      seen[j] = true;
      if (!first)
        out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

} // namespace cosetconn
