#ifndef COSETCONN_PERMUTATION_HPP
#define COSETCONN_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cosetconn/kernels.hpp"

namespace cosetconn {

// A bijection on {1..n}, n <= 16.
//
// Products follow the right-action convention: for points, i(pi sigma) =
// (i pi) sigma, so compose(pi, sigma) applies pi first and sigma second. All
// text I/O is 1-based; image0() exposes the 0-based internal form.
class Permutation {
public:
  static constexpr std::size_t max_degree = 16;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree);

  // One-line form, 1-based: images[i-1] is the image of point i.
  static Permutation from_one_line(std::span<const unsigned> images);
  // Same, 0-based.
  static Permutation from_zero_based(std::span<const std::uint8_t> images);
  // Trusts that `image` is a bijection on {0..degree-1} with an identity tail.
  static Permutation from_image_unchecked(std::size_t degree, const kernels::Image16& image);

  std::size_t degree() const noexcept { return degree_; }

  // 0-based image of 0-based point i.
  std::uint8_t image0(std::size_t i) const noexcept { return image_.bytes[i]; }
  // 1-based image of 1-based point i.
  unsigned operator()(unsigned point) const noexcept { return image_.bytes[point - 1] + 1u; }

  std::vector<unsigned> one_line() const;
  const kernels::Image16& image() const noexcept { return image_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept
  {
    return a.degree_ == b.degree_ && a.image_ == b.image_;
  }
  // Degree first, then lexicographic on the image array.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

private:
  Permutation(std::size_t degree, const kernels::Image16& image) : degree_(degree), image_(image) {}

  std::size_t degree_;
  kernels::Image16 image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// pi then sigma. Throws InputError on degree mismatch.
Permutation compose(const Permutation& pi, const Permutation& sigma);
Permutation inverse(const Permutation& pi);
// Multiplicative order.
std::size_t order(const Permutation& pi);
// g h g^-1 (g first).
Permutation conjugate(const Permutation& h, const Permutation& g);

// Disjoint cycle notation, e.g. "(1 2)(3 4)"; "()" is the identity. Points may
// also appear as 1-cycles. Throws InputError on repeated or out-of-range
// points and malformed parentheses.
Permutation parse_cycles(std::string_view text, std::size_t degree);
// Canonical cycle form: cycles ordered by least point, each starting at its
// least point, fixed points omitted.
std::string print_cycles(const Permutation& pi);

} // namespace cosetconn

#endif // COSETCONN_PERMUTATION_HPP
