#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cdg {

// A bijection of {1..k}. Stored zero-based; the public constructors and
// printing use one-based points.
class Permutation {
public:
  // Identity on k points.
  explicit Permutation(std::size_t degree = 0);

  // images[i] is the image of point i+1, one-based. Throws OutOfRange when
  // images is not a bijection of {1..k}.
  static Permutation from_images(const std::vector<std::uint32_t>& images);

  // Product of the given one-based cycles on `degree` points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }

  // Zero-based image of zero-based point.
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  // Composition applying *this first, then `next`.
  Permutation then(const Permutation& next) const;

  Permutation inverse() const;

  bool is_identity() const;

  // Cycle lengths, including fixed points, sorted descending.
  std::vector<std::uint32_t> cycle_type() const;

  std::uint64_t order() const;

  bool is_even() const;

  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  // Cycle notation, one-based, "()" for the identity.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<std::uint32_t> images_;
};

}  // namespace cdg
