#include "cdg/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cdg/errors.hpp"
#include "cdg/number_theory.hpp"

namespace cdg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(const std::vector<std::uint32_t>& images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto img = images[i];
    if (img < 1 || img > images.size() || seen[img - 1]) {
      throw OutOfRange("not a permutation of {1.." + std::to_string(images.size()) + "}");
    }
    seen[img - 1] = true;
    p.images_[i] = img - 1;
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> in_cycle(degree, false);
    for (auto point : cycle) {
      if (point < 1 || point > degree) {
        throw OutOfRange("cycle point " + std::to_string(point) + " outside {1.." +
                         std::to_string(degree) + "}");
      }
      if (in_cycle[point - 1]) {
        throw OutOfRange("point " + std::to_string(point) + " repeated within a cycle");
      }
      in_cycle[point - 1] = true;
    }
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
    // Cycles are applied left to right.
    result = result.then(c);
  }
  return result;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw OutOfRange("permutation degrees differ");
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = next.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::uint32_t> Permutation::cycle_type() const {
  std::vector<std::uint32_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::uint32_t len = 0;
    for (auto i = static_cast<std::uint32_t>(start); !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (auto len : cycle_type()) ord = lcm_checked(ord, len);
  return ord;
}

bool Permutation::is_even() const {
  std::size_t even_cycles = 0;
  for (auto len : cycle_type()) {
    if (len % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    bool first = true;
    for (auto i = static_cast<std::uint32_t>(start); !seen[i]; i = images_[i]) {
      seen[i] = true;
      if (!first) os << ' ';
      os << i + 1;
      first = false;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace cdg
