#include <algorithm>
#include <deque>
#include <numeric>

#include "cdg/errors.hpp"
#include "cdg/group.hpp"

namespace cdg {

// Concrete multiplication on element codes.
struct EnumeratedGroup::Model {
  virtual ~Model() = default;
  virtual std::size_t width() const = 0;
  virtual Code multiply(const Code& a, const Code& b) const = 0;
  virtual std::uint64_t order(const Code& a) const = 0;
  virtual std::string name(const Code& a) const = 0;
};

namespace {

using Code = EnumeratedGroup::Code;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::string power_word(const char* gen, std::int64_t k) {
  if (k == 0) return "";
  if (k == 1) return gen;
  return std::string(gen) + "^" + std::to_string(k);
}

// Z_n, code [k] for a^k.
struct CyclicModel final : EnumeratedGroup::Model {
  explicit CyclicModel(std::int64_t n) : n(n) {}
  std::size_t width() const override { return 1; }
  Code multiply(const Code& a, const Code& b) const override { return {mod(a[0] + b[0], n)}; }
  std::uint64_t order(const Code& a) const override {
    return static_cast<std::uint64_t>(n / std::gcd(n, a[0]));
  }
  std::string name(const Code& a) const override { return a[0] == 0 ? "e" : power_word("a", a[0]); }
  std::int64_t n;
};

// D_{2n}, code [i, s] for a^i b^s; b a^j = a^{-j} b.
struct DihedralModel final : EnumeratedGroup::Model {
  explicit DihedralModel(std::int64_t n) : n(n) {}
  std::size_t width() const override { return 2; }
  Code multiply(const Code& a, const Code& b) const override {
    const std::int64_t j = a[1] ? -b[0] : b[0];
    return {mod(a[0] + j, n), (a[1] + b[1]) % 2};
  }
  std::uint64_t order(const Code& a) const override {
    if (a[1]) return 2;
    return static_cast<std::uint64_t>(n / std::gcd(n, a[0]));
  }
  std::string name(const Code& a) const override {
    if (a[0] == 0 && a[1] == 0) return "e";
    std::string w = power_word("a", a[0]);
    if (a[1]) w += w.empty() ? "b" : " b";
    return w;
  }
  std::int64_t n;
};

// Q_{4t}, code [i, s] for x^i y^s; y x^j = x^{-j} y and y^2 = x^t.
struct DicyclicModel final : EnumeratedGroup::Model {
  explicit DicyclicModel(std::int64_t t) : t(t), m(2 * t) {}
  std::size_t width() const override { return 2; }
  Code multiply(const Code& a, const Code& b) const override {
    const std::int64_t j = a[1] ? -b[0] : b[0];
    std::int64_t i = a[0] + j;
    const std::int64_t s = a[1] + b[1];
    if (s == 2) i += t;
    return {mod(i, m), s % 2};
  }
  std::uint64_t order(const Code& a) const override {
    if (a[1]) return 4;
    return static_cast<std::uint64_t>(m / std::gcd(m, a[0]));
  }
  std::string name(const Code& a) const override {
    if (a[0] == 0 && a[1] == 0) return "e";
    std::string w = power_word("x", a[0]);
    if (a[1]) w += w.empty() ? "y" : " y";
    return w;
  }
  std::int64_t t;
  std::int64_t m;
};

Permutation to_perm(const Code& c) {
  std::vector<std::uint32_t> images(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) images[i] = static_cast<std::uint32_t>(c[i] + 1);
  return Permutation::from_images(images);
}

Code to_code(const Permutation& p) {
  return Code(p.images().begin(), p.images().end());
}

// Permutations on `degree` points, code = zero-based images. Products apply
// the left factor first.
struct PermModel final : EnumeratedGroup::Model {
  explicit PermModel(std::size_t degree) : degree(degree) {}
  std::size_t width() const override { return degree; }
  Code multiply(const Code& a, const Code& b) const override {
    Code out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = b[static_cast<std::size_t>(a[i])];
    return out;
  }
  std::uint64_t order(const Code& a) const override { return to_perm(a).order(); }
  std::string name(const Code& a) const override { return to_perm(a).to_string(); }
  std::size_t degree;
};

struct ProductModel final : EnumeratedGroup::Model {
  ProductModel(std::shared_ptr<const Model> l, std::shared_ptr<const Model> r)
      : left(std::move(l)), right(std::move(r)) {}
  std::size_t width() const override { return left->width() + right->width(); }
  std::pair<Code, Code> split(const Code& a) const {
    const auto w = static_cast<std::ptrdiff_t>(left->width());
    return {Code(a.begin(), a.begin() + w), Code(a.begin() + w, a.end())};
  }
  Code multiply(const Code& a, const Code& b) const override {
    auto [al, ar] = split(a);
    auto [bl, br] = split(b);
    Code out = left->multiply(al, bl);
    auto rr = right->multiply(ar, br);
    out.insert(out.end(), rr.begin(), rr.end());
    return out;
  }
  std::uint64_t order(const Code& a) const override {
    auto [l, r] = split(a);
    return lcm_checked(left->order(l), right->order(r));
  }
  std::string name(const Code& a) const override {
    auto [l, r] = split(a);
    return "(" + left->name(l) + ", " + right->name(r) + ")";
  }
  std::shared_ptr<const Model> left;
  std::shared_ptr<const Model> right;
};

struct Built {
  std::shared_ptr<const EnumeratedGroup::Model> model;
  std::vector<Code> elements;
};

void check_cap(std::uint64_t size, const EnumerationOptions& options) {
  if (size > options.element_cap) {
    throw CapExceeded("group has " + std::to_string(size) + " elements, above the cap of " +
                      std::to_string(options.element_cap));
  }
}

Built build_symmetric(std::uint32_t n, bool even_only, const EnumerationOptions& options) {
  std::uint64_t size = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    size *= i;
    if (size > 2 * options.element_cap) break;
  }
  if (even_only && n >= 2) size /= 2;
  check_cap(size, options);
  Built b{std::make_shared<PermModel>(n), {}};
  std::vector<std::int64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (even_only && !to_perm(perm).is_even()) continue;
    b.elements.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return b;
}

Built build_perm_group(const PermGroup& pg, const EnumerationOptions& options) {
  auto model = std::make_shared<PermModel>(pg.degree);
  Code identity(pg.degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Code> gens;
  for (const auto& g : pg.generators) gens.push_back(to_code(g));

  // Breadth-first saturation under right multiplication by generators.
  std::set<Code> seen{identity};
  std::deque<Code> queue{identity};
  while (!queue.empty()) {
    Code current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Code next = model->multiply(current, g);
      if (seen.insert(next).second) {
        check_cap(seen.size(), options);
        queue.push_back(std::move(next));
      }
    }
  }
  // std::set order is lexicographic on images, so the identity comes first.
  return {model, std::vector<Code>(seen.begin(), seen.end())};
}

Built build(const GroupSpec& spec, const EnumerationOptions& options) {
  return std::visit(
      overloaded{
          [&](const Cyclic& c) {
            check_cap(c.n, options);
            Built b{std::make_shared<CyclicModel>(static_cast<std::int64_t>(c.n)), {}};
            for (std::int64_t k = 0; k < static_cast<std::int64_t>(c.n); ++k) b.elements.push_back({k});
            return b;
          },
          [&](const Dihedral& d) {
            check_cap(2 * d.n, options);
            const auto n = static_cast<std::int64_t>(d.n);
            Built b{std::make_shared<DihedralModel>(n), {}};
            for (std::int64_t s = 0; s < 2; ++s) {
              for (std::int64_t i = 0; i < n; ++i) b.elements.push_back({i, s});
            }
            return b;
          },
          [&](const Dicyclic& q) {
            check_cap(4 * q.t, options);
            const auto t = static_cast<std::int64_t>(q.t);
            Built b{std::make_shared<DicyclicModel>(t), {}};
            for (std::int64_t s = 0; s < 2; ++s) {
              for (std::int64_t i = 0; i < 2 * t; ++i) b.elements.push_back({i, s});
            }
            return b;
          },
          [&](const Symmetric& s) { return build_symmetric(s.n, false, options); },
          [&](const Alternating& a) { return build_symmetric(a.n, true, options); },
          [&](const DirectProduct& dp) {
            Built l = build(*dp.left, options);
            Built r = build(*dp.right, options);
            check_cap(static_cast<std::uint64_t>(l.elements.size()) * r.elements.size(), options);
            Built b{std::make_shared<ProductModel>(l.model, r.model), {}};
            for (const auto& x : l.elements) {
              for (const auto& y : r.elements) {
                Code c = x;
                c.insert(c.end(), y.begin(), y.end());
                b.elements.push_back(std::move(c));
              }
            }
            return b;
          },
          [&](const PermGroup& pg) { return build_perm_group(pg, options); },
          [](const SpectrumGroup& s) -> Built {
            throw Unsupported("group '" + s.name + "' is known only by its order set; it cannot be enumerated");
          },
      },
      spec.variant());
}

}  // namespace

EnumeratedGroup::EnumeratedGroup(std::shared_ptr<const Model> model, std::vector<Code> elements)
    : model_(std::move(model)), elements_(std::move(elements)) {
  orders_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    orders_.push_back(model_->order(elements_[i]));
  }
}

std::size_t EnumeratedGroup::index_of(const Code& code) const {
  auto it = index_.find(code);
  if (it == index_.end()) throw Error("element code outside the enumerated group");
  return it->second;
}

std::size_t EnumeratedGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(model_->multiply(elements_.at(a), elements_.at(b)));
}

std::size_t EnumeratedGroup::inverse(std::size_t a) const {
  // a^{o(a)-1}
  std::size_t result = identity();
  for (std::uint64_t k = 1; k < orders_.at(a); ++k) result = multiply(result, a);
  return result;
}

std::string EnumeratedGroup::element_name(std::size_t a) const { return model_->name(elements_.at(a)); }

std::vector<std::size_t> EnumeratedGroup::cyclic_subgroup(std::size_t a) const {
  std::vector<std::size_t> out{identity()};
  std::size_t power = a;
  while (power != identity()) {
    out.push_back(power);
    power = multiply(power, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EnumeratedGroup enumerate_elements(const GroupSpec& spec, const EnumerationOptions& options) {
  Built b = build(spec, options);
  return EnumeratedGroup(std::move(b.model), std::move(b.elements));
}

}  // namespace cdg
