#include <cctype>
#include <charconv>
#include <sstream>

#include "cdg/errors.hpp"
#include "cdg/group.hpp"

namespace cdg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool condition, const std::string& message) {
  if (!condition) throw OutOfRange(message);
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  require(n >= 1 && n <= kMaxCyclicOrder, "cyclic order must lie in [1, 1e9]");
  return GroupSpec(Cyclic{n});
}

GroupSpec GroupSpec::dihedral(std::uint64_t n) {
  require(n >= 3 && n <= kMaxCyclicOrder, "dihedral D_{2n} needs 3 <= n <= 1e9");
  return GroupSpec(Dihedral{n});
}

GroupSpec GroupSpec::dicyclic(std::uint64_t t) {
  require(t >= 2 && 2 * t <= kMaxCyclicOrder, "dicyclic Q_{4t} needs t >= 2 and 2t <= 1e9");
  return GroupSpec(Dicyclic{t});
}

GroupSpec GroupSpec::symmetric(std::uint32_t n) {
  require(n >= 1 && n <= kMaxDegree, "symmetric degree must lie in [1, 64]");
  return GroupSpec(Symmetric{n});
}

GroupSpec GroupSpec::alternating(std::uint32_t n) {
  require(n >= 1 && n <= kMaxDegree, "alternating degree must lie in [1, 64]");
  return GroupSpec(Alternating{n});
}

GroupSpec GroupSpec::direct_product(GroupSpec left, GroupSpec right) {
  return GroupSpec(DirectProduct{std::make_shared<const GroupSpec>(std::move(left)),
                                 std::make_shared<const GroupSpec>(std::move(right))});
}

GroupSpec GroupSpec::perm_group(std::size_t degree, std::vector<Permutation> generators) {
  require(degree >= 1, "permutation degree must be positive");
  for (const auto& g : generators) {
    require(g.degree() == degree, "generator degree " + std::to_string(g.degree()) +
                                      " does not match " + std::to_string(degree));
  }
  return GroupSpec(PermGroup{degree, std::move(generators)});
}

GroupSpec GroupSpec::spectrum_group(std::string name, std::set<std::uint64_t> pi_e) {
  pi_e.erase(1);
  require(!pi_e.count(0), "element orders must be positive");
  for (auto m : pi_e) require(m <= kMaxCyclicOrder, "element order above 1e9");
  require(is_divisor_closed(pi_e), "order set is not divisor-closed");
  return GroupSpec(SpectrumGroup{std::move(name), std::move(pi_e)});
}

bool GroupSpec::is_support_only() const {
  return std::visit(overloaded{
                        [](const SpectrumGroup&) { return true; },
                        [](const DirectProduct& dp) {
                          return dp.left->is_support_only() || dp.right->is_support_only();
                        },
                        [](const auto&) { return false; },
                    },
                    value_);
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.variant().index() != b.variant().index()) return false;
  return std::visit(
      overloaded{
          [&](const Cyclic& x) { return x.n == b.get_if<Cyclic>()->n; },
          [&](const Dihedral& x) { return x.n == b.get_if<Dihedral>()->n; },
          [&](const Dicyclic& x) { return x.t == b.get_if<Dicyclic>()->t; },
          [&](const Symmetric& x) { return x.n == b.get_if<Symmetric>()->n; },
          [&](const Alternating& x) { return x.n == b.get_if<Alternating>()->n; },
          [&](const DirectProduct& x) {
            const auto* y = b.get_if<DirectProduct>();
            return *x.left == *y->left && *x.right == *y->right;
          },
          [&](const PermGroup& x) {
            const auto* y = b.get_if<PermGroup>();
            return x.degree == y->degree && x.generators == y->generators;
          },
          [&](const SpectrumGroup& x) {
            const auto* y = b.get_if<SpectrumGroup>();
            return x.name == y->name && x.pi_e == y->pi_e;
          },
      },
      a.variant());
}

std::string to_string(const GroupSpec& spec) {
  return std::visit(
      overloaded{
          [](const Cyclic& x) { return "Z " + std::to_string(x.n); },
          [](const Dihedral& x) { return "D " + std::to_string(2 * x.n); },
          [](const Dicyclic& x) { return "Q " + std::to_string(4 * x.t); },
          [](const Symmetric& x) { return "S " + std::to_string(x.n); },
          [](const Alternating& x) { return "A " + std::to_string(x.n); },
          [](const DirectProduct& x) {
            return "DP (" + to_string(*x.left) + ") (" + to_string(*x.right) + ")";
          },
          [](const PermGroup& x) {
            std::string out = "PERM " + std::to_string(x.degree);
            for (const auto& g : x.generators) {
              out += " ; ";
              out += g.is_identity() ? "()" : g.to_string();
            }
            return out;
          },
          [](const SpectrumGroup& x) {
            std::string out = "SPEC " + x.name + " :";
            bool first = true;
            for (auto m : x.pi_e) {
              out += first ? " " : ",";
              out += std::to_string(m);
              first = false;
            }
            return out;
          },
      },
      spec.variant());
}

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    skip_space();
    const auto start = pos_;
    std::uint64_t value = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer too large");
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ = start + static_cast<std::size_t>(ptr - first);
    return value;
  }

  // Number parameters are range-checked by the factories; wrap their
  // OutOfRange so the message carries the position.
  template <class F>
  GroupSpec checked(std::size_t at, F&& make) {
    try {
      return make();
    } catch (const OutOfRange& e) {
      throw OutOfRange(std::string(e.what()) + " (at " + std::to_string(at) + ")");
    }
  }

  GroupSpec parse_spec() {
    skip_space();
    const auto at = pos_;
    const auto kw = word();
    if (kw == "Z") {
      const auto n = number();
      return checked(at, [&] { return GroupSpec::cyclic(n); });
    }
    if (kw == "D") {
      const auto m = number();
      if (m % 2 != 0) throw OutOfRange("dihedral group order must be even (at " + std::to_string(at) + ")");
      return checked(at, [&] { return GroupSpec::dihedral(m / 2); });
    }
    if (kw == "Q") {
      const auto m = number();
      if (m % 4 != 0) throw OutOfRange("dicyclic group order must be a multiple of 4 (at " + std::to_string(at) + ")");
      return checked(at, [&] { return GroupSpec::dicyclic(m / 4); });
    }
    if (kw == "S" || kw == "A") {
      const auto n = number();
      if (n > GroupSpec::kMaxDegree) throw OutOfRange("degree must lie in [1, 64] (at " + std::to_string(at) + ")");
      const auto deg = static_cast<std::uint32_t>(n);
      return checked(at, [&] { return kw == "S" ? GroupSpec::symmetric(deg) : GroupSpec::alternating(deg); });
    }
    if (kw == "DP") {
      expect('(');
      GroupSpec left = parse_spec();
      expect(')');
      expect('(');
      GroupSpec right = parse_spec();
      expect(')');
      return GroupSpec::direct_product(std::move(left), std::move(right));
    }
    if (kw == "PERM") return parse_perm(at);
    if (kw == "SPEC") return parse_spectrum(at);
    if (kw.empty()) fail("expected a group keyword");
    pos_ = at;
    fail("unknown group keyword '" + std::string(kw) + "'");
  }

  GroupSpec parse_perm(std::size_t at) {
    const auto degree = number();
    if (degree < 1 || degree > 4096) throw OutOfRange("permutation degree must lie in [1, 4096] (at " + std::to_string(at) + ")");
    std::vector<Permutation> gens;
    while (peek(';')) {
      ++pos_;
      std::vector<std::vector<std::uint32_t>> cycles;
      while (peek('(')) {
        ++pos_;
        std::vector<std::uint32_t> cycle;
        while (!peek(')')) {
          if (pos_ >= text_.size()) fail("unterminated cycle");
          const auto point = number();
          if (point > degree) throw OutOfRange("cycle point " + std::to_string(point) + " exceeds degree (at " + std::to_string(pos_) + ")");
          cycle.push_back(static_cast<std::uint32_t>(point));
        }
        ++pos_;
        cycles.push_back(std::move(cycle));
      }
      const auto gen_at = pos_;
      try {
        gens.push_back(Permutation::from_cycles(degree, cycles));
      } catch (const OutOfRange& e) {
        throw OutOfRange(std::string(e.what()) + " (at " + std::to_string(gen_at) + ")");
      }
    }
    return checked(at, [&] { return GroupSpec::perm_group(degree, std::move(gens)); });
  }

  GroupSpec parse_spectrum(std::size_t at) {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != ':' && text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a spectrum name");
    expect(':');
    std::set<std::uint64_t> orders;
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      orders.insert(number());
      while (peek(',')) {
        ++pos_;
        orders.insert(number());
      }
    }
    return checked(at, [&] { return GroupSpec::spectrum_group(std::move(name), std::move(orders)); });
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse_all(); }

}  // namespace cdg
