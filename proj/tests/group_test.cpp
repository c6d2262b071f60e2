#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "cdg/errors.hpp"
#include "cdg/group.hpp"

namespace cdg {
namespace {

using Orders = std::set<std::uint64_t>;

TEST(Permutation, CyclesAndOrder) {
  const auto p = Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}});
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.cycle_type(), (std::vector<std::uint32_t>{3, 2}));
  EXPECT_FALSE(p.is_even());
  EXPECT_EQ(p.to_string(), "(1 2 3)(4 5)");
  EXPECT_TRUE(p.then(p.inverse()).is_identity());
  EXPECT_EQ(Permutation(3).to_string(), "()");
}

TEST(Permutation, ThenAppliesLeftFirst) {
  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  // 1 -a-> 2 -b-> 3
  EXPECT_EQ(a.then(b)(0), 2u);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), OutOfRange);
  EXPECT_THROW(Permutation::from_images({0, 1}), OutOfRange);
}

TEST(ParseGroupSpec, Examples) {
  EXPECT_EQ(parse_group_spec("D 12"), GroupSpec::dihedral(6));
  EXPECT_EQ(parse_group_spec("S 7"), GroupSpec::symmetric(7));
  EXPECT_EQ(parse_group_spec("DP (Z 4) (S 3)"),
            GroupSpec::direct_product(GroupSpec::cyclic(4), GroupSpec::symmetric(3)));
  EXPECT_EQ(parse_group_spec("Q 8"), GroupSpec::dicyclic(2));
  const auto perm = parse_group_spec("PERM 3 ; (1 2) ; (1 2 3)");
  ASSERT_NE(perm.get_if<PermGroup>(), nullptr);
  EXPECT_EQ(perm.get_if<PermGroup>()->generators.size(), 2u);
  const auto m23 = parse_group_spec("SPEC M23 : 2,3,4,5,6,7,8,11,14,15,23");
  ASSERT_NE(m23.get_if<SpectrumGroup>(), nullptr);
  EXPECT_TRUE(m23.is_support_only());
}

TEST(ParseGroupSpec, Errors) {
  EXPECT_THROW(parse_group_spec(""), ParseError);
  EXPECT_THROW(parse_group_spec("X 3"), ParseError);
  EXPECT_THROW(parse_group_spec("Z"), ParseError);
  EXPECT_THROW(parse_group_spec("DP (Z 2)"), ParseError);
  EXPECT_THROW(parse_group_spec("Z 4 extra"), ParseError);
  EXPECT_THROW(parse_group_spec("D 7"), OutOfRange);
  EXPECT_THROW(parse_group_spec("Q 6"), OutOfRange);
  EXPECT_THROW(parse_group_spec("S 65"), OutOfRange);
  EXPECT_THROW(parse_group_spec("Z 0"), OutOfRange);
  EXPECT_THROW(parse_group_spec("SPEC X : 6"), OutOfRange);
  try {
    parse_group_spec("Z x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(ParseGroupSpec, RoundTrip) {
  for (const char* text : {"Z 1", "D 12", "Q 24", "S 5", "A 8", "DP (Z 2) (DP (S 3) (Q 8))",
                           "PERM 5 ; (1 2 3)(4 5) ; (1 2)", "SPEC M11 : 2,3,4,5,6,8,11"}) {
    const auto spec = parse_group_spec(text);
    EXPECT_EQ(parse_group_spec(to_string(spec)), spec) << text;
  }
}

TEST(OrderSpectrum, Dihedral12) {
  const auto s = order_spectrum(GroupSpec::dihedral(6));
  EXPECT_EQ(s.pi_e(), (Orders{2, 3, 6}));
  const std::map<std::uint64_t, BigInt> expected{{1, 1}, {2, 7}, {3, 2}, {6, 2}};
  EXPECT_EQ(s.counts(), expected);
  EXPECT_EQ(*s.total(), 12);
}

TEST(OrderSpectrum, SymmetricAndAlternatingMatchQuotedSets) {
  EXPECT_EQ(order_spectrum(GroupSpec::symmetric(7)).pi_e(), (Orders{2, 3, 4, 5, 6, 7, 10, 12}));
  EXPECT_EQ(order_spectrum(GroupSpec::alternating(8)).pi_e(), (Orders{2, 3, 4, 5, 6, 7, 15}));
  EXPECT_EQ(*order_spectrum(GroupSpec::symmetric(7)).total(), 5040);
  EXPECT_EQ(*order_spectrum(GroupSpec::alternating(8)).total(), 20160);
}

TEST(OrderSpectrum, SupportOnly) {
  const auto s = order_spectrum(parse_group_spec("SPEC M11 : 2,3,4,5,6,8,11"));
  EXPECT_FALSE(s.has_multiplicities());
  EXPECT_THROW(s.counts(), Unsupported);
  EXPECT_FALSE(s.total().has_value());
  EXPECT_EQ(s.support().count(1), 1u);
  EXPECT_THROW(OrderSpectrum::support_only({6}), OutOfRange);
}

TEST(OrderSpectrum, FromCountsValidates) {
  EXPECT_THROW(OrderSpectrum::from_counts({{2, 1}}), OutOfRange);
  EXPECT_THROW(OrderSpectrum::from_counts({{1, 1}, {6, 2}}), OutOfRange);
}

TEST(PartitionOrders, Examples) {
  EXPECT_EQ(partition_orders(7, Parity::all), (Orders{1, 2, 3, 4, 5, 6, 7, 10, 12}));
  EXPECT_EQ(partition_orders(8, Parity::even), (Orders{1, 2, 3, 4, 5, 6, 7, 15}));
  EXPECT_EQ(partition_orders(1, Parity::all), (Orders{1}));
  EXPECT_THROW(partition_orders(0, Parity::all), OutOfRange);
}

TEST(Enumerate, Examples) {
  const auto trivial = enumerate_elements(GroupSpec::cyclic(1));
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial.order(0), 1u);

  const auto d6 = enumerate_elements(GroupSpec::dihedral(3));
  EXPECT_EQ(d6.size(), 6u);
  EXPECT_EQ(std::count(d6.orders().begin(), d6.orders().end(), 2u), 3);
  EXPECT_EQ(std::count(d6.orders().begin(), d6.orders().end(), 3u), 2);

  const auto s3 = enumerate_elements(parse_group_spec("PERM 3 ; (1 2) ; (1 2 3)"));
  EXPECT_EQ(s3.size(), 6u);
}

TEST(Enumerate, CapAndUnsupported) {
  EXPECT_THROW(enumerate_elements(GroupSpec::symmetric(8), {1000}), CapExceeded);
  EXPECT_THROW(enumerate_elements(parse_group_spec("SPEC X : 2")), Unsupported);
}

TEST(Enumerate, GroupAxioms) {
  for (const char* text : {"D 12", "Q 12", "A 4", "DP (Z 2) (S 3)", "PERM 4 ; (1 2 3 4) ; (1 3)"}) {
    const auto g = enumerate_elements(parse_group_spec(text));
    const auto n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_EQ(g.multiply(a, g.identity()), a);
      EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; c += 3) {
          ASSERT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c))) << text;
        }
      }
    }
  }
}

TEST(PrimeSet, Examples) {
  EXPECT_EQ(prime_set(GroupSpec::dihedral(6)), (Orders{2, 3}));
  EXPECT_EQ(prime_set(GroupSpec::symmetric(7)), (Orders{2, 3, 5, 7}));
  EXPECT_TRUE(prime_set(GroupSpec::cyclic(1)).empty());
}

TEST(CpGroup, Examples) {
  EXPECT_TRUE(is_cp_group(order_spectrum(GroupSpec::alternating(5))));
  EXPECT_FALSE(is_cp_group(order_spectrum(GroupSpec::dihedral(6))));
  EXPECT_TRUE(is_cp_group(order_spectrum(GroupSpec::cyclic(1))));
}

// Spectra computed in closed form against the orders observed on the
// enumerated elements.
TEST(SpectrumProperty, MatchesEnumeration) {
  std::vector<GroupSpec> specs;
  for (std::uint64_t n = 1; n <= 40; ++n) specs.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t n = 3; n <= 30; ++n) specs.push_back(GroupSpec::dihedral(n));
  for (std::uint64_t t = 2; t <= 20; ++t) specs.push_back(GroupSpec::dicyclic(t));
  for (std::uint32_t n = 1; n <= 7; ++n) {
    specs.push_back(GroupSpec::symmetric(n));
    specs.push_back(GroupSpec::alternating(n));
  }
  specs.push_back(parse_group_spec("DP (D 10) (Q 12)"));
  specs.push_back(parse_group_spec("DP (Z 4) (DP (Z 2) (S 3))"));
  for (const auto& spec : specs) {
    const auto s = order_spectrum(spec);
    const auto g = enumerate_elements(spec);
    std::map<std::uint64_t, BigInt> observed;
    for (auto o : g.orders()) observed[o] += 1;
    EXPECT_EQ(s.counts(), observed) << to_string(spec);
    EXPECT_TRUE(is_divisor_closed(s.pi_e())) << to_string(spec);
  }
}

TEST(SpectrumProperty, PartitionOrdersMatchEnumeration) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    for (auto parity : {Parity::all, Parity::even}) {
      const auto spec = parity == Parity::all ? GroupSpec::symmetric(n) : GroupSpec::alternating(n);
      const auto g = enumerate_elements(spec);
      const Orders observed(g.orders().begin(), g.orders().end());
      EXPECT_EQ(partition_orders(n, parity), observed) << n;
    }
  }
}

TEST(SpectrumProperty, DirectProductIsLcmConvolution) {
  const std::vector<const char*> factors = {"Z 4", "D 10", "Q 12", "A 4", "S 3"};
  for (const char* a : factors) {
    for (const char* b : factors) {
      const auto h = order_spectrum(parse_group_spec(a));
      const auto k = order_spectrum(parse_group_spec(b));
      std::map<std::uint64_t, BigInt> expected;
      for (const auto& [x, cx] : h.counts()) {
        for (const auto& [y, cy] : k.counts()) expected[std::lcm(x, y)] += cx * cy;
      }
      const auto hk = order_spectrum(GroupSpec::direct_product(parse_group_spec(a), parse_group_spec(b)));
      EXPECT_EQ(hk.counts(), expected) << a << " x " << b;
    }
  }
}

TEST(SpectrumProperty, DivisorClosedUpToDegreeTwelve) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const auto s = order_spectrum(GroupSpec::symmetric(n));
    EXPECT_TRUE(is_divisor_closed(s.pi_e()));
    BigInt total = 0;
    for (const auto& [o, c] : s.counts()) total += c;
    EXPECT_EQ(total, *s.total());
  }
}

}  // namespace
}  // namespace cdg
