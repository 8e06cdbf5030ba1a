#include <betawalk/catalog.hpp>

#include <gtest/gtest.h>

#include <cstdint>

namespace betawalk {
namespace {

TEST(Catalog, EveryEntryVerifiesOverItsRange) {
  for (const auto& e : catalog()) {
    const auto reports = e.verify_range();
    ASSERT_FALSE(reports.empty()) << e.name;
    for (const auto& r : reports) EXPECT_TRUE(r.verified) << e.name;
  }
}

TEST(Catalog, CorrectedEntriesCarryFailingPrintedForm) {
  int corrected = 0;
  for (const auto& e : catalog()) {
    if (e.variant != Variant::corrected) continue;
    ++corrected;
    ASSERT_TRUE(e.erratum.has_value()) << e.name;
    ASSERT_TRUE(e.counterexample) << e.name;
    const auto cx = e.counterexample();
    EXPECT_TRUE(cx.verified) << e.name;
    ASSERT_TRUE(cx.printed.has_value()) << e.name;
    EXPECT_FALSE(cx.printed->holds) << e.name;
  }
  EXPECT_EQ(corrected, 5);
}

TEST(Catalog, CounterexampleValues) {
  const auto conv = verify_convolution(1);
  EXPECT_EQ(conv.printed->lhs, PiRational(2));
  EXPECT_EQ(conv.rhs, PiRational(4));

  const auto alt = verify_alternating(1);
  EXPECT_EQ(alt.printed->lhs, PiRational(-1));
  EXPECT_EQ(alt.rhs, PiRational(make_rational(1, 2)));

  const auto kdim = verify_k_dim_remark(1, 1);
  EXPECT_EQ(kdim.printed->lhs, PiRational(17));
  EXPECT_EQ(kdim.printed->rhs, PiRational(2));

  const auto two = verify_two_dim_remark(1);
  EXPECT_EQ(two.printed->lhs, PiRational(make_rational(1, 10)));
  EXPECT_EQ(two.rhs, PiRational(make_rational(1, 4)));
}

TEST(Catalog, ConvolutionWithMachineIntegers) {
  // Independent check in 64-bit arithmetic for n <= 25.
  auto central = [](unsigned m) {
    std::uint64_t c = 1;
    for (unsigned i = 1; i <= m; ++i) c = c * (m + i) / i;
    return c;
  };
  for (unsigned n = 1; n <= 25; ++n) {
    std::uint64_t sum = 0;
    for (unsigned k = 0; k <= n; ++k) sum += central(k) * central(n - k);
    ASSERT_EQ(sum, std::uint64_t{1} << (2 * n));
    ASSERT_EQ(verify_convolution(n).lhs, PiRational(BigRational(BigInt(std::to_string(sum)))));
  }
}

TEST(Catalog, PrintedFormFailsForAllN) {
  for (unsigned n = 1; n <= 10; ++n) {
    EXPECT_FALSE(verify_convolution(n).printed->holds);
    EXPECT_FALSE(verify_alternating(n).printed->holds);
    EXPECT_FALSE(verify_k_dim_remark(n, 2).printed->holds);
  }
}

TEST(Catalog, Lookup) {
  ASSERT_NE(find_entry("vandermonde"), nullptr);
  EXPECT_EQ(find_entry("vandermonde")->variant, Variant::printed);
  EXPECT_EQ(find_entry("no-such"), nullptr);
}

TEST(Catalog, DuplicationFormula) {
  EXPECT_EQ(verify_duplication(0).lhs, PiRational(1));
  EXPECT_EQ(verify_duplication(2).lhs, PiRational(make_rational(3, 4)));
}

}  // namespace
}  // namespace betawalk
