#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "amitsur/intlin.hpp"

using namespace amitsur;

namespace {

IntegerMatrix m(const std::vector<IntVector>& rows) { return IntegerMatrix::from_rows(rows); }

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntegerMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = dist(rng);
  return a;
}

bool is_canonical_hermite(const IntegerMatrix& h) {
  std::size_t prev_row = 0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    std::size_t p = 0;
    while (p < h.rows() && h(p, j) == 0) ++p;
    if (p == h.rows() || h(p, j) <= 0) return false;
    if (j > 0 && p <= prev_row) return false;
    for (std::size_t k = 0; k < j; ++k)
      if (h(p, k) < 0 || h(p, k) >= h(p, j)) return false;
    prev_row = p;
  }
  return true;
}

}  // namespace

TEST(IntegerHelpers, GcdLcmFloor) {
  EXPECT_EQ(gcd(Integer(-12), Integer(18)), 6);
  EXPECT_EQ(gcd(Integer(0), Integer(0)), 0);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(floor_mod(Integer(-7), Integer(2)), 1);
  EXPECT_TRUE(divides(Integer(0), Integer(0)));
  EXPECT_FALSE(divides(Integer(0), Integer(3)));
}

TEST(IntegerHelpers, ExtendedGcdIdentity) {
  for (int a = -12; a <= 12; ++a)
    for (int b = -12; b <= 12; ++b) {
      const auto e = extended_gcd(a, b);
      EXPECT_EQ(e.g, gcd(Integer(a), Integer(b)));
      EXPECT_EQ(e.x * a + e.y * b, e.g);
    }
}

TEST(IntegerHelpers, PolynomialBinomial) {
  EXPECT_EQ(binomial(Integer(5), 2), 10);
  EXPECT_EQ(binomial(Integer(-1), 2), 1);
  EXPECT_EQ(binomial(Integer(-3), 3), -10);
  EXPECT_EQ(binomial(Integer(2), 5), 0);
  EXPECT_EQ(binomial(Integer(7), 0), 1);
}

TEST(IntegerHelpers, ParseIntegerIsPlainDecimal) {
  EXPECT_EQ(parse_integer("-123456789012345678901234567890").str(), "-123456789012345678901234567890");
  EXPECT_THROW(parse_integer("0x10"), std::invalid_argument);
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("1e3"), std::invalid_argument);
}

TEST(HermiteForm, Examples) {
  const auto h = hermite_form(m({{2, 1}, {0, 1}}));
  EXPECT_EQ(h.h, m({{1, 0}, {1, 2}}));
  EXPECT_EQ(hermite_form(m({{2, 1}, {0, 3}})).h, m({{1, 0}, {3, 6}}));
  EXPECT_EQ(hermite_form(IntegerMatrix::identity(3)).h, IntegerMatrix::identity(3));
  const auto z = hermite_form(IntegerMatrix(2, 2));
  EXPECT_EQ(z.h.rows(), 2u);
  EXPECT_EQ(z.h.cols(), 0u);
}

TEST(HermiteForm, EmptyShapes) {
  EXPECT_EQ(hermite_form(IntegerMatrix(0, 3)).h.cols(), 0u);
  EXPECT_EQ(hermite_form(IntegerMatrix(3, 0)).h.cols(), 0u);
}

TEST(HermiteForm, PropertiesOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    const IntegerMatrix a = random_matrix(rng, rows, cols, -6, 6);
    const auto r = hermite_form(a);
    EXPECT_TRUE(is_canonical_hermite(r.h)) << a.to_string();
    EXPECT_EQ(abs(determinant(r.u)), 1);
    const IntegerMatrix au = a * r.u;
    EXPECT_EQ(au.leading_columns(r.h.cols()), r.h);
    for (std::size_t j = r.h.cols(); j < cols; ++j) EXPECT_TRUE(is_zero(au.column(j)));
    // Idempotent.
    EXPECT_EQ(hermite_form(r.h).h, r.h);
  }
}

TEST(SmithForm, Examples) {
  EXPECT_EQ(smith_form(m({{2, 0}, {0, 3}})).s, m({{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_form(IntegerMatrix::identity(3)).s, IntegerMatrix::identity(3));
  EXPECT_EQ(smith_form(m({{2, 4}, {0, 0}})).s, m({{2, 0}, {0, 0}}));
}

TEST(SmithForm, PropertiesOnRandomMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntegerMatrix a = random_matrix(rng, rows, cols, -9, 9);
    const auto r = smith_form(a);
    EXPECT_EQ(r.u * a * r.v, r.s);
    EXPECT_EQ(abs(determinant(r.u)), 1);
    EXPECT_EQ(abs(determinant(r.v)), 1);
    const std::size_t k = std::min(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) {
          EXPECT_EQ(r.s(i, j), 0);
        }
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_GE(r.s(i, i), 0);
      if (i + 1 < k) {
        EXPECT_TRUE(divides(r.s(i, i), r.s(i + 1, i + 1)));
      }
    }
  }
}

TEST(SmithForm, LargeEntriesDoNotOverflow) {
  const Integer big = parse_integer("123456789012345678901234567890");
  const auto r = smith_form(m({{big, big + 1}, {big * 2, big * 3}}));
  EXPECT_EQ(r.s(0, 0), 1);
  EXPECT_EQ(r.s(1, 1), abs(big * (big * 3) - (big + 1) * (big * 2)));
}

TEST(KernelBasis, Examples) {
  const Sublattice k1 = kernel_basis(m({{1, 1}}));
  EXPECT_EQ(k1, span({{1, -1}}, 2));
  EXPECT_EQ(kernel_basis(IntegerMatrix::identity(2)).rank(), 0u);
  const Sublattice k3 = kernel_basis(m({{1, 0, -1}, {0, 1, 1}}));
  EXPECT_EQ(k3.rank(), 1u);
  EXPECT_TRUE(contains(k3, {1, -1, 1}));
}

TEST(KernelBasis, IsSaturatedAndExact) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix a = random_matrix(rng, 1 + rng() % 3, 2 + rng() % 3, -4, 4);
    const Sublattice k = kernel_basis(a);
    for (std::size_t j = 0; j < k.rank(); ++j) EXPECT_TRUE(is_zero(a * k.basis_vector(j)));
    // Saturated: the quotient of Z^n by the kernel is torsion free.
    const FiniteAbelianGroup q = quotient(Sublattice::full(a.cols()), k);
    EXPECT_TRUE(q.invariant_factors.empty());
  }
}

TEST(Span, Examples) {
  EXPECT_EQ(span({{2, 0}, {0, 3}, {2, 3}}, 2), span({{2, 0}, {0, 3}}, 2));
  EXPECT_EQ(span(std::vector<IntVector>{}, 3), Sublattice::zero(3));
  const Sublattice l = span({{1, 1}, {1, -1}}, 2);
  EXPECT_FALSE(contains(l, {1, 0}));
  EXPECT_EQ(quotient(Sublattice::full(2), l).order(), 2);
  EXPECT_THROW(span({{1, 2, 3}}, 2), DimensionMismatch);
}

TEST(Span, CanonicalDeterminism) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    std::vector<IntVector> gens;
    for (std::size_t k = 0; k < 1 + rng() % 4; ++k) gens.push_back(random_matrix(rng, r, 1, -5, 5).column(0));
    const Sublattice a = span(gens, r);
    // Shuffle, add redundant combinations and a unimodular change of generators.
    std::vector<IntVector> other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    other.push_back(gens[0] + Integer(3) * gens.back());
    if (other.size() >= 2) other[0] = other[0] + Integer(2) * other[1];
    EXPECT_EQ(a, span(other, r));
    EXPECT_EQ(Sublattice::from_generators(a.basis()), a);
  }
}

TEST(Contains, Examples) {
  const Sublattice l = span({{2, 0}, {0, 3}}, 2);
  EXPECT_TRUE(contains(l, {4, 3}));
  EXPECT_FALSE(contains(l, {1, 0}));
  EXPECT_TRUE(contains(span({{1, 1}, {1, -1}}, 2), {0, 2}));
  EXPECT_THROW(contains(l, {1, 2, 3}), DimensionMismatch);
}

TEST(Contains, AgreesWithSmallCoefficientEnumeration) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 3, k = 1 + rng() % 3;
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_matrix(rng, r, 1, -4, 4).column(0));
    const Sublattice l = span(gens, r);
    // Every combination with coefficients in [-5, 5] is contained.
    std::vector<int> c(k, -5);
    std::set<IntVector> reached;
    for (;;) {
      IntVector v(r);
      for (std::size_t i = 0; i < k; ++i) v = v + Integer(c[i]) * gens[i];
      reached.insert(v);
      EXPECT_TRUE(contains(l, v));
      std::size_t i = 0;
      while (i < k && c[i] == 5) c[i++] = -5;
      if (i == k) break;
      ++c[i];
    }
    // Random small vectors: coordinates, when found, reproduce v.
    for (int trial2 = 0; trial2 < 20; ++trial2) {
      const IntVector v = random_matrix(rng, r, 1, -3, 3).column(0);
      if (auto y = l.coordinates(v)) {
        EXPECT_EQ(l.basis() * *y, v);
      }
      if (reached.count(v)) {
        EXPECT_TRUE(contains(l, v));
      }
    }
  }
}

TEST(Quotient, Examples) {
  const auto full = Sublattice::full(2);
  const auto q = quotient(full, span({{2, 0}, {0, 3}}, 2));
  EXPECT_EQ(q.invariant_factors, std::vector<Integer>{6});
  EXPECT_EQ(q.to_string(), "Z/6Z");
  EXPECT_TRUE(quotient(full, full).is_trivial());
  EXPECT_EQ(quotient(full, full).to_string(), "0");
  const auto q2 = quotient(full, span({{2, 0}}, 2));
  EXPECT_EQ(q2.free_rank, 1u);
  EXPECT_EQ(q2.invariant_factors, std::vector<Integer>{2});
  EXPECT_EQ(q2.to_string(), "Z/2Z x Z");
  EXPECT_THROW(quotient(span({{2, 0}}, 2), full), SubgroupNotContained);
}

TEST(Quotient, Rendering) {
  EXPECT_EQ((FiniteAbelianGroup{{2, 2}, 0}).to_string(), "(Z/2Z)^2");
  EXPECT_EQ((FiniteAbelianGroup{{2, 6}, 2}).to_string(), "Z/2Z x Z/6Z x Z^2");
  EXPECT_EQ((FiniteAbelianGroup{{}, 1}).to_string(), "Z");
}

TEST(Quotient, OrderEqualsDeterminantOnFullRank) {
  std::mt19937 rng(17);
  int tested = 0;
  while (tested < 100) {
    const IntegerMatrix a = random_matrix(rng, 3, 3, -7, 7);
    const Integer d = determinant(a);
    if (d == 0) continue;
    ++tested;
    const auto q = quotient(Sublattice::full(3), Sublattice::from_generators(a));
    ASSERT_TRUE(q.order().has_value());
    EXPECT_EQ(*q.order(), abs(d));
    EXPECT_EQ(abs(determinant(Sublattice::from_generators(a).basis())), abs(d));
  }
}

TEST(Quotient, RelativeQuotient) {
  // (2Z)^2 / span{(4,0),(0,6)} = Z/2 x Z/3 = Z/6.
  const auto ambient = span({{2, 0}, {0, 2}}, 2);
  const auto sub = span({{4, 0}, {0, 6}}, 2);
  EXPECT_EQ(quotient(ambient, sub).to_string(), "Z/6Z");
}

TEST(ElementOrder, Examples) {
  const auto full = Sublattice::full(2);
  const auto sub = span({{3, 0}, {0, 1}}, 2);
  EXPECT_EQ(element_order_in_quotient(full, sub, {1, 0}), Integer(3));
  EXPECT_EQ(element_order_in_quotient(full, sub, {3, 5}), Integer(1));
  EXPECT_EQ(element_order_in_quotient(full, span({{2, 0}}, 2), {0, 1}), std::nullopt);
  EXPECT_THROW(element_order_in_quotient(span({{2, 0}}, 2), Sublattice::zero(2), {1, 0}), ElementNotInAmbient);
  EXPECT_THROW(element_order_in_quotient(span({{2, 0}}, 2), full, {2, 0}), SubgroupNotContained);
}

TEST(ElementOrder, MatchesSearch) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix a = random_matrix(rng, 2, 2, -6, 6);
    const Sublattice sub = Sublattice::from_generators(a);
    const IntVector v = random_matrix(rng, 2, 1, -5, 5).column(0);
    const auto order = element_order_in_quotient(Sublattice::full(2), sub, v);
    std::optional<Integer> found;
    for (int k = 1; k <= 100 && !found; ++k)
      if (contains(sub, Integer(k) * v)) found = k;
    if (sub.rank() == 2 || order) {
      EXPECT_EQ(order, found);
    }
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(m({{1, 2}, {3, 4}})), -2);
  EXPECT_EQ(determinant(m({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(IntegerMatrix(0, 0)), 1);
  EXPECT_EQ(determinant(m({{2, 0, 0}, {0, 3, 0}, {1, 1, 0}})), 0);
}

TEST(InverseUnimodular, Inverts) {
  const IntegerMatrix a = m({{2, 1}, {1, 1}});
  EXPECT_EQ(a * inverse_unimodular(a), IntegerMatrix::identity(2));
  EXPECT_THROW(inverse_unimodular(m({{2, 0}, {0, 1}})), NotUnimodular);
}
