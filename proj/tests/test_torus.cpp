#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qtorus/gf2.hpp"
#include "qtorus/normal_form.hpp"
#include "qtorus/involution.hpp"
#include "qtorus/torus.hpp"

using namespace qtorus;

namespace {

// All degree vectors of length n with entries in [-w, w], lexicographic.
std::vector<std::vector<std::int64_t>> degreeWindow(int n, int w) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(n, -w);
  while (true) {
    out.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[k] == w) cur[k--] = -w;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("torus");

TEST_CASE("symbolic units: group laws") {
  SymbolicUnit g = SymbolicUnit::one(3);
  g.exponents[1] = 2;
  SymbolicUnit h = SymbolicUnit::minusOne(3);
  h.exponents[1] = -2;
  CHECK(g.times(h) == SymbolicUnit::minusOne(3));
  CHECK(g.times(g.inverse()) == SymbolicUnit::one(3));
  CHECK(g.pow(3).exponents[1] == 6);
  CHECK(g.pow(0) == SymbolicUnit::one(3));
  CHECK_FALSE(g.isNumeric());
  CHECK(SymbolicUnit::minusOne(3).isNumeric());
}

TEST_CASE("pair slots flatten the strict upper triangle") {
  CHECK(pairSlot(3, 0, 1) == 0);
  CHECK(pairSlot(3, 0, 2) == 1);
  CHECK(pairSlot(3, 1, 2) == 2);
  CHECK(pairSlot(4, 2, 3) == 5);
}

TEST_CASE("multiply: q_ij bookkeeping in the symbolic torus") {
  QuantumMatrix q = QuantumMatrix::symbolic(2);
  int k = q.exponentLength();
  Monomial t0 = Monomial::unitOfDegree(k, {1, 0});
  Monomial t1 = Monomial::unitOfDegree(k, {0, 1});

  // t_0 t_1 has coefficient 1; t_1 t_0 picks up q_01.
  Monomial a = multiply(q, t0, t1);
  CHECK(a.degree == std::vector<std::int64_t>{1, 1});
  CHECK(a.coeff == SymbolicUnit::one(k));

  Monomial b = multiply(q, t1, t0);
  CHECK(b.degree == std::vector<std::int64_t>{1, 1});
  CHECK(b.coeff.sign == 1);
  CHECK(b.coeff.exponents[pairSlot(2, 0, 1)] == 1);

  // Inverses cancel: t_0 t_0^{-1} = 1.
  Monomial inv = Monomial::unitOfDegree(k, {-1, 0});
  CHECK(multiply(q, t0, inv).coeff == SymbolicUnit::one(k));
  CHECK(multiply(q, t0, inv).degree == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("multiply: associativity on exhaustive windows") {
  // Fully symbolic at n = 2, window +-1; elementary at n = 3, window +-1.
  {
    QuantumMatrix q = QuantumMatrix::symbolic(2);
    auto window = degreeWindow(2, 1);
    for (const auto& da : window)
      for (const auto& db : window)
        for (const auto& dc : window) {
          Monomial x = Monomial::unitOfDegree(q.exponentLength(), da);
          Monomial y = Monomial::unitOfDegree(q.exponentLength(), db);
          Monomial z = Monomial::unitOfDegree(q.exponentLength(), dc);
          CHECK(multiply(q, multiply(q, x, y), z) ==
                multiply(q, x, multiply(q, y, z)));
        }
  }
  {
    QuantumMatrix q = allMinusMatrix(3).toQuantum();
    auto window = degreeWindow(3, 1);
    for (const auto& da : window)
      for (const auto& db : window)
        for (const auto& dc : window) {
          Monomial x = Monomial::unitOfDegree(0, da);
          Monomial y = Monomial::unitOfDegree(0, db);
          Monomial z = Monomial::unitOfDegree(0, dc);
          CHECK(multiply(q, multiply(q, x, y), z) ==
                multiply(q, x, multiply(q, y, z)));
        }
  }
}

TEST_CASE("commutation signs: elementary monomials anticommute by alpha^T E beta") {
  ElementaryMatrix h = hMatrix(1, 2);
  CHECK(commutationSign(h, gf2Unit(2, 0), gf2Unit(2, 1)));
  CHECK_FALSE(commutationSign(h, gf2Unit(2, 0), gf2Unit(2, 0)));

  // Against the product rule: t^a t^b = (-1)^{a^T E b} t^b t^a.
  QuantumMatrix q = h.toQuantum();
  auto window = degreeWindow(2, 1);
  for (const auto& da : window)
    for (const auto& db : window) {
      Monomial x = Monomial::unitOfDegree(0, da);
      Monomial y = Monomial::unitOfDegree(0, db);
      Monomial xy = multiply(q, x, y);
      Monomial yx = multiply(q, y, x);
      bool anti = xy.coeff.sign != yx.coeff.sign;
      CHECK(anti == commutationSign(h, x.degreeMod2(), y.degreeMod2()));
    }
}

TEST_CASE("commutation signs: bi-additive in both arguments") {
  for (int n = 2; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      Gf2Matrix bits(n, n);
      int slot = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++slot)
          if ((mask >> slot) & 1) {
            bits.set(i, j, true);
            bits.set(j, i, true);
          }
      ElementaryMatrix e(bits);
      for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t a2 = 0; a2 < (1u << n); ++a2)
          for (std::uint32_t b = 0; b < (1u << n); ++b) {
            Gf2Vector va(n, a), va2(n, a2), vb(n, b);
            CHECK(commutationSign(e, va + va2, vb) ==
                  (commutationSign(e, va, vb) != commutationSign(e, va2, vb)));
            CHECK(commutationSign(e, vb, va + va2) ==
                  (commutationSign(e, vb, va) != commutationSign(e, vb, va2)));
          }
    }
  }
}

TEST_CASE("involutions: sign vectors and the canonical shapes") {
  Involution tau = Involution::allPlus(3);
  CHECK(tau.n() == 3);
  CHECK(tau.sign(0) == 1);
  tau.minus.set(2, true);
  CHECK(tau.sign(2) == -1);

  CanonicalPair tau1 = canonicalInvolution(InvolutionKind::Tau1, 1, 3);
  CHECK(tau1.matrix == hMatrix(1, 3));
  CHECK(tau1.involution.sign(0) == 1);
  CHECK(tau1.involution.sign(1) == 1);
  CHECK(tau1.involution.sign(2) == -1);

  CanonicalPair tau2 = canonicalInvolution(InvolutionKind::Tau2, 2, 4);
  CHECK(tau2.involution.sign(2) == -1);
  CHECK(tau2.involution.sign(3) == -1);
  CHECK(tau2.involution.sign(0) == 1);
}

TEST_CASE("involutions: involutive anti-automorphisms on exhaustive windows") {
  for (int n = 2; n <= 3; ++n) {
    ElementaryMatrix e = (n == 2) ? hMatrix(1, 2) : allMinusMatrix(3);
    QuantumMatrix q = e.toQuantum();
    for (std::uint32_t minus = 0; minus < (1u << n); ++minus) {
      Involution tau = Involution::allPlus(n);
      tau.minus.bits = minus;
      auto window = degreeWindow(n, 1);
      for (const auto& da : window) {
        Monomial x = Monomial::unitOfDegree(0, da);
        CHECK(applyInvolution(e, tau, applyInvolution(e, tau, x)) == x);
        for (const auto& db : window) {
          Monomial y = Monomial::unitOfDegree(0, db);
          Monomial lhs = applyInvolution(e, tau, multiply(q, x, y));
          Monomial rhs = multiply(q, applyInvolution(e, tau, y),
                                  applyInvolution(e, tau, x));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("quadratic form: polarization identity, exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      Gf2Matrix bits(n, n);
      int slot = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++slot)
          if ((mask >> slot) & 1) {
            bits.set(i, j, true);
            bits.set(j, i, true);
          }
      ElementaryMatrix e(bits);
      for (std::uint32_t minus = 0; minus < (1u << n); ++minus) {
        Involution tau = Involution::allPlus(n);
        tau.minus.bits = minus;
        QuadraticFormGf2 form(e, tau);
        for (std::uint32_t a = 0; a < (1u << n); ++a)
          for (std::uint32_t b = 0; b < (1u << n); ++b) {
            Gf2Vector va(n, a), vb(n, b);
            bool lhs = form.eval(va + vb);
            bool rhs = (form.eval(va) != form.eval(vb)) !=
                       commutationSign(e, va, vb);
            CHECK(lhs == rhs);
          }
      }
    }
  }
}

TEST_CASE("quadratic form: zero counts separate the canonical kinds") {
  // Main: > half; Tau1: exactly half; Tau2: < half.
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; 2 * l <= n; ++l) {
      CanonicalPair main = canonicalInvolution(InvolutionKind::Main, l, n);
      CHECK(fixedDegreeForm(main.matrix, main.involution).zeroCount() ==
            (std::uint64_t{1} << (n - 1)) + (std::uint64_t{1} << (n - l - 1)));
      if (2 * l + 1 <= n) {
        CanonicalPair t1 = canonicalInvolution(InvolutionKind::Tau1, l, n);
        CHECK(fixedDegreeForm(t1.matrix, t1.involution).zeroCount() ==
              (std::uint64_t{1} << (n - 1)));
      }
      if (l >= 1) {
        CanonicalPair t2 = canonicalInvolution(InvolutionKind::Tau2, l, n);
        CHECK(fixedDegreeForm(t2.matrix, t2.involution).zeroCount() ==
              (std::uint64_t{1} << (n - 1)) - (std::uint64_t{1} << (n - l - 1)));
      }
    }
  }
}

TEST_CASE("quadratic form evaluation agrees with the involution's sign") {
  ElementaryMatrix e = allMinusMatrix(3);
  Involution tau = Involution::allPlus(3);
  tau.minus.set(0, true);
  QuadraticFormGf2 form(e, tau);
  auto window = degreeWindow(3, 2);
  for (const auto& d : window) {
    Monomial x = Monomial::unitOfDegree(0, d);
    Monomial tx = applyInvolution(e, tau, x);
    CHECK(tx.degree == x.degree);
    CHECK((tx.coeff.sign != x.coeff.sign) == form.eval(x.degreeMod2()));
  }
}

TEST_CASE("centers: h_{l,n} grading group has 2l doubled axes") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; 2 * l <= n; ++l) {
      GradedSubgroup center = centerGradingGroup(hMatrix(l, n));
      REQUIRE(center.scaleProfile.has_value());
      std::vector<int> expected(n, 1);
      for (int i = 0; i < 2 * l; ++i) expected[i] = 2;
      CHECK(*center.scaleProfile == expected);
      CHECK(center.indexInLattice() == (std::uint64_t{1} << (2 * l)));
    }
  }
  GradedSubgroup c = centerGradingGroup(hMatrix(1, 3));
  CHECK(c.contains({2, 0, 0}));
  CHECK(c.contains({0, 0, 1}));
  CHECK_FALSE(c.contains({1, 0, 0}));
}

TEST_CASE("centers: the all-minus torus on 3 generators has a diagonal center") {
  GradedSubgroup center = centerGradingGroup(allMinusMatrix(3));
  CHECK_FALSE(center.scaleProfile.has_value());
  CHECK(center.indexInLattice() == 4);
  CHECK(center.contains({1, 1, 1}));
  CHECK(center.contains({2, 0, 0}));
  CHECK_FALSE(center.contains({1, 0, 0}));
}

TEST_CASE("centers: involution-fixed part doubles one more axis under tau1") {
  CanonicalPair main = canonicalInvolution(InvolutionKind::Main, 1, 4);
  GradedSubgroup mc = involutionCenter(main.matrix, main.involution);
  REQUIRE(mc.scaleProfile.has_value());
  CHECK(*mc.scaleProfile == std::vector<int>{2, 2, 1, 1});

  CanonicalPair t1 = canonicalInvolution(InvolutionKind::Tau1, 1, 4);
  GradedSubgroup c1 = involutionCenter(t1.matrix, t1.involution);
  REQUIRE(c1.scaleProfile.has_value());
  CHECK(*c1.scaleProfile == std::vector<int>{2, 2, 2, 1});

  CanonicalPair t2 = canonicalInvolution(InvolutionKind::Tau2, 2, 4);
  GradedSubgroup c2 = involutionCenter(t2.matrix, t2.involution);
  REQUIRE(c2.scaleProfile.has_value());
  CHECK(*c2.scaleProfile == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("elementary detection on quantum matrices") {
  ElementaryMatrix h = hMatrix(1, 3);
  std::optional<ElementaryMatrix> detected = isElementary(h.toQuantum());
  REQUIRE(detected.has_value());
  CHECK(*detected == h);
  CHECK_FALSE(isElementary(QuantumMatrix::symbolic(2)).has_value());
}

TEST_CASE("monomials: degree parity") {
  Monomial x = Monomial::unitOfDegree(0, {2, -1, 3});
  Gf2Vector parity = x.degreeMod2();
  CHECK_FALSE(parity.get(0));
  CHECK(parity.get(1));
  CHECK(parity.get(2));
}

TEST_SUITE_END();
