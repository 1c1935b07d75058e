#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "qtorus/involution.hpp"
#include "qtorus/normal_form.hpp"
#include "qtorus/oracle.hpp"
#include "qtorus/text.hpp"

using namespace qtorus;

namespace {

Involution involutionOf(const char* literal) { return parseInvolution(literal); }

}  // namespace

TEST_SUITE_BEGIN("involution");

TEST_CASE("kind names") {
  CHECK(kindName(InvolutionKind::Main) == "main");
  CHECK(kindName(InvolutionKind::Tau1) == "tau1");
  CHECK(kindName(InvolutionKind::Tau2) == "tau2");
}

TEST_CASE("canonical pairs: shapes and validity bounds") {
  CanonicalPair main = canonicalInvolution(InvolutionKind::Main, 2, 5);
  CHECK(main.matrix == hMatrix(2, 5));
  CHECK(formatInvolution(main.involution) == "+++++");

  CHECK(formatInvolution(
            canonicalInvolution(InvolutionKind::Tau1, 0, 3).involution) ==
        "-++");
  CHECK(formatInvolution(
            canonicalInvolution(InvolutionKind::Tau1, 1, 4).involution) ==
        "++-+");
  CHECK(formatInvolution(
            canonicalInvolution(InvolutionKind::Tau2, 1, 3).involution) ==
        "--+");
  CHECK(formatInvolution(
            canonicalInvolution(InvolutionKind::Tau2, 2, 4).involution) ==
        "++--");

  CHECK_THROWS_AS(canonicalInvolution(InvolutionKind::Tau1, 2, 4),
                  std::invalid_argument);  // 2l + 1 > n
  CHECK_THROWS_AS(canonicalInvolution(InvolutionKind::Tau2, 0, 4),
                  std::invalid_argument);  // needs l >= 1
  CHECK_THROWS_AS(canonicalInvolution(InvolutionKind::Main, 3, 4),
                  std::invalid_argument);  // 2l > n
}

TEST_CASE("transport: closed form matches the monomial substitution oracle") {
  for (int n = 2; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    std::uint32_t matrixStep = (n == 4) ? 7 : 1;  // sample at n = 4
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs);
         mask += matrixStep) {
      ElementaryMatrix e = oracle::unpackMatrix(n, mask);
      for (std::uint32_t minus = 0; minus < (1u << n); ++minus) {
        Involution tau = Involution::allPlus(n);
        tau.minus.bits = minus;
        InvertibleMatrixStream stream(n);
        int taken = 0;
        while (auto p = stream.next()) {
          if (n >= 3 && ++taken > 40) break;  // keep the sweep quick
          auto closed = transportPair(e, tau, *p);
          auto monomial = oracle::monomialTransport(e, tau, *p);
          CHECK(closed.first == monomial.first);
          CHECK(closed.second == monomial.second);
        }
      }
    }
  }
}

TEST_CASE("transport: composition along successive basis changes") {
  ElementaryMatrix e = allMinusMatrix(3);
  Involution tau = involutionOf("-+-");
  Gf2Matrix p1 = Gf2Matrix::fromEntries(3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
  Gf2Matrix p2 = Gf2Matrix::fromEntries(3, 3, {1, 0, 0, 0, 1, 1, 0, 0, 1});
  auto one = transportPair(e, tau, p1);
  auto two = transportPair(one.first, one.second, p2);
  auto direct = transportPair(e, tau, p1 * p2);
  CHECK(two.first == direct.first);
  CHECK(two.second == direct.second);
}

TEST_CASE("classify: golden cases") {
  {
    InvolutionClass cls = classify(allMinusMatrix(3), Involution::allPlus(3));
    CHECK(cls.l == 1);
    CHECK(cls.kind == InvolutionKind::Tau1);
  }
  {
    InvolutionClass cls = classify(allMinusMatrix(4), Involution::allPlus(4));
    CHECK(cls.l == 2);
    CHECK(cls.kind == InvolutionKind::Tau2);
  }
  {
    InvolutionClass cls = classify(hMatrix(1, 2), involutionOf("+-"));
    CHECK(cls.l == 1);
    CHECK(cls.kind == InvolutionKind::Main);
  }
  {
    InvolutionClass cls = classify(hMatrix(0, 2), involutionOf("--"));
    CHECK(cls.l == 0);
    CHECK(cls.kind == InvolutionKind::Tau1);
  }
}

TEST_CASE("classify: witnesses transport onto the canonical pair") {
  for (int n = 1; n <= 3; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      ElementaryMatrix e = oracle::unpackMatrix(n, mask);
      for (std::uint32_t minus = 0; minus < (1u << n); ++minus) {
        Involution tau = Involution::allPlus(n);
        tau.minus.bits = minus;
        InvolutionClass cls = classify(e, tau);
        CHECK(cls.witness.isUnimodular());
        CanonicalPair target = canonicalInvolution(cls.kind, cls.l, n);
        auto moved = transportPair(e, tau, cls.witness.mod2());
        CHECK(moved.first == target.matrix);
        CHECK(moved.second == target.involution);
        // Independent replay through monomial substitution.
        auto oracleMoved = oracle::monomialTransport(e, tau, cls.witness.mod2());
        CHECK(oracleMoved.first == target.matrix);
        CHECK(oracleMoved.second == target.involution);
      }
    }
  }
}

TEST_CASE("classify: the class is a transport invariant") {
  ElementaryMatrix e = allMinusMatrix(4);
  Involution tau = involutionOf("+--+");
  InvolutionClass base = classify(e, tau);
  InvertibleMatrixStream stream(4);
  int taken = 0;
  while (auto p = stream.next()) {
    if (++taken > 120) break;
    auto moved = transportPair(e, tau, *p);
    InvolutionClass cls = classify(moved.first, moved.second);
    CHECK(cls.kind == base.kind);
    CHECK(cls.l == base.l);
  }
}

TEST_CASE("classify: canonical pairs are fixed points of their own class") {
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; 2 * l <= n; ++l) {
      InvolutionClass main =
          classify(hMatrix(l, n), Involution::allPlus(n));
      CHECK(main.kind == InvolutionKind::Main);
      CHECK(main.l == l);
      if (2 * l + 1 <= n) {
        CanonicalPair t1 = canonicalInvolution(InvolutionKind::Tau1, l, n);
        InvolutionClass cls = classify(t1.matrix, t1.involution);
        CHECK(cls.kind == InvolutionKind::Tau1);
        CHECK(cls.l == l);
      }
      if (l >= 1) {
        CanonicalPair t2 = canonicalInvolution(InvolutionKind::Tau2, l, n);
        InvolutionClass cls = classify(t2.matrix, t2.involution);
        CHECK(cls.kind == InvolutionKind::Tau2);
        CHECK(cls.l == l);
      }
    }
  }
}

TEST_CASE("product decompositions: main involutions realizing tau1 and tau2") {
  CHECK(productDecomposition(InvolutionKind::Tau1, 1, 3) == allMinusMatrix(3));
  CHECK(productDecomposition(InvolutionKind::Tau2, 2, 4) == allMinusMatrix(4));
  CHECK(productDecomposition(InvolutionKind::Tau1, 2, 5) ==
        product(hMatrix(1, 2), allMinusMatrix(3)));
  CHECK(productDecomposition(InvolutionKind::Main, 1, 3) == hMatrix(1, 3));

  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; 2 * l <= n; ++l) {
      InvolutionClass cls = classify(
          productDecomposition(InvolutionKind::Main, l, n),
          Involution::allPlus(n));
      CHECK(cls.kind == InvolutionKind::Main);
      CHECK(cls.l == l);
      if (l >= 1 && 2 * l + 1 <= n) {
        InvolutionClass t1 = classify(
            productDecomposition(InvolutionKind::Tau1, l, n),
            Involution::allPlus(n));
        CHECK(t1.kind == InvolutionKind::Tau1);
        CHECK(t1.l == l);
      }
      if (l >= 2) {
        InvolutionClass t2 = classify(
            productDecomposition(InvolutionKind::Tau2, l, n),
            Involution::allPlus(n));
        CHECK(t2.kind == InvolutionKind::Tau2);
        CHECK(t2.l == l);
      }
    }
  }
  CHECK_THROWS_AS(productDecomposition(InvolutionKind::Tau1, 0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(productDecomposition(InvolutionKind::Tau2, 1, 2),
                  std::invalid_argument);
}

TEST_SUITE_END();
