#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qtorus/gf2.hpp"
#include "qtorus/normal_form.hpp"
#include "qtorus/oracle.hpp"
#include "qtorus/text.hpp"

using namespace qtorus;

TEST_SUITE_BEGIN("normal_form");

TEST_CASE("h matrices: shapes and bounds") {
  CHECK(formatElementary(hMatrix(0, 2)) == "++/++");
  CHECK(formatElementary(hMatrix(1, 2)) == "+-/-+");
  CHECK(formatElementary(hMatrix(2, 4)) == "+-++/-+++/+++-/++-+");
  CHECK(hMatrix(2, 4).bits().rank() == 4);
  CHECK(hMatrix(1, 5).bits().rank() == 2);
  CHECK_THROWS_AS(hMatrix(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(hMatrix(-1, 3), std::invalid_argument);
}

TEST_CASE("product: block-diagonal assembly") {
  ElementaryMatrix p = product(hMatrix(1, 2), allMinusMatrix(3));
  CHECK(p.size() == 5);
  CHECK(p.minusAt(0, 1));
  CHECK(p.minusAt(2, 3));
  CHECK(p.minusAt(3, 4));
  CHECK_FALSE(p.minusAt(1, 2));
  CHECK_FALSE(p.minusAt(0, 4));
  CHECK(p.bits().rank() == 4);
}

TEST_CASE("permute: relabeling with a replayable witness") {
  ElementaryMatrix e = product(hMatrix(1, 2), hMatrix(0, 1));
  auto [relabeled, witness] = permute(e, {2, 0, 1});
  // E~_ij = E_{sigma(i) sigma(j)}: the anticommuting pair moves to (1, 2).
  CHECK_FALSE(relabeled.minusAt(0, 1));
  CHECK(relabeled.minusAt(1, 2));
  CHECK(witness.isUnimodular());
  CHECK(IntUnimodularMatrix::replay(3, witness.opLog()) == witness);
  CHECK(congruence(e.bits(), witness.mod2()) == relabeled.bits());
}

TEST_CASE("pivot step: clears one entry and logs one column op") {
  // m_3: rows 0,1,2 pairwise anticommute; pivot at k=0 with p=1, q=2.
  auto [after, witness] = pivotStep(allMinusMatrix(3), 0, 1, 2);
  CHECK_FALSE(after.minusAt(0, 2));
  CHECK(after.minusAt(0, 1));
  REQUIRE(witness.opLog().size() == 1);
  CHECK(witness.opLog()[0].kind == ElementaryOp::Kind::Add);
  CHECK(congruence(allMinusMatrix(3).bits(), witness.mod2()) == after.bits());
}

TEST_CASE("pivot step: rejects inapplicable positions") {
  CHECK_THROWS_AS(pivotStep(hMatrix(1, 3), 2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(pivotStep(allMinusMatrix(3), 0, 0, 2), std::invalid_argument);
}

TEST_CASE("reduce: worked example m_3 -> h_{1,3}") {
  NormalFormResult r = reduce(allMinusMatrix(3));
  CHECK(r.n == 3);
  CHECK(r.l == 1);
  CHECK(r.target == hMatrix(1, 3));
  CHECK(verifyWitness(allMinusMatrix(3), r));
  // The reduction folds the third generator onto t_1 t_2 t_3: the last
  // witness column is e_1 + e_2 + e_3.
  CHECK(r.witness.get(0, 2) == 1);
  CHECK(r.witness.get(1, 2) == 1);
  CHECK(r.witness.get(2, 2) == 1);
}

TEST_CASE("reduce: worked example m_4 -> h_{2,4}") {
  NormalFormResult r = reduce(allMinusMatrix(4));
  CHECK(r.l == 2);
  CHECK(r.target == hMatrix(2, 4));
  CHECK(verifyWitness(allMinusMatrix(4), r));
}

TEST_CASE("reduce: normal forms are fixed points with identity witnesses") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; 2 * l <= n; ++l) {
      NormalFormResult r = reduce(hMatrix(l, n));
      CHECK(r.l == l);
      CHECK(r.witness == IntUnimodularMatrix::identity(n));
      CHECK(verifyWitness(hMatrix(l, n), r));
    }
  }
}

TEST_CASE("reduce: exhaustive verification at n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      ElementaryMatrix e = oracle::unpackMatrix(n, mask);
      NormalFormResult r = reduce(e);
      CHECK(r.l == oracle::genericReduce(e));
      CHECK(r.target == hMatrix(r.l, n));
      CHECK(verifyWitness(e, r));
    }
  }
}

TEST_CASE("reduce: l is a congruence invariant") {
  for (int n = 2; n <= 3; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      ElementaryMatrix e = oracle::unpackMatrix(n, mask);
      int l = reduce(e).l;
      InvertibleMatrixStream stream(n);
      while (auto p = stream.next()) {
        ElementaryMatrix moved(congruence(e.bits(), *p));
        CHECK(reduce(moved).l == l);
      }
    }
  }
}

TEST_CASE("reduce: additivity under block products") {
  CHECK(reduce(product(hMatrix(1, 2), allMinusMatrix(3))).l == 2);
  CHECK(reduce(product(allMinusMatrix(3), allMinusMatrix(4))).l == 3);
  CHECK(reduce(product(hMatrix(0, 2), allMinusMatrix(4))).l == 2);
}

TEST_CASE("verify witness: rejects forged results") {
  ElementaryMatrix e = allMinusMatrix(3);
  NormalFormResult r = reduce(e);
  NormalFormResult wrongL = r;
  wrongL.l = 0;
  CHECK_FALSE(verifyWitness(e, wrongL));
  NormalFormResult wrongTarget = r;
  wrongTarget.target = hMatrix(0, 3);
  CHECK_FALSE(verifyWitness(e, wrongTarget));
  NormalFormResult wrongMatrix = r;
  wrongMatrix.witness.set(0, 0, 0);
  CHECK_FALSE(verifyWitness(e, wrongMatrix));
}

TEST_SUITE_END();
