#pragma once

// Classification of (elementary torus, graded involution) pairs into the
// three canonical types, with explicit basis-change witnesses, plus the
// product decompositions realizing the non-main canonical pairs as main
// involutions on product tori.

#include <string>
#include <utility>

#include "qtorus/gf2.hpp"
#include "qtorus/normal_form.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

enum class InvolutionKind { Main, Tau1, Tau2 };

std::string kindName(InvolutionKind kind);

/// Canonical pair on h_{l,n}: Main = all +; Tau1 = single - at 1-based
/// position 2l+1 (requires n - 2l >= 1); Tau2 = - at 1-based positions
/// 2l-1, 2l (requires l >= 1).
struct CanonicalPair {
  ElementaryMatrix matrix;
  Involution involution;
};

CanonicalPair canonicalInvolution(InvolutionKind kind, int l, int n);

struct InvolutionClass {
  int n = 0;
  int l = 0;
  InvolutionKind kind = InvolutionKind::Main;
  IntUnimodularMatrix witness;
};

/// Transport of a pair along a GF(2) basis change: E' = P^T E P and
/// a'_j = sign given by Q(P e_j), the closed form of substituting the new
/// monomial generators into the involution.
std::pair<ElementaryMatrix, Involution> transportPair(const ElementaryMatrix& e,
                                                      const Involution& tau,
                                                      const Gf2Matrix& p);

/// Full classification: reduce E, then normalize the transported sign vector
/// block by block.  Transporting (E, tau) along the returned witness yields
/// exactly canonicalInvolution(kind, l, n).
InvolutionClass classify(const ElementaryMatrix& e, const Involution& tau);

/// The matrix whose pair with the main involution is isomorphic to the given
/// canonical non-main pair: Tau1 (l >= 1) -> h_{l-1,n-3} x allMinus(3);
/// Tau2 (l >= 2) -> h_{l-2,n-4} x allMinus(4).
ElementaryMatrix productDecomposition(InvolutionKind kind, int l, int n);

}  // namespace qtorus
