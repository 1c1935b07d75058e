#pragma once

// Constructive reduction of an elementary quantum matrix to the normal form
// h_{l,n} (l hyperbolic 2x2 blocks followed by a commuting block), producing a
// unimodular integer basis-change witness whose column operations replay the
// individual reduction moves.

#include <utility>
#include <vector>

#include "qtorus/gf2.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

struct NormalFormResult {
  int n = 0;
  int l = 0;
  IntUnimodularMatrix witness;  // columns: new basis in old coordinates
  ElementaryMatrix target;      // equals hMatrix(l, n)
};

/// E(h_{l,n}): l blocks with the -1 pair, then the all-commuting tail.
/// Requires 0 <= 2l <= n.
ElementaryMatrix hMatrix(int l, int n);

/// The fully anticommuting elementary matrix (every off-diagonal entry -1);
/// the worked examples m_3, m_4 are allMinusMatrix(3), allMinusMatrix(4).
ElementaryMatrix allMinusMatrix(int n);

/// Block assembly A x B: the two tori commute with each other, so the E
/// encoding is block-diagonal.
ElementaryMatrix product(const ElementaryMatrix& a, const ElementaryMatrix& b);

/// Relabeled matrix E~ with E~_ij = E_{sigma(i) sigma(j)} together with the
/// permutation witness P (column i = e_{sigma(i)}), so that P^T E P = E~.
/// sigma is 0-based, sigma[i] = image of index i.
std::pair<ElementaryMatrix, IntUnimodularMatrix> permute(
    const ElementaryMatrix& e, const std::vector<int>& sigma);

/// The pivot move replacing generator t_q by t_p t_q.  Requires k, p, q
/// distinct and E_kp = E_kq = 1; afterwards the (k, q) entry is 0.  Returns
/// the new matrix and the single-column-operation witness.
std::pair<ElementaryMatrix, IntUnimodularMatrix> pivotStep(
    const ElementaryMatrix& e, int k, int p, int q);

/// Reduce E to h_{l,n} by repeated pivot steps and transpositions, always
/// picking the lowest applicable indices.  The witness replays every move.
NormalFormResult reduce(const ElementaryMatrix& e);

/// Certificate check: the witness op log replays to the stored matrix, the
/// witness is unimodular, congruence maps E exactly onto hMatrix(r.l, n), and
/// l equals rank(E)/2.
bool verifyWitness(const ElementaryMatrix& e, const NormalFormResult& r);

}  // namespace qtorus
