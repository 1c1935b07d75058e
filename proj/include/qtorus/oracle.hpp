#pragma once

// Independent brute-force verifiers for the closed-form results.  Nothing
// here calls the code paths it validates: involution signs are recomputed by
// word-reversal monomial products, transports are recomputed by monomial
// substitution, similarity by full (translation, GL) sweeps, and ranks by
// plain elimination.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qtorus/involution.hpp"
#include "qtorus/semilattice.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {
namespace oracle {

/// tau(x) computed the long way: reverse the generator word of x, apply the
/// generator signs, and remultiply with multiply().  Never evaluates the
/// quadratic form.
Monomial monomialInvolution(const ElementaryMatrix& e, const Involution& tau,
                            const Monomial& x);

/// |{kappa in {0,1}^n : tau(t^kappa) = +t^kappa}| for the canonical pair of
/// (kind, l, n), counted via monomialInvolution.  n <= 20.
std::uint64_t bruteIndexCount(InvolutionKind kind, int l, int n);

/// Same count for an arbitrary pair.
std::uint64_t bruteIndexCountPair(const ElementaryMatrix& e,
                                  const Involution& tau);

/// Transport of (E, tau) along P computed monomially: commutation entries
/// from products of the substituted generators x_i = t^{P e_i}, signs from
/// monomialInvolution on the x_i.
std::pair<ElementaryMatrix, Involution> monomialTransport(
    const ElementaryMatrix& e, const Involution& tau, const Gf2Matrix& p);

/// True iff some invertible P monomially transports pairA onto pairB
/// (exhaustive GL sweep; n <= 4).
bool bruteOrbitEquivalent(const ElementaryMatrix& ea, const Involution& ta,
                          const ElementaryMatrix& eb, const Involution& tb);

/// A pair state packed as (matrix mask over the strict upper triangle in
/// row-major order, involution minus-bits).
struct PackedPair {
  std::uint32_t matrixMask = 0;
  std::uint32_t minusMask = 0;
  friend bool operator==(const PackedPair&, const PackedPair&) = default;
};

ElementaryMatrix unpackMatrix(int n, std::uint32_t matrixMask);
std::uint32_t packMatrix(const ElementaryMatrix& e);

/// Orbit partition of all (elementary matrix, involution) pairs of rank n
/// under monomial transport by GL_n(2) (breadth-first closure over
/// transvection generators; n <= 4).  Each orbit is sorted; the orbit list is
/// sorted by smallest element.
std::vector<std::vector<PackedPair>> bruteOrbitPartition(int n);

/// rank(E)/2 by plain Gaussian elimination; asserts the rank is even.
int genericReduce(const ElementaryMatrix& e);

/// Explicit lattice points of the semilattice S encoded by the pattern,
/// truncated to max-norm <= radius.
std::vector<std::vector<std::int64_t>> latticePoints(const CosetPattern& p,
                                                     int radius);

/// Raw axiom replay on explicit points: 0 in S, and every s - 2s' lands back
/// in the (untruncated) pattern.
bool semilatticeAxiomCheck(
    const std::vector<std::vector<std::int64_t>>& points,
    const CosetPattern& pattern, int radius);

/// Similarity by full sweep over (sigma in p, g in GL_n(2)); n <= 4.
std::optional<SimilarityWitness> bruteSimilar(const CosetPattern& p,
                                              const CosetPattern& q);

/// Saturated subgroup via the intersection-of-translates identity.
CosetPattern bruteSaturatedSubgroup(const CosetPattern& p);

ElementaryMatrix randomElementary(int n, std::mt19937_64& rng);
Involution randomInvolution(int n, std::mt19937_64& rng);
/// Random monomial with degree entries in [-degreeBound, degreeBound] and
/// coefficient +-1.
Monomial randomMonomial(int n, int exponentLength, int degreeBound,
                        std::mt19937_64& rng);

}  // namespace oracle
}  // namespace qtorus
