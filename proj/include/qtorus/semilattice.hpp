#pragma once

// Semilattices in the degree lattice, represented as coset patterns mod 2:
// a pattern is the subset T of GF(2)^n of occupied cosets.  Membership,
// index, saturation, similarity (translation + lattice automorphism), and
// the two censuses are computed here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/gf2.hpp"
#include "qtorus/involution.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

/// Maximum pattern rank (bitset of size 2^n).
inline constexpr int kMaxPatternRank = 16;

/// Subset of GF(2)^n as a bitset indexed by the integer value of the vector
/// (bit k of a member = coordinate k+1).
class CosetPattern {
 public:
  CosetPattern() = default;
  /// Empty pattern of the given rank (0 <= n <= 16).
  explicit CosetPattern(int n);

  static CosetPattern full(int n);
  static CosetPattern zeroOnly(int n);
  /// Rebuild from a member mask (rank <= 5 fits in a 32-bit mask).
  static CosetPattern fromMask(int n, std::uint32_t mask);

  int rank() const { return n_; }
  std::uint64_t size() const;

  bool contains(std::uint32_t member) const;
  void insert(std::uint32_t member);
  bool containsZero() const { return contains(0); }

  /// Members in ascending integer order.
  std::vector<std::uint32_t> members() const;
  /// Bitset as a single mask; requires rank <= 5.
  std::uint32_t toMask() const;

  /// T + sigma.
  CosetPattern translate(std::uint32_t sigma) const;
  /// {g(t) : t in T} for invertible g.
  CosetPattern mapBy(const Gf2Matrix& g) const;

  /// Dimension of the GF(2) span of the members.
  int spanDimension() const;
  bool spans() const { return spanDimension() == n_; }

  friend bool operator==(const CosetPattern&, const CosetPattern&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SimilarityWitness {
  std::uint32_t translation = 0;  // sigma, a member of the source pattern
  Gf2Matrix map;                  // invertible; map(source + sigma) = target
};

/// The fixed-degree pattern S(E, tau) = zero set of the quadratic form.
CosetPattern fromInvolution(const ElementaryMatrix& e, const Involution& tau);

/// A pattern is a semilattice in the lattice iff it contains 0 and its
/// members span GF(2)^n (closure under s - 2s' is automatic in the coset
/// representation).
bool isSemilatticeInLambda(const CosetPattern& p);

/// Number of occupied cosets.
std::uint64_t index(const CosetPattern& p);

/// Closed-form index of the canonical patterns: Main -> 2^{n-1} + 2^{n-l-1};
/// Tau1 -> 2^{n-1}; Tau2 -> 2^{n-1} - 2^{n-l-1}.  Parameter bounds as in
/// canonicalInvolution.
std::uint64_t indexFormula(InvolutionKind kind, int l, int n);

/// Subgroup of saturated members {t in T : t + T = T}.
CosetPattern saturatedSubgroup(const CosetPattern& p);

/// n - dim(saturatedSubgroup).
int saturationNumber(const CosetPattern& p);

/// Subgroup pattern {v : v_1 = ... = v_t = 0} (doubled first t axes).
CosetPattern lambdaT(int n, int t);

/// Similarity decision with witness, for patterns containing 0 of equal rank
/// n <= 5.  Rank <= 4 canonicalizes both sides; rank 5 screens by invariants
/// and falls back to an exhaustive basis-image search.
std::optional<SimilarityWitness> similar(const CosetPattern& p,
                                         const CosetPattern& q);

/// Minimum pattern (as an integer bitset) over the whole similarity orbit of
/// p, together with a witness reaching it.  Rank <= 4.
std::pair<CosetPattern, SimilarityWitness> canonicalizePattern(
    const CosetPattern& p);

struct CensusClass {
  InvolutionKind kind = InvolutionKind::Main;
  int l = 0;
  std::uint64_t index = 0;
  int saturation = 0;
  CosetPattern representative;
  /// Number of elementary matrices whose main-involution pattern lands in
  /// this class (filled by censusInvolutive).
  std::uint64_t population = 0;
};

struct InvolutiveCensus {
  int n = 0;
  std::vector<CensusClass> classes;
};

/// Similarity census of the patterns S(E, main involution) over all
/// elementary E of rank n (1 <= n <= 5).  Every class is certified: each
/// elementary matrix is classified and its pattern transported onto the class
/// representative by an explicit witness, and the representatives are checked
/// pairwise non-similar via similar().  Jobs: 0 = auto thread count.
InvolutiveCensus censusInvolutive(int n, int jobs = 0);

struct PatternClass {
  CosetPattern representative;  // minimum bitset in the orbit
  std::uint64_t orbitSize = 0;
  std::uint64_t index = 0;
  int saturation = 0;
  int twist = 0;  // n - span dimension
  /// Set when the class is one of the involutive census classes.
  std::optional<std::pair<InvolutionKind, int>> involutiveTag;
};

struct AllCensus {
  int n = 0;
  std::uint64_t count = 0;  // spanning classes only
  std::vector<PatternClass> classes;
};

/// Census of all spanning patterns containing 0 up to similarity
/// (1 <= n <= 4, exhaustive orbit partition of the full pattern space).
AllCensus censusAll(int n);

/// Orbit partition of ALL patterns containing 0 (spanning or not), classes
/// sorted by representative bitset.  1 <= n <= 4.
std::vector<PatternClass> extendedCensus(int n);

}  // namespace qtorus
