#pragma once

// Truncated extended affine root systems of type C built from (Lambda, S):
// the isotropic stratum Lambda, the short stratum Delta_sh + Lambda, and the
// long stratum Delta_lg + S, plus twist numbers and the class-count
// comparisons between root systems of involution origin and the full pattern
// census.

#include <cstdint>
#include <string>
#include <vector>

#include "qtorus/semilattice.hpp"

namespace qtorus {

struct FiniteRootSystemC {
  int r = 0;
  std::vector<std::vector<int>> shortRoots;  // +-e_i +- e_j, i < j
  std::vector<std::vector<int>> longRoots;   // +-2 e_i
};

/// Standard C_r realization, r >= 3: 2r(r-1) short and 2r long roots, each
/// list sorted lexicographically.
FiniteRootSystemC finiteC(int r);

struct EARSSpec {
  int r = 0;             // finite rank (>= 3)
  int n = 0;             // nullity = rank of Lambda
  CosetPattern pattern;  // S mod 2Lambda; must contain 0
};

enum class Stratum { Isotropic, Short, Long };

std::string stratumName(Stratum s);

struct RootRecord {
  Stratum stratum = Stratum::Isotropic;
  std::vector<int> finite;           // length r
  std::vector<std::int64_t> lambda;  // length n, max-norm <= box
};

/// All roots whose Lambda component has max-norm <= box, ordered by stratum
/// (isotropic, short, long), then finite part, then lambda part, each
/// lexicographically ascending.
std::vector<RootRecord> generateRoots(const EARSSpec& spec, int box);

/// t = n - dim span(T); the twist number of the pattern.
int twistNumber(const CosetPattern& p);

struct EalaClass {
  /// Labels of all list entries that fell into this similarity class, e.g.
  /// "S(4,1,Tau1)" or "Lambda^(3)".
  std::vector<std::string> labels;
  CosetPattern representative;
  std::uint64_t index = 0;
  int saturation = 0;
  int twist = 0;
};

struct EalaCensus {
  int n = 0;
  int r = 0;
  std::uint64_t count = 0;
  std::vector<EalaClass> classes;
};

/// Similarity classes of the candidate semilattice list behind the type-C
/// root systems of nullity n: the canonical patterns S(n,l,*) (l = 0..n/2),
/// S(n,l,Tau1) (2l+1 <= n), S(n,l,Tau2) (1 <= l <= n/2), plus the
/// Lambda^(3) pattern when r = 3 and n >= 3.  1 <= n <= 5, r >= 3.
EalaCensus countEalaClasses(int n, int r);

struct TwistCompareReport {
  int n = 0;
  int t = 0;
  std::uint64_t rCount = 0;   // similarity classes of patterns with twist t
  std::uint64_t lrCount = 0;  // classes of involution origin with twist t
  bool lrSubset = false;      // every LR class appears among the R classes
  bool strict = false;        // lrSubset and lrCount < rCount
  std::vector<std::string> notes;
};

/// Compare the involution-origin class set LR_t against the full pattern
/// census R_t at twist t (exhaustive, 1 <= n <= 4).  The notes record the
/// per-class provenance and the documented scale limit for n >= 5.
TwistCompareReport compareClassSets(int n, int t);

}  // namespace qtorus
