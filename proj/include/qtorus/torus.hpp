#pragma once

// Graded monomial calculus of a quantum torus: multiplication of monomials,
// commutation signs, centers, graded involutions, and the fixed-degree
// quadratic form over GF(2).
//
// Commutation constants live in the multiplicative group {+,-1} x Z^(n(n-1)/2)
// (a sign times an exponent vector of formal generators, one per unordered
// index pair), so every identity is exact and no concrete field ever enters.
// An elementary torus is the specialization where every constant is +-1.

#include <cstdint>
#include <optional>
#include <vector>

#include "qtorus/gf2.hpp"

namespace qtorus {

/// Element of the coefficient group {+1,-1} x Z^k: a sign and an exponent
/// vector over the formal generators g_ij (i < j), flattened in row-major
/// (i, j) order.
struct SymbolicUnit {
  int sign = 1;  // +1 or -1
  std::vector<std::int64_t> exponents;

  static SymbolicUnit one(int k);
  static SymbolicUnit minusOne(int k);

  bool isOne() const;
  /// True when no formal generator survives (exponents all zero).
  bool isNumeric() const;

  SymbolicUnit times(const SymbolicUnit& other) const;
  SymbolicUnit pow(std::int64_t e) const;
  SymbolicUnit inverse() const;

  friend bool operator==(const SymbolicUnit&, const SymbolicUnit&) = default;
};

/// Flattened slot of the unordered pair (i, j), i < j, inside an exponent
/// vector of length n(n-1)/2.
int pairSlot(int n, int i, int j);

/// n x n multiplicatively antisymmetric matrix of commutation constants
/// q_ij with q_ii = 1 and q_ji = q_ij^{-1}, entries in the symbolic-unit
/// group.  Only the upper triangle is stored.
class QuantumMatrix {
 public:
  /// All-ones matrix with full symbolic capacity (exponent vectors of length
  /// n(n-1)/2); entries may then be set via setUpper.
  explicit QuantumMatrix(int n);

  /// Fully symbolic matrix: q_ij = g_ij for i < j.
  static QuantumMatrix symbolic(int n);
  /// Specialization with q_ij = -1 exactly where E_ij = 1; coefficients are
  /// purely numeric, so exponent vectors have length 0.
  static QuantumMatrix fromElementary(const Gf2Matrix& e);

  int size() const { return n_; }
  int exponentLength() const { return expLen_; }

  /// Entry q_ij for any ordered pair, applying the inverse rule below the
  /// diagonal; q_ii = 1.
  SymbolicUnit entry(int i, int j) const;
  void setUpper(int i, int j, const SymbolicUnit& value);

  friend bool operator==(const QuantumMatrix&, const QuantumMatrix&) = default;

 private:
  QuantumMatrix(int n, int exponentLength);

  int n_;
  int expLen_;
  std::vector<SymbolicUnit> upper_;  // slot order of pairSlot
};

/// Elementary quantum matrix: the GF(2) encoding E with E_ij = 1 meaning the
/// commutation constant between t_i and t_j is -1.  Symmetric, zero diagonal.
class ElementaryMatrix {
 public:
  ElementaryMatrix() = default;
  explicit ElementaryMatrix(Gf2Matrix e);

  int size() const { return e_.rows(); }
  const Gf2Matrix& bits() const { return e_; }
  bool minusAt(int i, int j) const { return e_.get(i, j); }

  QuantumMatrix toQuantum() const { return QuantumMatrix::fromElementary(e_); }

  friend bool operator==(const ElementaryMatrix&,
                         const ElementaryMatrix&) = default;

 private:
  Gf2Matrix e_;
};

/// Monomial c * t_1^{a_1} ... t_n^{a_n} with an exact symbolic coefficient.
struct Monomial {
  SymbolicUnit coeff;
  std::vector<std::int64_t> degree;

  static Monomial unitOfDegree(int exponentLength,
                               std::vector<std::int64_t> degree);

  int n() const { return static_cast<int>(degree.size()); }
  Gf2Vector degreeMod2() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Product of normalized monomials under the quantum-torus multiplication
/// rule: t_a t_b = prod_{i<j} q_ij^{a_j b_i} t_{a+b}.
Monomial multiply(const QuantumMatrix& q, const Monomial& x, const Monomial& y);

/// Bit alpha^T E beta mod 2: 0 means t_alpha and t_beta commute, 1 means they
/// anticommute.
bool commutationSign(const ElementaryMatrix& e, const Gf2Vector& alpha,
                     const Gf2Vector& beta);

/// Graded involution type: sign vector a in {+-1}^n, stored as the GF(2)
/// vector of its -1 positions.
struct Involution {
  Gf2Vector minus;  // bit i set <=> a_i = -1

  static Involution allPlus(int n);

  int n() const { return minus.n; }
  int sign(int i) const { return minus.get(i) ? -1 : +1; }

  friend bool operator==(const Involution&, const Involution&) = default;
};

/// The GF(2) quadratic form Q(v) = <a, v> + sum_{i<j, E_ij=1} v_i v_j whose
/// zero set describes the tau-fixed degrees mod 2.  Its polar form is the
/// bilinear form of E.
class QuadraticFormGf2 {
 public:
  QuadraticFormGf2() = default;
  QuadraticFormGf2(const ElementaryMatrix& e, const Involution& tau);

  int n() const { return e_.size(); }
  /// Q(v) as a bit: 1 means tau(t^v) = -t^v.
  bool eval(const Gf2Vector& v) const;
  /// Number of zeros of Q on all of GF(2)^n.
  std::uint64_t zeroCount() const;

  const ElementaryMatrix& matrix() const { return e_; }
  const Involution& involution() const { return tau_; }

 private:
  ElementaryMatrix e_;
  Involution tau_;
};

/// tau(x) for the graded involution of the given type on the elementary torus:
/// same degree, coefficient multiplied by (-1)^{<a, v> + Q_E(v)} with v the
/// degree mod 2.  Applying it twice returns x.
Monomial applyInvolution(const ElementaryMatrix& e, const Involution& tau,
                         const Monomial& x);

/// The quadratic form of the pair (E, tau); see QuadraticFormGf2.
QuadraticFormGf2 fixedDegreeForm(const ElementaryMatrix& e,
                                 const Involution& tau);

/// Graded subgroup of Z^n containing 2Z^n: stored as an explicit Z-basis, with
/// a scale profile (d_1..d_n, d_i in {1,2}) when the subgroup is the direct
/// sum of d_i * Z e_i.
struct GradedSubgroup {
  int n = 0;
  /// Basis vectors (columns of a full-rank integer matrix).
  std::vector<std::vector<std::int64_t>> generators;
  /// Present iff the subgroup splits along the standard axes.
  std::optional<std::vector<int>> scaleProfile;

  /// Index in Z^n = |det| of the generator matrix.
  std::uint64_t indexInLattice() const;
  /// Membership test for an integer vector.
  bool contains(const std::vector<std::int64_t>& v) const;
};

/// Subgroup {alpha : E alpha = 0 mod 2} of degrees whose monomials are
/// central; for E(h_{l,n}) the scale profile is 2,..,2,1,..,1 with 2l twos.
GradedSubgroup centerGradingGroup(const ElementaryMatrix& e);

/// Subgroup {alpha : E alpha = 0 mod 2 and Q(alpha) = 0} of degrees whose
/// monomials are central and tau-fixed (Q is additive on the kernel of E by
/// polarization, so this is a subgroup).
GradedSubgroup involutionCenter(const ElementaryMatrix& e,
                                const Involution& tau);

/// The elementary specialization of q, if every entry is numeric +-1;
/// empty means no graded involution exists on F_q.
std::optional<ElementaryMatrix> isElementary(const QuantumMatrix& q);

/// Subgroup of Z^n whose mod-2 reduction lies in the span of the given GF(2)
/// vectors (and which contains 2Z^n).  Shared helper behind the two center
/// operations.
GradedSubgroup subgroupFromKernel(int n, const std::vector<Gf2Vector>& kernel);

}  // namespace qtorus
