#include "qtorus/torus.hpp"

#include <bit>
#include <stdexcept>

namespace qtorus {

SymbolicUnit SymbolicUnit::one(int k) {
  SymbolicUnit u;
  u.sign = 1;
  u.exponents.assign(static_cast<std::size_t>(k), 0);
  return u;
}

SymbolicUnit SymbolicUnit::minusOne(int k) {
  SymbolicUnit u = one(k);
  u.sign = -1;
  return u;
}

bool SymbolicUnit::isOne() const { return sign == 1 && isNumeric(); }

bool SymbolicUnit::isNumeric() const {
  for (std::int64_t e : exponents) {
    if (e != 0) return false;
  }
  return true;
}

SymbolicUnit SymbolicUnit::times(const SymbolicUnit& other) const {
  if (exponents.size() != other.exponents.size()) {
    throw std::invalid_argument("symbolic unit length mismatch");
  }
  SymbolicUnit out;
  out.sign = sign * other.sign;
  out.exponents.resize(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    out.exponents[i] = checkedAdd(exponents[i], other.exponents[i]);
  }
  return out;
}

SymbolicUnit SymbolicUnit::pow(std::int64_t e) const {
  SymbolicUnit out;
  out.sign = (e % 2 == 0) ? 1 : sign;
  out.exponents.resize(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    out.exponents[i] = checkedMul(exponents[i], e);
  }
  return out;
}

SymbolicUnit SymbolicUnit::inverse() const { return pow(-1); }

int pairSlot(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i >= j) {
    throw std::invalid_argument("pairSlot requires 0 <= i < j < n");
  }
  // Row-major over the strict upper triangle: row i contributes n-1-i slots.
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

QuantumMatrix::QuantumMatrix(int n) : QuantumMatrix(n, n * (n - 1) / 2) {}

QuantumMatrix::QuantumMatrix(int n, int exponentLength)
    : n_(n), expLen_(exponentLength) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("quantum matrix size out of range");
  }
  upper_.assign(static_cast<std::size_t>(n * (n - 1) / 2),
                SymbolicUnit::one(expLen_));
}

QuantumMatrix QuantumMatrix::symbolic(int n) {
  QuantumMatrix q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SymbolicUnit u = SymbolicUnit::one(q.exponentLength());
      u.exponents[static_cast<std::size_t>(pairSlot(n, i, j))] = 1;
      q.setUpper(i, j, u);
    }
  }
  return q;
}

QuantumMatrix QuantumMatrix::fromElementary(const Gf2Matrix& e) {
  if (e.rows() != e.cols()) {
    throw std::invalid_argument("elementary matrix must be square");
  }
  QuantumMatrix q(e.rows(), 0);
  for (int i = 0; i < e.rows(); ++i) {
    for (int j = i + 1; j < e.rows(); ++j) {
      q.setUpper(i, j, e.get(i, j) ? SymbolicUnit::minusOne(0)
                                   : SymbolicUnit::one(0));
    }
  }
  return q;
}

SymbolicUnit QuantumMatrix::entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("quantum matrix index out of range");
  }
  if (i == j) return SymbolicUnit::one(exponentLength());
  if (i < j) return upper_[static_cast<std::size_t>(pairSlot(n_, i, j))];
  return upper_[static_cast<std::size_t>(pairSlot(n_, j, i))].inverse();
}

void QuantumMatrix::setUpper(int i, int j, const SymbolicUnit& value) {
  if (static_cast<int>(value.exponents.size()) != exponentLength()) {
    throw std::invalid_argument("symbolic unit length mismatch");
  }
  upper_[static_cast<std::size_t>(pairSlot(n_, i, j))] = value;
}

ElementaryMatrix::ElementaryMatrix(Gf2Matrix e) : e_(std::move(e)) {
  if (e_.rows() != e_.cols()) {
    throw std::invalid_argument("elementary matrix must be square");
  }
  for (int i = 0; i < e_.rows(); ++i) {
    if (e_.get(i, i)) {
      throw std::invalid_argument("elementary matrix must have zero diagonal");
    }
    for (int j = i + 1; j < e_.rows(); ++j) {
      if (e_.get(i, j) != e_.get(j, i)) {
        throw std::invalid_argument("elementary matrix must be symmetric");
      }
    }
  }
}

Monomial Monomial::unitOfDegree(int exponentLength,
                                std::vector<std::int64_t> degree) {
  Monomial m;
  m.coeff = SymbolicUnit::one(exponentLength);
  m.degree = std::move(degree);
  return m;
}

Gf2Vector Monomial::degreeMod2() const {
  Gf2Vector v(n(), 0);
  for (int i = 0; i < n(); ++i) {
    v.set(i, (degree[static_cast<std::size_t>(i)] % 2) != 0);
  }
  return v;
}

Monomial multiply(const QuantumMatrix& q, const Monomial& x,
                  const Monomial& y) {
  if (x.n() != q.size() || y.n() != q.size()) {
    throw std::invalid_argument("monomial size mismatch");
  }
  Monomial out;
  out.coeff = x.coeff.times(y.coeff);
  out.degree.resize(static_cast<std::size_t>(q.size()));
  for (int i = 0; i < q.size(); ++i) {
    out.degree[static_cast<std::size_t>(i)] =
        checkedAdd(x.degree[static_cast<std::size_t>(i)],
                   y.degree[static_cast<std::size_t>(i)]);
  }
  // t_a t_b = prod_{i<j} q_ij^{a_j b_i} t_{a+b}
  for (int i = 0; i < q.size(); ++i) {
    for (int j = i + 1; j < q.size(); ++j) {
      std::int64_t e = checkedMul(x.degree[static_cast<std::size_t>(j)],
                                  y.degree[static_cast<std::size_t>(i)]);
      if (e != 0) out.coeff = out.coeff.times(q.entry(i, j).pow(e));
    }
  }
  return out;
}

bool commutationSign(const ElementaryMatrix& e, const Gf2Vector& alpha,
                     const Gf2Vector& beta) {
  if (alpha.n != e.size() || beta.n != e.size()) {
    throw std::invalid_argument("commutation sign size mismatch");
  }
  Gf2Vector eb = e.bits().apply(beta);
  return (std::popcount(eb.bits & alpha.bits) & 1) != 0;
}

Involution Involution::allPlus(int n) { return Involution{Gf2Vector(n, 0)}; }

namespace {

/// Q_E(v) = sum_{i<j, E_ij = 1} v_i v_j over GF(2).
bool quadraticPart(const Gf2Matrix& e, const Gf2Vector& v) {
  bool acc = false;
  std::uint32_t bits = v.bits;
  while (bits != 0) {
    int i = std::countr_zero(bits);
    bits &= bits - 1;
    // Pairs (i, j) with j > i, E_ij = 1, v_j = 1.
    std::uint32_t rest = e.rowBits(i) & v.bits & ~((2u << i) - 1);
    acc ^= (std::popcount(rest) & 1) != 0;
  }
  return acc;
}

}  // namespace

QuadraticFormGf2::QuadraticFormGf2(const ElementaryMatrix& e,
                                   const Involution& tau)
    : e_(e), tau_(tau) {
  if (tau.n() != e.size()) {
    throw std::invalid_argument("involution size mismatch");
  }
}

bool QuadraticFormGf2::eval(const Gf2Vector& v) const {
  if (v.n != n()) {
    throw std::invalid_argument("form evaluation size mismatch");
  }
  bool linear = (std::popcount(tau_.minus.bits & v.bits) & 1) != 0;
  return linear ^ quadraticPart(e_.bits(), v);
}

std::uint64_t QuadraticFormGf2::zeroCount() const {
  std::uint64_t zeros = 0;
  std::uint64_t total = std::uint64_t{1} << n();
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!eval(Gf2Vector(n(), static_cast<std::uint32_t>(m)))) ++zeros;
  }
  return zeros;
}

Monomial applyInvolution(const ElementaryMatrix& e, const Involution& tau,
                         const Monomial& x) {
  if (x.n() != e.size() || tau.n() != e.size()) {
    throw std::invalid_argument("involution application size mismatch");
  }
  QuadraticFormGf2 q(e, tau);
  Monomial out = x;
  if (q.eval(x.degreeMod2())) {
    out.coeff.sign = -out.coeff.sign;
  }
  return out;
}

QuadraticFormGf2 fixedDegreeForm(const ElementaryMatrix& e,
                                 const Involution& tau) {
  return QuadraticFormGf2(e, tau);
}

std::uint64_t GradedSubgroup::indexInLattice() const {
  std::vector<std::int64_t> entries(static_cast<std::size_t>(n) * n, 0);
  if (static_cast<int>(generators.size()) != n) {
    throw std::logic_error("graded subgroup basis is not full rank");
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      entries[static_cast<std::size_t>(i) * n + j] =
          generators[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  std::int64_t d = intDeterminant(n, entries);
  return static_cast<std::uint64_t>(d < 0 ? -d : d);
}

bool GradedSubgroup::contains(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument("membership test size mismatch");
  }
  // All basis vectors here are lifts of GF(2) vectors or doubled units, and
  // the subgroup always contains 2Z^n: v belongs iff v mod 2 lies in the
  // GF(2) span of the generators mod 2.
  Gf2Matrix gens(static_cast<int>(generators.size()) + 1, n);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (int i = 0; i < n; ++i) {
      gens.set(static_cast<int>(g), i,
               (generators[g][static_cast<std::size_t>(i)] % 2) != 0);
    }
  }
  int baseRank = gens.rank();
  for (int i = 0; i < n; ++i) {
    gens.set(static_cast<int>(generators.size()), i, (v[i] % 2) != 0);
  }
  return gens.rank() == baseRank;
}

GradedSubgroup subgroupFromKernel(int n, const std::vector<Gf2Vector>& kernel) {
  // Reduce the kernel to RREF so pivot columns are identifiable.
  Gf2Matrix m(static_cast<int>(kernel.size()), n);
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    m.setRowBits(static_cast<int>(i), kernel[i].bits);
  }
  std::vector<int> pivots;
  Gf2Matrix r = m.rref(&pivots);

  GradedSubgroup g;
  g.n = n;
  std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) isPivot[static_cast<std::size_t>(p)] = true;

  // Z-basis: 0/1 lifts of the RREF kernel vectors, plus 2 e_j for every
  // coordinate j that is not a pivot of the kernel.
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) {
      if (r.get(static_cast<int>(i), c)) v[static_cast<std::size_t>(c)] = 1;
    }
    g.generators.push_back(std::move(v));
  }
  for (int j = 0; j < n; ++j) {
    if (isPivot[static_cast<std::size_t>(j)]) continue;
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(j)] = 2;
    g.generators.push_back(std::move(v));
  }

  // Scale profile exists exactly when every kernel basis vector is a standard
  // unit vector (the subgroup then splits along the axes).
  bool axial = true;
  for (std::size_t i = 0; i < pivots.size() && axial; ++i) {
    if (r.rowBits(static_cast<int>(i)) !=
        (1u << pivots[static_cast<std::size_t>(i)])) {
      axial = false;
    }
  }
  if (axial) {
    std::vector<int> profile(static_cast<std::size_t>(n), 2);
    for (int p : pivots) profile[static_cast<std::size_t>(p)] = 1;
    g.scaleProfile = std::move(profile);
  }
  return g;
}

GradedSubgroup centerGradingGroup(const ElementaryMatrix& e) {
  return subgroupFromKernel(e.size(), e.bits().kernelBasis());
}

GradedSubgroup involutionCenter(const ElementaryMatrix& e,
                                const Involution& tau) {
  QuadraticFormGf2 q(e, tau);
  // Q is additive on kernel(E) (polarization: the cross term alpha^T E beta
  // vanishes there), so {v in ker E : Q(v) = 0} is a subspace.
  std::vector<Gf2Vector> kernel = e.bits().kernelBasis();
  std::vector<Gf2Vector> evens;
  std::optional<Gf2Vector> odd;
  for (const Gf2Vector& v : kernel) {
    if (!q.eval(v)) {
      evens.push_back(v);
    } else if (!odd) {
      odd = v;
    } else {
      evens.push_back(v + *odd);  // sum of two odd vectors is even
    }
  }
  return subgroupFromKernel(e.size(), evens);
}

std::optional<ElementaryMatrix> isElementary(const QuantumMatrix& q) {
  Gf2Matrix e(q.size(), q.size());
  for (int i = 0; i < q.size(); ++i) {
    for (int j = i + 1; j < q.size(); ++j) {
      SymbolicUnit u = q.entry(i, j);
      if (!u.isNumeric()) return std::nullopt;
      bool minus = u.sign < 0;
      e.set(i, j, minus);
      e.set(j, i, minus);
    }
  }
  return ElementaryMatrix(e);
}

}  // namespace qtorus
