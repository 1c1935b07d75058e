#include "qtorus/oracle.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <stdexcept>

namespace qtorus {
namespace oracle {

Monomial monomialInvolution(const ElementaryMatrix& e, const Involution& tau,
                            const Monomial& x) {
  int n = e.size();
  if (tau.n() != n || x.n() != n) {
    throw std::invalid_argument("involution dimension mismatch");
  }
  if (!x.coeff.exponents.empty()) {
    throw std::invalid_argument(
        "word-reversal involution needs numeric coefficients");
  }
  QuantumMatrix q = e.toQuantum();
  // tau is an anti-automorphism fixing coefficients, so
  // tau(c t_1^{a_1} .. t_n^{a_n}) = c tau(t_n)^{a_n} .. tau(t_1)^{a_1} with
  // tau(t_i) = a_i t_i; remultiply the reversed word factor by factor.
  Monomial acc;
  acc.coeff = x.coeff;
  acc.degree.assign(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    std::int64_t a = x.degree[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    Monomial factor;
    factor.coeff = SymbolicUnit::one(0);
    if (tau.sign(i) < 0 && (a & 1)) factor.coeff.sign = -1;
    factor.degree.assign(static_cast<std::size_t>(n), 0);
    factor.degree[static_cast<std::size_t>(i)] = a;
    acc = multiply(q, acc, factor);
  }
  return acc;
}

std::uint64_t bruteIndexCount(InvolutionKind kind, int l, int n) {
  CanonicalPair pair = canonicalInvolution(kind, l, n);
  return bruteIndexCountPair(pair.matrix, pair.involution);
}

std::uint64_t bruteIndexCountPair(const ElementaryMatrix& e,
                                  const Involution& tau) {
  int n = e.size();
  if (n > 20) {
    throw std::invalid_argument("brute index count limited to n <= 20");
  }
  std::uint64_t count = 0;
  std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t kappa = 0; kappa < limit; ++kappa) {
    std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) degree[static_cast<std::size_t>(i)] = (kappa >> i) & 1;
    Monomial x = Monomial::unitOfDegree(0, degree);
    Monomial image = monomialInvolution(e, tau, x);
    if (image == x) ++count;
  }
  return count;
}

std::pair<ElementaryMatrix, Involution> monomialTransport(
    const ElementaryMatrix& e, const Involution& tau, const Gf2Matrix& p) {
  int n = e.size();
  if (tau.n() != n || p.rows() != n || p.cols() != n) {
    throw std::invalid_argument("transport dimension mismatch");
  }
  if (!p.isInvertible()) {
    throw std::invalid_argument("not a basis change: matrix is singular");
  }
  QuantumMatrix q = e.toQuantum();
  std::vector<Monomial> x;
  x.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      degree[static_cast<std::size_t>(i)] = p.get(i, j) ? 1 : 0;
    }
    x.push_back(Monomial::unitOfDegree(0, degree));
  }
  Gf2Matrix bits(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Monomial ij = multiply(q, x[static_cast<std::size_t>(i)],
                             x[static_cast<std::size_t>(j)]);
      Monomial ji = multiply(q, x[static_cast<std::size_t>(j)],
                             x[static_cast<std::size_t>(i)]);
      if (ij.degree != ji.degree) {
        throw std::logic_error("transport products disagree in degree");
      }
      if (ij.coeff.sign != ji.coeff.sign) {
        bits.set(i, j, true);
        bits.set(j, i, true);
      }
    }
  }
  Involution out = Involution::allPlus(n);
  for (int j = 0; j < n; ++j) {
    Monomial image = monomialInvolution(e, tau, x[static_cast<std::size_t>(j)]);
    if (image.degree != x[static_cast<std::size_t>(j)].degree) {
      throw std::logic_error("involution image changed the degree");
    }
    out.minus.set(j, image.coeff.sign < 0);
  }
  return {ElementaryMatrix(bits), out};
}

bool bruteOrbitEquivalent(const ElementaryMatrix& ea, const Involution& ta,
                          const ElementaryMatrix& eb, const Involution& tb) {
  int n = ea.size();
  if (eb.size() != n || ta.n() != n || tb.n() != n) {
    throw std::invalid_argument("orbit comparison dimension mismatch");
  }
  if (n > 4) {
    throw std::invalid_argument("exhaustive orbit sweep limited to n <= 4");
  }
  InvertibleMatrixStream stream(n);
  while (auto p = stream.next()) {
    auto [te, tt] = monomialTransport(ea, ta, *p);
    if (te == eb && tt == tb) return true;
  }
  return false;
}

ElementaryMatrix unpackMatrix(int n, std::uint32_t matrixMask) {
  Gf2Matrix bits(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((matrixMask >> pairSlot(n, i, j)) & 1) {
        bits.set(i, j, true);
        bits.set(j, i, true);
      }
    }
  }
  return ElementaryMatrix(bits);
}

std::uint32_t packMatrix(const ElementaryMatrix& e) {
  int n = e.size();
  std::uint32_t mask = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (e.minusAt(i, j)) mask |= std::uint32_t{1} << pairSlot(n, i, j);
    }
  }
  return mask;
}

std::vector<std::vector<PackedPair>> bruteOrbitPartition(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("orbit partition limited to n <= 4");
  }
  int pairs = n * (n - 1) / 2;
  auto key = [pairs](const PackedPair& s) {
    return (static_cast<std::uint64_t>(s.minusMask) << pairs) | s.matrixMask;
  };
  std::vector<Gf2Matrix> generators;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      Gf2Matrix h = Gf2Matrix::identity(n);
      h.set(b, a, true);
      generators.push_back(h);
    }
  }
  std::uint64_t space = std::uint64_t{1} << (pairs + n);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(space), 0);
  std::vector<std::vector<PackedPair>> orbits;
  for (std::uint64_t start = 0; start < space; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<PackedPair> orbit;
    std::queue<PackedPair> queue;
    PackedPair first{
        static_cast<std::uint32_t>(start & ((std::uint64_t{1} << pairs) - 1)),
        static_cast<std::uint32_t>(start >> pairs)};
    seen[static_cast<std::size_t>(start)] = 1;
    queue.push(first);
    while (!queue.empty()) {
      PackedPair cur = queue.front();
      queue.pop();
      orbit.push_back(cur);
      ElementaryMatrix e = unpackMatrix(n, cur.matrixMask);
      Involution tau = Involution::allPlus(n);
      tau.minus.bits = cur.minusMask;
      for (const Gf2Matrix& h : generators) {
        auto [te, tt] = monomialTransport(e, tau, h);
        PackedPair next{packMatrix(te), tt.minus.bits};
        std::uint64_t k = key(next);
        if (!seen[static_cast<std::size_t>(k)]) {
          seen[static_cast<std::size_t>(k)] = 1;
          queue.push(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end(),
              [&](const PackedPair& a, const PackedPair& b) {
                return key(a) < key(b);
              });
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [&](const std::vector<PackedPair>& a,
                const std::vector<PackedPair>& b) {
              return key(a.front()) < key(b.front());
            });
  return orbits;
}

int genericReduce(const ElementaryMatrix& e) {
  int n = e.size();
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = e.bits().rowBits(i);
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i) {
      if ((rows[static_cast<std::size_t>(i)] >> col) & 1) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)],
              rows[static_cast<std::size_t>(pivot)]);
    for (int i = 0; i < n; ++i) {
      if (i != rank && ((rows[static_cast<std::size_t>(i)] >> col) & 1)) {
        rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    ++rank;
  }
  if (rank % 2 != 0) {
    throw std::logic_error("alternating matrix has odd rank");
  }
  return rank / 2;
}

std::vector<std::vector<std::int64_t>> latticePoints(const CosetPattern& p,
                                                     int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  int n = p.rank();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int at) -> void {
    if (at == n) {
      std::uint32_t parity = 0;
      for (int k = 0; k < n; ++k) {
        if (cur[static_cast<std::size_t>(k)] & 1) parity |= std::uint32_t{1} << k;
      }
      if (p.contains(parity)) out.push_back(cur);
      return;
    }
    for (std::int64_t v = -radius; v <= radius; ++v) {
      cur[static_cast<std::size_t>(at)] = v;
      self(self, at + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool semilatticeAxiomCheck(
    const std::vector<std::vector<std::int64_t>>& points,
    const CosetPattern& pattern, int radius) {
  int n = pattern.rank();
  std::set<std::vector<std::int64_t>> have(points.begin(), points.end());
  std::vector<std::int64_t> zero(static_cast<std::size_t>(n), 0);
  if (!have.count(zero)) return false;
  auto parityOf = [n](const std::vector<std::int64_t>& v) {
    std::uint32_t parity = 0;
    for (int k = 0; k < n; ++k) {
      if (v[static_cast<std::size_t>(k)] & 1) parity |= std::uint32_t{1} << k;
    }
    return parity;
  };
  for (const auto& s : points) {
    if (static_cast<int>(s.size()) != n) return false;
    bool inBox = true;
    for (std::int64_t v : s) {
      if (v < -radius || v > radius) inBox = false;
    }
    if (!inBox || !pattern.contains(parityOf(s))) return false;
  }
  // Completeness inside the box.
  for (const auto& s : latticePoints(pattern, radius)) {
    if (!have.count(s)) return false;
  }
  // The defining closure s - 2 s': membership in the untruncated set is a
  // parity question; points that stay inside the box must appear verbatim.
  for (const auto& s : points) {
    for (const auto& t : points) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(n));
      bool inBox = true;
      for (int k = 0; k < n; ++k) {
        v[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)] -
                                         2 * t[static_cast<std::size_t>(k)];
        if (v[static_cast<std::size_t>(k)] < -radius ||
            v[static_cast<std::size_t>(k)] > radius) {
          inBox = false;
        }
      }
      if (!pattern.contains(parityOf(v))) return false;
      if (inBox && !have.count(v)) return false;
    }
  }
  return true;
}

std::optional<SimilarityWitness> bruteSimilar(const CosetPattern& p,
                                              const CosetPattern& q) {
  if (p.rank() != q.rank()) {
    throw std::invalid_argument("similarity requires equal ranks");
  }
  int n = p.rank();
  if (n < 1 || n > 4) {
    throw std::invalid_argument("exhaustive similarity sweep limited to n <= 4");
  }
  if (!p.containsZero() || !q.containsZero()) {
    throw std::invalid_argument("similarity requires 0 in both patterns");
  }
  for (std::uint32_t sigma : p.members()) {
    CosetPattern p0 = p.translate(sigma);
    InvertibleMatrixStream stream(n);
    while (auto g = stream.next()) {
      if (p0.mapBy(*g) == q) return SimilarityWitness{sigma, *g};
    }
  }
  return std::nullopt;
}

CosetPattern bruteSaturatedSubgroup(const CosetPattern& p) {
  // t + T = T  <=>  t lies in every translate T + m, m in T.
  CosetPattern result = p;
  for (std::uint32_t m : p.members()) {
    CosetPattern translated = p.translate(m);
    CosetPattern next(p.rank());
    for (std::uint32_t c : result.members()) {
      if (translated.contains(c)) next.insert(c);
    }
    result = next;
  }
  return result;
}

ElementaryMatrix randomElementary(int n, std::mt19937_64& rng) {
  Gf2Matrix bits(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1) {
        bits.set(i, j, true);
        bits.set(j, i, true);
      }
    }
  }
  return ElementaryMatrix(bits);
}

Involution randomInvolution(int n, std::mt19937_64& rng) {
  Involution tau = Involution::allPlus(n);
  for (int i = 0; i < n; ++i) tau.minus.set(i, rng() & 1);
  return tau;
}

Monomial randomMonomial(int n, int exponentLength, int degreeBound,
                        std::mt19937_64& rng) {
  if (degreeBound < 0) {
    throw std::invalid_argument("degree bound must be non-negative");
  }
  Monomial x;
  x.coeff = (rng() & 1) ? SymbolicUnit::minusOne(exponentLength)
                        : SymbolicUnit::one(exponentLength);
  x.degree.assign(static_cast<std::size_t>(n), 0);
  std::uint64_t width = 2 * static_cast<std::uint64_t>(degreeBound) + 1;
  for (int i = 0; i < n; ++i) {
    x.degree[static_cast<std::size_t>(i)] =
        static_cast<std::int64_t>(rng() % width) - degreeBound;
  }
  return x;
}

}  // namespace oracle
}  // namespace qtorus
