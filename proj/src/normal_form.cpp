#include "qtorus/normal_form.hpp"

#include <bit>
#include <stdexcept>

namespace qtorus {

ElementaryMatrix hMatrix(int l, int n) {
  if (l < 0 || n < 1 || 2 * l > n) {
    throw std::invalid_argument("hMatrix requires 0 <= 2l <= n, n >= 1");
  }
  Gf2Matrix e(n, n);
  for (int b = 0; b < l; ++b) {
    e.set(2 * b, 2 * b + 1, true);
    e.set(2 * b + 1, 2 * b, true);
  }
  return ElementaryMatrix(e);
}

ElementaryMatrix allMinusMatrix(int n) {
  if (n < 1) {
    throw std::invalid_argument("allMinusMatrix requires n >= 1");
  }
  Gf2Matrix e(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) e.set(i, j, true);
    }
  }
  return ElementaryMatrix(e);
}

ElementaryMatrix product(const ElementaryMatrix& a, const ElementaryMatrix& b) {
  int k = a.size();
  int m = b.size();
  Gf2Matrix e(k + m, k + m);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) e.set(i, j, a.bits().get(i, j));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) e.set(k + i, k + j, b.bits().get(i, j));
  }
  return ElementaryMatrix(e);
}

std::pair<ElementaryMatrix, IntUnimodularMatrix> permute(
    const ElementaryMatrix& e, const std::vector<int>& sigma) {
  int n = e.size();
  if (static_cast<int>(sigma.size()) != n) {
    throw std::invalid_argument("permutation length mismatch");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  Gf2Matrix tilde(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      tilde.set(i, j, e.bits().get(sigma[static_cast<std::size_t>(i)],
                                   sigma[static_cast<std::size_t>(j)]));
    }
  }
  // Column i of P is e_{sigma(i)}, realized as a swap sequence so the op log
  // replays; the loop below is a plain selection sort into sigma order.
  IntUnimodularMatrix p = IntUnimodularMatrix::identity(n);
  std::vector<int> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < n; ++i) {
    int want = sigma[static_cast<std::size_t>(i)];
    if (current[static_cast<std::size_t>(i)] == want) continue;
    int where = i;
    for (int j = i + 1; j < n; ++j) {
      if (current[static_cast<std::size_t>(j)] == want) {
        where = j;
        break;
      }
    }
    p.swapColumns(i, where);
    std::swap(current[static_cast<std::size_t>(i)],
              current[static_cast<std::size_t>(where)]);
  }
  return {ElementaryMatrix(tilde), p};
}

std::pair<ElementaryMatrix, IntUnimodularMatrix> pivotStep(
    const ElementaryMatrix& e, int k, int p, int q) {
  int n = e.size();
  if (k < 0 || p < 0 || q < 0 || k >= n || p >= n || q >= n || k == p ||
      k == q || p == q) {
    throw std::invalid_argument("pivot not applicable: indices not distinct");
  }
  if (!e.bits().get(k, p) || !e.bits().get(k, q)) {
    throw std::invalid_argument(
        "pivot not applicable: requires -1 entries at (k,p) and (k,q)");
  }
  IntUnimodularMatrix w = IntUnimodularMatrix::identity(n);
  w.addColumn(p, q);
  Gf2Matrix eta = congruence(e.bits(), w.mod2());
  return {ElementaryMatrix(eta), w};
}

namespace {

/// In-place congruence by the elementary column operation col q += col p.
void applyAddInPlace(Gf2Matrix& e, int p, int q) {
  int n = e.rows();
  for (int i = 0; i < n; ++i) e.set(i, q, e.get(i, q) ^ e.get(i, p));
  e.setRowBits(q, e.rowBits(q) ^ e.rowBits(p));
}

/// In-place congruence by a column swap (symmetric row+column swap).
void applySwapInPlace(Gf2Matrix& e, int p, int q) {
  int n = e.rows();
  for (int i = 0; i < n; ++i) {
    bool tmp = e.get(i, p);
    e.set(i, p, e.get(i, q));
    e.set(i, q, tmp);
  }
  std::uint32_t rp = e.rowBits(p);
  e.setRowBits(p, e.rowBits(q));
  e.setRowBits(q, rp);
}

}  // namespace

NormalFormResult reduce(const ElementaryMatrix& input) {
  int n = input.size();
  Gf2Matrix e = input.bits();
  IntUnimodularMatrix w = IntUnimodularMatrix::identity(n);

  auto addColumn = [&](int p, int q) {
    w.addColumn(p, q);
    applyAddInPlace(e, p, q);
  };
  auto swapColumns = [&](int p, int q) {
    w.swapColumns(p, q);
    applySwapInPlace(e, p, q);
  };

  std::vector<int> pairStarts;
  std::vector<int> singles;

  int s = 0;
  while (s < n) {
    // Ones of row s strictly beyond column s; earlier columns are already in
    // finished blocks and hold no entries here.
    auto windowOnes = [&]() {
      return e.rowBits(s) & ~((s == 31) ? 0u : ((2u << s) - 1));
    };
    if (windowOnes() == 0) {
      singles.push_back(s);
      ++s;
      continue;
    }
    // Clear row s down to a single -1: pivot on the two lowest entries; the
    // row index s plays the role of the third index of the pivot move.
    while (std::popcount(windowOnes()) > 1) {
      std::uint32_t bits = windowOnes();
      int j1 = std::countr_zero(bits);
      bits &= bits - 1;
      int j2 = std::countr_zero(bits);
      addColumn(j1, j2);
    }
    int j1 = std::countr_zero(windowOnes());
    if (j1 != s + 1) swapColumns(s + 1, j1);
    // Clear row s+1 beyond the block using column s (this preserves row s).
    for (int j = s + 2; j < n; ++j) {
      if (e.get(s + 1, j)) addColumn(s, j);
    }
    pairStarts.push_back(s);
    s += 2;
  }

  // Gather: hyperbolic pairs first (in discovery order), then the commuting
  // indices, realized as column swaps so the witness replays.
  std::vector<int> order;
  for (int ps : pairStarts) {
    order.push_back(ps);
    order.push_back(ps + 1);
  }
  for (int sg : singles) order.push_back(sg);

  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(i)] = i;
  std::vector<int> occupant(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) occupant[static_cast<std::size_t>(i)] = i;
  for (int target = 0; target < n; ++target) {
    int wanted = order[static_cast<std::size_t>(target)];
    int cur = position[static_cast<std::size_t>(wanted)];
    if (cur == target) continue;
    swapColumns(target, cur);
    int other = occupant[static_cast<std::size_t>(target)];
    std::swap(occupant[static_cast<std::size_t>(target)],
              occupant[static_cast<std::size_t>(cur)]);
    position[static_cast<std::size_t>(wanted)] = target;
    position[static_cast<std::size_t>(other)] = cur;
  }

  int l = static_cast<int>(pairStarts.size());
  ElementaryMatrix target = hMatrix(l, n);
  if (!(e == target.bits())) {
    throw std::logic_error("reduction did not reach the normal form");
  }
  if (congruence(input.bits(), w.mod2()) != target.bits()) {
    throw std::logic_error("reduction witness does not check out");
  }

  NormalFormResult result;
  result.n = n;
  result.l = l;
  result.witness = std::move(w);
  result.target = target;
  return result;
}

bool verifyWitness(const ElementaryMatrix& e, const NormalFormResult& r) {
  int n = e.size();
  if (r.n != n || r.witness.size() != n) return false;
  if (r.l < 0 || 2 * r.l > n) return false;
  if (IntUnimodularMatrix::replay(n, r.witness.opLog()) != r.witness) {
    return false;
  }
  if (!r.witness.isUnimodular()) return false;
  ElementaryMatrix target = hMatrix(r.l, n);
  if (!(r.target == target)) return false;
  Gf2Matrix p = r.witness.mod2();
  if (!p.isInvertible()) return false;
  if (congruence(e.bits(), p) != target.bits()) return false;
  return e.bits().rank() == 2 * r.l;
}

}  // namespace qtorus
