#include "qtorus/gf2.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace qtorus {

namespace {

void checkDim(int n) {
  if (n < 0 || n > kMaxDim) {
    throw std::invalid_argument("dimension out of range [0, 24]: " +
                                std::to_string(n));
  }
}

void checkIndex(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw std::invalid_argument(std::string(what) + " index out of range: " +
                                std::to_string(i));
  }
}

}  // namespace

Gf2Vector::Gf2Vector(int n_, std::uint32_t bits_) : n(n_), bits(bits_) {
  checkDim(n_);
  if (n_ < 32 && (bits_ >> n_) != 0) {
    throw std::invalid_argument("vector bits exceed dimension");
  }
}

bool Gf2Vector::get(int i) const {
  checkIndex(i, n, "vector");
  return (bits >> i) & 1u;
}

void Gf2Vector::set(int i, bool value) {
  checkIndex(i, n, "vector");
  if (value) {
    bits |= (1u << i);
  } else {
    bits &= ~(1u << i);
  }
}

int Gf2Vector::weight() const { return std::popcount(bits); }

Gf2Vector operator+(Gf2Vector a, Gf2Vector b) {
  if (a.n != b.n) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  return Gf2Vector(a.n, a.bits ^ b.bits);
}

Gf2Vector gf2Unit(int n, int i) {
  checkDim(n);
  checkIndex(i, n, "unit");
  return Gf2Vector(n, 1u << i);
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  checkDim(rows);
  checkDim(cols);
  row_.assign(static_cast<std::size_t>(rows), 0u);
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.row_[i] = 1u << i;
  return m;
}

Gf2Matrix Gf2Matrix::zero(int rows, int cols) { return Gf2Matrix(rows, cols); }

Gf2Matrix Gf2Matrix::fromEntries(int rows, int cols,
                                 const std::vector<int>& entries) {
  if (entries.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("entry count does not match shape");
  }
  Gf2Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m.set(i, j, entries[static_cast<std::size_t>(i) * cols + j] != 0);
    }
  }
  return m;
}

bool Gf2Matrix::get(int i, int j) const {
  checkIndex(i, rows_, "row");
  checkIndex(j, cols_, "column");
  return (row_[i] >> j) & 1u;
}

void Gf2Matrix::set(int i, int j, bool value) {
  checkIndex(i, rows_, "row");
  checkIndex(j, cols_, "column");
  if (value) {
    row_[i] |= (1u << j);
  } else {
    row_[i] &= ~(1u << j);
  }
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    std::uint32_t r = row_[i];
    while (r != 0) {
      int j = std::countr_zero(r);
      r &= r - 1;
      t.row_[j] |= (1u << i);
    }
  }
  return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  Gf2Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::uint32_t r = row_[i];
    std::uint32_t acc = 0;
    while (r != 0) {
      int k = std::countr_zero(r);
      r &= r - 1;
      acc ^= rhs.row_[k];
    }
    out.row_[i] = acc;
  }
  return out;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
  if (cols_ != v.n) {
    throw std::invalid_argument("matrix-vector shape mismatch");
  }
  std::uint32_t out = 0;
  for (int i = 0; i < rows_; ++i) {
    if (std::popcount(row_[i] & v.bits) & 1) out |= (1u << i);
  }
  return Gf2Vector(rows_, out);
}

Gf2Matrix Gf2Matrix::rref(std::vector<int>* pivotColumns) const {
  Gf2Matrix m = *this;
  if (pivotColumns != nullptr) pivotColumns->clear();
  int pivotRow = 0;
  for (int col = 0; col < cols_ && pivotRow < rows_; ++col) {
    int found = -1;
    for (int r = pivotRow; r < rows_; ++r) {
      if ((m.row_[r] >> col) & 1u) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(m.row_[pivotRow], m.row_[found]);
    for (int r = 0; r < rows_; ++r) {
      if (r != pivotRow && ((m.row_[r] >> col) & 1u)) {
        m.row_[r] ^= m.row_[pivotRow];
      }
    }
    if (pivotColumns != nullptr) pivotColumns->push_back(col);
    ++pivotRow;
  }
  return m;
}

int Gf2Matrix::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

Gf2Matrix Gf2Matrix::inverse() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("inverse requires a square matrix");
  }
  int n = rows_;
  // Gauss-Jordan on [M | I] packed into one word per row.
  std::vector<std::uint64_t> aug(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    aug[i] = static_cast<std::uint64_t>(row_[i]) |
             (static_cast<std::uint64_t>(1u) << (n + i));
  }
  int pivotRow = 0;
  for (int col = 0; col < n; ++col) {
    int found = -1;
    for (int r = pivotRow; r < n; ++r) {
      if ((aug[r] >> col) & 1u) {
        found = r;
        break;
      }
    }
    if (found < 0) {
      throw std::invalid_argument("matrix is singular over GF(2)");
    }
    std::swap(aug[pivotRow], aug[found]);
    for (int r = 0; r < n; ++r) {
      if (r != pivotRow && ((aug[r] >> col) & 1u)) aug[r] ^= aug[pivotRow];
    }
    ++pivotRow;
  }
  Gf2Matrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    inv.row_[i] = static_cast<std::uint32_t>(aug[i] >> n);
  }
  return inv;
}

std::vector<Gf2Vector> Gf2Matrix::kernelBasis() const {
  std::vector<int> pivots;
  Gf2Matrix r = rref(&pivots);
  std::vector<bool> isPivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivots) isPivot[static_cast<std::size_t>(c)] = true;

  std::vector<Gf2Vector> basis;
  for (int freeCol = 0; freeCol < cols_; ++freeCol) {
    if (isPivot[static_cast<std::size_t>(freeCol)]) continue;
    Gf2Vector v(cols_, 0);
    v.set(freeCol, true);
    // Back-substitute: pivot row i has its pivot at pivots[i].
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (r.get(static_cast<int>(i), freeCol)) {
        v.set(pivots[i], true);
      }
    }
    basis.push_back(v);
  }
  return basis;
}

Gf2Matrix congruence(const Gf2Matrix& e, const Gf2Matrix& p) {
  if (e.rows() != e.cols()) {
    throw std::invalid_argument("congruence requires a square matrix");
  }
  if (p.rows() != e.rows() || p.cols() != e.rows()) {
    throw std::invalid_argument("congruence shape mismatch");
  }
  if (!p.isInvertible()) {
    throw std::invalid_argument("not a basis change: matrix is singular");
  }
  return p.transpose() * e * p;
}

InvertibleMatrixStream::InvertibleMatrixStream(int n) : n_(n) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument(
        "full GL enumeration is supported for 1 <= n <= 5 only");
  }
  limit_ = std::uint64_t{1} << (n * n);
}

std::optional<Gf2Matrix> InvertibleMatrixStream::next() {
  while (counter_ < limit_) {
    std::uint64_t c = counter_++;
    // Entry (i, j) is bit (n^2 - 1) - (i*n + j) of the counter, so the
    // row-major concatenation read most-significant-first equals the counter.
    Gf2Matrix m(n_, n_);
    bool anyZeroRow = false;
    for (int i = 0; i < n_; ++i) {
      std::uint32_t rowBits = 0;
      for (int j = 0; j < n_; ++j) {
        int shift = n_ * n_ - 1 - (i * n_ + j);
        if ((c >> shift) & 1u) rowBits |= (1u << j);
      }
      if (rowBits == 0) anyZeroRow = true;
      m.setRowBits(i, rowBits);
    }
    if (anyZeroRow) continue;
    if (m.isInvertible()) return m;
  }
  return std::nullopt;
}

std::uint64_t InvertibleMatrixStream::groupOrder(int n) {
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) {
    order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  }
  return order;
}

std::string ElementaryOp::describe() const {
  switch (kind) {
    case Kind::Add:
      return "add(" + std::to_string(p + 1) + "->" + std::to_string(q + 1) +
             ")";
    case Kind::Swap:
      return "swap(" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
             ")";
    case Kind::Negate:
      return "negate(" + std::to_string(p + 1) + ")";
  }
  return "?";
}

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in witness arithmetic (add)");
  }
  return out;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in witness arithmetic (mul)");
  }
  return out;
}

IntUnimodularMatrix::IntUnimodularMatrix(int n) : n_(n) {
  checkDim(n);
  entries_.assign(static_cast<std::size_t>(n) * n, 0);
}

IntUnimodularMatrix IntUnimodularMatrix::identity(int n) {
  IntUnimodularMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::int64_t IntUnimodularMatrix::get(int i, int j) const {
  checkIndex(i, n_, "row");
  checkIndex(j, n_, "column");
  return entries_[static_cast<std::size_t>(i) * n_ + j];
}

void IntUnimodularMatrix::set(int i, int j, std::int64_t value) {
  checkIndex(i, n_, "row");
  checkIndex(j, n_, "column");
  entries_[static_cast<std::size_t>(i) * n_ + j] = value;
}

void IntUnimodularMatrix::addColumn(int p, int q) {
  checkIndex(p, n_, "column");
  checkIndex(q, n_, "column");
  if (p == q) {
    throw std::invalid_argument("column add requires distinct columns");
  }
  for (int i = 0; i < n_; ++i) {
    set(i, q, checkedAdd(get(i, q), get(i, p)));
  }
  ops_.push_back({ElementaryOp::Kind::Add, p, q});
}

void IntUnimodularMatrix::swapColumns(int p, int q) {
  checkIndex(p, n_, "column");
  checkIndex(q, n_, "column");
  if (p == q) {
    throw std::invalid_argument("column swap requires distinct columns");
  }
  for (int i = 0; i < n_; ++i) {
    std::int64_t tmp = get(i, p);
    set(i, p, get(i, q));
    set(i, q, tmp);
  }
  ops_.push_back({ElementaryOp::Kind::Swap, p, q});
}

void IntUnimodularMatrix::negateColumn(int p) {
  checkIndex(p, n_, "column");
  for (int i = 0; i < n_; ++i) set(i, p, checkedMul(get(i, p), -1));
  ops_.push_back({ElementaryOp::Kind::Negate, p, 0});
}

IntUnimodularMatrix IntUnimodularMatrix::compose(
    const IntUnimodularMatrix& rhs) const {
  if (n_ != rhs.n_) {
    throw std::invalid_argument("compose dimension mismatch");
  }
  IntUnimodularMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < n_; ++k) {
        acc = checkedAdd(acc, checkedMul(get(i, k), rhs.get(k, j)));
      }
      out.set(i, j, acc);
    }
  }
  out.ops_ = ops_;
  out.ops_.insert(out.ops_.end(), rhs.ops_.begin(), rhs.ops_.end());
  return out;
}

std::int64_t intDeterminant(int n, const std::vector<std::int64_t>& entries) {
  if (n == 0) return 1;
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("determinant entry count mismatch");
  }
  // Bareiss fraction-free elimination; exact over the integers.
  std::vector<std::int64_t> a = entries;
  auto at = [&](int i, int j) -> std::int64_t& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swapRow = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) {
          swapRow = r;
          break;
        }
      }
      if (swapRow < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swapRow, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        std::int64_t num =
            checkedAdd(checkedMul(at(i, j), at(k, k)),
                       checkedMul(-1, checkedMul(at(i, k), at(k, j))));
        at(i, j) = num / prev;  // Bareiss guarantees exact division
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return checkedMul(sign, at(n - 1, n - 1));
}

std::int64_t IntUnimodularMatrix::determinant() const {
  return intDeterminant(n_, entries_);
}

bool IntUnimodularMatrix::isUnimodular() const {
  std::int64_t d = determinant();
  return d == 1 || d == -1;
}

Gf2Matrix IntUnimodularMatrix::mod2() const {
  Gf2Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::int64_t v = get(i, j) % 2;
      m.set(i, j, v != 0);
    }
  }
  return m;
}

std::vector<std::int64_t> IntUnimodularMatrix::apply(
    const std::vector<std::int64_t>& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n_; ++j) {
      acc = checkedAdd(acc, checkedMul(get(i, j), v[j]));
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

IntUnimodularMatrix IntUnimodularMatrix::replay(
    int n, const std::vector<ElementaryOp>& ops) {
  IntUnimodularMatrix m = identity(n);
  for (const ElementaryOp& op : ops) {
    switch (op.kind) {
      case ElementaryOp::Kind::Add:
        m.addColumn(op.p, op.q);
        break;
      case ElementaryOp::Kind::Swap:
        m.swapColumns(op.p, op.q);
        break;
      case ElementaryOp::Kind::Negate:
        m.negateColumn(op.p);
        break;
    }
  }
  return m;
}

}  // namespace qtorus
