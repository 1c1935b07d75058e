#pragma once

// Dense linear algebra over GF(2) with bit-packed rows, plus checked integer
// matrices used for basis-change witnesses.
//
// Dimensions are small by design (n <= 24 for bit vectors, n <= 5 for full
// group enumeration), so every routine favours clarity and determinism over
// asymptotics.  All enumeration orders are fixed and documented so that any
// census built on top of them is byte-reproducible.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtorus {

/// Maximum supported matrix/vector dimension for the GF(2) layer.
inline constexpr int kMaxDim = 24;

/// A vector in GF(2)^n, bit-packed into a 32-bit word (bit i = coordinate i).
struct Gf2Vector {
  int n = 0;
  std::uint32_t bits = 0;

  Gf2Vector() = default;
  Gf2Vector(int n_, std::uint32_t bits_);

  bool get(int i) const;
  void set(int i, bool value);
  bool isZero() const { return bits == 0; }
  int weight() const;

  friend Gf2Vector operator+(Gf2Vector a, Gf2Vector b);
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
};

/// Standard basis vector e_i in GF(2)^n (0-based).
Gf2Vector gf2Unit(int n, int i);

/// A rows x cols matrix over GF(2); each row is a bit-packed word
/// (bit j of row i = entry (i, j)).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  static Gf2Matrix identity(int n);
  static Gf2Matrix zero(int rows, int cols);
  /// Build from explicit 0/1 entries, row-major.
  static Gf2Matrix fromEntries(int rows, int cols,
                               const std::vector<int>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int i, int j) const;
  void set(int i, int j, bool value);
  std::uint32_t rowBits(int i) const { return row_[i]; }
  void setRowBits(int i, std::uint32_t bits) { row_[i] = bits; }

  Gf2Matrix transpose() const;

  /// Matrix product over GF(2); requires cols() == rhs.rows().
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;

  /// Matrix-vector product (v as a column vector); requires cols() == v.n.
  Gf2Vector apply(const Gf2Vector& v) const;

  int rank() const;
  bool isInvertible() const { return rows_ == cols_ && rank() == rows_; }

  /// Inverse over GF(2); throws std::invalid_argument if singular.
  Gf2Matrix inverse() const;

  /// Basis of the right kernel {v : M v = 0}, one vector per free column of
  /// the reduced row echelon form, ordered by free column index ascending.
  std::vector<Gf2Vector> kernelBasis() const;

  /// Reduced row echelon form together with the pivot column list.
  Gf2Matrix rref(std::vector<int>* pivotColumns = nullptr) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> row_;
};

/// Congruence transform P^T E P over GF(2).  E must be square n x n and P an
/// invertible n x n basis change; a singular P throws std::invalid_argument
/// ("not a basis change").
Gf2Matrix congruence(const Gf2Matrix& e, const Gf2Matrix& p);

/// Streams every invertible n x n matrix over GF(2) (n <= 5), in ascending
/// order of the concatenated row-bit integer: the n^2 entries are read
/// row-major with entry (0,0) most significant, and candidates are visited in
/// increasing numeric order of that n^2-bit string.
class InvertibleMatrixStream {
 public:
  explicit InvertibleMatrixStream(int n);

  /// Next invertible matrix, or nullopt when exhausted.
  std::optional<Gf2Matrix> next();

  /// Number of invertible matrices over GF(2) for this n (|GL_n(2)|).
  static std::uint64_t groupOrder(int n);

 private:
  int n_;
  std::uint64_t counter_ = 0;
  std::uint64_t limit_;
};

/// One recorded elementary column operation on an integer basis-change
/// matrix.  `add {p, q}` means column q += column p; `swapCols {p, q}`
/// exchanges columns p and q; `negate {p}` flips the sign of column p.
struct ElementaryOp {
  enum class Kind { Add, Swap, Negate };
  Kind kind;
  int p = 0;
  int q = 0;

  std::string describe() const;
  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

/// Square integer matrix with checked 64-bit arithmetic and an operation log.
/// Used for change-of-basis witnesses: columns hold the new basis expressed in
/// the old coordinates.  Every mutation appends to the log so the witness can
/// be replayed from the identity.
class IntUnimodularMatrix {
 public:
  IntUnimodularMatrix() = default;
  explicit IntUnimodularMatrix(int n);

  static IntUnimodularMatrix identity(int n);

  int size() const { return n_; }
  std::int64_t get(int i, int j) const;
  void set(int i, int j, std::int64_t value);

  const std::vector<ElementaryOp>& opLog() const { return ops_; }

  /// Column q += column p (checked); appends to the op log.
  void addColumn(int p, int q);
  /// Exchange columns p and q; appends to the op log.
  void swapColumns(int p, int q);
  /// Negate column p; appends to the op log.
  void negateColumn(int p);

  /// Right-multiplication composition: first apply *this, then rhs (columns of
  /// the result are this * (columns of rhs)).  Op logs concatenate.
  IntUnimodularMatrix compose(const IntUnimodularMatrix& rhs) const;

  /// Determinant via Bareiss elimination with checked arithmetic.
  std::int64_t determinant() const;
  bool isUnimodular() const;

  /// Entry-wise reduction mod 2.
  Gf2Matrix mod2() const;

  /// Matrix-vector product over the integers (checked).
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

  /// Rebuild a matrix from an op log by replaying it against the identity;
  /// used to check that a witness's log and entries agree.
  static IntUnimodularMatrix replay(int n, const std::vector<ElementaryOp>& ops);

  friend bool operator==(const IntUnimodularMatrix&,
                         const IntUnimodularMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> entries_;  // row-major
  std::vector<ElementaryOp> ops_;
};

/// Checked signed 64-bit helpers; throw std::overflow_error on wrap.
std::int64_t checkedAdd(std::int64_t a, std::int64_t b);
std::int64_t checkedMul(std::int64_t a, std::int64_t b);

/// Exact determinant of a general square integer matrix (row-major entries),
/// via Bareiss elimination with checked arithmetic.
std::int64_t intDeterminant(int n, const std::vector<std::int64_t>& entries);

}  // namespace qtorus
