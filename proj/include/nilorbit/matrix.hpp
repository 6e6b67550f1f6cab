#ifndef NILORBIT_MATRIX_HPP
#define NILORBIT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nilorbit/rational.hpp"

namespace nilorbit {

/// Dense matrix over exact rationals. Row-major; value semantics.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatVec row(std::size_t i) const;
  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  /// Matrix times column vector.
  RatVec apply(const RatVec& v) const;

  bool operator==(const RatMatrix& other) const = default;
  bool is_zero() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Deterministic pivoting: columns are scanned
/// left to right, and within a column the first nonzero entry from the
/// top (at or below the current row) is the pivot. The result is the
/// unique RREF of the input; rank = number of nonzero rows.
RrefResult rref(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, ordered by free
/// column index. Each basis vector has a 1 in its free coordinate.
std::vector<RatVec> nullspace_basis(const RatMatrix& m);

/// Any exact solution of a x = b (free variables set to 0), or nullopt.
std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b);

/// Whether target lies in the integer span of the given rational vectors.
/// Clears denominators, then reduces against a column-style Hermite
/// normal form, so linearly dependent generator sets are handled.
bool in_integer_span(const std::vector<RatVec>& generators, const RatVec& target);

} // namespace nilorbit

#endif
