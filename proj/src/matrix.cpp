#include "nilorbit/matrix.hpp"

#include <cassert>
#include <utility>

namespace nilorbit {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows,
                               std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  assert(cols_ == other.rows_);
  RatMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  assert(v.size() == cols_);
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, 0, {}};
  RatMatrix& a = res.matrix;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(pivot, j), a.at(lead, j));
    const Rational inv = 1 / a.at(lead, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(lead, j);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::vector<RatVec> nullspace_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec x(m.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      x[r.pivot_cols[i]] = -r.matrix.at(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
  assert(b.size() == a.rows());
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  for (std::size_t c : r.pivot_cols)
    if (c == a.cols()) return std::nullopt; // inconsistent system
  RatVec x(a.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    x[r.pivot_cols[i]] = r.matrix.at(i, a.cols());
  return x;
}

namespace {

// Column HNF reduction over mpz. Column operations are unimodular, so the
// integer span of the columns is preserved.
struct IntCols {
  std::size_t n = 0; // vector length
  std::vector<std::vector<Integer>> cols;
};

void hnf_columns(IntCols& m) {
  std::size_t next = 0;
  for (std::size_t row = 0; row < m.n && next < m.cols.size(); ++row) {
    std::size_t base = next;
    while (base < m.cols.size() && m.cols[base][row] == 0) ++base;
    if (base == m.cols.size()) continue;
    for (std::size_t j = base + 1; j < m.cols.size(); ++j) {
      if (m.cols[j][row] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 m.cols[base][row].get_mpz_t(), m.cols[j][row].get_mpz_t());
      const Integer u = m.cols[base][row] / g;
      const Integer v = m.cols[j][row] / g;
      for (std::size_t k = 0; k < m.n; ++k) {
        const Integer x = m.cols[base][k], y = m.cols[j][k];
        m.cols[base][k] = s * x + t * y;
        m.cols[j][k] = u * y - v * x;
      }
    }
    std::swap(m.cols[base], m.cols[next]);
    if (m.cols[next][row] < 0)
      for (std::size_t k = 0; k < m.n; ++k) m.cols[next][k] = -m.cols[next][k];
    ++next;
  }
  m.cols.resize(next); // drop zero columns
}

} // namespace

bool in_integer_span(const std::vector<RatVec>& generators,
                     const RatVec& target) {
  const std::size_t n = target.size();
  Integer lcm = 1;
  for (const auto& g : generators)
    for (const auto& q : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  for (const auto& q : target)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());

  IntCols m;
  m.n = n;
  for (const auto& g : generators) {
    assert(g.size() == n);
    std::vector<Integer> col(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rational scaled = g[k] * lcm;
      col[k] = scaled.get_num(); // denominator is 1 after scaling
    }
    m.cols.push_back(std::move(col));
  }
  std::vector<Integer> t(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational scaled = target[k] * lcm;
    t[k] = scaled.get_num();
  }

  hnf_columns(m);

  std::vector<std::size_t> pivot_row(m.cols.size(), n);
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    for (std::size_t r = 0; r < n; ++r)
      if (m.cols[j][r] != 0) {
        pivot_row[j] = r;
        break;
      }

  // Reduce the target top-to-bottom against the echelon columns.
  std::size_t col = 0;
  for (std::size_t row = 0; row < n; ++row) {
    if (col < m.cols.size() && pivot_row[col] == row) {
      Integer q, rem;
      mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t[row].get_mpz_t(),
                  m.cols[col][row].get_mpz_t());
      if (rem != 0) return false;
      for (std::size_t k = 0; k < n; ++k) t[k] -= q * m.cols[col][k];
      ++col;
    } else if (t[row] != 0) {
      return false;
    }
  }
  return true;
}

} // namespace nilorbit
