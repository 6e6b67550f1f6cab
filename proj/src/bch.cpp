#include "nilorbit/bch.hpp"

#include <map>

namespace nilorbit {

namespace {

constexpr std::size_t kDynkinBound = 6;

Rational factorial(unsigned k) {
  Rational f(1);
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// Enumerates block sequences ((p_1,q_1),…,(p_m,q_m)), (p_i,q_i) ≠ (0,0),
// with total letter count ≤ bound, and accumulates
//   (−1)^{m−1} / (m · Σ(p_i+q_i) · Π p_i! q_i!)
// onto the spelled-out word X^{p_1}Y^{q_1}…X^{p_m}Y^{q_m}.
void enumerate_blocks(std::vector<int>& word, Rational fact_prod,
                      std::size_t blocks,
                      std::map<std::vector<int>, Rational>& acc) {
  if (!word.empty()) {
    const Rational total(static_cast<long>(word.size()));
    const Rational m(static_cast<long>(blocks));
    const Rational sign = (blocks % 2 == 1) ? 1 : -1;
    acc[word] += sign / (m * total * fact_prod);
  }
  const std::size_t room = kDynkinBound - word.size();
  for (std::size_t p = 0; p <= room; ++p)
    for (std::size_t q = 0; p + q <= room; ++q) {
      if (p + q == 0) continue;
      for (std::size_t t = 0; t < p; ++t) word.push_back(0);
      for (std::size_t t = 0; t < q; ++t) word.push_back(1);
      enumerate_blocks(word, fact_prod * factorial(p) * factorial(q),
                       blocks + 1, acc);
      word.resize(word.size() - p - q);
    }
}

RatMatrix scale(const RatMatrix& m, const Rational& c) {
  RatMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) *= c;
  return out;
}

RatMatrix ad_matrix(const LieAlgebra& a, const RatVec& v) {
  const std::size_t n = a.dim();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec ej(n);
    ej[j] = 1;
    const RatVec col = bracket_coords(a, v, ej);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

// exp(ad v) summed to the nilpotency class.
RatMatrix matrix_exp_ad(const LieAlgebra& a, const RatVec& v) {
  const std::size_t n = a.dim();
  RatMatrix sum = RatMatrix::identity(n);
  RatMatrix term = RatMatrix::identity(n);
  const RatMatrix ad = ad_matrix(a, v);
  for (std::size_t k = 1; k <= a.nilpotency_class(); ++k) {
    term = scale(ad * term, Rational(1, static_cast<long>(k)));
    if (term.is_zero()) break;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum.at(i, j) += term.at(i, j);
  }
  return sum;
}

} // namespace

GroupElement group_identity(AlgebraPtr a) {
  RatVec zero(a->dim());
  return Vector{std::move(a), std::move(zero)};
}

GroupElement group_inverse(const GroupElement& g) {
  RatVec neg = g.coords;
  for (auto& c : neg) c = -c;
  return Vector{g.algebra, std::move(neg)};
}

const std::vector<DynkinWord>& dynkin_words() {
  static const std::vector<DynkinWord> table = [] {
    std::map<std::vector<int>, Rational> acc;
    std::vector<int> word;
    enumerate_blocks(word, Rational(1), 0, acc);
    std::vector<DynkinWord> out;
    for (auto& [letters, coeff] : acc)
      if (coeff != 0) out.push_back(DynkinWord{letters, coeff});
    return out;
  }();
  return table;
}

GroupElement bch_multiply(const GroupElement& x, const GroupElement& y) {
  require_same_algebra(x.algebra, y.algebra, "bch_multiply");
  const LieAlgebra& a = *x.algebra;
  const std::size_t cls = a.nilpotency_class();
  if (cls > kDynkinBound)
    throw ClassTooHigh("bch_multiply: nilpotency class " +
                       std::to_string(cls) +
                       " exceeds the implemented Dynkin degree bound " +
                       std::to_string(kDynkinBound));
  RatVec z(a.dim());
  for (const DynkinWord& w : dynkin_words()) {
    if (w.letters.size() > cls) continue;
    RatVec v = w.letters.back() == 0 ? x.coords : y.coords;
    for (std::size_t i = w.letters.size() - 1; i-- > 0;)
      v = bracket_coords(a, w.letters[i] == 0 ? x.coords : y.coords, v);
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (v[k] != 0) z[k] += w.coeff * v[k];
  }
  return Vector{x.algebra, std::move(z)};
}

RatMatrix adjoint_matrix(const GroupElement& g) {
  return matrix_exp_ad(*g.algebra, g.coords);
}

Functional coadjoint_apply(const GroupElement& g, const Functional& xi) {
  require_same_algebra(g.algebra, xi.algebra, "coadjoint_apply");
  const RatMatrix ad_inv = matrix_exp_ad(*g.algebra, group_inverse(g).coords);
  return Functional{xi.algebra, ad_inv.transpose().apply(xi.coords)};
}

PolyVec coadjoint_symbolic_vec(const AlgebraPtr& a, const RatVec& direction,
                               const std::string& param, const PolyVec& xi) {
  const std::size_t n = a->dim();
  if (direction.size() != n || xi.size() != n)
    throw DimensionMismatch("coadjoint_symbolic_vec: wrong length");
  RatVec neg = direction;
  for (auto& c : neg) c = -c;
  const RatMatrix ad = ad_matrix(*a, neg);

  // ξ ∘ exp(t·ad(−v)) = Σ_m t^m · (ad(−v)^m/m!)ᵀ ξ, entrywise in polynomials.
  PolyVec out(n);
  RatMatrix power = RatMatrix::identity(n);
  Polynomial tpow(1);
  const Polynomial t = Polynomial::variable(param);
  for (std::size_t m = 0; m <= a->nilpotency_class(); ++m) {
    if (m > 0) {
      power = scale(ad * power, Rational(1, static_cast<long>(m)));
      tpow = tpow * t;
      if (power.is_zero()) break;
    }
    for (std::size_t k = 0; k < n; ++k) {
      Polynomial acc;
      for (std::size_t j = 0; j < n; ++j)
        if (power.at(j, k) != 0) acc += xi[j] * power.at(j, k);
      if (!acc.is_zero()) out[k] += acc * tpow;
    }
  }
  return out;
}

PolyVec coadjoint_symbolic(std::size_t basis_index, const std::string& param,
                           const Functional& xi) {
  const std::size_t n = xi.algebra->dim();
  if (basis_index >= n)
    throw DimensionMismatch("coadjoint_symbolic: basis index out of range");
  RatVec dir(n);
  dir[basis_index] = 1;
  PolyVec start;
  start.reserve(n);
  for (const auto& c : xi.coords) start.emplace_back(c);
  return coadjoint_symbolic_vec(xi.algebra, dir, param, start);
}

} // namespace nilorbit
