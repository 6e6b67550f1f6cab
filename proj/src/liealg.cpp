#include "nilorbit/liealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nilorbit {

namespace {

std::string default_name(std::size_t k) {
  return "e" + std::to_string(k + 1);
}

RatVec bracket_table(const std::vector<RatVec>& table, std::size_t n,
                     const RatVec& x, const RatVec& y) {
  RatVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational c = x[i] * y[j];
      const RatVec& t = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (t[k] != 0) out[k] += c * t[k];
    }
  }
  return out;
}

bool all_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return q == 0; });
}

} // namespace

AlgebraPtr validate_algebra(const std::string& name, std::size_t dim,
                            std::vector<std::string> basis_names,
                            const std::vector<BracketEntry>& entries) {
  if (basis_names.empty())
    for (std::size_t k = 0; k < dim; ++k) basis_names.push_back(default_name(k));
  if (basis_names.size() != dim)
    throw DimensionMismatch("algebra '" + name + "': " +
                            std::to_string(basis_names.size()) +
                            " basis names for dimension " +
                            std::to_string(dim));

  std::vector<RatVec> table(dim * dim, RatVec(dim));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (e.i >= e.j)
      throw ParseError("algebra '" + name + "': bracket entry needs i < j, got (" +
                       std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    if (e.j >= dim)
      throw ParseError("algebra '" + name + "': bracket index " +
                       std::to_string(e.j) + " out of range for dimension " +
                       std::to_string(dim));
    if (!seen.insert({e.i, e.j}).second)
      throw ParseError("algebra '" + name + "': duplicate bracket entry (" +
                       std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    for (const auto& [k, c] : e.coeffs) {
      if (k >= dim)
        throw ParseError("algebra '" + name + "': bracket coefficient index " +
                         std::to_string(k) + " out of range");
      table[e.i * dim + e.j][k] = c;
      table[e.j * dim + e.i][k] = -c;
    }
  }

  // Jacobi on all basis triples.
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        RatVec ek(dim), ei(dim), ej(dim);
        ek[k] = 1;
        ei[i] = 1;
        ej[j] = 1;
        RatVec d = bracket_table(table, dim, table[i * dim + j], ek);
        const RatVec d2 = bracket_table(table, dim, table[j * dim + k], ei);
        const RatVec d3 = bracket_table(table, dim, table[k * dim + i], ej);
        for (std::size_t t = 0; t < dim; ++t) d[t] += d2[t] + d3[t];
        if (!all_zero(d)) {
          std::ostringstream os;
          os << "algebra '" << name << "': Jacobi identity fails at triple ("
             << i << "," << j << "," << k << "), defect " << ratvec_str(d);
          throw JacobiViolation(os.str());
        }
      }

  // Lower central series on the raw table; must reach zero.
  std::vector<RatVec> current;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec e(dim);
    e[i] = 1;
    current.push_back(std::move(e));
  }
  std::size_t cls = 0;
  std::size_t prev_dim = dim;
  while (prev_dim > 0) {
    std::vector<RatVec> next_span;
    for (std::size_t i = 0; i < dim; ++i) {
      RatVec ei(dim);
      ei[i] = 1;
      for (const auto& c : current)
        next_span.push_back(bracket_table(table, dim, ei, c));
    }
    const RrefResult r = rref(RatMatrix::from_rows(next_span, dim));
    std::vector<RatVec> next;
    for (std::size_t s = 0; s < r.rank; ++s) next.push_back(r.matrix.row(s));
    if (next.size() == prev_dim) {
      std::ostringstream os;
      os << "algebra '" << name
         << "': lower central series stabilizes at a nonzero term of dimension "
         << prev_dim;
      throw NotNilpotent(os.str());
    }
    ++cls;
    prev_dim = next.size();
    current = std::move(next);
  }

  auto a = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  a->name_ = name;
  a->dim_ = dim;
  a->basis_names_ = std::move(basis_names);
  a->table_ = std::move(table);
  a->class_ = cls;
  return a;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b,
                          const std::string& where) {
  if (!same_algebra(a, b))
    throw AlgebraMismatch(where + ": operands live on different algebras");
}

Vector make_vector(AlgebraPtr a, RatVec coords) {
  if (coords.size() != a->dim())
    throw DimensionMismatch("vector has " + std::to_string(coords.size()) +
                            " coordinates, algebra '" + a->name() +
                            "' has dimension " + std::to_string(a->dim()));
  return Vector{std::move(a), std::move(coords)};
}

Functional make_functional(AlgebraPtr a, RatVec coords) {
  if (coords.size() != a->dim())
    throw DimensionMismatch("functional has " + std::to_string(coords.size()) +
                            " coordinates, algebra '" + a->name() +
                            "' has dimension " + std::to_string(a->dim()));
  return Functional{std::move(a), std::move(coords)};
}

Rational pair(const RatVec& xi, const RatVec& x) {
  Rational s(0);
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (xi[i] != 0 && x[i] != 0) s += xi[i] * x[i];
  return s;
}

RatVec bracket_coords(const LieAlgebra& a, const RatVec& x, const RatVec& y) {
  RatVec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational c = x[i] * y[j];
      const RatVec& t = a.bracket_basis(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (t[k] != 0) out[k] += c * t[k];
    }
  }
  return out;
}

Vector bracket(const Vector& x, const Vector& y) {
  require_same_algebra(x.algebra, y.algebra, "bracket");
  return Vector{x.algebra, bracket_coords(*x.algebra, x.coords, y.coords)};
}

Subspace Subspace::from_spanning(AlgebraPtr a,
                                 const std::vector<RatVec>& spanning) {
  const std::size_t n = a->dim();
  for (const auto& v : spanning)
    if (v.size() != n)
      throw DimensionMismatch("spanning vector has wrong length");
  Subspace s;
  s.algebra_ = std::move(a);
  const RrefResult r = rref(RatMatrix::from_rows(spanning, n));
  RatMatrix basis(r.rank, n);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = r.matrix.at(i, j);
  s.basis_ = std::move(basis);
  s.pivots_ = r.pivot_cols;

  const auto& alg = *s.algebra_;
  s.is_subalgebra_ = true;
  for (std::size_t p = 0; p < s.dim() && s.is_subalgebra_; ++p)
    for (std::size_t q = p + 1; q < s.dim(); ++q)
      if (!s.contains(bracket_coords(alg, s.basis_.row(p), s.basis_.row(q)))) {
        s.is_subalgebra_ = false;
        break;
      }
  s.is_ideal_ = true;
  for (std::size_t i = 0; i < n && s.is_ideal_; ++i) {
    RatVec ei(n);
    ei[i] = 1;
    for (std::size_t q = 0; q < s.dim(); ++q)
      if (!s.contains(bracket_coords(alg, ei, s.basis_.row(q)))) {
        s.is_ideal_ = false;
        break;
      }
  }
  return s;
}

Subspace Subspace::whole(AlgebraPtr a) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    RatVec e(a->dim());
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return from_spanning(std::move(a), rows);
}

Subspace Subspace::zero(AlgebraPtr a) { return from_spanning(std::move(a), {}); }

std::vector<RatVec> Subspace::basis_rows() const {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
  return rows;
}

RatVec Subspace::reduce(const RatVec& v) const {
  RatVec r = v;
  for (std::size_t s = 0; s < dim(); ++s) {
    const Rational c = r[pivots_[s]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < basis_.cols(); ++j)
      if (basis_.at(s, j) != 0) r[j] -= c * basis_.at(s, j);
  }
  return r;
}

bool Subspace::contains(const RatVec& v) const { return all_zero(reduce(v)); }

bool Subspace::contains_subspace(const Subspace& other) const {
  for (std::size_t s = 0; s < other.dim(); ++s)
    if (!contains(other.basis_.row(s))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_algebra(a.algebra(), b.algebra(), "subspace_sum");
  std::vector<RatVec> rows = a.basis_rows();
  for (auto& r : b.basis_rows()) rows.push_back(std::move(r));
  return Subspace::from_spanning(a.algebra(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_algebra(a.algebra(), b.algebra(), "subspace_intersect");
  const std::size_t n = a.algebra()->dim();
  const std::size_t ra = a.dim(), rb = b.dim();
  // x in both iff x = Σ u_s a_s = Σ v_t b_t; solve [Aᵀ | −Bᵀ](u,v) = 0.
  RatMatrix m(n, ra + rb);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < ra; ++s) m.at(r, s) = a.basis().at(s, r);
    for (std::size_t t = 0; t < rb; ++t) m.at(r, ra + t) = -b.basis().at(t, r);
  }
  std::vector<RatVec> span;
  for (const auto& w : nullspace_basis(m)) {
    RatVec x(n);
    for (std::size_t s = 0; s < ra; ++s)
      for (std::size_t r = 0; r < n; ++r) x[r] += w[s] * a.basis().at(s, r);
    span.push_back(std::move(x));
  }
  return Subspace::from_spanning(a.algebra(), span);
}

Morphism make_morphism(AlgebraPtr source, AlgebraPtr target, RatMatrix matrix) {
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw DimensionMismatch(
        "morphism matrix is " + std::to_string(matrix.rows()) + "x" +
        std::to_string(matrix.cols()) + ", expected " +
        std::to_string(target->dim()) + "x" + std::to_string(source->dim()));
  for (std::size_t i = 0; i < source->dim(); ++i)
    for (std::size_t j = i + 1; j < source->dim(); ++j) {
      const RatVec lhs = matrix.apply(source->bracket_basis(i, j));
      RatVec mei(target->dim()), mej(target->dim());
      for (std::size_t r = 0; r < target->dim(); ++r) {
        mei[r] = matrix.at(r, i);
        mej[r] = matrix.at(r, j);
      }
      const RatVec rhs = bracket_coords(*target, mei, mej);
      if (lhs != rhs)
        throw CertificateFailure(
            "matrix is not a Lie algebra morphism: bracket of basis pair (" +
            std::to_string(i) + "," + std::to_string(j) + ") is not preserved");
    }
  Morphism m;
  m.surjective = rref(matrix).rank == target->dim();
  m.source = std::move(source);
  m.target = std::move(target);
  m.matrix = std::move(matrix);
  return m;
}

Morphism identity_morphism(AlgebraPtr a) {
  RatMatrix id = RatMatrix::identity(a->dim());
  return make_morphism(a, a, std::move(id));
}

Vector apply_morphism(const Morphism& m, const Vector& x) {
  require_same_algebra(m.source, x.algebra, "apply_morphism");
  return Vector{m.target, m.matrix.apply(x.coords)};
}

std::vector<Subspace> lower_central_series(const AlgebraPtr& a) {
  std::vector<Subspace> series;
  series.push_back(Subspace::whole(a));
  while (series.back().dim() > 0) {
    const Subspace& prev = series.back();
    std::vector<RatVec> span;
    for (std::size_t i = 0; i < a->dim(); ++i) {
      RatVec ei(a->dim());
      ei[i] = 1;
      for (std::size_t q = 0; q < prev.dim(); ++q)
        span.push_back(bracket_coords(*a, ei, prev.basis().row(q)));
    }
    series.push_back(Subspace::from_spanning(a, span));
  }
  return series;
}

Subspace center(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  RatMatrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        m.at(j * n + k, i) = a->bracket_basis(i, j)[k];
  return Subspace::from_spanning(a, nullspace_basis(m));
}

Quotient quotient_by_ideal(const AlgebraPtr& a, const Subspace& ideal) {
  require_same_algebra(a, ideal.algebra(), "quotient_by_ideal");
  if (!ideal.is_ideal())
    throw NotAnIdeal("quotient_by_ideal: subspace of dimension " +
                     std::to_string(ideal.dim()) + " is not an ideal");
  const std::size_t n = a->dim();
  std::vector<std::size_t> complement;
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) complement.push_back(c);
  }
  const std::size_t q = complement.size();

  RatMatrix proj(q, n);
  for (std::size_t k = 0; k < n; ++k) {
    RatVec ek(n);
    ek[k] = 1;
    const RatVec red = ideal.reduce(ek);
    for (std::size_t r = 0; r < q; ++r) proj.at(r, k) = red[complement[r]];
  }

  std::vector<BracketEntry> entries;
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t s = r + 1; s < q; ++s) {
      const RatVec img = proj.apply(a->bracket_basis(complement[r], complement[s]));
      BracketEntry e;
      e.i = r;
      e.j = s;
      for (std::size_t k = 0; k < q; ++k)
        if (img[k] != 0) e.coeffs[k] = img[k];
      if (!e.coeffs.empty()) entries.push_back(std::move(e));
    }
  std::vector<std::string> names;
  for (std::size_t c : complement) names.push_back(a->basis_names()[c]);
  AlgebraPtr quot = validate_algebra(a->name() + "_mod_ideal", q,
                                     std::move(names), entries);
  Morphism p = make_morphism(a, quot, std::move(proj));
  return Quotient{std::move(quot), std::move(p)};
}

Flag Flag::from_layers(AlgebraPtr a, std::vector<Subspace> layers) {
  const std::size_t n = a->dim();
  if (layers.size() != n)
    throw FlagMismatch("flag has " + std::to_string(layers.size()) +
                       " layers, algebra dimension is " + std::to_string(n));
  Flag f;
  f.algebra_ = a;
  std::vector<std::size_t> prev_pivots;
  for (std::size_t i = 0; i < n; ++i) {
    const Subspace& L = layers[i];
    require_same_algebra(a, L.algebra(), "flag layer");
    if (L.dim() != i + 1)
      throw FlagMismatch("flag layer " + std::to_string(i) +
                         " has dimension " + std::to_string(L.dim()) +
                         ", expected " + std::to_string(i + 1));
    if (!L.is_ideal())
      throw FlagMismatch("flag layer " + std::to_string(i) +
                         " is not an ideal");
    if (i > 0 && !L.contains_subspace(layers[i - 1]))
      throw FlagMismatch("flag layer " + std::to_string(i) +
                         " does not contain layer " + std::to_string(i - 1));
    // Nested subspaces have nested pivot sets, so exactly one pivot is new.
    std::size_t fresh = n;
    for (std::size_t p : L.pivots())
      if (std::find(prev_pivots.begin(), prev_pivots.end(), p) ==
          prev_pivots.end())
        fresh = p;
    std::size_t row = 0;
    while (L.pivots()[row] != fresh) ++row;
    f.new_pivots_.push_back(fresh);
    f.directions_.push_back(L.basis().row(row));
    prev_pivots = L.pivots();
  }
  f.layers_ = std::move(layers);
  return f;
}

Flag jordan_holder_flag(const AlgebraPtr& a) {
  std::vector<Subspace> lcs = lower_central_series(a);
  std::reverse(lcs.begin(), lcs.end()); // ascending: {0} ⊂ … ⊂ 𝔤

  const std::size_t n = a->dim();
  std::vector<RatVec> chosen;
  std::vector<Subspace> layers;
  Subspace current = Subspace::zero(a);
  for (const Subspace& target : lcs) {
    while (current.dim() < target.dim()) {
      bool extended = false;
      for (std::size_t j = n; j-- > 0 && !extended;) {
        RatVec ej(n);
        ej[j] = 1;
        if (target.contains(ej) && !current.contains(ej)) {
          chosen.push_back(std::move(ej));
          extended = true;
        }
      }
      // No pure basis direction fits; fall back to the target's own
      // echelon rows, highest pivot first.
      for (std::size_t r = target.dim(); r-- > 0 && !extended;) {
        const RatVec row = target.basis().row(r);
        if (!current.contains(row)) {
          chosen.push_back(row);
          extended = true;
        }
      }
      current = Subspace::from_spanning(a, chosen);
      layers.push_back(current);
    }
  }
  return Flag::from_layers(a, std::move(layers));
}

Lattice make_lattice(AlgebraPtr a, std::vector<RatVec> generators) {
  const Subspace z = center(a);
  for (const auto& g : generators) {
    if (g.size() != a->dim())
      throw DimensionMismatch("lattice generator has wrong length");
    if (!z.contains(g))
      throw CertificateFailure("lattice generator " + ratvec_str(g) +
                               " is not central in '" + a->name() + "'");
  }
  if (rref(RatMatrix::from_rows(generators, a->dim())).rank !=
      generators.size())
    throw CertificateFailure("lattice generators are linearly dependent");
  return Lattice{std::move(a), std::move(generators)};
}

bool lattice_contains(const Lattice& g, const RatVec& v) {
  return in_integer_span(g.generators, v);
}

Subspace morphism_kernel(const Morphism& m) {
  return Subspace::from_spanning(m.source, nullspace_basis(m.matrix));
}

Subspace preimage(const Morphism& m, const Subspace& s) {
  require_same_algebra(m.target, s.algebra(), "preimage");
  const std::size_t t = m.target->dim();
  std::vector<std::size_t> complement;
  {
    std::vector<bool> is_pivot(t, false);
    for (std::size_t p : s.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < t; ++c)
      if (!is_pivot[c]) complement.push_back(c);
  }
  // Mx ∈ s iff the complement coordinates of Mx reduced mod s vanish.
  RatMatrix q(complement.size(), t);
  for (std::size_t k = 0; k < t; ++k) {
    RatVec ek(t);
    ek[k] = 1;
    const RatVec red = s.reduce(ek);
    for (std::size_t r = 0; r < complement.size(); ++r)
      q.at(r, k) = red[complement[r]];
  }
  return Subspace::from_spanning(m.source, nullspace_basis(q * m.matrix));
}

RatVec restrict_functional(const Functional& xi, const Subspace& s) {
  require_same_algebra(xi.algebra, s.algebra(), "restrict_functional");
  RatVec out(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r)
    out[r] = pair(xi.coords, s.basis().row(r));
  return out;
}

} // namespace nilorbit
