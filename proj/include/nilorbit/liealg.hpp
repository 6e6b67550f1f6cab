#ifndef NILORBIT_LIEALG_HPP
#define NILORBIT_LIEALG_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/matrix.hpp"

namespace nilorbit {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Raw bracket datum [e_i, e_j] = Σ_k coeffs[k]·e_k with i < j.
struct BracketEntry {
  std::size_t i = 0, j = 0;
  std::map<std::size_t, Rational> coeffs;
};

/// Nilpotent Lie algebra presented by exact structure constants on a fixed
/// basis. Instances only come out of validate_algebra (or quotients of
/// validated algebras), so antisymmetry, Jacobi and nilpotency always hold
/// and the nilpotency class is known.
class LieAlgebra {
public:
  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  std::size_t nilpotency_class() const { return class_; }

  /// Coordinates of [e_i, e_j]; antisymmetric in (i, j), zero on the
  /// diagonal.
  const RatVec& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  /// Same dimension and identical bracket table; names are ignored.
  bool same_structure(const LieAlgebra& other) const {
    return dim_ == other.dim_ && table_ == other.table_;
  }

private:
  friend AlgebraPtr validate_algebra(const std::string&, std::size_t,
                                     std::vector<std::string>,
                                     const std::vector<BracketEntry>&);
  LieAlgebra() = default;

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<RatVec> table_; // dense n×n, table_[i*n+j] = [e_i,e_j]
  std::size_t class_ = 0;
};

/// Checks the raw table (indices in range, i < j, no duplicates), extends
/// antisymmetrically, verifies the Jacobi identity on all basis triples and
/// termination of the lower central series, and computes the nilpotency
/// class. basis_names may be empty, in which case e1..en are generated.
AlgebraPtr validate_algebra(const std::string& name, std::size_t dim,
                            std::vector<std::string> basis_names,
                            const std::vector<BracketEntry>& entries);

/// Pointer or structural equality; all binary operations accept either.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b,
                          const std::string& where);

struct Vector {
  AlgebraPtr algebra;
  RatVec coords;
};

struct Functional {
  AlgebraPtr algebra;
  RatVec coords;
};

Vector make_vector(AlgebraPtr a, RatVec coords);
Functional make_functional(AlgebraPtr a, RatVec coords);

/// ⟨ξ, x⟩ in dual coordinates.
Rational pair(const RatVec& xi, const RatVec& x);

/// [x, y] on raw coordinates via the structure constants.
RatVec bracket_coords(const LieAlgebra& a, const RatVec& x, const RatVec& y);
Vector bracket(const Vector& x, const Vector& y);

/// Linear subspace with a canonical reduced-row-echelon basis (rows) and
/// cached subalgebra/ideal certificates.
class Subspace {
public:
  Subspace() = default;
  /// Row-reduces the spanning set and drops zero rows.
  static Subspace from_spanning(AlgebraPtr a,
                                const std::vector<RatVec>& spanning);
  static Subspace whole(AlgebraPtr a);
  static Subspace zero(AlgebraPtr a);

  const AlgebraPtr& algebra() const { return algebra_; }
  const RatMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<RatVec> basis_rows() const;

  /// v with the pivot coordinates eliminated against the basis; zero iff
  /// v lies in the subspace.
  RatVec reduce(const RatVec& v) const;
  bool contains(const RatVec& v) const;
  bool contains_subspace(const Subspace& other) const;

  bool is_subalgebra() const { return is_subalgebra_; }
  bool is_ideal() const { return is_ideal_; }

  bool operator==(const Subspace& other) const {
    return basis_ == other.basis_;
  }

private:
  AlgebraPtr algebra_;
  RatMatrix basis_; // RREF rows, linearly independent
  std::vector<std::size_t> pivots_;
  bool is_subalgebra_ = false;
  bool is_ideal_ = false;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Lie algebra map: coords(m(x)) = matrix · coords(x); bracket-preserving
/// by construction check. Surjectivity is recorded at construction.
struct Morphism {
  AlgebraPtr source, target;
  RatMatrix matrix; // target-dim × source-dim
  bool surjective = false;
};

/// Verifies the shape and M[e_i,e_j] = [Me_i, Me_j] on all basis pairs.
Morphism make_morphism(AlgebraPtr source, AlgebraPtr target, RatMatrix matrix);
Morphism identity_morphism(AlgebraPtr a);
Vector apply_morphism(const Morphism& m, const Vector& x);

/// 𝔤 ⊇ [𝔤,𝔤] ⊇ [𝔤,[𝔤,𝔤]] ⊇ … ⊇ {0}, the last element always the zero
/// subspace; length = nilpotency class + 1.
std::vector<Subspace> lower_central_series(const AlgebraPtr& a);

/// {x : [x, e_j] = 0 for all j}, as an exact nullspace.
Subspace center(const AlgebraPtr& a);

struct Quotient {
  AlgebraPtr algebra;
  Morphism projection;
};

/// Quotient on the complement basis given by the non-pivot directions of
/// the ideal's echelon basis, with the bracket-preserving projection.
Quotient quotient_by_ideal(const AlgebraPtr& a, const Subspace& ideal);

/// Full flag of ideals 𝔤₁ ⊂ 𝔤₂ ⊂ … ⊂ 𝔤_n with dim 𝔤_i = i.
class Flag {
public:
  Flag() = default;
  /// Validates: one-dimensional steps, strict containment, every layer an
  /// ideal, top layer the whole algebra. Throws FlagMismatch otherwise.
  static Flag from_layers(AlgebraPtr a, std::vector<Subspace> layers);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t size() const { return layers_.size(); }
  const Subspace& layer(std::size_t i) const { return layers_[i]; }

  /// The echelon-basis row of layer i whose pivot column is new relative
  /// to layer i−1: a canonical direction in 𝔤_{i+1} ∖ 𝔤_i.
  const RatVec& direction(std::size_t i) const { return directions_[i]; }
  std::size_t new_pivot(std::size_t i) const { return new_pivots_[i]; }

private:
  AlgebraPtr algebra_;
  std::vector<Subspace> layers_;
  std::vector<RatVec> directions_;
  std::vector<std::size_t> new_pivots_;
};

/// Deterministic flag of ideals refining the lower central series: each
/// gap between consecutive series terms is filled by adjoining basis
/// directions in descending index order, keeping every step an ideal.
Flag jordan_holder_flag(const AlgebraPtr& a);

/// Central lattice Γ = ℤ-span of linearly independent central generators.
/// The generator list may be empty (the trivial lattice).
struct Lattice {
  AlgebraPtr algebra;
  std::vector<RatVec> generators;
};

Lattice make_lattice(AlgebraPtr a, std::vector<RatVec> generators);
bool lattice_contains(const Lattice& g, const RatVec& v);

Subspace morphism_kernel(const Morphism& m);
Subspace preimage(const Morphism& m, const Subspace& s);
/// ℓ restricted to s, in the coordinates of s's echelon basis rows.
RatVec restrict_functional(const Functional& xi, const Subspace& s);

} // namespace nilorbit

#endif
