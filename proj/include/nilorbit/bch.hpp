#ifndef NILORBIT_BCH_HPP
#define NILORBIT_BCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nilorbit/liealg.hpp"
#include "nilorbit/polynomial.hpp"

namespace nilorbit {

/// Group elements are exp-coordinates on the simply connected group (𝔤, ·):
/// the identity is the zero vector and inversion is coordinate negation.
using GroupElement = Vector;

GroupElement group_identity(AlgebraPtr a);
GroupElement group_inverse(const GroupElement& g);

/// One commutator word of the Dynkin expansion: letters over {0 = X, 1 = Y}
/// read as the right-nested bracket ad(l₁)…ad(l_{k−1})(l_k), with the total
/// rational coefficient accumulated over all block decompositions.
struct DynkinWord {
  std::vector<int> letters;
  Rational coeff;
};

/// The full table through commutator degree 6, computed once and shared.
/// Degree-1 entries are X and Y with coefficient 1; the degree-2 entries
/// carry 1/4 (XY) and -1/4 (YX), which combine to the familiar ½[x,y].
const std::vector<DynkinWord>& dynkin_words();

/// Dynkin series truncated at the nilpotency class; exact since all higher
/// commutators vanish. ClassTooHigh when the class exceeds the table bound.
GroupElement bch_multiply(const GroupElement& x, const GroupElement& y);

/// Ad(exp v) = Σ_k (ad v)^k / k!, a finite sum; the result is unipotent.
RatMatrix adjoint_matrix(const GroupElement& g);

/// Ad*(g)ξ = ξ ∘ Ad(g⁻¹).
Functional coadjoint_apply(const GroupElement& g, const Functional& xi);

/// Entries of Ad*(exp(t·v))ξ as polynomials in the fresh parameter t; the
/// input may itself be symbolic, so flows compose.
PolyVec coadjoint_symbolic_vec(const AlgebraPtr& a, const RatVec& direction,
                               const std::string& param, const PolyVec& xi);

/// Flow along a basis direction applied to a concrete functional.
PolyVec coadjoint_symbolic(std::size_t basis_index, const std::string& param,
                           const Functional& xi);

} // namespace nilorbit

#endif
