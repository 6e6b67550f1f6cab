#ifndef NILORBIT_KIRILLOV_HPP
#define NILORBIT_KIRILLOV_HPP

#include <cstdint>
#include <optional>

#include "nilorbit/orbits.hpp"

namespace nilorbit {

/// The three polarization conditions, each checked independently and
/// reported as data: 𝔥 is a subalgebra, ℓ vanishes on [𝔥,𝔥], and
/// dim 𝔥 = ½(dim 𝔤 + dim 𝔤(ℓ)).
struct PolarizationCertificate {
  bool subalgebra = false;
  bool subordinated = false;
  bool dimension = false;
  std::size_t algebra_dim = 0;
  std::size_t stabilizer_dim = 0;
  std::size_t polarization_dim = 0;
  bool ok() const { return subalgebra && subordinated && dimension; }
};

struct Polarization {
  Functional functional;
  Subspace subspace;
  PolarizationCertificate certificate;
};

/// Vergne construction 𝔥 = Σ_i stab_{𝔤_i}(ℓ|_{𝔤_i}) along a flag of
/// ideals; all three conditions are re-verified exactly before returning.
Polarization vergne_polarization(const Functional& xi, const Flag& flag);

/// Checks the three conditions independently; failures are data, never
/// exceptions, so candidate subspaces can be graded.
PolarizationCertificate verify_polarization(const Functional& xi,
                                            const Subspace& h);

/// Ind_H^G χ_ℓ by its data: ℓ, the polarization 𝔥, the optional central
/// lattice certifying integrality, and the exact character phase. Phases
/// are stored as rationals ℓ(X), the exponent of e^{iℓ(X)}, so equality is
/// exact rational equality.
class InducedRepDescriptor {
public:
  const Functional& functional() const { return functional_; }
  const Subspace& polarization() const { return polarization_; }
  const PolarizationCertificate& certificate() const { return certificate_; }
  const std::optional<Lattice>& lattice() const { return lattice_; }

  /// Phase of the character at exp(x); defined only on 𝔥.
  Rational character_phase(const Vector& x) const;

private:
  friend InducedRepDescriptor induce_descriptor(const Functional&,
                                                const Subspace&,
                                                std::optional<Lattice>);
  Functional functional_;
  Subspace polarization_;
  PolarizationCertificate certificate_;
  std::optional<Lattice> lattice_;
};

/// Any subspace passing verify_polarization is accepted; with a lattice
/// the functional must take integer values on its generators.
InducedRepDescriptor induce_descriptor(const Functional& xi,
                                       const Subspace& h,
                                       std::optional<Lattice> gamma =
                                           std::nullopt);

/// ξ = η ∘ p, coordinates transpose(matrix)·η; injective in η when p is
/// surjective.
Functional pullback_functional(const Morphism& p, const Functional& eta);

/// Orbit of the pulled-back base functional. Before returning, two exact
/// sanity checks run: the functoriality identity
/// matrix·Ad_src(g) = Ad_tgt(p(g))·matrix on seeded random g, and orbit
/// membership of pulled-back random samples of the target orbit.
OrbitDescriptor pullback_orbit(const Morphism& p, const OrbitDescriptor& desc,
                               std::uint64_t seed = 0,
                               std::size_t samples = 100);

/// 𝔥₁ = p⁻¹(𝔥₂) polarizes ℓ₁ = ξ∘p; the three conditions are re-verified
/// and the dimension bookkeeping dim 𝔥₁ = dim 𝔥₂ + dim Ker L(p),
/// dim 𝔤₁(ℓ₁) = dim 𝔤₂(ℓ₂) + dim Ker L(p), Ker L(p) ⊆ 𝔥₁ ∩ 𝔤₁(ℓ₁) is
/// checked exactly.
Polarization pullback_polarization(const Morphism& p, const Polarization& pol);

/// ξ(γ) ∈ ℤ for every lattice generator γ; sufficient over the whole
/// lattice by linearity.
bool is_integral(const Functional& xi, const Lattice& gamma);

/// Integrality at the orbit's base point; orbit-constancy follows from
/// centrality of the lattice and is spot-checked on seeded samples.
bool orbit_integral(const OrbitDescriptor& desc, const Lattice& gamma,
                    std::uint64_t seed = 0, std::size_t samples = 100);

struct TransportReport {
  bool image_contained = false;     // p(Γ₁-generators) ⊆ Γ₂
  bool generators_recovered = false; // Γ₂-generators ⊆ ℤ-span p(Γ₁)
  std::size_t integral_samples = 0;  // pulled-back integral functionals checked
};

/// Covering-diagram transport at the algebra+lattice level: requires
/// p(Γ₁) = Γ₂ as lattices, then certifies on seeded integral functionals
/// that pullback preserves integrality.
TransportReport transport_through_cover(const Morphism& p,
                                        const Lattice& gamma1,
                                        const Lattice& gamma2,
                                        std::uint64_t seed = 0,
                                        std::size_t samples = 100);

} // namespace nilorbit

#endif
