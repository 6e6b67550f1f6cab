#ifndef NILORBIT_PROLIE_HPP
#define NILORBIT_PROLIE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/kirillov.hpp"

namespace nilorbit {

/// Solenoid-type approximation data: one algebra shared by every level and
/// a descending chain of central lattices Γ₁ ⊇ Γ₂ ⊇ … ⊇ Γ_K, either listed
/// explicitly (each inclusion verified by exact integer solves) or given by
/// a geometric rule Γ_k = m^{k−1}·Γ₁ with integer ratio m ≥ 2, where the
/// inclusions and ⋂Γ_k = {0} hold by construction.
class QuotientTower {
public:
  enum class Kind { geometric, explicit_chain };

  const AlgebraPtr& algebra() const { return algebra_; }
  Kind kind() const { return kind_; }
  std::size_t max_level() const { return max_level_; }
  const Integer& ratio() const { return ratio_; }

private:
  friend QuotientTower make_geometric_tower(Lattice base, Integer ratio,
                                            std::size_t max_level);
  friend QuotientTower make_explicit_tower(std::vector<Lattice> chain);
  friend std::pair<AlgebraPtr, Lattice> tower_level(const QuotientTower& t,
                                                    std::size_t k);

  AlgebraPtr algebra_;
  Kind kind_ = Kind::geometric;
  Lattice base_;
  Integer ratio_ = 2;
  std::vector<Lattice> chain_;
  std::size_t max_level_ = 0;
};

QuotientTower make_geometric_tower(Lattice base, Integer ratio,
                                   std::size_t max_level);
QuotientTower make_explicit_tower(std::vector<Lattice> chain);

/// The shared algebra together with the exact level-k lattice, 1-based.
std::pair<AlgebraPtr, Lattice> tower_level(const QuotientTower& t,
                                           std::size_t k);

/// Smallest 1 ≤ k ≤ max_k with ξ(Γ_k) ⊆ ℤ, or nothing; monotonicity of
/// integrality above the found level is re-verified exactly.
std::optional<std::size_t> integrality_level(const QuotientTower& t,
                                             const Functional& xi,
                                             std::size_t max_k);

/// Countable family of factor algebras, finite or given by a rule; factors
/// are materialized on demand with insert-once memoization, safe under
/// concurrent access.
class ProductFamily {
public:
  static ProductFamily finite(std::vector<AlgebraPtr> factors);
  static ProductFamily repeated(AlgebraPtr factor);

  bool is_finite() const { return finite_size_.has_value(); }
  std::optional<std::size_t> finite_size() const { return finite_size_; }
  AlgebraPtr factor(std::size_t j) const;

private:
  ProductFamily() = default;

  std::function<AlgebraPtr(std::size_t)> make_;
  std::optional<std::size_t> finite_size_;

  struct Memo {
    std::mutex mutex;
    std::map<std::size_t, AlgebraPtr> factors;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// Finite sub-product G_F with its block layout: factor indices in
/// increasing order, and per-block offsets/dimensions inside the
/// direct-sum algebra.
struct ProductLevel {
  AlgebraPtr algebra;
  std::vector<std::size_t> indices;
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> dims;
};

/// Direct-sum algebra over a finite nonempty index set with block-diagonal
/// brackets.
ProductLevel product_projection(const ProductFamily& f,
                                std::vector<std::size_t> F);

/// The natural bonding projection G_{F₂} → G_{F₁} for F₁ ⊆ F₂, dropping
/// the blocks outside F₁.
Morphism block_projection(const ProductLevel& fine, const ProductLevel& coarse);

/// Finitely supported dual element of an infinite product: support indices
/// in increasing order, one nonzero functional per supported factor.
struct ProductDual {
  std::vector<std::size_t> support;
  std::vector<Functional> entries;
};

/// Canonical form of a raw finitely-supported assignment: zero entries are
/// trimmed, the support is minimal and sorted. A nonzero tail rule has no
/// finite support and is rejected.
ProductDual normalize_dual(const ProductFamily& f,
                           const std::map<std::size_t, RatVec>& raw,
                           const std::optional<RatVec>& tail = std::nullopt);

/// Entrywise equality of canonical forms.
bool dual_equal(const ProductDual& a, const ProductDual& b);

/// Tower-side dual element: a functional remembered together with the
/// level whose lattice certifies its integrality.
struct TowerDual {
  std::size_t level = 1;
  Functional xi;
};

TowerDual make_tower_dual(const QuotientTower& t, std::size_t level,
                          const Functional& xi);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Verdict {
  bool consistent = false;
  std::vector<CheckResult> checks;
};

/// Verifies that two level presentations describe the same dual element:
/// the coarse base point pulled back along the bonding projection and the
/// fine base point must lie on each other's orbits, seeded samples must
/// transport both ways, and integrality certificates (when lattices are
/// supplied) must agree. Failure throws InconsistentLevels naming the
/// check; success returns the full check list.
Verdict reconcile_product_levels(const ProductLevel& coarse,
                                 const ProductLevel& fine,
                                 const Functional& coarse_xi,
                                 const Functional& fine_xi,
                                 const std::optional<Lattice>& coarse_gamma =
                                     std::nullopt,
                                 const std::optional<Lattice>& fine_gamma =
                                     std::nullopt,
                                 std::uint64_t seed = 0,
                                 std::size_t samples = 25);

/// Tower analogue: levels share the algebra, so the bonding map is the
/// identity on functionals and the checks reduce to orbit equality plus
/// per-level integrality.
Verdict reconcile_tower_levels(const QuotientTower& t, const TowerDual& a,
                               const TowerDual& b, std::uint64_t seed = 0,
                               std::size_t samples = 25);

/// One row of the correspondence at a fixed level: the coadjoint orbit,
/// the Vergne polarization, and the induced-representation descriptor of
/// the same functional, cross-checked (base point on its orbit, orbit
/// integrality consistent with the descriptor's lattice certificate).
struct CorrespondenceEntry {
  std::size_t level = 1;
  OrbitDescriptor orbit;
  Polarization polarization;
  InducedRepDescriptor descriptor;
};

CorrespondenceEntry make_correspondence_entry(std::size_t level,
                                              const Functional& xi,
                                              const Flag& flag,
                                              std::optional<Lattice> gamma =
                                                  std::nullopt);

} // namespace nilorbit

#endif
