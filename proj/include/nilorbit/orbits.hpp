#ifndef NILORBIT_ORBITS_HPP
#define NILORBIT_ORBITS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nilorbit/bch.hpp"

namespace nilorbit {

/// Exact nullspace of B_ℓ(x, y) = ℓ([x, y]): {X : ℓ([X, e_j]) = 0 ∀j}.
/// Always a subalgebra.
Subspace stabilizer(const Functional& xi);

enum class MembershipStatus { yes, no, indeterminate };

/// Where and why the greedy elimination could not decide. The polynomial
/// is the blocked layer coordinate after substituting all solved
/// parameters.
struct BlockingReport {
  std::size_t layer = 0;
  std::string reason;
  std::string polynomial;
};

struct MembershipResult {
  MembershipStatus status = MembershipStatus::indeterminate;
  std::optional<GroupElement> witness;
  std::optional<BlockingReport> blocking;
};

class OrbitDescriptor {
public:
  OrbitDescriptor() = default;

  const AlgebraPtr& algebra() const { return base_.algebra; }
  const Functional& base() const { return base_; }
  const Subspace& stab() const { return stabilizer_; }
  std::size_t dimension() const { return dimension_; }
  const Flag& flag() const { return flag_; }
  const std::vector<std::size_t>& jump_indices() const { return jumps_; }

  /// Concurrent-safe insert-once cache of membership witnesses.
  std::optional<RatVec> cached_witness(const RatVec& point) const;
  void cache_witness(const RatVec& point, const RatVec& witness) const;

private:
  friend OrbitDescriptor orbit_descriptor(const Functional&, const Flag&);

  Functional base_;
  Subspace stabilizer_;
  std::size_t dimension_ = 0;
  Flag flag_;
  std::vector<std::size_t> jumps_;

  struct WitnessCache {
    mutable std::mutex mutex;
    std::map<RatVec, RatVec> entries;
  };
  std::shared_ptr<WitnessCache> cache_ = std::make_shared<WitnessCache>();
};

/// Builds the descriptor for the coadjoint orbit through ℓ. The orbit
/// dimension is dim 𝔤 − dim 𝔤(ℓ) and is always even; layer j is a jump
/// index when the stabilizer meets 𝔤_j no deeper than 𝔤_{j−1}, and the
/// jump count always equals the dimension.
OrbitDescriptor orbit_descriptor(const Functional& xi, const Flag& flag);

/// Greedy triangular elimination along the flag. The candidate witness is
/// exp(t_n X_n)···exp(t₁ X₁) with X_j the flag direction of layer j and a
/// parameter only at jump layers; walking layers from the bottom, each
/// adapted coordinate either matches a constant, rules the point out at a
/// non-jump layer, or determines one parameter by an affine solve. Both
/// "yes" (exact witness verification) and "no" are definite; anything the
/// greedy pass cannot decide is surfaced as indeterminate, never guessed.
MembershipResult orbit_contains(const OrbitDescriptor& desc,
                                const Functional& eta);

/// Seeded coadjoint samples Ad*(exp v)ℓ with small-height random v, one
/// independent stream per index so results are scheduling-independent.
std::vector<Functional> orbit_sample(const OrbitDescriptor& desc,
                                     std::uint64_t seed, std::size_t count,
                                     bool parallel = true);

} // namespace nilorbit

#endif
