#include "nilorbit/orbits.hpp"

#include <utility>

#include "nilorbit/errors.hpp"
#include "nilorbit/rng.hpp"

namespace nilorbit {

Subspace stabilizer(const Functional& xi) {
  const AlgebraPtr& a = xi.algebra;
  const std::size_t n = a->dim();
  // Row j encodes the linear condition ℓ([X, e_j]) = 0 on X.
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const RatVec& br = a->bracket_basis(i, j);
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += xi.coords[k] * br[k];
      m.at(j, i) = s;
    }
  }
  return Subspace::from_spanning(a, nullspace_basis(m));
}

std::optional<RatVec> OrbitDescriptor::cached_witness(
    const RatVec& point) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->entries.find(point);
  if (it == cache_->entries.end()) return std::nullopt;
  return it->second;
}

void OrbitDescriptor::cache_witness(const RatVec& point,
                                    const RatVec& witness) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->entries.emplace(point, witness);
}

OrbitDescriptor orbit_descriptor(const Functional& xi, const Flag& flag) {
  if (!same_algebra(xi.algebra, flag.algebra()))
    throw FlagMismatch("flag belongs to a different algebra than the functional");
  const std::size_t n = xi.algebra->dim();

  OrbitDescriptor desc;
  desc.base_ = xi;
  desc.stabilizer_ = stabilizer(xi);
  desc.dimension_ = n - desc.stabilizer_.dim();
  if (desc.dimension_ % 2 != 0)
    throw SanityFailure("coadjoint orbit dimension must be even");
  desc.flag_ = flag;

  // Layer j is a jump when the stabilizer meets 𝔤_j no deeper than 𝔤_{j-1}.
  std::size_t prev = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t cur =
        subspace_intersect(desc.stabilizer_, flag.layer(j)).dim();
    if (cur == prev) desc.jumps_.push_back(j);
    prev = cur;
  }
  if (desc.jumps_.size() != desc.dimension_)
    throw SanityFailure("jump index count disagrees with orbit dimension");
  return desc;
}

namespace {

std::string param_name(std::size_t layer) {
  return "t" + std::to_string(layer + 1);
}

Rational pair_row(const RatVec& row, const RatVec& coords) {
  Rational s = 0;
  for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * coords[k];
  return s;
}

Polynomial pair_row(const RatVec& row, const PolyVec& coords) {
  Polynomial s;
  for (std::size_t k = 0; k < row.size(); ++k) s += coords[k] * row[k];
  return s;
}

MembershipResult indeterminate_at(std::size_t layer, std::string reason,
                                  const Polynomial& blocked) {
  MembershipResult r;
  r.status = MembershipStatus::indeterminate;
  r.blocking = BlockingReport{layer, std::move(reason), blocked.str()};
  return r;
}

} // namespace

MembershipResult orbit_contains(const OrbitDescriptor& desc,
                                const Functional& eta) {
  const AlgebraPtr& a = desc.algebra();
  require_same_algebra(a, eta.algebra, "orbit_contains");
  const std::size_t n = a->dim();
  const Flag& flag = desc.flag();

  MembershipResult result;
  if (eta.coords == desc.base().coords) {
    result.status = MembershipStatus::yes;
    result.witness = group_identity(a);
    desc.cache_witness(eta.coords, result.witness->coords);
    return result;
  }
  if (auto hit = desc.cached_witness(eta.coords)) {
    result.status = MembershipStatus::yes;
    result.witness = make_vector(a, *hit);
    return result;
  }

  std::vector<bool> is_jump(n, false);
  for (std::size_t j : desc.jump_indices()) is_jump[j] = true;

  // Candidate point Ad*(exp(t_n X_n)···exp(t₁ X₁)) ℓ, lowest flow applied
  // first, with a parameter only at jump layers.
  PolyVec cur(n);
  for (std::size_t k = 0; k < n; ++k) cur[k] = Polynomial(desc.base().coords[k]);
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_jump[j]) continue;
    cur = coadjoint_symbolic_vec(a, flag.direction(j), param_name(j), cur);
  }

  // Walk the adapted coordinates bottom-up, solving one parameter at a time.
  std::map<std::string, Rational> bindings;
  for (std::size_t j = 0; j < n; ++j) {
    const RatVec& d = flag.direction(j);
    const Polynomial pj = pair_row(d, cur);
    const Rational tau = pair_row(d, eta.coords);
    const Polynomial sub = pj.substitute(bindings);
    if (sub.is_constant()) {
      if (sub.constant_value() == tau) continue;
      if (is_jump[j])
        return indeterminate_at(
            j, "jump layer coordinate became constant and disagrees",
            sub - Polynomial(tau));
      result.status = MembershipStatus::no;
      return result;
    }
    const std::vector<std::string> open = sub.variables();
    if (open.size() > 1)
      return indeterminate_at(
          j, "layer coordinate involves several undetermined parameters", sub);
    try {
      const Rational value =
          solve_affine(pj - Polynomial(tau), open.front(), bindings);
      bindings[open.front()] = value;
    } catch (const NotAffine&) {
      return indeterminate_at(
          j, "layer coordinate is not affine in its parameter", sub);
    } catch (const DegenerateCoefficient&) {
      return indeterminate_at(
          j, "parameter coefficient vanishes at this layer", sub);
    }
  }

  // Witness product, highest flow leftmost; parameters the walk never
  // touched are free and set to zero.
  GroupElement g = group_identity(a);
  for (std::size_t jj = n; jj-- > 0;) {
    if (!is_jump[jj]) continue;
    Rational value = 0;
    auto it = bindings.find(param_name(jj));
    if (it != bindings.end()) value = it->second;
    RatVec step(n, Rational(0));
    const RatVec& d = flag.direction(jj);
    for (std::size_t k = 0; k < n; ++k) step[k] = value * d[k];
    g = bch_multiply(g, make_vector(a, step));
  }

  if (coadjoint_apply(g, desc.base()).coords != eta.coords)
    return indeterminate_at(n == 0 ? 0 : n - 1,
                            "solved parameters fail exact verification",
                            Polynomial());
  desc.cache_witness(eta.coords, g.coords);
  result.status = MembershipStatus::yes;
  result.witness = std::move(g);
  return result;
}

std::vector<Functional> orbit_sample(const OrbitDescriptor& desc,
                                     std::uint64_t seed, std::size_t count,
                                     bool parallel) {
  const AlgebraPtr& a = desc.algebra();
  const std::size_t n = a->dim();
  std::vector<Functional> out(count, desc.base());
  const long long total = static_cast<long long>(count);
#pragma omp parallel for if (parallel) schedule(static)
  for (long long i = 0; i < total; ++i) {
    SplitMix64 rng = stream_for(seed, static_cast<std::uint64_t>(i));
    const GroupElement g = make_vector(a, random_small_vector(rng, n));
    out[static_cast<std::size_t>(i)] = coadjoint_apply(g, desc.base());
  }
  return out;
}

} // namespace nilorbit
