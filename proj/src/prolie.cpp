#include "nilorbit/prolie.hpp"

#include <algorithm>

#include "nilorbit/errors.hpp"

namespace nilorbit {

namespace {

Integer ratio_power(const Integer& ratio, std::size_t exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), ratio.get_mpz_t(), exponent);
  return out;
}

Lattice scaled_lattice(const Lattice& base, const Integer& scale) {
  std::vector<RatVec> gens = base.generators;
  for (RatVec& g : gens)
    for (Rational& c : g) c *= Rational(scale);
  return make_lattice(base.algebra, std::move(gens));
}

} // namespace

QuotientTower make_geometric_tower(Lattice base, Integer ratio,
                                   std::size_t max_level) {
  if (ratio < 2)
    throw CertificateFailure("geometric tower ratio must be an integer >= 2");
  if (max_level < 1) throw LevelOutOfRange("tower needs at least one level");
  QuotientTower t;
  t.algebra_ = base.algebra;
  t.kind_ = QuotientTower::Kind::geometric;
  t.base_ = std::move(base);
  t.ratio_ = std::move(ratio);
  t.max_level_ = max_level;
  return t;
}

QuotientTower make_explicit_tower(std::vector<Lattice> chain) {
  if (chain.empty()) throw LevelOutOfRange("tower needs at least one level");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    require_same_algebra(chain[k].algebra, chain[k + 1].algebra,
                         "tower chain");
    for (const RatVec& g : chain[k + 1].generators)
      if (!in_integer_span(chain[k].generators, g))
        throw CertificateFailure(
            "level " + std::to_string(k + 2) +
            " lattice is not contained in level " + std::to_string(k + 1));
  }
  QuotientTower t;
  t.algebra_ = chain.front().algebra;
  t.kind_ = QuotientTower::Kind::explicit_chain;
  t.max_level_ = chain.size();
  t.chain_ = std::move(chain);
  return t;
}

std::pair<AlgebraPtr, Lattice> tower_level(const QuotientTower& t,
                                           std::size_t k) {
  if (k < 1 || k > t.max_level_)
    throw LevelOutOfRange("tower level " + std::to_string(k) +
                          " outside 1.." + std::to_string(t.max_level_));
  if (t.kind_ == QuotientTower::Kind::explicit_chain)
    return {t.algebra_, t.chain_[k - 1]};
  return {t.algebra_, scaled_lattice(t.base_, ratio_power(t.ratio_, k - 1))};
}

std::optional<std::size_t> integrality_level(const QuotientTower& t,
                                             const Functional& xi,
                                             std::size_t max_k) {
  require_same_algebra(t.algebra(), xi.algebra, "integrality_level");
  if (max_k > t.max_level())
    throw LevelOutOfRange("requested scan depth exceeds the tower's levels");
  std::optional<std::size_t> found;
  for (std::size_t k = 1; k <= max_k; ++k) {
    const bool integral = is_integral(xi, tower_level(t, k).second);
    if (integral && !found) found = k;
    // Once integral the property must persist: Γ_k ⊇ Γ_{k'} for k' ≥ k.
    if (found && !integral)
      throw SanityFailure("tower integrality is not monotone in the level");
  }
  return found;
}

ProductFamily ProductFamily::finite(std::vector<AlgebraPtr> factors) {
  ProductFamily f;
  f.finite_size_ = factors.size();
  f.make_ = [factors = std::move(factors)](std::size_t j) {
    if (j >= factors.size())
      throw BadIndex("factor index " + std::to_string(j) +
                     " outside the finite family");
    return factors[j];
  };
  return f;
}

ProductFamily ProductFamily::repeated(AlgebraPtr factor) {
  ProductFamily f;
  f.make_ = [factor = std::move(factor)](std::size_t) { return factor; };
  return f;
}

AlgebraPtr ProductFamily::factor(std::size_t j) const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto it = memo_->factors.find(j);
  if (it != memo_->factors.end()) return it->second;
  AlgebraPtr made = make_(j);
  memo_->factors.emplace(j, made);
  return made;
}

ProductLevel product_projection(const ProductFamily& f,
                                std::vector<std::size_t> F) {
  std::sort(F.begin(), F.end());
  F.erase(std::unique(F.begin(), F.end()), F.end());
  if (F.empty()) throw BadIndex("product level needs a nonempty index set");

  ProductLevel level;
  level.indices = F;
  std::string name = "prod(";
  std::size_t total = 0;
  std::vector<AlgebraPtr> factors;
  for (std::size_t pos = 0; pos < F.size(); ++pos) {
    AlgebraPtr a = f.factor(F[pos]);
    level.offsets.push_back(total);
    level.dims.push_back(a->dim());
    total += a->dim();
    name += (pos ? "," : "") + a->name();
    factors.push_back(std::move(a));
  }
  name += ")";

  std::vector<BracketEntry> entries;
  for (std::size_t pos = 0; pos < factors.size(); ++pos) {
    const LieAlgebra& a = *factors[pos];
    const std::size_t off = level.offsets[pos];
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i + 1; j < a.dim(); ++j) {
        const RatVec& v = a.bracket_basis(i, j);
        BracketEntry e;
        e.i = off + i;
        e.j = off + j;
        for (std::size_t k = 0; k < a.dim(); ++k)
          if (v[k] != 0) e.coeffs[off + k] = v[k];
        if (!e.coeffs.empty()) entries.push_back(std::move(e));
      }
  }
  level.algebra = validate_algebra(name, total, {}, entries);
  return level;
}

Morphism block_projection(const ProductLevel& fine,
                          const ProductLevel& coarse) {
  RatMatrix m(coarse.algebra->dim(), fine.algebra->dim());
  for (std::size_t c = 0; c < coarse.indices.size(); ++c) {
    const auto it = std::find(fine.indices.begin(), fine.indices.end(),
                              coarse.indices[c]);
    if (it == fine.indices.end())
      throw BadIndex("coarse level uses a factor absent from the fine level");
    const std::size_t pos =
        static_cast<std::size_t>(it - fine.indices.begin());
    for (std::size_t r = 0; r < coarse.dims[c]; ++r)
      m.at(coarse.offsets[c] + r, fine.offsets[pos] + r) = 1;
  }
  return make_morphism(fine.algebra, coarse.algebra, std::move(m));
}

ProductDual normalize_dual(const ProductFamily& f,
                           const std::map<std::size_t, RatVec>& raw,
                           const std::optional<RatVec>& tail) {
  std::map<std::size_t, RatVec> entries = raw;
  if (tail) {
    const bool tail_zero =
        std::all_of(tail->begin(), tail->end(),
                    [](const Rational& c) { return c == 0; });
    if (!tail_zero) {
      if (!f.is_finite())
        throw InfiniteSupport(
            "nonzero tail rule over a countable family has no finite support");
      for (std::size_t j = 0; j < *f.finite_size(); ++j)
        if (!entries.count(j)) entries[j] = *tail;
    }
  }

  ProductDual dual;
  for (const auto& [j, coords] : entries) {
    Functional xi = make_functional(f.factor(j), coords);
    const bool zero = std::all_of(xi.coords.begin(), xi.coords.end(),
                                  [](const Rational& c) { return c == 0; });
    if (zero) continue;
    dual.support.push_back(j);
    dual.entries.push_back(std::move(xi));
  }
  return dual;
}

bool dual_equal(const ProductDual& a, const ProductDual& b) {
  if (a.support != b.support) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    if (!same_algebra(a.entries[k].algebra, b.entries[k].algebra)) return false;
    if (a.entries[k].coords != b.entries[k].coords) return false;
  }
  return true;
}

TowerDual make_tower_dual(const QuotientTower& t, std::size_t level,
                          const Functional& xi) {
  require_same_algebra(t.algebra(), xi.algebra, "make_tower_dual");
  if (!is_integral(xi, tower_level(t, level).second))
    throw NotIntegral("functional is not integral at tower level " +
                      std::to_string(level));
  return TowerDual{level, xi};
}

namespace {

void record(std::vector<CheckResult>& checks, const std::string& name,
            bool passed, const std::string& detail) {
  checks.push_back(CheckResult{name, passed, detail});
  if (!passed) throw InconsistentLevels(name + ": " + detail);
}

bool contains_yes(const OrbitDescriptor& desc, const Functional& xi) {
  return orbit_contains(desc, xi).status == MembershipStatus::yes;
}

/// Orbit equality certificate: base points on each other's orbits, then
/// seeded samples transported both ways.
void check_same_orbit(std::vector<CheckResult>& checks,
                      const OrbitDescriptor& left,
                      const OrbitDescriptor& right, std::uint64_t seed,
                      std::size_t samples) {
  record(checks, "base point transport",
         contains_yes(left, right.base()) && contains_yes(right, left.base()),
         "each base point must lie on the other orbit");
  bool ok = true;
  for (const Functional& s : orbit_sample(left, seed, samples))
    ok = ok && contains_yes(right, s);
  for (const Functional& s : orbit_sample(right, seed + 1, samples))
    ok = ok && contains_yes(left, s);
  record(checks, "sample transport", ok,
         "every sample of one orbit must lie on the other");
}

} // namespace

Verdict reconcile_product_levels(const ProductLevel& coarse,
                                 const ProductLevel& fine,
                                 const Functional& coarse_xi,
                                 const Functional& fine_xi,
                                 const std::optional<Lattice>& coarse_gamma,
                                 const std::optional<Lattice>& fine_gamma,
                                 std::uint64_t seed, std::size_t samples) {
  require_same_algebra(coarse.algebra, coarse_xi.algebra,
                       "reconcile_product_levels");
  require_same_algebra(fine.algebra, fine_xi.algebra,
                       "reconcile_product_levels");

  Verdict verdict;
  record(verdict.checks, "index nesting",
         std::includes(fine.indices.begin(), fine.indices.end(),
                       coarse.indices.begin(), coarse.indices.end()),
         "the coarse index set must be contained in the fine one");

  const Morphism bonding = block_projection(fine, coarse);
  const Functional pulled = pullback_functional(bonding, coarse_xi);
  const Flag flag = jordan_holder_flag(fine.algebra);
  const OrbitDescriptor pulled_orbit = orbit_descriptor(pulled, flag);
  const OrbitDescriptor fine_orbit = orbit_descriptor(fine_xi, flag);
  check_same_orbit(verdict.checks, pulled_orbit, fine_orbit, seed, samples);

  if (coarse_gamma && fine_gamma) {
    record(verdict.checks, "integrality agreement",
           is_integral(coarse_xi, *coarse_gamma) ==
               is_integral(fine_xi, *fine_gamma),
           "the two levels certify different integrality");
  } else {
    verdict.checks.push_back(CheckResult{
        "integrality agreement", true,
        "fewer than two lattice certificates supplied, nothing to compare"});
  }
  verdict.consistent = true;
  return verdict;
}

Verdict reconcile_tower_levels(const QuotientTower& t, const TowerDual& a,
                               const TowerDual& b, std::uint64_t seed,
                               std::size_t samples) {
  require_same_algebra(t.algebra(), a.xi.algebra, "reconcile_tower_levels");
  require_same_algebra(t.algebra(), b.xi.algebra, "reconcile_tower_levels");

  Verdict verdict;
  record(verdict.checks, "level range",
         a.level >= 1 && b.level >= 1 && a.level <= t.max_level() &&
             b.level <= t.max_level(),
         "both levels must be materialized in the tower");

  // Tower bonding maps are quotients by lattices, the identity on the
  // shared Lie algebra, so the orbit comparison happens directly.
  const Flag flag = jordan_holder_flag(t.algebra());
  check_same_orbit(verdict.checks, orbit_descriptor(a.xi, flag),
                   orbit_descriptor(b.xi, flag), seed, samples);

  record(verdict.checks, "integrality agreement",
         is_integral(a.xi, tower_level(t, a.level).second) &&
             is_integral(b.xi, tower_level(t, b.level).second),
         "each presentation must be integral at its own level");
  verdict.consistent = true;
  return verdict;
}

CorrespondenceEntry make_correspondence_entry(std::size_t level,
                                              const Functional& xi,
                                              const Flag& flag,
                                              std::optional<Lattice> gamma) {
  CorrespondenceEntry entry;
  entry.level = level;
  entry.orbit = orbit_descriptor(xi, flag);
  entry.polarization = vergne_polarization(xi, flag);
  entry.descriptor =
      induce_descriptor(xi, entry.polarization.subspace, gamma);
  if (!contains_yes(entry.orbit, xi))
    throw SanityFailure("entry base point missing from its own orbit");
  if (gamma && !orbit_integral(entry.orbit, *gamma))
    throw SanityFailure(
        "orbit integrality disagrees with the descriptor certificate");
  return entry;
}

} // namespace nilorbit
