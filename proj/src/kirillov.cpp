#include "nilorbit/kirillov.hpp"

#include <string>
#include <utility>

#include "nilorbit/errors.hpp"
#include "nilorbit/rng.hpp"

namespace nilorbit {

namespace {

Rational pair_coords(const RatVec& xi, const RatVec& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < xi.size(); ++k) s += xi[k] * x[k];
  return s;
}

std::string failed_conditions(const PolarizationCertificate& c) {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += ", ";
    out += name;
  };
  if (!c.subalgebra) add("subalgebra closure");
  if (!c.subordinated) add("subordination");
  if (!c.dimension) add("dimension identity");
  return out;
}

} // namespace

PolarizationCertificate verify_polarization(const Functional& xi,
                                            const Subspace& h) {
  require_same_algebra(xi.algebra, h.algebra(), "verify_polarization");
  const AlgebraPtr& a = xi.algebra;

  PolarizationCertificate cert;
  cert.algebra_dim = a->dim();
  cert.stabilizer_dim = stabilizer(xi).dim();
  cert.polarization_dim = h.dim();
  cert.subalgebra = h.is_subalgebra();

  cert.subordinated = true;
  const std::vector<RatVec> rows = h.basis_rows();
  for (std::size_t s = 0; s < rows.size() && cert.subordinated; ++s)
    for (std::size_t t = s + 1; t < rows.size(); ++t) {
      if (pair_coords(xi.coords, bracket_coords(*a, rows[s], rows[t])) != 0) {
        cert.subordinated = false;
        break;
      }
    }

  cert.dimension =
      2 * cert.polarization_dim == cert.algebra_dim + cert.stabilizer_dim;
  return cert;
}

Polarization vergne_polarization(const Functional& xi, const Flag& flag) {
  if (!same_algebra(xi.algebra, flag.algebra()))
    throw FlagMismatch("flag belongs to a different algebra than the functional");
  const AlgebraPtr& a = xi.algebra;

  // Per layer, the stabilizer of ℓ| within the layer, mapped back to
  // ambient coordinates; the polarization is the sum over all layers.
  std::vector<RatVec> spanning;
  for (std::size_t j = 0; j < flag.size(); ++j) {
    const std::vector<RatVec> rows = flag.layer(j).basis_rows();
    const std::size_t m = rows.size();
    RatMatrix pairing(m, m);
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t)
        pairing.at(s, t) =
            pair_coords(xi.coords, bracket_coords(*a, rows[s], rows[t]));
    for (const RatVec& c : nullspace_basis(pairing)) {
      RatVec w(a->dim(), Rational(0));
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t k = 0; k < a->dim(); ++k) w[k] += c[s] * rows[s][k];
      spanning.push_back(std::move(w));
    }
  }

  Polarization pol;
  pol.functional = xi;
  pol.subspace = Subspace::from_spanning(a, spanning);
  pol.certificate = verify_polarization(xi, pol.subspace);
  if (!pol.certificate.ok())
    throw CertificateFailure("polarization conditions violated: " +
                             failed_conditions(pol.certificate));
  return pol;
}

Rational InducedRepDescriptor::character_phase(const Vector& x) const {
  require_same_algebra(functional_.algebra, x.algebra, "character_phase");
  if (!polarization_.contains(x.coords))
    throw PolarizationInvalid(
        "character phase is defined only on the polarization");
  return pair_coords(functional_.coords, x.coords);
}

InducedRepDescriptor induce_descriptor(const Functional& xi, const Subspace& h,
                                       std::optional<Lattice> gamma) {
  PolarizationCertificate cert = verify_polarization(xi, h);
  if (!cert.ok())
    throw PolarizationInvalid("polarization conditions violated: " +
                              failed_conditions(cert));
  if (gamma) {
    require_same_algebra(xi.algebra, gamma->algebra, "induce_descriptor");
    if (!is_integral(xi, *gamma))
      throw NotIntegral("functional is not integer-valued on the lattice");
  }
  InducedRepDescriptor d;
  d.functional_ = xi;
  d.polarization_ = h;
  d.certificate_ = cert;
  d.lattice_ = std::move(gamma);
  return d;
}

Functional pullback_functional(const Morphism& p, const Functional& eta) {
  require_same_algebra(p.target, eta.algebra, "pullback_functional");
  RatVec out(p.source->dim(), Rational(0));
  for (std::size_t i = 0; i < p.source->dim(); ++i)
    for (std::size_t j = 0; j < p.target->dim(); ++j)
      out[i] += p.matrix.at(j, i) * eta.coords[j];
  return make_functional(p.source, std::move(out));
}

OrbitDescriptor pullback_orbit(const Morphism& p, const OrbitDescriptor& desc,
                               std::uint64_t seed, std::size_t samples) {
  if (!p.surjective)
    throw NotSurjective("orbit pullback requires a surjective morphism");
  require_same_algebra(p.target, desc.algebra(), "pullback_orbit");

  const Functional xi = pullback_functional(p, desc.base());
  OrbitDescriptor pulled =
      orbit_descriptor(xi, jordan_holder_flag(p.source));

  // Functoriality of Ad under the morphism, checked at the matrix level:
  // matrix·Ad_src(g) = Ad_tgt(p(g))·matrix implies the coadjoint diagram
  // for every functional at once.
  for (std::size_t k = 0; k < samples; ++k) {
    SplitMix64 rng = stream_for(seed, k);
    const GroupElement g =
        make_vector(p.source, random_small_vector(rng, p.source->dim()));
    const GroupElement pg = apply_morphism(p, g);
    if (!(p.matrix * adjoint_matrix(g) == adjoint_matrix(pg) * p.matrix))
      throw SanityFailure("adjoint functoriality fails under the morphism");
  }

  for (const Functional& eta : orbit_sample(desc, seed + 1, samples)) {
    const MembershipResult r =
        orbit_contains(pulled, pullback_functional(p, eta));
    if (r.status != MembershipStatus::yes)
      throw SanityFailure(
          "pulled-back orbit sample not recognized as an orbit point");
  }
  return pulled;
}

Polarization pullback_polarization(const Morphism& p, const Polarization& pol) {
  if (!pol.certificate.ok())
    throw CertificateFailure("input polarization certificate is invalid");
  if (!p.surjective)
    throw NotSurjective("polarization pullback requires a surjective morphism");
  require_same_algebra(p.target, pol.functional.algebra, "pullback_polarization");

  Polarization out;
  out.functional = pullback_functional(p, pol.functional);
  out.subspace = preimage(p, pol.subspace);
  out.certificate = verify_polarization(out.functional, out.subspace);
  if (!out.certificate.ok())
    throw CertificateFailure("pulled-back polarization violates: " +
                             failed_conditions(out.certificate));

  const Subspace ker = morphism_kernel(p);
  if (out.subspace.dim() != pol.subspace.dim() + ker.dim())
    throw CertificateFailure(
        "dim h1 = dim h2 + dim Ker L(p) bookkeeping fails");
  if (out.certificate.stabilizer_dim !=
      stabilizer(pol.functional).dim() + ker.dim())
    throw CertificateFailure(
        "dim g1(l1) = dim g2(l2) + dim Ker L(p) bookkeeping fails");
  if (!out.subspace.contains_subspace(ker))
    throw CertificateFailure("Ker L(p) not contained in the polarization");
  if (!stabilizer(out.functional).contains_subspace(ker))
    throw CertificateFailure("Ker L(p) not contained in the stabilizer");
  return out;
}

bool is_integral(const Functional& xi, const Lattice& gamma) {
  require_same_algebra(xi.algebra, gamma.algebra, "is_integral");
  for (const RatVec& g : gamma.generators)
    if (!rat_is_integer(pair_coords(xi.coords, g))) return false;
  return true;
}

bool orbit_integral(const OrbitDescriptor& desc, const Lattice& gamma,
                    std::uint64_t seed, std::size_t samples) {
  const bool base = is_integral(desc.base(), gamma);
  for (const Functional& f : orbit_sample(desc, seed, samples))
    if (is_integral(f, gamma) != base)
      throw SanityFailure(
          "integrality is not constant along the orbit samples");
  return base;
}

TransportReport transport_through_cover(const Morphism& p,
                                        const Lattice& gamma1,
                                        const Lattice& gamma2,
                                        std::uint64_t seed,
                                        std::size_t samples) {
  if (!p.surjective)
    throw NotSurjective("covering transport requires a surjective morphism");
  require_same_algebra(p.source, gamma1.algebra, "transport_through_cover");
  require_same_algebra(p.target, gamma2.algebra, "transport_through_cover");

  std::vector<RatVec> images;
  images.reserve(gamma1.generators.size());
  for (const RatVec& g : gamma1.generators) images.push_back(p.matrix.apply(g));

  for (const RatVec& img : images)
    if (!in_integer_span(gamma2.generators, img))
      throw LatticeImageMismatch(
          "image of a source-lattice generator falls outside the target lattice");
  for (const RatVec& g : gamma2.generators)
    if (!in_integer_span(images, g))
      throw LatticeImageMismatch(
          "target-lattice generator is not an integer combination of images");

  // Seeded integral functionals on the target: integer values on the
  // lattice generators, arbitrary small rationals on a complement.
  const std::size_t m = p.target->dim();
  std::vector<RatVec> rows = gamma2.generators;
  {
    RatMatrix gen_mat(rows.size(), m);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m; ++c) gen_mat.at(r, c) = rows[r][c];
    const RrefResult red = rref(gen_mat);
    std::vector<bool> pivot(m, false);
    for (std::size_t c : red.pivot_cols) pivot[c] = true;
    for (std::size_t c = 0; c < m; ++c) {
      if (pivot[c]) continue;
      RatVec unit(m, Rational(0));
      unit[c] = 1;
      rows.push_back(std::move(unit));
    }
  }
  const std::size_t lattice_rows = gamma2.generators.size();
  RatMatrix eval = RatMatrix::from_rows(rows, m);

  TransportReport report;
  report.image_contained = true;
  report.generators_recovered = true;
  for (std::size_t k = 0; k < samples; ++k) {
    SplitMix64 rng = stream_for(seed, k);
    RatVec rhs(rows.size(), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      rhs[r] = r < lattice_rows
                   ? Rational(static_cast<long>(rng.below(17)) - 8)
                   : random_small_rational(rng);
    const auto sol = solve_linear(eval, rhs);
    if (!sol)
      throw SanityFailure("integral-functional sampler lost invertibility");
    const Functional eta = make_functional(p.target, *sol);
    if (!is_integral(eta, gamma2))
      throw SanityFailure("sampled functional is not integral by construction");
    if (!is_integral(pullback_functional(p, eta), gamma1))
      throw SanityFailure(
          "pullback of an integral functional failed integrality");
    ++report.integral_samples;
  }
  return report;
}

} // namespace nilorbit
