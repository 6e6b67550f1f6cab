#include "nilorbit/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilorbit/catalog.hpp"
#include "nilorbit/errors.hpp"
#include "nilorbit/io.hpp"
#include "nilorbit/report.hpp"

namespace nilorbit {

namespace {

struct Options {
  std::string algebra, functional, functional2;
  std::string lattice, lattice2;
  std::string tower, product, morphism;
  std::string flag = "auto";
  std::string contains, element, element2;
  std::string kind = "functional";
  std::string support, support2;
  std::string output = "json";
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::size_t max_level = 0;
  std::size_t level = 1, level2 = 1;
};

std::vector<std::size_t> parse_indices_csv(const std::string& csv) {
  std::vector<std::size_t> out;
  for (const Rational& q : parse_ratvec_csv(csv)) {
    if (!rat_is_integer(q) || q < 0)
      throw ParseError("index lists must contain non-negative integers");
    out.push_back(static_cast<std::size_t>(q.get_num().get_ui()));
  }
  return out;
}

std::string command_echo(int argc, const char* const* argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

/// Digest over the subcommand, every supplied flag, and the raw bytes of
/// every referenced top-level file; byte-identical inputs give identical
/// digests, and no clock or path randomness is involved.
std::string inputs_digest(const CLI::App* sub) {
  static const std::set<std::string> file_flags = {
      "--algebra", "--lattice", "--lattice2", "--morphism",
      "--tower",   "--product", "--flag"};
  std::string data = sub->get_name();
  data += '\0';
  for (const CLI::Option* o : sub->get_options()) {
    if (o->count() == 0) continue;
    for (const std::string& value : o->results()) {
      data += o->get_name();
      data += '=';
      data += value;
      data += '\0';
      if (file_flags.count(o->get_name()) && value != "auto" &&
          value.rfind("catalog:", 0) != 0) {
        std::ifstream in(value, std::ios::binary);
        if (in) {
          std::ostringstream bytes;
          bytes << in.rdbuf();
          data += bytes.str();
          data += '\0';
        }
      }
    }
  }
  return hex64(fnv1a64(data));
}

int usage_error(const std::string& message) {
  std::cerr << "usage error: " << message << "\n";
  return 3;
}

// Per-subcommand handlers fill report["results"] and return the exit code.

int run_validate(const Options& opt, Json& report) {
  AlgebraPtr a = load_algebra_ref(opt.algebra);
  Json& r = report["results"];
  r["name"] = a->name();
  r["dim"] = a->dim();
  r["basis"] = a->basis_names();
  r["nilpotency_class"] = a->nilpotency_class();
  r["valid"] = true;
  return 0;
}

int run_info(const Options& opt, Json& report) {
  AlgebraPtr a = load_algebra_ref(opt.algebra);
  Json& r = report["results"];
  r["name"] = a->name();
  r["dim"] = a->dim();
  r["basis"] = a->basis_names();
  r["nilpotency_class"] = a->nilpotency_class();
  r["center"] = json_basis_rows(center(a));
  Json lcs = Json::array();
  for (const Subspace& s : lower_central_series(a)) lcs.push_back(s.dim());
  r["lower_central_series_dims"] = std::move(lcs);
  return 0;
}

int run_orbit(const Options& opt, Json& report) {
  AlgebraPtr a = load_algebra_ref(opt.algebra);
  const Functional xi = make_functional(a, parse_ratvec_csv(opt.functional));
  const Flag flag = load_flag_spec(a, opt.flag);
  const OrbitDescriptor desc = orbit_descriptor(xi, flag);
  Json& r = report["results"];
  r["orbit"] = json_orbit(desc);

  if (!opt.element.empty()) {
    const GroupElement g = make_vector(a, parse_ratvec_csv(opt.element));
    r["coadjoint_image"] = json_ratvec(coadjoint_apply(g, xi).coords);
    if (!opt.element2.empty()) {
      const GroupElement h = make_vector(a, parse_ratvec_csv(opt.element2));
      r["bch_product"] = json_ratvec(bch_multiply(g, h).coords);
    }
  }

  int code = 0;
  if (!opt.contains.empty()) {
    const Functional eta =
        make_functional(a, parse_ratvec_csv(opt.contains));
    const MembershipResult m = orbit_contains(desc, eta);
    r["membership"] = json_membership(m);
    if (m.status == MembershipStatus::indeterminate) code = 2;
  }
  return code;
}

int run_stabilizer(const Options& opt, Json& report) {
  AlgebraPtr a = load_algebra_ref(opt.algebra);
  const Functional xi = make_functional(a, parse_ratvec_csv(opt.functional));
  const Subspace stab = stabilizer(xi);
  Json& r = report["results"];
  r["stabilizer"] = json_basis_rows(stab);
  r["stabilizer_dim"] = stab.dim();
  r["orbit_dimension"] = a->dim() - stab.dim();
  return 0;
}

int run_polarize(const Options& opt, Json& report) {
  AlgebraPtr a = load_algebra_ref(opt.algebra);
  const Functional xi = make_functional(a, parse_ratvec_csv(opt.functional));
  const Polarization pol =
      vergne_polarization(xi, load_flag_spec(a, opt.flag));
  Json& r = report["results"];
  r["polarization"] = json_basis_rows(pol.subspace);
  r["polarization_dim"] = pol.subspace.dim();
  r["certificate"] = json_certificate(pol.certificate);
  return 0;
}

int run_induce(const Options& opt, Json& report) {
  AlgebraPtr a = load_algebra_ref(opt.algebra);
  const Functional xi = make_functional(a, parse_ratvec_csv(opt.functional));
  const Polarization pol =
      vergne_polarization(xi, load_flag_spec(a, opt.flag));
  std::optional<Lattice> gamma;
  if (!opt.lattice.empty()) gamma = load_lattice_file(a, opt.lattice);
  const InducedRepDescriptor desc =
      induce_descriptor(xi, pol.subspace, gamma);
  Json& r = report["results"];
  r["polarization"] = json_basis_rows(desc.polarization());
  r["certificate"] = json_certificate(desc.certificate());
  r["integral"] = desc.lattice().has_value();
  Json phases = Json::array();
  for (const RatVec& row : desc.polarization().basis_rows())
    phases.push_back(rat_str(desc.character_phase(make_vector(a, row))));
  r["character_phase_on_basis"] = std::move(phases);
  return 0;
}

int run_pullback(const Options& opt, Json& report) {
  const Morphism p = load_morphism_file(opt.morphism);
  Json& r = report["results"];
  r["source"] = p.source->name();
  r["target"] = p.target->name();
  r["kind"] = opt.kind;

  if (opt.kind == "transport") {
    const Lattice g1 = load_lattice_file(p.source, opt.lattice);
    const Lattice g2 = load_lattice_file(p.target, opt.lattice2);
    const TransportReport t =
        transport_through_cover(p, g1, g2, opt.seed, opt.samples);
    r["image_contained"] = t.image_contained;
    r["generators_recovered"] = t.generators_recovered;
    r["integral_samples"] = t.integral_samples;
    return 0;
  }

  const Functional eta =
      make_functional(p.target, parse_ratvec_csv(opt.functional));
  if (opt.kind == "functional") {
    r["pullback"] = json_ratvec(pullback_functional(p, eta).coords);
    return 0;
  }
  if (opt.kind == "orbit") {
    const OrbitDescriptor desc =
        orbit_descriptor(eta, jordan_holder_flag(p.target));
    r["orbit"] = json_orbit(pullback_orbit(p, desc, opt.seed, opt.samples));
    r["verified_samples"] = opt.samples;
    return 0;
  }
  // --kind polarization
  const Polarization pol =
      vergne_polarization(eta, jordan_holder_flag(p.target));
  const Polarization pulled = pullback_polarization(p, pol);
  r["polarization"] = json_basis_rows(pulled.subspace);
  r["certificate"] = json_certificate(pulled.certificate);
  r["target_polarization_dim"] = pol.subspace.dim();
  r["kernel_dim"] = morphism_kernel(p).dim();
  return 0;
}

int run_integrality(const Options& opt, Json& report, bool has_max_level) {
  Json& r = report["results"];
  if (!opt.tower.empty()) {
    const QuotientTower t = load_tower_file(opt.tower);
    const Functional xi =
        make_functional(t.algebra(), parse_ratvec_csv(opt.functional));
    const std::size_t max_k = has_max_level ? opt.max_level : t.max_level();
    const std::optional<std::size_t> level =
        integrality_level(t, xi, max_k);
    r["max_level_scanned"] = max_k;
    if (level)
      r["level"] = *level;
    else
      r["level"] = nullptr;
    return 0;
  }
  if (opt.algebra.empty() || opt.lattice.empty())
    throw ParseError("integrality needs --tower or --algebra with --lattice");
  AlgebraPtr a = load_algebra_ref(opt.algebra);
  const Functional xi = make_functional(a, parse_ratvec_csv(opt.functional));
  const Lattice gamma = load_lattice_file(a, opt.lattice);
  r["integral"] = is_integral(xi, gamma);
  const OrbitDescriptor desc =
      orbit_descriptor(xi, load_flag_spec(a, opt.flag));
  r["orbit_integral"] = orbit_integral(desc, gamma, opt.seed, opt.samples);
  return 0;
}

int run_tower(const Options& opt, Json& report) {
  const QuotientTower t = load_tower_file(opt.tower);
  const auto [a, gamma] = tower_level(t, opt.level);
  Json& r = report["results"];
  r["algebra"] = a->name();
  r["kind"] =
      t.kind() == QuotientTower::Kind::geometric ? "geometric" : "explicit";
  r["max_level"] = t.max_level();
  r["level"] = opt.level;
  Json gens = Json::array();
  for (const RatVec& g : gamma.generators) gens.push_back(json_ratvec(g));
  r["generators"] = std::move(gens);
  return 0;
}

int run_product(const Options& opt, Json& report) {
  const ProductFamily family = load_product_file(opt.product);
  const ProductLevel level =
      product_projection(family, parse_indices_csv(opt.support));
  Json& r = report["results"];
  r["algebra"] = level.algebra->name();
  r["dim"] = level.algebra->dim();
  r["nilpotency_class"] = level.algebra->nilpotency_class();
  r["indices"] = level.indices;
  r["offsets"] = level.offsets;
  r["block_dims"] = level.dims;
  return 0;
}

int run_reconcile(const Options& opt, Json& report) {
  Json& r = report["results"];
  if (!opt.product.empty()) {
    const ProductFamily family = load_product_file(opt.product);
    const ProductLevel coarse =
        product_projection(family, parse_indices_csv(opt.support));
    const ProductLevel fine =
        product_projection(family, parse_indices_csv(opt.support2));
    const Functional coarse_xi =
        make_functional(coarse.algebra, parse_ratvec_csv(opt.functional));
    const Functional fine_xi =
        make_functional(fine.algebra, parse_ratvec_csv(opt.functional2));
    r["verdict"] = json_checks(reconcile_product_levels(
        coarse, fine, coarse_xi, fine_xi, std::nullopt, std::nullopt,
        opt.seed, opt.samples));
    return 0;
  }
  if (!opt.tower.empty()) {
    const QuotientTower t = load_tower_file(opt.tower);
    const TowerDual a = make_tower_dual(
        t, opt.level,
        make_functional(t.algebra(), parse_ratvec_csv(opt.functional)));
    const TowerDual b = make_tower_dual(
        t, opt.level2,
        make_functional(t.algebra(), parse_ratvec_csv(opt.functional2)));
    r["verdict"] =
        json_checks(reconcile_tower_levels(t, a, b, opt.seed, opt.samples));
    return 0;
  }
  throw ParseError("reconcile needs --product or --tower");
}

int run_catalog(Json& report) {
  Json entries = Json::array();
  for (const std::string& name : catalog_entries()) {
    AlgebraPtr a = catalog_algebra(name);
    Json e;
    e["name"] = name;
    e["dim"] = a->dim();
    e["nilpotency_class"] = a->nilpotency_class();
    entries.push_back(std::move(e));
  }
  report["results"]["entries"] = std::move(entries);
  return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Exact coadjoint-orbit computations for nilpotent Lie groups and "
      "their pro-Lie approximations"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "RNG seed for sampled checks");
    sub->add_option("--samples", opt.samples, "sample count for checks");
    sub->add_option("--output", opt.output, "report format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "validate an algebra");
  validate->add_option("--algebra", opt.algebra)->required();
  add_common(validate);

  CLI::App* info = app.add_subcommand("info", "structure summary");
  info->add_option("--algebra", opt.algebra)->required();
  add_common(info);

  CLI::App* orbit =
      app.add_subcommand("orbit", "coadjoint orbit descriptor and queries");
  orbit->add_option("--algebra", opt.algebra)->required();
  orbit->add_option("--functional", opt.functional)->required();
  orbit->add_option("--flag", opt.flag, "auto or a flag file");
  orbit->add_option("--contains", opt.contains,
                    "membership query point (CSV)");
  orbit->add_option("--element", opt.element,
                    "exp-coordinates acting on the functional");
  orbit->add_option("--element2", opt.element2,
                    "second element for a BCH product");
  add_common(orbit);

  CLI::App* stab = app.add_subcommand("stabilizer", "stabilizer subalgebra");
  stab->add_option("--algebra", opt.algebra)->required();
  stab->add_option("--functional", opt.functional)->required();
  add_common(stab);

  CLI::App* polarize =
      app.add_subcommand("polarize", "Vergne polarization with certificates");
  polarize->add_option("--algebra", opt.algebra)->required();
  polarize->add_option("--functional", opt.functional)->required();
  polarize->add_option("--flag", opt.flag);
  add_common(polarize);

  CLI::App* induce =
      app.add_subcommand("induce", "induced-representation descriptor");
  induce->add_option("--algebra", opt.algebra)->required();
  induce->add_option("--functional", opt.functional)->required();
  induce->add_option("--flag", opt.flag);
  induce->add_option("--lattice", opt.lattice, "central lattice file");
  add_common(induce);

  CLI::App* pullback =
      app.add_subcommand("pullback", "pull data back along a surjection");
  pullback->add_option("--morphism", opt.morphism)->required();
  pullback->add_option("--kind", opt.kind)
      ->check(CLI::IsMember({"functional", "orbit", "polarization",
                             "transport"}));
  pullback->add_option("--functional", opt.functional,
                       "functional on the target");
  pullback->add_option("--lattice", opt.lattice, "source lattice (transport)");
  pullback->add_option("--lattice2", opt.lattice2,
                       "target lattice (transport)");
  add_common(pullback);

  CLI::App* integrality =
      app.add_subcommand("integrality", "integrality of functionals");
  integrality->add_option("--tower", opt.tower);
  integrality->add_option("--algebra", opt.algebra);
  integrality->add_option("--lattice", opt.lattice);
  integrality->add_option("--functional", opt.functional)->required();
  integrality->add_option("--flag", opt.flag);
  CLI::Option* max_level_opt =
      integrality->add_option("--max-level", opt.max_level);
  add_common(integrality);

  CLI::App* tower = app.add_subcommand("tower", "materialize a tower level");
  tower->add_option("--tower", opt.tower)->required();
  tower->add_option("--level", opt.level);
  add_common(tower);

  CLI::App* product =
      app.add_subcommand("product", "finite sub-product of a family");
  product->add_option("--product", opt.product)->required();
  product->add_option("--support", opt.support, "factor indices (CSV)")
      ->required();
  add_common(product);

  CLI::App* reconcile =
      app.add_subcommand("reconcile", "cross-level consistency checks");
  reconcile->add_option("--product", opt.product);
  reconcile->add_option("--tower", opt.tower);
  reconcile->add_option("--support", opt.support, "coarse index set");
  reconcile->add_option("--support2", opt.support2, "fine index set");
  reconcile->add_option("--level", opt.level, "first tower level");
  reconcile->add_option("--level2", opt.level2, "second tower level");
  reconcile->add_option("--functional", opt.functional)->required();
  reconcile->add_option("--functional2", opt.functional2)->required();
  add_common(reconcile);

  CLI::App* catalog =
      app.add_subcommand("catalog", "list built-in algebras");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  const bool json_out = opt.output != "text";
  const std::string echo = command_echo(argc, argv);

  try {
    Json report = report_skeleton(echo, opt.seed, inputs_digest(sub));
    int code = 0;
    if (sub == validate) code = run_validate(opt, report);
    else if (sub == info) code = run_info(opt, report);
    else if (sub == orbit) code = run_orbit(opt, report);
    else if (sub == stab) code = run_stabilizer(opt, report);
    else if (sub == polarize) code = run_polarize(opt, report);
    else if (sub == induce) code = run_induce(opt, report);
    else if (sub == pullback) code = run_pullback(opt, report);
    else if (sub == integrality)
      code = run_integrality(opt, report, max_level_opt->count() > 0);
    else if (sub == tower) code = run_tower(opt, report);
    else if (sub == product) code = run_product(opt, report);
    else if (sub == reconcile) code = run_reconcile(opt, report);
    else if (sub == catalog) code = run_catalog(report);
    else return usage_error("unknown subcommand " + name);
    std::cout << render_report(report, json_out);
    return code;
  } catch (const Error& e) {
    Json err;
    err["schema"] = "nilorbit-report/1";
    err["command"] = echo;
    err["error"]["code"] = e.code();
    err["error"]["message"] = e.what();
    std::cout << render_report(err, json_out);
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["schema"] = "nilorbit-report/1";
    err["command"] = echo;
    err["error"]["code"] = "InternalError";
    err["error"]["message"] = e.what();
    std::cout << render_report(err, json_out);
    return 1;
  }
}

} // namespace nilorbit
