#include "nilorbit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilorbit/catalog.hpp"
#include "nilorbit/errors.hpp"

namespace nilorbit {

namespace {

using Json = nlohmann::json;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(where + ": missing key \"" + key + "\"");
  return *it;
}

Rational json_rational(const Json& v, const std::string& where) {
  if (v.is_string()) return rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(where + ": rationals must be strings like \"p/q\"");
}

RatVec json_ratvec(const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  RatVec out;
  out.reserve(arr.size());
  for (const Json& v : arr) out.push_back(json_rational(v, where));
  return out;
}

std::vector<RatVec> json_vector_list(const Json& arr,
                                     const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  std::vector<RatVec> out;
  for (const Json& v : arr) out.push_back(json_ratvec(v, where));
  return out;
}

std::string dir_of(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

} // namespace

RatVec parse_ratvec_csv(const std::string& csv) {
  RatVec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw ParseError("empty coordinate in \"" + csv + "\"");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(rat_parse(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw ParseError("empty coordinate list");
  return out;
}

AlgebraPtr load_algebra_file(const std::string& path) {
  const Json j = load_json(path);
  const std::size_t dim = need(j, "dim", path).get<std::size_t>();
  std::vector<std::string> basis;
  if (j.contains("basis"))
    basis = j["basis"].get<std::vector<std::string>>();
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const Json& b : j["brackets"]) {
      BracketEntry e;
      e.i = need(b, "i", path).get<std::size_t>();
      e.j = need(b, "j", path).get<std::size_t>();
      for (const auto& [k, v] : need(b, "coeffs", path).items()) {
        if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(path + ": coefficient keys must be basis indices");
        e.coeffs[std::stoul(k)] = json_rational(v, path);
      }
      entries.push_back(std::move(e));
    }
  }
  return validate_algebra(need(j, "name", path).get<std::string>(), dim,
                          std::move(basis), entries);
}

AlgebraPtr load_algebra_ref(const std::string& ref,
                            const std::string& base_dir) {
  if (ref.rfind("catalog:", 0) == 0) return catalog_algebra(ref.substr(8));
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty())
    p = std::filesystem::path(base_dir) / p;
  return load_algebra_file(p.string());
}

Lattice load_lattice_file(AlgebraPtr a, const std::string& path) {
  const Json j = load_json(path);
  return make_lattice(std::move(a),
                      json_vector_list(need(j, "generators", path), path));
}

Morphism load_morphism_file(const std::string& path) {
  const Json j = load_json(path);
  const std::string base = dir_of(path);
  AlgebraPtr source =
      load_algebra_ref(need(j, "source", path).get<std::string>(), base);
  AlgebraPtr target =
      load_algebra_ref(need(j, "target", path).get<std::string>(), base);
  const std::vector<RatVec> rows =
      json_vector_list(need(j, "matrix", path), path);
  if (rows.size() != target->dim())
    throw DimensionMismatch(path + ": matrix must have one row per target coordinate");
  for (const RatVec& r : rows)
    if (r.size() != source->dim())
      throw DimensionMismatch(path + ": matrix row width must equal the source dimension");
  return make_morphism(std::move(source), std::move(target),
                       RatMatrix::from_rows(rows, rows.front().size()));
}

Flag load_flag_spec(AlgebraPtr a, const std::string& spec) {
  if (spec == "auto") return jordan_holder_flag(a);
  const Json j = load_json(spec);
  std::vector<Subspace> layers;
  for (const Json& layer : need(j, "layers", spec))
    layers.push_back(
        Subspace::from_spanning(a, json_vector_list(layer, spec)));
  return Flag::from_layers(std::move(a), std::move(layers));
}

QuotientTower load_tower_file(const std::string& path) {
  const Json j = load_json(path);
  AlgebraPtr a =
      load_algebra_ref(need(j, "algebra", path).get<std::string>(),
                       dir_of(path));
  const Json& chain = need(j, "chain", path);
  const std::string kind = need(chain, "kind", path).get<std::string>();
  if (kind == "geometric") {
    Lattice base =
        make_lattice(a, json_vector_list(need(chain, "base", path), path));
    const Rational ratio = json_rational(need(chain, "ratio", path), path);
    if (!rat_is_integer(ratio))
      throw ParseError(path + ": tower ratio must be an integer");
    return make_geometric_tower(std::move(base), ratio.get_num(),
                                need(j, "max_level", path).get<std::size_t>());
  }
  if (kind == "explicit") {
    std::vector<Lattice> lattices;
    for (const Json& entry : need(chain, "lattices", path)) {
      const Json& gens =
          entry.is_object() ? need(entry, "generators", path) : entry;
      lattices.push_back(make_lattice(a, json_vector_list(gens, path)));
    }
    if (j.contains("max_level") &&
        j["max_level"].get<std::size_t>() != lattices.size())
      throw ParseError(path + ": max_level disagrees with the chain length");
    return make_explicit_tower(std::move(lattices));
  }
  throw ParseError(path + ": chain kind must be \"geometric\" or \"explicit\"");
}

ProductFamily load_product_file(const std::string& path) {
  const Json j = load_json(path);
  const std::string base = dir_of(path);
  if (j.contains("factors")) {
    std::vector<AlgebraPtr> factors;
    for (const Json& f : j["factors"])
      factors.push_back(
          load_algebra_ref(need(f, "ref", path).get<std::string>(), base));
    return ProductFamily::finite(std::move(factors));
  }
  if (j.contains("rule")) {
    if (j["rule"].get<std::string>() != "repeat")
      throw ParseError(path + ": unknown product rule");
    return ProductFamily::repeated(
        load_algebra_ref(need(j, "factor", path).get<std::string>(), base));
  }
  throw ParseError(path + ": product file needs \"factors\" or \"rule\"");
}

} // namespace nilorbit
