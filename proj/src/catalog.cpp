#include "nilorbit/catalog.hpp"

#include <cstddef>
#include <iterator>
#include <stdexcept>

#include "nilorbit/errors.hpp"

namespace nilorbit {

namespace {

std::size_t parse_size(const std::string& name, std::size_t prefix_len) {
  const std::string digits = name.substr(prefix_len);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("unknown catalog algebra: " + name);
  return static_cast<std::size_t>(std::stoul(digits));
}

AlgebraPtr make_abelian(const std::string& name, std::size_t n) {
  if (n < 1) throw ParseError("abelian dimension must be positive");
  return validate_algebra(name, n, {}, {});
}

AlgebraPtr make_heisenberg(const std::string& name, std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw ParseError("heisenberg dimension must be odd and at least 3");
  const std::size_t k = (n - 1) / 2;
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < k; ++i) {
    BracketEntry e;
    e.i = i;
    e.j = k + i;
    e.coeffs[n - 1] = 1;
    entries.push_back(std::move(e));
  }
  return validate_algebra(name, n, {}, entries);
}

AlgebraPtr make_filiform(const std::string& name, std::size_t n) {
  if (n < 3) throw ParseError("filiform dimension must be at least 3");
  std::vector<BracketEntry> entries;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    BracketEntry e;
    e.i = 0;
    e.j = j;
    e.coeffs[j + 1] = 1;
    entries.push_back(std::move(e));
  }
  return validate_algebra(name, n, {}, entries);
}

AlgebraPtr make_uppertriangular(const std::string& name, std::size_t m) {
  if (m < 2)
    throw ParseError("uppertriangular size must be at least 2");
  // Basis E_ij, i < j, in row-major order; [E_ij, E_kl] = δ_jk E_il − δ_li E_kj.
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      positions.emplace_back(i, j);
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t dim = positions.size();
  auto index_of = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < dim; ++t)
      if (positions[t] == std::make_pair(i, j)) return t;
    throw std::logic_error("position lookup");
  };

  std::vector<BracketEntry> entries;
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = s + 1; t < dim; ++t) {
      const auto [i, j] = positions[s];
      const auto [k, l] = positions[t];
      std::map<std::size_t, Rational> coeffs;
      if (j == k) coeffs[index_of(i, l)] += 1;
      if (l == i) coeffs[index_of(k, j)] -= 1;
      for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second == 0 ? coeffs.erase(it) : std::next(it);
      if (!coeffs.empty())
        entries.push_back(BracketEntry{s, t, std::move(coeffs)});
    }
  return validate_algebra(name, dim, names, entries);
}

} // namespace

AlgebraPtr catalog_algebra(const std::string& name) {
  if (name.rfind("abelian", 0) == 0)
    return make_abelian(name, parse_size(name, 7));
  if (name.rfind("heisenberg", 0) == 0)
    return make_heisenberg(name, parse_size(name, 10));
  if (name.rfind("filiform", 0) == 0)
    return make_filiform(name, parse_size(name, 8));
  if (name.rfind("uppertriangular", 0) == 0)
    return make_uppertriangular(name, parse_size(name, 15));
  throw ParseError("unknown catalog algebra: " + name);
}

const std::vector<std::string>& catalog_entries() {
  static const std::vector<std::string> entries = {
      "abelian1",  "abelian2",  "abelian3",        "abelian4",
      "abelian5",  "abelian6",  "heisenberg3",     "heisenberg5",
      "filiform4", "filiform5", "uppertriangular3", "uppertriangular4"};
  return entries;
}

} // namespace nilorbit
