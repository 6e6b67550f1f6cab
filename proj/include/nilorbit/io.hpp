#ifndef NILORBIT_IO_HPP
#define NILORBIT_IO_HPP

#include <string>

#include "nilorbit/prolie.hpp"

namespace nilorbit {

/// Comma-separated exact rationals ("0,1/2,-3") to coordinates.
RatVec parse_ratvec_csv(const std::string& csv);

/// Algebra file: {"name": str, "dim": n, "basis": [labels],
/// "brackets": [{"i": int, "j": int, "coeffs": {"k": "p/q"}}]},
/// 0-based indices with i < j, duplicate pairs rejected.
AlgebraPtr load_algebra_file(const std::string& path);

/// "catalog:NAME" or a file path, resolved against base_dir when relative.
AlgebraPtr load_algebra_ref(const std::string& ref,
                            const std::string& base_dir = "");

/// Lattice file: {"generators": [["p/q", …], …]}.
Lattice load_lattice_file(AlgebraPtr a, const std::string& path);

/// Morphism file: {"source": <algebra ref>, "target": <algebra ref>,
/// "matrix": [[row], …]} with matrix rows indexed by target coordinates;
/// refs are resolved relative to the morphism file.
Morphism load_morphism_file(const std::string& path);

/// "auto" for the canonical flag of ideals, otherwise a file
/// {"layers": [[[coords], …], …]} listing a spanning set per layer.
Flag load_flag_spec(AlgebraPtr a, const std::string& spec);

/// Tower file: {"algebra": <ref>, "chain": {"kind": "geometric",
/// "base": [generators], "ratio": "m"} | {"kind": "explicit",
/// "lattices": [...]}, "max_level": K}.
QuotientTower load_tower_file(const std::string& path);

/// Product file: {"factors": [{"ref": …}, …]} or
/// {"rule": "repeat", "factor": <ref>, "count_hint": null}.
ProductFamily load_product_file(const std::string& path);

} // namespace nilorbit

#endif
