#ifndef NILORBIT_CATALOG_HPP
#define NILORBIT_CATALOG_HPP

#include <string>
#include <vector>

#include "nilorbit/liealg.hpp"

namespace nilorbit {

/// Built-in families, all validated on construction:
///   abelianN          n-dimensional abelian algebra, class 1
///   heisenbergN       N = 2k+1, [e_i, e_{k+i}] = e_N for i = 1..k, class 2
///   filiformN         [e₁, e_j] = e_{j+1} for j = 2..N−1, class N−1
///   uppertriangularM  strictly upper-triangular m×m matrices, class M−1
AlgebraPtr catalog_algebra(const std::string& name);

/// The documented fixed instances: abelian1..abelian6, heisenberg3,
/// heisenberg5, filiform4, filiform5, uppertriangular3, uppertriangular4.
const std::vector<std::string>& catalog_entries();

} // namespace nilorbit

#endif
