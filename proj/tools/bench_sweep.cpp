// Compares the OpenMP-parallel sample sweep against the serial reference
// on a deterministic workload and verifies both produce identical results.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "nilorbit/catalog.hpp"
#include "nilorbit/orbits.hpp"

using namespace nilorbit;

namespace {

double run_once(const OrbitDescriptor& desc, std::size_t count,
                bool parallel, std::vector<Functional>& out) {
  const auto start = std::chrono::steady_clock::now();
  out = orbit_sample(desc, 42, count, parallel);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
  std::size_t count = 20000;
  std::string name = "uppertriangular4";
  if (argc > 1) count = static_cast<std::size_t>(std::atoll(argv[1]));
  if (argc > 2) name = argv[2];

  AlgebraPtr a = catalog_algebra(name);
  RatVec base(a->dim(), Rational(0));
  base[a->dim() - 1] = 1;
  const OrbitDescriptor desc =
      orbit_descriptor(make_functional(a, base), jordan_holder_flag(a));

  std::vector<Functional> serial, parallel;
  const double t_serial = run_once(desc, count, false, serial);
  const double t_parallel = run_once(desc, count, true, parallel);

  bool equal = serial.size() == parallel.size();
  for (std::size_t i = 0; equal && i < serial.size(); ++i)
    equal = serial[i].coords == parallel[i].coords;

  std::printf("algebra            %s (dim %zu)\n", name.c_str(), a->dim());
  std::printf("samples            %zu\n", count);
  std::printf("serial reference   %.3f s\n", t_serial);
  std::printf("openmp parallel    %.3f s\n", t_parallel);
  std::printf("speedup            %.2fx\n",
              t_parallel > 0 ? t_serial / t_parallel : 0.0);
  std::printf("results identical  %s\n", equal ? "yes" : "NO");
  return equal ? 0 : 1;
}
