#ifndef NILORBIT_SWEEP_HPP
#define NILORBIT_SWEEP_HPP

#include <cstddef>
#include <exception>
#include <string>
#include <utility>

namespace nilorbit {

/// Result of a property sweep: on failure, the smallest failing index and
/// its detail, so parallel and serial runs report identically.
struct SweepOutcome {
  bool ok = true;
  std::size_t index = 0;
  std::string detail;

  void note_failure(std::size_t i, std::string d) {
    if (ok || i < index) {
      ok = false;
      index = i;
      detail = std::move(d);
    }
  }
};

/// Runs fn(i) for i in [0, count); fn returns an empty string on success
/// and a failure detail otherwise. Exceptions count as failures. Each
/// index must be independent (seed its own RNG stream) so the parallel
/// and serial schedules agree.
template <typename Fn>
SweepOutcome sweep_check(std::size_t count, bool parallel, Fn&& fn) {
  SweepOutcome outcome;
  const long long total = static_cast<long long>(count);
#pragma omp parallel for if (parallel) schedule(static)
  for (long long i = 0; i < total; ++i) {
    std::string detail;
    try {
      detail = fn(static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!detail.empty()) {
#pragma omp critical(nilorbit_sweep)
      outcome.note_failure(static_cast<std::size_t>(i), std::move(detail));
    }
  }
  return outcome;
}

} // namespace nilorbit

#endif
