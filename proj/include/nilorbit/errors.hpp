#ifndef NILORBIT_ERRORS_HPP
#define NILORBIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilorbit {

/// Base for all library errors. `code()` is a stable machine-readable tag
/// that the CLI maps onto structured error objects and exit codes.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define NILORBIT_DEFINE_ERROR(Name)                          \
  class Name : public Error {                                \
  public:                                                    \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

// exactmath
NILORBIT_DEFINE_ERROR(NotAffine);
NILORBIT_DEFINE_ERROR(DegenerateCoefficient);
NILORBIT_DEFINE_ERROR(MissingVariable);

// liealg
NILORBIT_DEFINE_ERROR(JacobiViolation);
NILORBIT_DEFINE_ERROR(NotNilpotent);
NILORBIT_DEFINE_ERROR(AlgebraMismatch);
NILORBIT_DEFINE_ERROR(NotAnIdeal);
NILORBIT_DEFINE_ERROR(FlagMismatch);

// bch
NILORBIT_DEFINE_ERROR(ClassTooHigh);

// kirillov
NILORBIT_DEFINE_ERROR(CertificateFailure);
NILORBIT_DEFINE_ERROR(PolarizationInvalid);
NILORBIT_DEFINE_ERROR(NotIntegral);
NILORBIT_DEFINE_ERROR(NotSurjective);
NILORBIT_DEFINE_ERROR(SanityFailure);
NILORBIT_DEFINE_ERROR(LatticeImageMismatch);

// prolie
NILORBIT_DEFINE_ERROR(LevelOutOfRange);
NILORBIT_DEFINE_ERROR(BadIndex);
NILORBIT_DEFINE_ERROR(InfiniteSupport);
NILORBIT_DEFINE_ERROR(InconsistentLevels);

// io / cli
NILORBIT_DEFINE_ERROR(ParseError);
NILORBIT_DEFINE_ERROR(DimensionMismatch);

#undef NILORBIT_DEFINE_ERROR

} // namespace nilorbit

#endif
