#ifndef NILORBIT_POLYNOMIAL_HPP
#define NILORBIT_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nilorbit/rational.hpp"

namespace nilorbit {

/// Sparse multivariate polynomial over Rational. Used to express coadjoint
/// flows symbolically: entries of Ad*(exp(t X)) are polynomial in t because
/// ad is nilpotent, so total degrees stay below the nilpotency class.
///
/// Canonical form: the variable list is sorted and contains exactly the
/// variables that occur with nonzero exponent; terms are keyed by exponent
/// multi-indices aligned with that list, ordered graded-lexicographically;
/// no zero coefficients are stored. Two equal polynomials compare equal
/// with operator== regardless of how they were built.
class Polynomial {
public:
  struct GradedLex {
    bool operator()(const std::vector<unsigned>& a,
                    const std::vector<unsigned>& b) const;
  };
  using TermMap = std::map<std::vector<unsigned>, Rational, GradedLex>;

  Polynomial() = default; // zero
  Polynomial(const Rational& c);
  Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  /// Total degree; 0 for constants and for the zero polynomial.
  std::size_t degree() const;
  std::size_t degree_in(const std::string& var) const;
  /// Coefficient of var^power with the variable struck out; the result may
  /// still involve other variables.
  Polynomial coefficient_of(const std::string& var, unsigned power) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& other) const;

  /// Replaces each bound variable by its value; unbound variables survive.
  Polynomial substitute(const std::map<std::string, Rational>& bindings) const;

  /// Rendering with the leading (highest graded-lex) term first, e.g.
  /// "1/2*t1^2 - t2 + 3". Deterministic; used verbatim in reports.
  std::string str() const;

private:
  std::vector<std::string> vars_; // sorted, only variables actually used
  TermMap terms_;

  void normalize();
  /// Re-expresses the terms over a superset variable list (sorted).
  static TermMap remap(const TermMap& terms,
                       const std::vector<std::string>& from,
                       const std::vector<std::string>& to);
};

using PolyVec = std::vector<Polynomial>;

/// Exact evaluation. The assignment must cover every variable of poly;
/// otherwise MissingVariable. Extra bindings are ignored.
Rational poly_eval(const Polynomial& poly,
                   const std::map<std::string, Rational>& assignment);

/// One elimination step: after substituting bindings, poly must be affine
/// in var with constant coefficients and a nonzero leading coefficient;
/// returns the unique root. NotAffine when the degree in var exceeds 1 or
/// other parameters survive the substitution; DegenerateCoefficient when
/// the leading coefficient vanishes. Callers treat both as "indeterminate",
/// never as a membership verdict.
Rational solve_affine(const Polynomial& poly, const std::string& var,
                      const std::map<std::string, Rational>& bindings);

} // namespace nilorbit

#endif
