#include "nilorbit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilorbit {

namespace {

Rational rat_pow(const Rational& base, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

} // namespace

bool Polynomial::GradedLex::operator()(const std::vector<unsigned>& a,
                                       const std::vector<unsigned>& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(std::vector<unsigned>{}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(std::vector<unsigned>{1}, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(),
                      terms_.begin()->first.end(),
                      [](unsigned e) { return e == 0; }));
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [mono, coeff] : terms_)
    d = std::max<std::size_t>(d, std::accumulate(mono.begin(), mono.end(), 0u));
  return d;
}

std::size_t Polynomial::degree_in(const std::string& var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  std::size_t d = 0;
  for (const auto& [mono, coeff] : terms_) d = std::max<std::size_t>(d, mono[idx]);
  return d;
}

Polynomial Polynomial::coefficient_of(const std::string& var,
                                      unsigned power) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    if (power == 0) return *this;
    return Polynomial();
  }
  const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [mono, coeff] : terms_) {
    if (mono[idx] != power) continue;
    std::vector<unsigned> m = mono;
    m[idx] = 0;
    out.terms_[m] += coeff;
  }
  out.normalize();
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial::TermMap Polynomial::remap(const TermMap& terms,
                                      const std::vector<std::string>& from,
                                      const std::vector<std::string>& to) {
  std::vector<std::size_t> where(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto it = std::lower_bound(to.begin(), to.end(), from[i]);
    where[i] = static_cast<std::size_t>(it - to.begin());
  }
  TermMap out;
  for (const auto& [mono, coeff] : terms) {
    std::vector<unsigned> m(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) m[where[i]] = mono[i];
    out.emplace(std::move(m), coeff);
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  std::vector<std::string> merged;
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                 other.vars_.end(), std::back_inserter(merged));
  TermMap mine = remap(terms_, vars_, merged);
  TermMap theirs = remap(other.terms_, other.vars_, merged);
  for (const auto& [mono, coeff] : theirs) mine[mono] += coeff;
  vars_ = std::move(merged);
  terms_ = std::move(mine);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this += -other;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  std::vector<std::string> merged;
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                 other.vars_.end(), std::back_inserter(merged));
  const TermMap mine = remap(terms_, vars_, merged);
  const TermMap theirs = remap(other.terms_, other.vars_, merged);
  Polynomial out;
  out.vars_ = merged;
  for (const auto& [ma, ca] : mine)
    for (const auto& [mb, cb] : theirs) {
      std::vector<unsigned> m(merged.size());
      for (std::size_t i = 0; i < merged.size(); ++i) m[i] = ma[i] + mb[i];
      out.terms_[m] += ca * cb;
    }
  out.normalize();
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff *= c;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Rational>& bindings) const {
  std::vector<std::size_t> bound;      // indices into vars_ being replaced
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (bindings.count(vars_[i]))
      bound.push_back(i);
    else
      kept.push_back(vars_[i]);
  }
  if (bound.empty()) return *this;

  Polynomial out;
  out.vars_ = kept;
  for (const auto& [mono, coeff] : terms_) {
    Rational c = coeff;
    for (std::size_t i : bound) c *= rat_pow(bindings.at(vars_[i]), mono[i]);
    if (c == 0) continue;
    std::vector<unsigned> m;
    m.reserve(kept.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (!bindings.count(vars_[i])) m.push_back(mono[i]);
    out.terms_[m] += c;
  }
  out.normalize();
  return out;
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);

  std::vector<bool> used(vars_.size(), false);
  for (const auto& [mono, coeff] : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (mono[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  TermMap squeezed;
  for (const auto& [mono, coeff] : terms_) {
    std::vector<unsigned> m;
    m.reserve(kept.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) m.push_back(mono[i]);
    squeezed.emplace(std::move(m), coeff);
  }
  vars_ = std::move(kept);
  terms_ = std::move(squeezed);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first: iterate graded-lex descending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    const Rational mag = abs(coeff);
    if (first) {
      if (coeff < 0) os << "-";
      first = false;
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    const bool is_const_term =
        std::all_of(mono.begin(), mono.end(), [](unsigned e) { return e == 0; });
    if (mag != 1 || is_const_term) {
      os << rat_str(mag);
      if (!is_const_term) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << vars_[i];
      if (mono[i] > 1) os << "^" << mono[i];
    }
  }
  return os.str();
}

Rational poly_eval(const Polynomial& poly,
                   const std::map<std::string, Rational>& assignment) {
  for (const auto& v : poly.variables())
    if (!assignment.count(v))
      throw MissingVariable("poly_eval: no value for variable '" + v + "'");
  Rational total(0);
  for (const auto& [mono, coeff] : poly.terms()) {
    Rational term = coeff;
    for (std::size_t i = 0; i < poly.variables().size(); ++i)
      term *= rat_pow(assignment.at(poly.variables()[i]), mono[i]);
    total += term;
  }
  return total;
}

Rational solve_affine(const Polynomial& poly, const std::string& var,
                      const std::map<std::string, Rational>& bindings) {
  const Polynomial sub = poly.substitute(bindings);
  if (sub.degree_in(var) > 1)
    throw NotAffine("solve_affine: degree in '" + var + "' exceeds 1: " +
                    sub.str());
  for (const auto& v : sub.variables())
    if (v != var)
      throw NotAffine("solve_affine: unbound parameter '" + v +
                      "' survives substitution: " + sub.str());
  const Polynomial lead = sub.coefficient_of(var, 1);
  if (lead.is_zero())
    throw DegenerateCoefficient("solve_affine: coefficient of '" + var +
                                "' vanishes: " + sub.str());
  const Rational a = lead.constant_value();
  const Rational b = sub.coefficient_of(var, 0).constant_value();
  return -b / a;
}

} // namespace nilorbit
