#pragma once
// Exact Laurent polynomials with arbitrary-precision integer coefficients
// over a shared variable registry.  Unit variables (m, v's, w's, M) may
// carry negative exponents; all other variables are restricted to ordinary
// polynomial exponents.
//
// Terms live in a std::map keyed by the exponent vector, so iteration order
// (and hence serialization) is canonical and deterministic.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotrep/common.hpp"
#include "knotrep/varreg.hpp"

namespace knotrep {

using BigInt = boost::multiprecision::cpp_int;
using ExpVec = std::vector<int32_t>;

class LPoly {
 public:
  LPoly() = default;  // zero over no registry; usable only as a placeholder
  explicit LPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

  static LPoly constant(RegistryPtr reg, BigInt c);
  static LPoly variable(RegistryPtr reg, int idx, int exp = 1);
  static LPoly monomial(RegistryPtr reg, const ExpVec& e, BigInt c);

  const RegistryPtr& registry() const { return reg_; }
  const std::map<ExpVec, BigInt>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Single term with coefficient +-1 whose support uses unit variables only.
  bool is_unit_monomial() const;
  // Single term (any coefficient / support).
  bool is_monomial() const { return terms_.size() == 1; }

  std::size_t term_count() const { return terms_.size(); }
  long max_coeff_bits() const;

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
  LPoly operator*(const BigInt& c) const;
  bool operator==(const LPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LPoly& o) const { return !(*this == o); }
  // Canonical total order (for deterministic sorting of equation lists).
  bool operator<(const LPoly& o) const;

  LPoly pow(long e) const;  // e < 0 requires a unit monomial base
  // Multiplicative inverse of a unit monomial (throws input_error otherwise).
  LPoly inverse_monomial() const;

  bool has_var(int idx) const;
  std::vector<int> vars_present() const;
  int degree_in(int idx) const;  // max exponent; 0 when the variable is absent
  int low_in(int idx) const;     // min exponent; 0 when the variable is absent
  long total_degree() const;     // max of sums of positive exponents
  // Coefficient of idx^k, as a polynomial in the remaining variables.
  LPoly coeff_in(int idx, int k) const;
  LPoly derivative(int idx) const;

  // Substitute a polynomial for a variable.  Negative exponents of idx
  // require val to be an invertible unit monomial, otherwise input_error.
  LPoly substitute(int idx, const LPoly& val) const;
  // Cleared substitution idx -> num/den: the result is the original
  // polynomial scaled by den^(max positive degree of idx), so it vanishes on
  // the same locus away from den = 0.  Negative exponents of idx require
  // num to be an invertible unit monomial.
  LPoly substitute_ratio(int idx, const LPoly& num, const LPoly& den) const;

  // Multiply by the minimal monomial making all exponents nonnegative.
  LPoly cleared_denominators() const;
  // Minimal exponents per variable (the monomial content exponent vector).
  ExpVec monomial_content() const;
  BigInt integer_content() const;  // gcd of coefficients (positive); 0 for 0
  // Remove monomial and integer content; make the leading coefficient
  // (largest exponent vector in map order) positive.
  LPoly primitive_part() const;
  // Flip sign so the leading coefficient is positive.
  LPoly normalized_sign() const;

  // Exact evaluation at a complex point (one value per registry variable).
  cdouble eval(const std::vector<cdouble>& point) const;

  std::string str() const;  // human-readable, deterministic

 private:
  void add_term(const ExpVec& e, const BigInt& c);
  void check_budget() const;
  static void check_same_registry(const LPoly& a, const LPoly& b);

  RegistryPtr reg_;
  std::map<ExpVec, BigInt> terms_;
};

// True when a and b agree up to sign and a unit monomial factor.
bool equal_up_to_unit(const LPoly& a, const LPoly& b);

}  // namespace knotrep
