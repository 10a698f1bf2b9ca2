#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffzeta/field.hpp"

namespace ffzeta {

// Polynomial in one variable over a small finite field, ascending coefficient
// codes with no trailing zeros. The variable is "T" in text form unless a
// different name is passed to to_string/parse.
class BasePolynomial {
public:
  BasePolynomial() = default;
  BasePolynomial(FieldPtr field, std::vector<uint16_t> coeffs);

  static BasePolynomial zero(FieldPtr field) { return BasePolynomial(std::move(field), {}); }
  static BasePolynomial one(FieldPtr field) { return BasePolynomial(std::move(field), {1}); }
  static BasePolynomial constant(FieldPtr field, uint16_t c);
  static BasePolynomial monomial(FieldPtr field, size_t exp, uint16_t c = 1);

  const FieldPtr& field() const { return field_; }
  const std::vector<uint16_t>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; } // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  uint16_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint16_t leading() const { return c_.empty() ? 0 : c_.back(); }

  friend BasePolynomial operator+(const BasePolynomial& a, const BasePolynomial& b);
  friend BasePolynomial operator-(const BasePolynomial& a, const BasePolynomial& b);
  friend BasePolynomial operator*(const BasePolynomial& a, const BasePolynomial& b);
  BasePolynomial& operator+=(const BasePolynomial& o);
  friend bool operator==(const BasePolynomial& a, const BasePolynomial& b);

  // quotient and remainder; divisor must be nonzero
  static std::pair<BasePolynomial, BasePolynomial> divrem(const BasePolynomial& a,
                                                          const BasePolynomial& b);

  BasePolynomial scalar_mul(uint16_t c) const;
  // plain binary powering; the power-sum path uses base-p splitting instead
  BasePolynomial pow(uint64_t e) const;
  // f(T) -> f^{(p^i)}(T^{p^i}): i-fold coefficient Frobenius with exponents
  // multiplied by p^i, so spread(1) computes f^p
  BasePolynomial spread(unsigned i) const;
  BasePolynomial shift(size_t k) const; // multiply by T^k
  uint16_t eval(uint16_t x) const;
  BasePolynomial derivative_hasse(uint64_t i) const; // coefficient C(d,i) c_d T^{d-i}

  // coefficient-wise embedding into a polynomial over `big`
  BasePolynomial map_coeffs(const FieldPtr& big, const std::vector<uint16_t>& embed) const;

  std::string to_string(std::string_view var = "T") const;
  static BasePolynomial parse(const FieldPtr& field, std::string_view text,
                              std::string_view var = "T");

private:
  void trim();
  static void check_fields(const BasePolynomial& a, const BasePolynomial& b);

  FieldPtr field_;
  std::vector<uint16_t> c_;
};

// Monic polynomials of fixed degree in the canonical order: index i yields the
// polynomial whose coefficient of T^k is the field code given by digit k of i
// written base q (the constant term varies fastest).
class MonicRange {
public:
  MonicRange(FieldPtr field, int degree);
  uint64_t count() const { return count_; }
  BasePolynomial at(uint64_t index) const;

  template <class Fn> void for_each(Fn&& fn) const {
    std::vector<uint16_t> c(size_t(degree_) + 1, 0);
    c[size_t(degree_)] = 1;
    uint32_t q = field_->size();
    for (uint64_t i = 0; i < count_; ++i) {
      fn(const_cast<const std::vector<uint16_t>&>(c));
      for (int k = 0; k < degree_; ++k) { // odometer increment
        if (++c[size_t(k)] < q) break;
        c[size_t(k)] = 0;
      }
    }
  }

private:
  FieldPtr field_;
  int degree_;
  uint64_t count_;
};

// S_d(j): sum of n^j over all monic n of degree d. Exponentiation factors j in
// base p and multiplies the spread powers n^{p^i}, so the cost scales with the
// digit sum of j rather than log j times the full product degree.
BasePolynomial frobenius_power_sum(const FieldPtr& field, int d, uint64_t j);

// a^j through the same base-p factorization used by frobenius_power_sum
BasePolynomial frobenius_pow(const BasePolynomial& a, uint64_t j);

// trial division by all lower-degree monic polynomials
bool is_irreducible(const BasePolynomial& f);

// largest k with v^k dividing c; c must be nonzero
uint64_t ord_at(const BasePolynomial& c, const BasePolynomial& v);

} // namespace ffzeta
