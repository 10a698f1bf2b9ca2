#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffzeta/poly.hpp"

namespace ffzeta {

struct CurveSpec;
using CurveSpecPtr = std::shared_ptr<const CurveSpec>;

// Coordinate ring F_2[T1,T2] / (T1^2 + T1 + h(T2)) with h of odd degree w.
// Elements are written g + h_part*T1 with both parts in F_2[T2]; the degree
// function max(2*deg g, w + 2*deg h_part) takes values in the numerical
// semigroup generated by 2 and w, whose gaps below w are the Weierstrass gaps.
struct CurveSpec {
  FieldPtr f2;
  BasePolynomial relation; // h(T2)
  int weight = 0;          // w = deg h
  int genus = 0;           // (w-1)/2
  bool experimental = false;
  std::string label;

  static CurveSpecPtr genus1(); // h = T2^3 + T2 + 1
  static CurveSpecPtr genus2(); // h = T2^5 + T2^3 + 1
  static CurveSpecPtr make(const BasePolynomial& h);

  bool has_monomial_of_degree(int d) const {
    return d == 0 || (d > 0 && d % 2 == 0) || (d >= weight && d % 2 == 1);
  }
  // (a, b) with the monomial T2^a T1^b of degree d; requires one to exist
  std::pair<int, int> monomial_of_degree(int d) const;
  std::vector<int> monomial_degrees_below(int d) const;
  std::string id() const { return label; }
};

class CurveElement {
public:
  CurveElement() = default;
  CurveElement(CurveSpecPtr spec, BasePolynomial g, BasePolynomial h);

  static CurveElement zero(CurveSpecPtr spec);
  static CurveElement one(CurveSpecPtr spec);

  const CurveSpecPtr& spec() const { return spec_; }
  const BasePolynomial& g_part() const { return g_; }
  const BasePolynomial& h_part() const { return h_; }
  bool is_zero() const { return g_.is_zero() && h_.is_zero(); }
  bool is_one() const { return g_.is_one() && h_.is_zero(); }

  // nullopt encodes degree -infinity of the zero element
  std::optional<int> degree() const;

  friend CurveElement operator+(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator*(const CurveElement& a, const CurveElement& b);
  friend bool operator==(const CurveElement& a, const CurveElement& b);
  CurveElement square() const;
  // binary splitting over repeated squaring, each step reduced by the relation
  CurveElement pow(uint64_t e) const;
  // scalar in the prime field: multiply by c mod 2
  CurveElement scalar_mul(uint16_t c) const { return c % 2 ? *this : zero(spec_); }

  std::string to_string() const; // "g-poly;h-poly" over T2
  static CurveElement parse(const CurveSpecPtr& spec, std::string_view text);

private:
  static void check_specs(const CurveElement& a, const CurveElement& b);

  CurveSpecPtr spec_;
  BasePolynomial g_, h_;
};

// All ring elements of degree exactly d: the unique degree-d monomial plus any
// F_2-combination of the lower-degree monomials. Empty at gap degrees.
std::vector<CurveElement> enumerate_by_degree(const CurveSpecPtr& spec, int d);
uint64_t stratum_size(const CurveSpecPtr& spec, int d);

// Sum of a^j over the degree-d stratum.
CurveElement curve_power_sum(const CurveSpecPtr& spec, int d, uint64_t j);

} // namespace ffzeta
