#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffzeta/curve.hpp"
#include "ffzeta/errors.hpp"
#include "ffzeta/poly.hpp"
#include "ffzeta/special.hpp"

namespace ffzeta {

namespace detail {

inline int elem_characteristic(const BasePolynomial& e) { return e.field()->characteristic(); }
inline int elem_characteristic(const CurveElement& e) {
  (void)e;
  return 2;
}
inline BasePolynomial zero_like(const BasePolynomial& e) { return BasePolynomial::zero(e.field()); }
inline CurveElement zero_like(const CurveElement& e) { return CurveElement::zero(e.spec()); }
inline BasePolynomial one_like(const BasePolynomial& e) { return BasePolynomial::one(e.field()); }
inline CurveElement one_like(const CurveElement& e) { return CurveElement::one(e.spec()); }

} // namespace detail

struct Rational {
  int64_t num = 0;
  int64_t den = 1; // always positive, fraction reduced

  static Rational make(int64_t num, int64_t den);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  std::string to_string() const;
};

struct NPSegment {
  Rational slope;
  int length = 0; // horizontal span, always positive

  friend bool operator==(const NPSegment& a, const NPSegment& b) {
    return a.slope == b.slope && a.length == b.length;
  }
};

// Lower convex hull of (degree, valuation) pairs of the nonzero coefficients.
// Collinear interior points are absorbed, so segment slopes strictly increase.
struct NewtonPolygon {
  std::vector<std::pair<int, int64_t>> points;
  std::vector<std::pair<int, int64_t>> vertices;
  std::vector<NPSegment> segments;

  static NewtonPolygon from_points(std::vector<std::pair<int, int64_t>> pts);
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

// `s1:len1|s2:len2|...` with slopes as reduced `num/den`; empty when there are
// no segments
std::string np_slopes_string(const NewtonPolygon& np);

struct SimplicityResult {
  bool holds = true;
  std::vector<NPSegment> violations; // segments wider than one
};

// every horizontal length 1 means each root is pinned by its absolute value
SimplicityResult rh_simplicity_check(const NewtonPolygon& np);

// D^{(i)}P for P given by its u-coefficients: entry d-i picks up C(d,i) c_d,
// with the binomial taken mod p digit-wise
template <class Elem>
std::vector<Elem> hasse_derivative(const std::vector<Elem>& coeffs, uint64_t i) {
  if (coeffs.empty()) raise(errc::invalid_input, "empty coefficient vector");
  int p = detail::elem_characteristic(coeffs[0]);
  std::vector<Elem> out;
  if (coeffs.size() <= i) return out;
  out.reserve(coeffs.size() - size_t(i));
  for (size_t d = i; d < coeffs.size(); ++d) {
    int cb = lucas_binomial(uint64_t(d), i, p);
    out.push_back(coeffs[d].scalar_mul(uint16_t(cb)));
  }
  return out;
}

// least i with D^{(i)}P(beta) nonzero: the exponent of (u - beta) in P
template <class Elem>
int multiplicity_at_point(const std::vector<Elem>& coeffs, const Elem& beta) {
  int top = -1;
  for (size_t d = 0; d < coeffs.size(); ++d)
    if (!coeffs[d].is_zero()) top = int(d);
  if (top < 0) raise(errc::invalid_input, "multiplicity of the zero polynomial");
  int p = detail::elem_characteristic(beta);

  std::vector<Elem> bpow; // bpow[k-1] = beta^k
  bpow.reserve(size_t(top));
  for (int k = 1; k <= top; ++k)
    bpow.push_back(k == 1 ? beta : bpow.back() * beta);

  for (int i = 0; i <= top; ++i) {
    Elem acc = detail::zero_like(beta);
    for (int d = i; d <= top; ++d) {
      if (coeffs[size_t(d)].is_zero()) continue;
      int cb = lucas_binomial(uint64_t(d), uint64_t(i), p);
      if (cb == 0) continue;
      Elem term = coeffs[size_t(d)];
      if (d > i) term = term * bpow[size_t(d - i - 1)];
      if (cb != 1) term = term.scalar_mul(uint16_t(cb));
      acc = acc + term;
    }
    if (!acc.is_zero()) return i;
  }
  raise(errc::invalid_input, "leading coefficient vanished"); // unreachable
}

struct TrivialZeroReport {
  std::string ring_id;
  uint64_t j = 0;
  int v0 = 1;          // order of the expected zero from the factor 1 - u
  int v1 = 1;          // computed order of z(u,-j) at u = 1
  bool nonclassical = false; // v1 > v0
  int l_p = 0;
  int l_r = 0;

  friend bool operator==(const TrivialZeroReport&, const TrivialZeroReport&) = default;
};

// valuation at the infinite place: minus the T-degree (curve: minus the
// element degree)
template <class Elem> NewtonPolygon newton_polygon_infty(const std::vector<Elem>& coeffs);

// valuation ord_v at a finite irreducible place
NewtonPolygon newton_polygon_at(const std::vector<BasePolynomial>& coeffs,
                                const BasePolynomial& v);

TrivialZeroReport trivial_zero_report(const SpecialPolynomial<BasePolynomial>& z);
TrivialZeroReport trivial_zero_report(const SpecialPolynomial<CurveElement>& z);

// Roots of unity detected on the unit circle: beta ranges over the nonzero
// elements of the degree-L extension of the coefficient field, treated as
// constants. Keys are codes in `field`.
struct UnitRootReport {
  FieldPtr field;
  std::map<uint16_t, int> multiplicities; // positive entries only
};

UnitRootReport unit_root_multiplicities(const std::vector<BasePolynomial>& coeffs, int L);

} // namespace ffzeta
