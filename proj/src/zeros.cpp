#include "ffzeta/zeros.hpp"

#include <algorithm>
#include <numeric>

namespace ffzeta {

Rational Rational::make(int64_t num, int64_t den) {
  if (den == 0) raise(errc::invalid_input, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den == 0 ? 1 : den};
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

int64_t cross(const std::pair<int, int64_t>& a, const std::pair<int, int64_t>& b,
              const std::pair<int, int64_t>& c) {
  return int64_t(b.first - a.first) * (c.second - a.second) -
         (b.second - a.second) * int64_t(c.first - a.first);
}

} // namespace

NewtonPolygon NewtonPolygon::from_points(std::vector<std::pair<int, int64_t>> pts) {
  std::sort(pts.begin(), pts.end());
  NewtonPolygon np;
  np.points = pts;
  for (const auto& pt : pts) {
    // pop anything on or above the chord to the new point
    while (np.vertices.size() >= 2 &&
           cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), pt) <= 0)
      np.vertices.pop_back();
    np.vertices.push_back(pt);
  }
  for (size_t k = 1; k < np.vertices.size(); ++k) {
    const auto& a = np.vertices[k - 1];
    const auto& b = np.vertices[k];
    np.segments.push_back(
        NPSegment{Rational::make(b.second - a.second, b.first - a.first), b.first - a.first});
  }
  return np;
}

std::string np_slopes_string(const NewtonPolygon& np) {
  std::string out;
  for (size_t k = 0; k < np.segments.size(); ++k) {
    if (k) out += '|';
    out += np.segments[k].slope.to_string() + ":" + std::to_string(np.segments[k].length);
  }
  return out;
}

SimplicityResult rh_simplicity_check(const NewtonPolygon& np) {
  SimplicityResult res;
  for (const auto& seg : np.segments)
    if (seg.length > 1) {
      res.holds = false;
      res.violations.push_back(seg);
    }
  return res;
}

namespace {

int64_t val_infty(const BasePolynomial& c) { return -int64_t(c.degree()); }
int64_t val_infty(const CurveElement& c) { return -int64_t(*c.degree()); }

} // namespace

template <class Elem> NewtonPolygon newton_polygon_infty(const std::vector<Elem>& coeffs) {
  std::vector<std::pair<int, int64_t>> pts;
  for (size_t d = 0; d < coeffs.size(); ++d)
    if (!coeffs[d].is_zero()) pts.emplace_back(int(d), val_infty(coeffs[d]));
  if (pts.empty()) raise(errc::invalid_input, "polygon of the zero polynomial");
  return NewtonPolygon::from_points(std::move(pts));
}

template NewtonPolygon newton_polygon_infty<BasePolynomial>(const std::vector<BasePolynomial>&);
template NewtonPolygon newton_polygon_infty<CurveElement>(const std::vector<CurveElement>&);

NewtonPolygon newton_polygon_at(const std::vector<BasePolynomial>& coeffs,
                                const BasePolynomial& v) {
  if (!is_irreducible(v)) raise(errc::not_irreducible, "place must be irreducible");
  std::vector<std::pair<int, int64_t>> pts;
  for (size_t d = 0; d < coeffs.size(); ++d)
    if (!coeffs[d].is_zero()) pts.emplace_back(int(d), int64_t(ord_at(coeffs[d], v)));
  if (pts.empty()) raise(errc::invalid_input, "polygon of the zero polynomial");
  return NewtonPolygon::from_points(std::move(pts));
}

namespace {

template <class Elem>
TrivialZeroReport report_impl(const SpecialPolynomial<Elem>& z, uint32_t r, int p) {
  if (z.char_id != "trivial")
    raise(errc::not_a_trivial_zero, "trivial-zero analysis needs the trivial character");
  if (z.j == 0)
    raise(errc::not_a_trivial_zero, "j=0 has z identically 1, no zero at u=1");
  if (z.j % (r - 1) != 0)
    raise(errc::not_a_trivial_zero,
          "j=" + std::to_string(z.j) + " is not divisible by r-1=" + std::to_string(r - 1));
  TrivialZeroReport rep;
  rep.ring_id = z.ring_id;
  rep.j = z.j;
  rep.v0 = 1;
  rep.v1 = multiplicity_at_point(z.coeffs, detail::one_like(z.coeffs[0]));
  rep.nonclassical = rep.v1 >= 2;
  rep.l_p = digit_sum(z.j, p);
  rep.l_r = digit_sum(z.j, int(r));
  return rep;
}

} // namespace

TrivialZeroReport trivial_zero_report(const SpecialPolynomial<BasePolynomial>& z) {
  const FieldPtr& f = z.coeffs.at(0).field();
  return report_impl(z, f->size(), f->characteristic());
}

TrivialZeroReport trivial_zero_report(const SpecialPolynomial<CurveElement>& z) {
  return report_impl(z, 2, 2);
}

UnitRootReport unit_root_multiplicities(const std::vector<BasePolynomial>& coeffs, int L) {
  if (L < 1) raise(errc::invalid_input, "extension degree must be positive");
  bool all_zero = true;
  for (const auto& c : coeffs)
    if (!c.is_zero()) all_zero = false;
  if (coeffs.empty() || all_zero) raise(errc::invalid_input, "zero polynomial");

  const FieldPtr& small = coeffs[0].field();
  FieldPtr big = Field::get(small->characteristic(), small->extension_degree() * L);
  std::vector<uint16_t> embed = Field::embedding(*small, *big);

  std::vector<BasePolynomial> lifted;
  lifted.reserve(coeffs.size());
  for (const auto& c : coeffs) lifted.push_back(c.map_coeffs(big, embed));

  UnitRootReport rep;
  rep.field = big;
  for (uint32_t code = 1; code < big->size(); ++code) {
    int m = multiplicity_at_point(lifted, BasePolynomial::constant(big, uint16_t(code)));
    if (m > 0) rep.multiplicities[uint16_t(code)] = m;
  }
  return rep;
}

} // namespace ffzeta
