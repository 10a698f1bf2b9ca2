#include "ffzeta/special.hpp"

#include <algorithm>
#include <string>

#include "ffzeta/errors.hpp"

namespace ffzeta {

namespace {

// indices whose vanishing certifies the tail: the top `margin` computed
// coefficients, never including c_0
template <class Elem>
void certify_tail(const std::vector<Elem>& coeffs, int margin, uint64_t j,
                  const std::string& ring_id) {
  int dmax = int(coeffs.size()) - 1;
  for (int d = std::max(1, dmax - margin + 1); d <= dmax; ++d) {
    if (!coeffs[size_t(d)].is_zero())
      raise(errc::truncation_insufficient,
            ring_id + " j=" + std::to_string(j) + ": coefficient at degree " +
                std::to_string(d) + " of " + std::to_string(dmax) +
                " is nonzero; raise d_max");
  }
}

template <class Elem> void strip_trailing_zeros(std::vector<Elem>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
}

} // namespace

int fqt_vanishing_cutoff(uint32_t r, uint64_t j) {
  return digit_sum(j, int(r)) / (int(r) - 1);
}

int default_d_max(uint32_t r, uint64_t j, int genus, int conductor_degree) {
  int l = digit_sum(j, int(r));
  return (l + int(r) - 2) / (int(r) - 1) + 2 * genus + 3 + conductor_degree;
}

SpecialPolynomial<BasePolynomial> special_zeta_fqt(const FieldPtr& field, uint64_t j,
                                                   std::optional<int> d_max) {
  uint32_t r = field->size();
  int cutoff = fqt_vanishing_cutoff(r, j);
  int dmax = d_max ? *d_max : default_d_max(r, j, 0, 0);
  if (dmax < 0) raise(errc::invalid_input, "d_max must be non-negative");
  // every stratum with d(r-1) > l_r(j) sums to zero, so d_max >= cutoff
  // certifies the tail without computing it
  if (dmax < cutoff)
    raise(errc::truncation_insufficient,
          "fqt:" + std::to_string(r) + " j=" + std::to_string(j) + ": d_max=" +
              std::to_string(dmax) + " below the vanishing bound " +
              std::to_string(cutoff) + "; raise d_max");

  SpecialPolynomial<BasePolynomial> out;
  out.ring_id = "fqt:" + std::to_string(r);
  out.char_id = "trivial";
  out.j = j;
  out.d_max_used = dmax;
  for (int d = 0; d <= std::min(dmax, cutoff); ++d)
    out.coeffs.push_back(frobenius_power_sum(field, d, j));
  out.tail_certified = true;
  strip_trailing_zeros(out.coeffs);
  return out;
}

SpecialPolynomial<BasePolynomial> special_lseries(const DirichletCharacter& chi, uint64_t j,
                                                  std::optional<int> d_max) {
  const FieldPtr& base = chi.base_field();
  const FieldPtr& value = chi.value_field();
  uint32_t r = base->size();
  int fdeg = chi.modulus().degree();
  int dmax = d_max ? *d_max : default_d_max(r, j, 0, fdeg);
  if (dmax < 0) raise(errc::invalid_input, "d_max must be non-negative");
  const auto& embed = chi.base_embedding();

  std::vector<BasePolynomial> coeffs;
  coeffs.reserve(size_t(dmax) + 1);
  for (int d = 0; d <= dmax; ++d) {
    BasePolynomial acc = BasePolynomial::zero(value);
    MonicRange range(base, d);
    range.for_each([&](const std::vector<uint16_t>& c) {
      BasePolynomial n(base, c);
      auto chi_n = chi.value(n);
      if (!chi_n) return; // modulus divides n: term struck
      acc += frobenius_pow(n, j).map_coeffs(value, embed).scalar_mul(*chi_n);
    });
    coeffs.push_back(std::move(acc));
  }
  certify_tail(coeffs, 3, j, "L(" + chi.id() + ")");

  SpecialPolynomial<BasePolynomial> out;
  out.ring_id = "fqt:" + std::to_string(r);
  out.char_id = chi.id();
  out.j = j;
  out.d_max_used = dmax;
  out.coeffs = std::move(coeffs);
  out.tail_certified = true;
  strip_trailing_zeros(out.coeffs);
  return out;
}

SpecialPolynomial<CurveElement> special_zeta_curve(const CurveSpecPtr& spec, uint64_t j,
                                                   std::optional<int> d_max) {
  int dmax = d_max ? *d_max : default_d_max(2, j, spec->genus, 0);
  if (dmax < 0) raise(errc::invalid_input, "d_max must be non-negative");

  std::vector<CurveElement> coeffs;
  coeffs.reserve(size_t(dmax) + 1);
  for (int d = 0; d <= dmax; ++d) coeffs.push_back(curve_power_sum(spec, d, j));
  // no proven vanishing bound here: the certificate is genus+2 zero strata at
  // the top of the computed range
  certify_tail(coeffs, spec->genus + 2, j, spec->label);

  SpecialPolynomial<CurveElement> out;
  out.ring_id = spec->label;
  out.char_id = "trivial";
  out.j = j;
  out.d_max_used = dmax;
  out.coeffs = std::move(coeffs);
  out.tail_certified = true;
  strip_trailing_zeros(out.coeffs);
  return out;
}

PadicExponent PadicExponent::from_integer(uint64_t j, int p, size_t min_digits) {
  if (p < 2) raise(errc::invalid_input, "characteristic must be at least 2");
  PadicExponent y;
  y.p = p;
  for (uint64_t rest = j; rest; rest /= uint64_t(p)) y.digits.push_back(int(rest % uint64_t(p)));
  while (y.digits.size() < min_digits) y.digits.push_back(0);
  return y;
}

namespace {

// C(y, k) mod p from y's stated digits, digit by digit; the caller has already
// checked that every digit position a nonzero k-digit can touch is stated
int padic_binomial(const PadicExponent& y, uint64_t k) {
  int out = 1;
  size_t pos = 0;
  for (uint64_t rest = k; rest && out; rest /= uint64_t(y.p), ++pos) {
    int kd = int(rest % uint64_t(y.p));
    if (kd == 0) continue;
    if (pos >= y.digits.size())
      raise(errc::precision_exceeds_digits, "binomial needs digit " + std::to_string(pos));
    out = out * lucas_binomial(uint64_t(y.digits[pos]), uint64_t(kd), y.p) % y.p;
  }
  return out;
}

} // namespace

PiSeries family_coefficient(const FieldPtr& field, int d, const PadicExponent& y, int N) {
  int p = field->characteristic();
  if (y.p != p) raise(errc::invalid_input, "exponent characteristic does not match the ring");
  if (d < 0) raise(errc::invalid_input, "negative degree stratum");
  if (N < 1) raise(errc::invalid_input, "precision must be at least 1");
  for (int digit : y.digits)
    if (digit < 0 || digit >= p) raise(errc::invalid_input, "exponent digit out of range");
  // C(y, k) for k < N reads y's digits up to the top digit position of N-1
  size_t needed = 0;
  for (uint64_t t = uint64_t(N - 1); t; t /= uint64_t(p)) ++needed;
  if (y.digits.size() < needed)
    raise(errc::precision_exceeds_digits,
          "precision " + std::to_string(N) + " needs " + std::to_string(needed) +
              " base-" + std::to_string(p) + " digits, got " +
              std::to_string(y.digits.size()));

  std::vector<uint16_t> binom_codes(size_t(N), 0);
  for (int k = 0; k < N; ++k) binom_codes[size_t(k)] = field->from_int(padic_binomial(y, uint64_t(k)));

  const Field& F = *field;
  std::vector<uint16_t> acc(size_t(N), 0), eps(size_t(N), 0), pw(size_t(N), 0),
      next(size_t(N), 0);
  MonicRange range(field, d);
  range.for_each([&](const std::vector<uint16_t>& c) {
    // <n> - 1 = sum over i >= 1 of c_{d-i} pi^i
    std::fill(eps.begin(), eps.end(), uint16_t(0));
    for (int i = 1; i < N && i <= d; ++i) eps[size_t(i)] = c[size_t(d - i)];
    std::fill(pw.begin(), pw.end(), uint16_t(0));
    pw[0] = 1;
    acc[0] = F.add(acc[0], binom_codes[0]);
    for (int k = 1; k < N; ++k) {
      // pw <- pw * eps, truncated; the product vanishes below pi^k
      std::fill(next.begin(), next.end(), uint16_t(0));
      bool any = false;
      for (int a = k - 1; a < N; ++a) {
        if (!pw[size_t(a)]) continue;
        for (int b = 1; a + b < N; ++b) {
          if (!eps[size_t(b)]) continue;
          size_t i = size_t(a + b);
          next[i] = F.add(next[i], F.mul(pw[size_t(a)], eps[size_t(b)]));
          any = true;
        }
      }
      std::swap(pw, next);
      if (!any) break;
      if (!binom_codes[size_t(k)]) continue;
      for (int i = k; i < N; ++i)
        if (pw[size_t(i)]) acc[size_t(i)] = F.add(acc[size_t(i)], F.mul(binom_codes[size_t(k)], pw[size_t(i)]));
    }
  });

  PiSeries out;
  out.field = field;
  out.precision = N;
  out.c = std::move(acc);
  return out;
}

namespace {

template <class Special>
DegreeProfileRow profile_row(const Special& sp, uint64_t j, uint32_t r, int genus) {
  DegreeProfileRow row;
  row.j = j;
  row.deg_u = sp.degree_u();
  row.l_r = digit_sum(j, int(r));
  row.envelope_margin = row.deg_u - (row.l_r / (int(r) - 1) + 2 * genus);
  return row;
}

} // namespace

std::vector<DegreeProfileRow> degree_profile_fqt(const FieldPtr& field, uint64_t j_lo,
                                                 uint64_t j_hi) {
  if (j_lo > j_hi) raise(errc::invalid_input, "empty exponent range");
  std::vector<DegreeProfileRow> rows;
  rows.reserve(size_t(j_hi - j_lo + 1));
  for (uint64_t j = j_lo; j <= j_hi; ++j)
    rows.push_back(profile_row(special_zeta_fqt(field, j), j, field->size(), 0));
  return rows;
}

std::vector<DegreeProfileRow> degree_profile_curve(const CurveSpecPtr& spec, uint64_t j_lo,
                                                   uint64_t j_hi) {
  if (j_lo > j_hi) raise(errc::invalid_input, "empty exponent range");
  std::vector<DegreeProfileRow> rows;
  rows.reserve(size_t(j_hi - j_lo + 1));
  for (uint64_t j = j_lo; j <= j_hi; ++j)
    rows.push_back(profile_row(special_zeta_curve(spec, j), j, 2, spec->genus));
  return rows;
}

} // namespace ffzeta
