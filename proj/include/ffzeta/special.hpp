#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffzeta/character.hpp"
#include "ffzeta/curve.hpp"
#include "ffzeta/poly.hpp"

namespace ffzeta {

// z(u, -j) = sum over monic/positive n of chi(n) n^j u^{deg n}, truncated at
// d_max_used with the tail certified empty. Coefficients c_d live in the
// coefficient ring named by ring_id (base polynomial ring, value-field
// polynomials for nontrivial characters, or a curve ring).
template <class Elem> struct SpecialPolynomial {
  std::string ring_id;
  std::string char_id; // "trivial" when no character weighting
  uint64_t j = 0;
  std::vector<Elem> coeffs; // ascending in u, trailing zeroes stripped
  int d_max_used = 0;
  bool tail_certified = false;

  int degree_u() const { return int(coeffs.size()) - 1; }

  friend bool operator==(const SpecialPolynomial&, const SpecialPolynomial&) = default;
};

// floor(l_r(j) / (r-1)): strata above this bound vanish for the full monic sum
int fqt_vanishing_cutoff(uint32_t r, uint64_t j);
// ceil(l_r(j)/(r-1)) + 2g + 3, plus deg f when a character modulus is present
int default_d_max(uint32_t r, uint64_t j, int genus, int conductor_degree);

SpecialPolynomial<BasePolynomial> special_zeta_fqt(const FieldPtr& field, uint64_t j,
                                                   std::optional<int> d_max = {});
// coefficients over the character's value field
SpecialPolynomial<BasePolynomial> special_lseries(const DirichletCharacter& chi, uint64_t j,
                                                  std::optional<int> d_max = {});
SpecialPolynomial<CurveElement> special_zeta_curve(const CurveSpecPtr& spec, uint64_t j,
                                                   std::optional<int> d_max = {});

// y in Z_p known to the stated depth; unstated digits are unknown, so requests
// that would read past them fail with PrecisionExceedsDigits.
struct PadicExponent {
  int p = 2;
  std::vector<int> digits; // least significant first, each in [0, p)

  static PadicExponent from_integer(uint64_t j, int p, size_t min_digits = 0);
};

// Power series in pi = 1/T over F_r modulo pi^N.
struct PiSeries {
  FieldPtr field;
  int precision = 0;           // N
  std::vector<uint16_t> c;     // length N, coefficient of pi^i

  friend bool operator==(const PiSeries& a, const PiSeries& b) {
    return a.field->same_as(*b.field) && a.precision == b.precision && a.c == b.c;
  }
};

// a_d(y) = sum over monic n of degree d of <n>^y mod pi^N, where <n> = n / T^d
// and (1 + u)^y expands through digit-wise binomial coefficients C(y, k).
PiSeries family_coefficient(const FieldPtr& field, int d, const PadicExponent& y, int N);

struct DegreeProfileRow {
  uint64_t j = 0;
  int deg_u = 0;
  int l_r = 0;
  int envelope_margin = 0; // deg_u - (floor(l_r/(r-1)) + 2g)

  friend bool operator==(const DegreeProfileRow&, const DegreeProfileRow&) = default;
};

std::vector<DegreeProfileRow> degree_profile_fqt(const FieldPtr& field, uint64_t j_lo,
                                                 uint64_t j_hi);
std::vector<DegreeProfileRow> degree_profile_curve(const CurveSpecPtr& spec, uint64_t j_lo,
                                                   uint64_t j_hi);

} // namespace ffzeta
