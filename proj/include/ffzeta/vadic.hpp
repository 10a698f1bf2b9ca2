#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffzeta/character.hpp"
#include "ffzeta/poly.hpp"
#include "ffzeta/special.hpp"
#include "ffzeta/zeros.hpp"

namespace ffzeta {

// Q(u) = (1 - chi(v) v^j u^{d_v}) * z(u,-j): the interpolated series at the
// finite place v, with the Euler factor at v struck. Exactly equal to the
// direct sum over monics coprime to v.
struct VadicSpecial {
  std::string ring_id;
  std::string char_id;
  BasePolynomial v;
  int d_v = 1;
  uint64_t j = 0;
  std::vector<BasePolynomial> Q;        // ascending u coefficients
  SpecialPolynomial<BasePolynomial> z;  // the series the Euler factor multiplied

  int degree_u() const { return int(Q.size()) - 1; }

  friend bool operator==(const VadicSpecial&, const VadicSpecial&) = default;
};

// chi empty means the trivial character (plain zeta)
VadicSpecial vadic_special_polynomial(const FieldPtr& field,
                                      const std::optional<DirichletCharacter>& chi,
                                      const BasePolynomial& v, uint64_t j,
                                      std::optional<int> d_max = {});

// Order of Q at the Euler-factor root u0 = v^{-j}, computed over F_r[T] by the
// substitution u = v^{-j} w and clearing denominators. Trivial character and
// d_v = 1 only; wider places raise UnsupportedPlaceDegree.
TrivialZeroReport vadic_trivial_zero_order(const VadicSpecial& vs);

struct ContinuityResult {
  bool holds = true;
  int witness_degree = -1; // first u-degree violating the congruence
};

// j1 = j2 mod (r^{d_v}-1) p^N forces Q(j1) = Q(j2) coefficient-wise mod
// v^{N+1}; pairs outside that congruence class raise InvalidPair.
ContinuityResult vadic_continuity_check(const FieldPtr& field,
                                        const std::optional<DirichletCharacter>& chi,
                                        const BasePolynomial& v, uint64_t j1, uint64_t j2,
                                        int N);

} // namespace ffzeta
