#include "ffzeta/vadic.hpp"

#include <algorithm>

#include "ffzeta/errors.hpp"

namespace ffzeta {

namespace {

void check_place(const BasePolynomial& v) {
  if (v.degree() < 1) raise(errc::invalid_input, "place must have positive degree");
  if (!v.is_monic()) raise(errc::invalid_input, "place must be monic");
  if (!is_irreducible(v)) raise(errc::not_irreducible, "place must be irreducible");
}

} // namespace

VadicSpecial vadic_special_polynomial(const FieldPtr& field,
                                      const std::optional<DirichletCharacter>& chi,
                                      const BasePolynomial& v, uint64_t j,
                                      std::optional<int> d_max) {
  check_place(v);
  if (chi && !chi->base_field()->same_as(*field))
    raise(errc::invalid_input, "character base field does not match the ring");

  VadicSpecial vs;
  vs.v = v;
  vs.d_v = v.degree();
  vs.j = j;

  // chi(v) v^j in the coefficient domain of z
  BasePolynomial euler = frobenius_pow(v, j);
  if (chi) {
    auto chi_v = chi->value(v);
    if (!chi_v)
      raise(errc::ramified_place, "place " + v.to_string() + " divides the character modulus");
    vs.z = special_lseries(*chi, j, d_max);
    euler = euler.map_coeffs(chi->value_field(), chi->base_embedding()).scalar_mul(*chi_v);
  } else {
    vs.z = special_zeta_fqt(field, j, d_max);
  }
  vs.ring_id = vs.z.ring_id;
  vs.char_id = vs.z.char_id;

  int D = int(vs.z.coeffs.size()) - 1;
  const FieldPtr& dom = vs.z.coeffs[0].field();
  vs.Q.assign(size_t(D + vs.d_v) + 1, BasePolynomial::zero(dom));
  for (int d = 0; d <= D + vs.d_v; ++d) {
    BasePolynomial q = d <= D ? vs.z.coeffs[size_t(d)] : BasePolynomial::zero(dom);
    if (d >= vs.d_v && d - vs.d_v <= D) q = q - euler * vs.z.coeffs[size_t(d - vs.d_v)];
    vs.Q[size_t(d)] = std::move(q);
  }
  return vs;
}

TrivialZeroReport vadic_trivial_zero_order(const VadicSpecial& vs) {
  if (vs.char_id != "trivial")
    raise(errc::not_a_trivial_zero, "v-adic order analysis needs the trivial character");
  if (vs.j == 0) raise(errc::not_a_trivial_zero, "j=0 has no v-adic trivial zero");
  if (vs.d_v != 1)
    raise(errc::unsupported_place_degree,
          "order computation supports degree-1 places only, got degree " +
              std::to_string(vs.d_v));

  // clear denominators: u = v^{-j} w turns Q into Q~(w) with coefficients
  // q_d v^{j(D-d)}; the Euler root lands at w = 1
  int D = vs.degree_u();
  BasePolynomial vj = frobenius_pow(vs.v, vs.j);
  std::vector<BasePolynomial> t(size_t(D) + 1, BasePolynomial::zero(vs.v.field()));
  BasePolynomial scale = BasePolynomial::one(vs.v.field());
  for (int d = D; d >= 0; --d) {
    t[size_t(d)] = vs.Q[size_t(d)] * scale;
    if (d > 0) scale = scale * vj;
  }

  const FieldPtr& f = vs.v.field();
  TrivialZeroReport rep;
  rep.ring_id = vs.ring_id;
  rep.j = vs.j;
  rep.v0 = 1;
  rep.v1 = multiplicity_at_point(t, BasePolynomial::one(f));
  rep.nonclassical = rep.v1 >= 2;
  rep.l_p = digit_sum(vs.j, f->characteristic());
  rep.l_r = digit_sum(vs.j, int(f->size()));
  return rep;
}

ContinuityResult vadic_continuity_check(const FieldPtr& field,
                                        const std::optional<DirichletCharacter>& chi,
                                        const BasePolynomial& v, uint64_t j1, uint64_t j2,
                                        int N) {
  check_place(v);
  if (N < 0) raise(errc::invalid_input, "precision must be non-negative");

  uint64_t r = field->size();
  uint64_t p = uint64_t(field->characteristic());
  // modulus (r^{d_v} - 1) p^N, with saturation: once it tops 2^63 only equal
  // exponents can satisfy the congruence
  uint64_t modulus = 1;
  bool huge = false;
  for (int k = 0; k < v.degree(); ++k) {
    if (modulus > (uint64_t(1) << 62) / r) huge = true;
    if (huge) break;
    modulus *= r;
  }
  if (!huge) {
    modulus -= 1;
    for (int k = 0; k < N; ++k) {
      if (modulus > (uint64_t(1) << 62) / p) {
        huge = true;
        break;
      }
      modulus *= p;
    }
  }
  uint64_t gap = j1 > j2 ? j1 - j2 : j2 - j1;
  if (huge ? gap != 0 : gap % modulus != 0)
    raise(errc::invalid_pair, "exponents " + std::to_string(j1) + " and " + std::to_string(j2) +
                                  " differ outside the congruence class");

  VadicSpecial a = vadic_special_polynomial(field, chi, v, j1);
  VadicSpecial b = vadic_special_polynomial(field, chi, v, j2);

  const FieldPtr& dom = a.Q[0].field();
  BasePolynomial place = chi ? v.map_coeffs(chi->value_field(), chi->base_embedding()) : v;
  size_t len = std::max(a.Q.size(), b.Q.size());
  ContinuityResult res;
  for (size_t d = 0; d < len; ++d) {
    BasePolynomial qa = d < a.Q.size() ? a.Q[d] : BasePolynomial::zero(dom);
    BasePolynomial qb = d < b.Q.size() ? b.Q[d] : BasePolynomial::zero(dom);
    BasePolynomial diff = qa - qb;
    if (diff.is_zero()) continue;
    if (ord_at(diff, place) < uint64_t(N) + 1) {
      res.holds = false;
      res.witness_degree = int(d);
      return res;
    }
  }
  return res;
}

} // namespace ffzeta
