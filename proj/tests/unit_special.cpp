#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "ffzeta/special.hpp"
#include "oracles.hpp"

using namespace ffzeta;

namespace {

errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an ffzeta::error");
  return errc::io_error;
}

std::vector<std::string> coeff_strings(const SpecialPolynomial<BasePolynomial>& z) {
  std::vector<std::string> out;
  for (const auto& c : z.coeffs) out.push_back(c.to_string());
  return out;
}

std::vector<std::string> coeff_strings(const SpecialPolynomial<CurveElement>& z) {
  std::vector<std::string> out;
  for (const auto& c : z.coeffs) out.push_back(c.to_string());
  return out;
}

} // namespace

TEST_CASE("truncation policy arithmetic") {
  CHECK(fqt_vanishing_cutoff(2, 3) == 2);   // l_2(3) = 2
  CHECK(fqt_vanishing_cutoff(2, 8) == 1);   // l_2(8) = 1
  CHECK(fqt_vanishing_cutoff(3, 6) == 1);   // l_3(6) = 2, floor(2/2)
  CHECK(fqt_vanishing_cutoff(4, 3) == 1);   // l_4(3) = 3, floor(3/3)
  CHECK(fqt_vanishing_cutoff(2, 0) == 0);
  CHECK(default_d_max(2, 3, 0, 0) == 5);    // ceil(2/1) + 3
  CHECK(default_d_max(2, 3, 1, 0) == 7);    // + 2g
  CHECK(default_d_max(2, 3, 0, 2) == 7);    // + conductor degree
  CHECK(default_d_max(3, 6, 0, 0) == 4);    // ceil(2/2) + 3
}

TEST_CASE("frozen special values over F_r[T]") {
  auto z23 = special_zeta_fqt(Field::get(2, 1), 3);
  CHECK(coeff_strings(z23) == std::vector<std::string>{"1", "T^2+T+1", "T^2+T"});
  CHECK(z23.tail_certified);
  CHECK(z23.ring_id == "fqt:2");
  CHECK(z23.char_id == "trivial");
  CHECK(z23.degree_u() == 2);

  auto z25 = special_zeta_fqt(Field::get(2, 1), 5);
  CHECK(coeff_strings(z25) == std::vector<std::string>{"1", "T^4+T+1", "T^4+T"});

  auto z32 = special_zeta_fqt(Field::get(3, 1), 2);
  CHECK(coeff_strings(z32) == std::vector<std::string>{"1", "2"});
  auto z36 = special_zeta_fqt(Field::get(3, 1), 6);
  CHECK(coeff_strings(z36) == std::vector<std::string>{"1", "2"});

  auto z43 = special_zeta_fqt(Field::get(2, 2), 3);
  CHECK(z43.degree_u() == 1);
  CHECK(z43.coeffs[1] == BasePolynomial::one(Field::get(2, 2)));
}

TEST_CASE("z(u, 0) = 1 in every ring") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    auto z = special_zeta_fqt(Field::get_order(q), 0);
    CHECK(z.degree_u() == 0);
    CHECK(z.coeffs[0].is_one());
    CHECK(z.tail_certified);
  }
  for (auto spec : {CurveSpec::genus1(), CurveSpec::genus2()}) {
    auto z = special_zeta_curve(spec, 0);
    CHECK(z.degree_u() == 0);
    CHECK(z.coeffs[0].is_one());
  }
}

TEST_CASE("special coefficients agree with direct enumeration") {
  for (uint32_t q : {2u, 3u, 4u}) {
    FieldPtr F = Field::get_order(q);
    for (uint64_t j : {1, 2, 4, 6, 9, 13}) {
      auto z = special_zeta_fqt(F, j);
      for (int d = 0; d <= z.degree_u() + 1; ++d) {
        BasePolynomial expect = oracle::brute_power_sum(F, d, j);
        CHECK((z.coeffs.size() > size_t(d) ? z.coeffs[size_t(d)] == expect
                                           : expect.is_zero()));
      }
    }
  }
}

TEST_CASE("truncation below the vanishing cutoff is refused") {
  auto F2 = Field::get(2, 1);
  CHECK(thrown_code([&] { special_zeta_fqt(F2, 3, 1); }) == errc::truncation_insufficient);
  // at the cutoff the full polynomial is still delivered
  auto z = special_zeta_fqt(F2, 3, 2);
  CHECK(z.degree_u() == 2);
  CHECK(z.tail_certified);
}

TEST_CASE("raising d_max beyond the default changes nothing") {
  auto F3 = Field::get(3, 1);
  auto a = special_zeta_fqt(F3, 8);
  auto b = special_zeta_fqt(F3, 8, a.d_max_used + 3);
  CHECK(a.coeffs == b.coeffs);

  auto g1 = CurveSpec::genus1();
  auto c = special_zeta_curve(g1, 5);
  auto d = special_zeta_curve(g1, 5, c.d_max_used + 3);
  CHECK(c.coeffs == d.coeffs);
}

TEST_CASE("frozen curve-ring special values") {
  auto g1 = CurveSpec::genus1();
  auto z11 = special_zeta_curve(g1, 1);
  CHECK(coeff_strings(z11) == std::vector<std::string>{"1;0", "0;0", "1;0"});
  CHECK(z11.ring_id == "genus1");
  CHECK(z11.tail_certified);

  // Frobenius twist: doubling j squares each coefficient
  auto z12 = special_zeta_curve(g1, 2);
  CHECK(coeff_strings(z12) == std::vector<std::string>{"1;0", "0;0", "1;0"});

  auto z13 = special_zeta_curve(g1, 3);
  CHECK(coeff_strings(z13) ==
        std::vector<std::string>{"1;0", "0;0", "T2^2+T2+1;0", "T2^2+T2;0"});

  auto g2 = CurveSpec::genus2();
  auto z27 = special_zeta_curve(g2, 7);
  CHECK(z27.degree_u() == 5);
  CHECK(z27.coeffs[2].to_string() == "T2^6+T2^5+T2^4+T2^3+T2^2+T2+1;0");
  for (int d = 0; d <= 5; ++d)
    CHECK(z27.coeffs[size_t(d)] == oracle::brute_curve_power_sum(g2, d, 7));
}

TEST_CASE("curve truncation certifies through the top strata") {
  auto g2 = CurveSpec::genus2();
  CHECK(thrown_code([&] { special_zeta_curve(g2, 7, 4); }) == errc::truncation_insufficient);
  auto z = special_zeta_curve(g2, 7, 9); // degree 5 + genus 2 + 2 margin
  CHECK(z.degree_u() == 5);
  CHECK(z.tail_certified);
}

TEST_CASE("frozen L-series values for the order-3 character") {
  auto chi = DirichletCharacter::parse_spec("r=2,f=T^2+T+1,k=1");
  const FieldPtr& V = chi.value_field();
  auto L1 = special_lseries(chi, 1);
  CHECK(L1.char_id == "r=2,f=T^2+T+1,k=1");
  CHECK(L1.ring_id == "fqt:2");
  REQUIRE(L1.degree_u() == 2);
  CHECK(L1.coeffs[0] == BasePolynomial::one(V));
  CHECK(L1.coeffs[1] == BasePolynomial::parse(V, "T+[1,1]"));
  CHECK(L1.coeffs[2] == BasePolynomial::parse(V, "T+[0,1]"));
  CHECK(L1.tail_certified);

  auto L2 = special_lseries(chi, 2);
  CHECK(L2.coeffs[1] == BasePolynomial::parse(V, "T^2+[1,1]"));
  CHECK(L2.coeffs[2] == BasePolynomial::parse(V, "T^2+[0,1]"));
}

TEST_CASE("L-series terms are the character-weighted monic sums") {
  auto chi = DirichletCharacter::parse_spec("r=3,f=T^2+1,k=1");
  const FieldPtr& base = chi.base_field();
  const FieldPtr& V = chi.value_field();
  std::vector<uint16_t> embed = chi.base_embedding();
  for (uint64_t j : {1, 2, 5}) {
    auto L = special_lseries(chi, j);
    for (int d = 0; d <= 3; ++d) {
      BasePolynomial expect = BasePolynomial::zero(V);
      oracle::for_each_monic(base, d, [&](const BasePolynomial& n) {
        auto v = chi.value(n);
        if (!v) return;
        expect += oracle::naive_pow(n, j).map_coeffs(V, embed).scalar_mul(*v);
      });
      CHECK((L.coeffs.size() > size_t(d) ? L.coeffs[size_t(d)] : BasePolynomial::zero(V)) ==
            expect);
    }
  }
}

TEST_CASE("principal character factorization strikes one Euler factor") {
  for (auto [q, ftext] : std::vector<std::pair<uint32_t, const char*>>{
           {2u, "T"}, {2u, "T^2+T+1"}, {3u, "T+1"}}) {
    FieldPtr F = Field::get_order(q);
    BasePolynomial f = BasePolynomial::parse(F, ftext);
    auto chi0 = DirichletCharacter::build(F, f, 0);
    const FieldPtr& V = chi0.value_field();
    std::vector<uint16_t> embed = chi0.base_embedding();
    for (uint64_t j : {1, 2, 3, 6}) {
      auto L = special_lseries(chi0, j);
      auto z = special_zeta_fqt(F, j);
      // (1 - f^j u^{deg f}) * z, computed over the value field
      BasePolynomial fj = oracle::naive_pow(f, j).map_coeffs(V, embed);
      std::vector<BasePolynomial> expect(z.coeffs.size() + size_t(f.degree()),
                                         BasePolynomial::zero(V));
      for (size_t d = 0; d < z.coeffs.size(); ++d) {
        BasePolynomial lifted = z.coeffs[d].map_coeffs(V, embed);
        expect[d] += lifted;
        expect[d + size_t(f.degree())] += fj * lifted.scalar_mul(V->neg(1));
      }
      while (!expect.empty() && expect.back().is_zero()) expect.pop_back();
      CHECK(L.coeffs == expect);
    }
  }
}

TEST_CASE("pi-adic exponents: digits and padding") {
  auto y = PadicExponent::from_integer(6, 2);
  CHECK(y.digits == std::vector<int>{0, 1, 1});
  auto padded = PadicExponent::from_integer(6, 2, 5);
  CHECK(padded.digits == std::vector<int>{0, 1, 1, 0, 0});
  auto zero = PadicExponent::from_integer(0, 3, 2);
  CHECK(zero.digits == std::vector<int>{0, 0});
}

TEST_CASE("family coefficients match the exact pi-expansion at integer y") {
  for (uint32_t q : {2u, 3u}) {
    FieldPtr F = Field::get_order(q);
    int p = F->characteristic();
    for (int d = 0; d <= 3; ++d) {
      for (uint64_t j : {1, 3, 4, 7, 12}) {
        int N = 10;
        auto a = family_coefficient(F, d, PadicExponent::from_integer(j, p, 8), N);
        // exact: sum <n>^j = c_d(j) / T^{dj}; pi^i coefficient = T-coefficient
        // at dj - i
        BasePolynomial cd = oracle::brute_power_sum(F, d, j);
        for (int i = 0; i < N; ++i) {
          int64_t t = int64_t(d) * int64_t(j) - i;
          uint16_t expect = t < 0 ? 0 : cd.coeff(size_t(t));
          CHECK(a.c[size_t(i)] == expect);
        }
      }
    }
  }
}

TEST_CASE("frozen family values") {
  auto F3 = Field::get(3, 1);
  auto a3 = family_coefficient(F3, 1, PadicExponent::from_integer(4, 3, 2), 3);
  CHECK(a3.c == std::vector<uint16_t>{0, 0, 0});
  auto a5 = family_coefficient(F3, 1, PadicExponent::from_integer(4, 3, 4), 5);
  CHECK(a5.c == std::vector<uint16_t>{0, 0, 0, 0, 2});
  auto F2 = Field::get(2, 1);
  auto a6 = family_coefficient(F2, 2, PadicExponent::from_integer(3, 2, 3), 6);
  CHECK(a6.c == std::vector<uint16_t>{0, 0, 0, 0, 1, 1});
}

TEST_CASE("family precision limits are enforced") {
  auto F2 = Field::get(2, 1);
  // N = 6 reads digit positions of 5 = 101_2, needing three stated digits
  CHECK(thrown_code([&] {
          family_coefficient(F2, 2, PadicExponent::from_integer(3, 2), 6);
        }) == errc::precision_exceeds_digits);
  CHECK(thrown_code([&] { family_coefficient(F2, 1, PadicExponent{2, {1}}, 0); }) ==
        errc::invalid_input);
  CHECK(thrown_code([&] { family_coefficient(F2, 1, PadicExponent{3, {1}}, 1); }) ==
        errc::invalid_input);
  // N = 1 reads no digits at all: y known to depth zero suffices
  auto a0 = family_coefficient(F2, 0, PadicExponent{2, {}}, 1);
  CHECK(a0.c == std::vector<uint16_t>{1}); // single monic of degree 0
  auto a1 = family_coefficient(F2, 1, PadicExponent{2, {}}, 1);
  CHECK(a1.c == std::vector<uint16_t>{0}); // q^d monics, each 1 mod pi
}

TEST_CASE("degree profile stays inside the proven envelope") {
  auto rows = degree_profile_fqt(Field::get(2, 1), 1, 40);
  REQUIRE(rows.size() == 40);
  for (const auto& row : rows) {
    CHECK(row.l_r == digit_sum(row.j, 2));
    CHECK(row.envelope_margin <= 0);
    auto z = special_zeta_fqt(Field::get(2, 1), row.j);
    CHECK(row.deg_u == z.degree_u());
  }

  auto curve_rows = degree_profile_curve(CurveSpec::genus1(), 1, 12);
  for (const auto& row : curve_rows) CHECK(row.envelope_margin <= 0);

  CHECK(thrown_code([&] { degree_profile_fqt(Field::get(2, 1), 5, 4); }) ==
        errc::invalid_input);
}
