#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "ffzeta/character.hpp"
#include "ffzeta/curve.hpp"
#include "ffzeta/field.hpp"
#include "ffzeta/poly.hpp"
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

BasePolynomial random_poly(const FieldPtr& field, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<uint32_t> code(0, field->size() - 1);
  std::vector<uint16_t> c(size_t(deg(rng)) + 1);
  for (auto& x : c) x = uint16_t(code(rng));
  return BasePolynomial(field, std::move(c));
}

} // namespace

TEST_CASE("field axioms and tables for every supported order") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    CAPTURE(q);
    FieldPtr F = Field::get_order(q);
    REQUIRE(F->size() == q);
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(F->add(uint16_t(a), 0) == a);
      CHECK(F->mul(uint16_t(a), 1) == a);
      CHECK(F->mul(uint16_t(a), 0) == 0);
      CHECK(F->add(uint16_t(a), F->neg(uint16_t(a))) == 0);
      if (a) CHECK(F->mul(uint16_t(a), F->inv(uint16_t(a))) == 1);
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(F->add(uint16_t(a), uint16_t(b)) == F->add(uint16_t(b), uint16_t(a)));
        CHECK(F->mul(uint16_t(a), uint16_t(b)) == F->mul(uint16_t(b), uint16_t(a)));
        for (uint32_t c = 0; c < q; ++c) {
          uint16_t left = F->mul(uint16_t(a), F->add(uint16_t(b), uint16_t(c)));
          uint16_t right = F->add(F->mul(uint16_t(a), uint16_t(b)), F->mul(uint16_t(a), uint16_t(c)));
          CHECK(left == right);
        }
      }
    }
    // the generator hits every nonzero element exactly once
    std::set<uint16_t> seen;
    uint16_t g = F->generator(), x = 1;
    for (uint32_t i = 0; i < q - 1; ++i) {
      seen.insert(x);
      x = F->mul(x, g);
    }
    CHECK(x == 1);
    CHECK(seen.size() == q - 1);
    // frobenius is x -> x^p
    int p = F->characteristic();
    for (uint32_t a = 0; a < q; ++a)
      CHECK(F->frobenius(uint16_t(a)) == F->pow(uint16_t(a), p));
    // coords and element text round-trip
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(F->from_coords(F->coords(uint16_t(a))) == a);
      CHECK(F->parse_element(F->render_element(uint16_t(a))) == a);
    }
  }
}

TEST_CASE("canonical extension moduli") {
  CHECK(Field::get(2, 2)->modulus_string() == "x^2+x+1");
  CHECK(Field::get(3, 2)->modulus_string() == "x^2+x+2");
  CHECK(Field::get(2, 3)->modulus_string() == "x^3+x+1");
  CHECK(Field::get(2, 1)->modulus_string() == "p=2");
  // the registry shares instances
  CHECK(Field::get(2, 2).get() == Field::get_order(4).get());
}

TEST_CASE("embeddings are field homomorphisms") {
  auto check_embed = [](const FieldPtr& small, const FieldPtr& big) {
    std::vector<uint16_t> e = Field::embedding(*small, *big);
    REQUIRE(e.size() == small->size());
    CHECK(e[0] == 0);
    CHECK(e[1] == 1);
    for (uint32_t a = 0; a < small->size(); ++a)
      for (uint32_t b = 0; b < small->size(); ++b) {
        CHECK(e[small->add(uint16_t(a), uint16_t(b))] == big->add(e[a], e[b]));
        CHECK(e[small->mul(uint16_t(a), uint16_t(b))] == big->mul(e[a], e[b]));
      }
  };
  check_embed(Field::get(2, 1), Field::get(2, 2));
  check_embed(Field::get(3, 1), Field::get(3, 2));
  check_embed(Field::get(2, 1), Field::get(2, 3));
}

TEST_CASE("lucas binomials against the Pascal recurrence") {
  for (int p : {2, 3, 5})
    for (uint64_t n = 0; n <= 40; ++n)
      for (uint64_t k = 0; k <= 40; ++k)
        CHECK(lucas_binomial(n, k, p) == oracle::pascal_binomial_mod(n, k, p));
}

TEST_CASE("digit sums") {
  CHECK(digit_sum(0, 2) == 0);
  CHECK(digit_sum(7, 2) == 3);
  CHECK(digit_sum(8, 2) == 1);
  CHECK(digit_sum(7, 3) == 3);  // 21_3
  CHECK(digit_sum(80, 9) == 16); // 88_9
  CHECK(base_digits(6, 2) == std::vector<int>{0, 1, 1});
}

TEST_CASE("polynomial arithmetic and division") {
  std::mt19937_64 rng(0x5eed0001);
  for (uint32_t q : {2u, 4u, 9u}) {
    CAPTURE(q);
    FieldPtr F = Field::get_order(q);
    for (int trial = 0; trial < 200; ++trial) {
      BasePolynomial a = random_poly(F, 8, rng);
      BasePolynomial b = random_poly(F, 8, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
      if (!b.is_zero()) {
        auto [quot, rem] = BasePolynomial::divrem(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
      }
    }
  }
}

TEST_CASE("polynomial text round-trip") {
  auto F2 = Field::get(2, 1);
  auto F4 = Field::get(2, 2);
  CHECK(BasePolynomial::parse(F2, "T^3+T+1").to_string() == "T^3+T+1");
  CHECK(BasePolynomial::parse(F2, "0").to_string() == "0");
  CHECK(BasePolynomial::parse(F2, "1").to_string() == "1");
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 100; ++trial) {
    BasePolynomial a = random_poly(F4, 6, rng);
    CHECK(BasePolynomial::parse(F4, a.to_string()) == a);
  }
  // extension coefficients keep their bracket form
  BasePolynomial w(F4, {2, 3, 1});
  CHECK(BasePolynomial::parse(F4, w.to_string()) == w);
}

TEST_CASE("spread implements the Frobenius twist") {
  std::mt19937_64 rng(0x5eed0003);
  for (uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    FieldPtr F = Field::get_order(q);
    int p = F->characteristic();
    for (int trial = 0; trial < 50; ++trial) {
      BasePolynomial a = random_poly(F, 5, rng);
      CHECK(a.spread(1) == a.pow(uint64_t(p)));
      CHECK(a.spread(2) == a.pow(uint64_t(p) * uint64_t(p)));
    }
  }
}

TEST_CASE("frobenius_pow equals flat repeated multiplication") {
  std::mt19937_64 rng(0x5eed0004);
  for (uint32_t q : {2u, 3u, 4u}) {
    FieldPtr F = Field::get_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      BasePolynomial a = random_poly(F, 3, rng);
      std::uniform_int_distribution<uint64_t> je(0, 64);
      uint64_t j = je(rng);
      CHECK(frobenius_pow(a, j) == oracle::naive_pow(a, j));
    }
  }
}

TEST_CASE("hasse derivative examples and product rule spot checks") {
  auto F2 = Field::get(2, 1);
  BasePolynomial one_u(F2, {1, 1});    // 1 + T
  BasePolynomial one_u2(F2, {1, 0, 1}); // 1 + T^2
  CHECK(one_u.derivative_hasse(1) == BasePolynomial::one(F2));
  CHECK(one_u2.derivative_hasse(1) == BasePolynomial::zero(F2));
  CHECK(one_u2.derivative_hasse(2) == BasePolynomial::one(F2));
}

TEST_CASE("monic enumeration is complete and canonical") {
  for (uint32_t q : {2u, 3u, 4u}) {
    for (int d = 0; d <= 3; ++d) {
      FieldPtr F = Field::get_order(q);
      MonicRange range(F, d);
      uint64_t expect = 1;
      for (int i = 0; i < d; ++i) expect *= q;
      CHECK(range.count() == expect);
      std::set<std::string> seen;
      range.for_each([&](const std::vector<uint16_t>& c) {
        BasePolynomial n(F, c);
        CHECK(n.is_monic());
        CHECK(n.degree() == d);
        seen.insert(n.to_string());
      });
      CHECK(seen.size() == expect);
      CHECK(range.at(0) == BasePolynomial::monomial(F, size_t(d)));
    }
  }
}

TEST_CASE("power sums match the brute-force oracle") {
  for (uint32_t q : {2u, 3u, 4u}) {
    FieldPtr F = Field::get_order(q);
    for (int d = 0; d <= 3; ++d)
      for (uint64_t j : {0, 1, 2, 3, 5, 7, 12, 20})
        CHECK(frobenius_power_sum(F, d, j) == oracle::brute_power_sum(F, d, j));
  }
}

TEST_CASE("irreducibility and local orders") {
  auto F2 = Field::get(2, 1);
  auto F3 = Field::get(3, 1);
  CHECK(is_irreducible(BasePolynomial::parse(F2, "T")));
  CHECK(is_irreducible(BasePolynomial::parse(F2, "T^2+T+1")));
  CHECK(!is_irreducible(BasePolynomial::parse(F2, "T^2+1"))); // (T+1)^2
  CHECK(is_irreducible(BasePolynomial::parse(F3, "T^2+1")));
  CHECK(is_irreducible(BasePolynomial::parse(F2, "T^3+T+1")));
  CHECK(!is_irreducible(BasePolynomial::one(F2)));

  BasePolynomial v = BasePolynomial::parse(F2, "T^2+T+1");
  BasePolynomial c = v * v * BasePolynomial::parse(F2, "T+1");
  CHECK(ord_at(c, v) == 2);
  CHECK(ord_at(c, BasePolynomial::parse(F2, "T")) == 0);
}

TEST_CASE("curve specs expose the weight filtration") {
  auto g1 = CurveSpec::genus1();
  auto g2 = CurveSpec::genus2();
  CHECK(g1->weight == 3);
  CHECK(g1->genus == 1);
  CHECK(g1->label == "genus1");
  CHECK(!g1->experimental);
  CHECK(g2->weight == 5);
  CHECK(g2->genus == 2);

  // gaps: odd degrees below the weight are unreachable
  CHECK(g1->has_monomial_of_degree(0));
  CHECK(!g1->has_monomial_of_degree(1));
  CHECK(g1->has_monomial_of_degree(2));
  CHECK(g1->has_monomial_of_degree(3));
  CHECK(!g2->has_monomial_of_degree(3));
  CHECK(g2->has_monomial_of_degree(5));

  for (int d = 0; d <= 8; ++d) {
    CAPTURE(d);
    auto elems = enumerate_by_degree(g2, d);
    CHECK(elems.size() == stratum_size(g2, d));
    std::set<std::string> seen;
    for (const auto& a : elems) {
      REQUIRE(a.degree().has_value());
      CHECK(*a.degree() == d);
      seen.insert(a.to_string());
    }
    CHECK(seen.size() == elems.size());
  }
}

TEST_CASE("curve arithmetic respects the defining relation") {
  auto g1 = CurveSpec::genus1();
  auto F2 = Field::get(2, 1);
  CurveElement t1(g1, BasePolynomial::zero(F2), BasePolynomial::one(F2));
  // T1^2 = T1 + h(T2)
  CurveElement expect(g1, g1->relation, BasePolynomial::one(F2));
  CHECK(t1 * t1 == expect);
  CHECK(t1.square() == t1 * t1);

  std::mt19937_64 rng(0x5eed0005);
  auto rand_elem = [&](const CurveSpecPtr& spec) {
    return CurveElement(spec, random_poly(F2, 4, rng), random_poly(F2, 3, rng));
  };
  for (int trial = 0; trial < 60; ++trial) {
    CurveElement a = rand_elem(g1), b = rand_elem(g1), c = rand_elem(g1);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.square() == a * a);
    CHECK(a.pow(5) == oracle::naive_curve_pow(a, 5));
    CHECK(a.pow(11) == oracle::naive_curve_pow(a, 11));
    CHECK(CurveElement::parse(g1, a.to_string()) == a);
  }

  // degree is the semigroup weight
  CHECK(*t1.degree() == 3);
  CurveElement t2(g1, BasePolynomial::monomial(F2, 1), BasePolynomial::zero(F2));
  CHECK(*t2.degree() == 2);
  CHECK(!CurveElement::zero(g1).degree().has_value());
  CHECK((t1 * t1 * t2).degree() == 8);
}

TEST_CASE("curve power sums match the brute-force oracle") {
  for (auto spec : {CurveSpec::genus1(), CurveSpec::genus2()})
    for (int d = 0; d <= 6; ++d)
      for (uint64_t j : {0, 1, 2, 3, 5, 7})
        CHECK(curve_power_sum(spec, d, j) == oracle::brute_curve_power_sum(spec, d, j));
}

TEST_CASE("characters: construction, order, and errors") {
  auto F2 = Field::get(2, 1);
  auto chi = DirichletCharacter::build(F2, BasePolynomial::parse(F2, "T^2+T+1"), 1);
  CHECK(chi.group_order() == 3);
  CHECK(chi.order() == 3);
  CHECK(chi.q_chi() == 4);
  CHECK(!chi.is_principal());
  CHECK(chi.value_field()->size() == 4);
  CHECK(chi.id() == "r=2,f=T^2+T+1,k=1");
  CHECK(DirichletCharacter::parse_spec(chi.id()).id() == chi.id());

  CHECK(thrown_code([&] {
          DirichletCharacter::build(F2, BasePolynomial::parse(F2, "T^2+1"), 0);
        }) == errc::not_irreducible);
  CHECK(thrown_code([&] {
          DirichletCharacter::build(F2, BasePolynomial::parse(F2, "T^2+T+1"), 3);
        }) == errc::invalid_index);
}

TEST_CASE("character values: struck terms, principal case, unity at 1") {
  auto F2 = Field::get(2, 1);
  BasePolynomial f = BasePolynomial::parse(F2, "T^2+T+1");
  auto chi = DirichletCharacter::build(F2, f, 1);
  auto chi0 = DirichletCharacter::build(F2, f, 0);

  CHECK(chi.value(BasePolynomial::one(F2)) == uint16_t(1));
  CHECK(!chi.value(f).has_value());
  CHECK(!chi.value(f * f).has_value());
  MonicRange range(F2, 3);
  range.for_each([&](const std::vector<uint16_t>& c) {
    BasePolynomial n(F2, c);
    auto [quot, rem] = BasePolynomial::divrem(n, f);
    (void)quot;
    CHECK(chi.value(n).has_value() == !rem.is_zero());
    if (!rem.is_zero()) CHECK(chi0.value(n) == uint16_t(1));
  });
}

TEST_CASE("character multiplicativity on random coprime pairs") {
  std::mt19937_64 rng(0x5eed0006);
  auto F3 = Field::get(3, 1);
  BasePolynomial f = BasePolynomial::parse(F3, "T^2+1");
  auto chi = DirichletCharacter::build(F3, f, 3);
  const Field& V = *chi.value_field();
  int checked = 0;
  while (checked < 10000) {
    BasePolynomial a = random_poly(F3, 5, rng);
    BasePolynomial b = random_poly(F3, 5, rng);
    auto va = chi.value(a.is_zero() ? BasePolynomial::one(F3) : a);
    auto vb = chi.value(b.is_zero() ? BasePolynomial::one(F3) : b);
    auto vab = chi.value((a.is_zero() ? BasePolynomial::one(F3) : a) *
                         (b.is_zero() ? BasePolynomial::one(F3) : b));
    if (!va || !vb) {
      CHECK(!vab.has_value());
      continue;
    }
    REQUIRE(vab.has_value());
    CHECK(*vab == V.mul(*va, *vb));
    ++checked;
  }
}

TEST_CASE("character orthogonality over the unit group") {
  for (auto [q, ftext] : std::vector<std::pair<uint32_t, const char*>>{
           {2u, "T^2+T+1"}, {2u, "T^3+T+1"}, {3u, "T^2+1"}}) {
    FieldPtr F = Field::get_order(q);
    BasePolynomial f = BasePolynomial::parse(F, ftext);
    for (uint64_t k = 0; k < std::min<uint64_t>(8, uint64_t(1) << (2 * f.degree())); ++k) {
      uint64_t group = 1;
      for (int i = 0; i < f.degree(); ++i) group *= q;
      group -= 1;
      if (k >= group) break;
      auto chi = DirichletCharacter::build(F, f, k);
      const Field& V = *chi.value_field();
      uint16_t sum = 0;
      int units = 0;
      for (int d = 0; d < f.degree(); ++d) {
        MonicRange range(F, d);
        range.for_each([&](const std::vector<uint16_t>& c) {
          // scale monics by every nonzero leading constant to hit all residues
          BasePolynomial n(F, c);
          for (uint32_t lead = 1; lead < q; ++lead) {
            auto v = chi.value(n.scalar_mul(uint16_t(lead)));
            if (v) {
              sum = V.add(sum, *v);
              ++units;
            }
          }
        });
      }
      CHECK(units == int(chi.group_order()));
      if (chi.is_principal())
        CHECK(sum == V.from_int(int64_t(chi.group_order())));
      else
        CHECK(sum == 0);
    }
  }
}
