#include "ffzeta/curve.hpp"

#include <algorithm>

#include "ffzeta/detail/f2poly.hpp"

namespace ffzeta {

namespace {

CurveSpecPtr make_spec(const BasePolynomial& h, bool experimental, std::string label) {
  if (h.field()->size() != 2) raise(errc::invalid_input, "curve relation must be over F_2");
  int w = h.degree();
  if (w < 3 || w % 2 == 0) raise(errc::invalid_input, "relation degree must be odd and at least 3");
  auto spec = std::make_shared<CurveSpec>();
  spec->f2 = h.field();
  spec->relation = h;
  spec->weight = w;
  spec->genus = (w - 1) / 2;
  spec->experimental = experimental;
  spec->label = std::move(label);
  return spec;
}

} // namespace

CurveSpecPtr CurveSpec::genus1() {
  static CurveSpecPtr inst = make_spec(
      BasePolynomial::parse(Field::get(2), "T2^3+T2+1", "T2"), false, "genus1");
  return inst;
}

CurveSpecPtr CurveSpec::genus2() {
  static CurveSpecPtr inst = make_spec(
      BasePolynomial::parse(Field::get(2), "T2^5+T2^3+1", "T2"), false, "genus2");
  return inst;
}

CurveSpecPtr CurveSpec::make(const BasePolynomial& h) {
  if (h == genus1()->relation) return genus1();
  if (h == genus2()->relation) return genus2();
  return make_spec(h, true, "curve:" + h.to_string("T2"));
}

std::pair<int, int> CurveSpec::monomial_of_degree(int d) const {
  if (!has_monomial_of_degree(d)) raise(errc::invalid_input, "gap degree has no monomial");
  if (d % 2 == 0) return {d / 2, 0};
  return {(d - weight) / 2, 1};
}

std::vector<int> CurveSpec::monomial_degrees_below(int d) const {
  std::vector<int> out;
  for (int k = 0; k < d; ++k)
    if (has_monomial_of_degree(k)) out.push_back(k);
  return out;
}

CurveElement::CurveElement(CurveSpecPtr spec, BasePolynomial g, BasePolynomial h)
    : spec_(std::move(spec)), g_(std::move(g)), h_(std::move(h)) {
  if (!spec_) raise(errc::invalid_input, "curve element needs a spec");
  if (!g_.field()->same_as(*spec_->f2) || !h_.field()->same_as(*spec_->f2))
    raise(errc::spec_mismatch, "curve element parts must live over F_2");
}

CurveElement CurveElement::zero(CurveSpecPtr spec) {
  auto f = spec->f2;
  return CurveElement(std::move(spec), BasePolynomial::zero(f), BasePolynomial::zero(f));
}

CurveElement CurveElement::one(CurveSpecPtr spec) {
  auto f = spec->f2;
  return CurveElement(std::move(spec), BasePolynomial::one(f), BasePolynomial::zero(f));
}

std::optional<int> CurveElement::degree() const {
  if (is_zero()) return std::nullopt;
  int d = -1;
  if (!g_.is_zero()) d = 2 * g_.degree();
  if (!h_.is_zero()) d = std::max(d, spec_->weight + 2 * h_.degree());
  return d;
}

void CurveElement::check_specs(const CurveElement& a, const CurveElement& b) {
  if (!a.spec_ || !b.spec_ ||
      !(a.spec_ == b.spec_ || a.spec_->relation == b.spec_->relation))
    raise(errc::spec_mismatch, "curve elements from different rings");
}

CurveElement operator+(const CurveElement& a, const CurveElement& b) {
  CurveElement::check_specs(a, b);
  return CurveElement(a.spec_, a.g_ + b.g_, a.h_ + b.h_);
}

CurveElement operator*(const CurveElement& a, const CurveElement& b) {
  CurveElement::check_specs(a, b);
  // T1^2 = T1 + h(T2) in characteristic 2
  BasePolynomial gg = a.g_ * b.g_;
  BasePolynomial hh = a.h_ * b.h_;
  BasePolynomial cross = a.g_ * b.h_ + a.h_ * b.g_;
  return CurveElement(a.spec_, gg + hh * a.spec_->relation, cross + hh);
}

bool operator==(const CurveElement& a, const CurveElement& b) {
  return a.g_ == b.g_ && a.h_ == b.h_ &&
         (a.spec_ == b.spec_ || a.spec_->relation == b.spec_->relation);
}

CurveElement CurveElement::square() const { return *this * *this; }

CurveElement CurveElement::pow(uint64_t e) const {
  CurveElement result = one(spec_);
  CurveElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base.square();
  }
  return result;
}

std::string CurveElement::to_string() const {
  return g_.to_string("T2") + ";" + h_.to_string("T2");
}

CurveElement CurveElement::parse(const CurveSpecPtr& spec, std::string_view text) {
  size_t sep = text.find(';');
  if (sep == std::string_view::npos)
    raise(errc::parse_error, "curve element needs 'g;h' with parts over T2");
  BasePolynomial g = BasePolynomial::parse(spec->f2, text.substr(0, sep), "T2");
  BasePolynomial h = BasePolynomial::parse(spec->f2, text.substr(sep + 1), "T2");
  return CurveElement(spec, std::move(g), std::move(h));
}

uint64_t stratum_size(const CurveSpecPtr& spec, int d) {
  if (d < 0 || !spec->has_monomial_of_degree(d)) return 0;
  size_t k = spec->monomial_degrees_below(d).size();
  if (k >= 40) raise(errc::invalid_input, "stratum too large to enumerate");
  return uint64_t(1) << k;
}

std::vector<CurveElement> enumerate_by_degree(const CurveSpecPtr& spec, int d) {
  std::vector<CurveElement> out;
  if (d < 0 || !spec->has_monomial_of_degree(d)) return out;
  auto lower = spec->monomial_degrees_below(d);
  if (lower.size() >= 30) raise(errc::invalid_input, "stratum too large to materialize");
  auto [la, lb] = spec->monomial_of_degree(d);
  uint64_t count = uint64_t(1) << lower.size();
  out.reserve(size_t(count));
  for (uint64_t mask = 0; mask < count; ++mask) {
    std::vector<uint16_t> g(size_t(spec->weight + d) + 2, 0), h(size_t(spec->weight + d) + 2, 0);
    auto put = [&](int a, int b) {
      if (b == 0)
        g[size_t(a)] ^= 1;
      else
        h[size_t(a)] ^= 1;
    };
    put(la, lb);
    for (size_t t = 0; t < lower.size(); ++t)
      if ((mask >> t) & 1) {
        auto [a, b] = spec->monomial_of_degree(lower[t]);
        put(a, b);
      }
    out.emplace_back(spec, BasePolynomial(spec->f2, std::move(g)),
                     BasePolynomial(spec->f2, std::move(h)));
  }
  return out;
}

namespace {

using detail::F2Poly;

struct CElem2 {
  F2Poly g, h;
};

// g' = g^2 + h^2 * relation, h' = h^2
void curve_square(const CElem2& a, const F2Poly& rel, CElem2& out, F2Poly& scratch) {
  out.g = a.g.square();
  scratch = a.h.square();
  F2Poly::mul_acc(out.g, scratch, rel);
  out.h = std::move(scratch);
}

void curve_mul(const CElem2& a, const CElem2& b, const F2Poly& rel, CElem2& out) {
  F2Poly gg = F2Poly::mul(a.g, b.g);
  F2Poly hh = F2Poly::mul(a.h, b.h);
  out.g = gg;
  F2Poly::mul_acc(out.g, hh, rel);
  out.h = std::move(hh);
  F2Poly::mul_acc(out.h, a.g, b.h);
  F2Poly::mul_acc(out.h, a.h, b.g);
}

} // namespace

CurveElement curve_power_sum(const CurveSpecPtr& spec, int d, uint64_t j) {
  uint64_t size = stratum_size(spec, d);
  if (size == 0) return CurveElement::zero(spec);
  if (j == 0) {
    // each element contributes 1; the stratum size is even except for d = 0
    return size % 2 ? CurveElement::one(spec) : CurveElement::zero(spec);
  }

  F2Poly rel;
  for (size_t k = 0; k < spec->relation.coeffs().size(); ++k)
    if (spec->relation.coeffs()[k]) rel.set_bit(k);

  auto lower = spec->monomial_degrees_below(d);
  auto top = spec->monomial_of_degree(d);
  int top_bit = 63 - __builtin_clzll(j);

  CElem2 acc, base, cur, next, prod, tmp;
  F2Poly scratch;
  for (uint64_t mask = 0; mask < size; ++mask) {
    base.g.clear();
    base.h.clear();
    auto put = [&](std::pair<int, int> ab) {
      if (ab.second == 0)
        base.g.set_bit(size_t(ab.first));
      else
        base.h.set_bit(size_t(ab.first));
    };
    put(top);
    for (size_t t = 0; t < lower.size(); ++t)
      if ((mask >> t) & 1) put(spec->monomial_of_degree(lower[t]));

    cur = base;
    prod.g.clear();
    prod.h.clear();
    prod.g.set_bit(0);
    for (int i = 0; i <= top_bit; ++i) {
      if ((j >> i) & 1) {
        curve_mul(prod, cur, rel, tmp);
        std::swap(prod, tmp);
      }
      if (i < top_bit) {
        curve_square(cur, rel, next, scratch);
        std::swap(cur, next);
      }
    }
    acc.g.add_assign(prod.g);
    acc.h.add_assign(prod.h);
  }

  auto to_poly = [&](const F2Poly& f) {
    int deg = f.degree();
    std::vector<uint16_t> c(size_t(deg + 1), 0);
    for (int i = 0; i <= deg; ++i)
      if (f.bit(size_t(i))) c[size_t(i)] = 1;
    return BasePolynomial(spec->f2, std::move(c));
  };
  return CurveElement(spec, to_poly(acc.g), to_poly(acc.h));
}

} // namespace ffzeta
