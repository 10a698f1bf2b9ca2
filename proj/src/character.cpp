#include "ffzeta/character.hpp"

#include <numeric>

namespace ffzeta {

namespace {

uint32_t pack_residue(const BasePolynomial& rem, int deg_f, uint32_t r) {
  uint32_t code = 0, mult = 1;
  for (int i = 0; i < deg_f; ++i) {
    code += uint32_t(rem.coeff(size_t(i))) * mult;
    mult *= r;
  }
  return code;
}

} // namespace

DirichletCharacter DirichletCharacter::build(FieldPtr base, BasePolynomial f, uint64_t k) {
  if (!f.field()->same_as(*base)) raise(errc::spec_mismatch, "modulus not over the base field");
  if (!f.is_monic()) raise(errc::invalid_input, "modulus must be monic");
  if (!is_irreducible(f)) raise(errc::not_irreducible, "character modulus must be irreducible");

  DirichletCharacter chi;
  chi.base_ = base;
  chi.f_ = f;
  int e = f.degree();
  uint64_t big_q = 1;
  for (int i = 0; i < e; ++i) big_q *= base->size();
  chi.group_order_ = big_q - 1;
  if (k >= chi.group_order_) raise(errc::invalid_index, "character index exceeds group order");
  chi.k_ = k;
  chi.value_ = Field::get(base->characteristic(), base->extension_degree() * e);
  chi.embed_ = Field::embedding(*base, *chi.value_);

  // discrete log table over (A/f)^*, generator found by ascending scan
  uint32_t r = base->size();
  chi.dlog_.assign(size_t(big_q), -1);
  bool found = false;
  for (uint64_t gc = 1; gc < big_q && !found; ++gc) {
    std::vector<uint16_t> gv;
    uint64_t t = gc;
    for (int i = 0; i < e; ++i) {
      gv.push_back(uint16_t(t % r));
      t /= r;
    }
    BasePolynomial g(base, gv);
    if (g.is_zero()) continue;
    std::fill(chi.dlog_.begin(), chi.dlog_.end(), -1);
    BasePolynomial cur = BasePolynomial::one(base);
    uint64_t steps = 0;
    while (true) {
      uint32_t code = pack_residue(cur, e, r);
      if (chi.dlog_[code] != -1) break; // cycled back
      chi.dlog_[code] = int64_t(steps);
      ++steps;
      cur = BasePolynomial::divrem(cur * g, f).second;
    }
    if (steps == chi.group_order_) {
      chi.gen_ = g;
      found = true;
    }
  }
  if (!found) raise(errc::invalid_input, "no generator of the residue group found");
  return chi;
}

uint64_t DirichletCharacter::order() const {
  return group_order_ / std::gcd(k_, group_order_);
}

uint64_t DirichletCharacter::q_chi() const {
  uint64_t n = order();
  uint64_t p = uint64_t(base_->characteristic());
  if (n == 1) return p;
  // multiplicative order of p modulo n
  uint64_t e = 1, pw = p % n;
  while (pw != 1) {
    pw = pw * p % n;
    ++e;
  }
  uint64_t q = 1;
  for (uint64_t i = 0; i < e; ++i) q *= p;
  return q;
}

uint32_t DirichletCharacter::residue_code(const BasePolynomial& n) const {
  BasePolynomial rem = BasePolynomial::divrem(n, f_).second;
  return pack_residue(rem, f_.degree(), base_->size());
}

std::optional<uint16_t> DirichletCharacter::value_at_residue(uint32_t code) const {
  if (code == 0) return std::nullopt;
  int64_t t = dlog_[code];
  return value_->exp(uint64_t(t) * k_ % group_order_);
}

std::optional<uint16_t> DirichletCharacter::value(const BasePolynomial& n) const {
  if (!n.field()->same_as(*base_)) raise(errc::spec_mismatch, "argument not over the base field");
  return value_at_residue(residue_code(n));
}

std::string DirichletCharacter::id() const {
  return "r=" + std::to_string(base_->size()) + ",f=" + f_.to_string() +
         ",k=" + std::to_string(k_);
}

DirichletCharacter DirichletCharacter::parse_spec(const std::string& text) {
  std::optional<uint32_t> r;
  std::optional<std::string> f_text;
  std::optional<uint64_t> k;
  size_t pos = 0;
  while (pos < text.size()) {
    // split on commas at bracket depth 0 only: extension-field coefficients
    // are written [c0,c1] and keep their commas
    size_t next = pos;
    int depth = 0;
    while (next < text.size() && (text[next] != ',' || depth > 0)) {
      if (text[next] == '[') ++depth;
      if (text[next] == ']') --depth;
      ++next;
    }
    std::string part = text.substr(pos, next - pos);
    pos = next + 1;
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      raise(errc::parse_error, "character spec part '" + part + "' is not key=value");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    try {
      if (key == "r")
        r = uint32_t(std::stoul(val));
      else if (key == "f")
        f_text = val;
      else if (key == "k")
        k = std::stoull(val);
      else
        raise(errc::parse_error, "unknown character spec key '" + key + "'");
    } catch (const std::logic_error&) {
      raise(errc::parse_error, "bad number '" + val + "' in character spec");
    }
  }
  if (!r || !f_text || !k)
    raise(errc::parse_error, "character spec needs r=, f=, and k= parts");
  FieldPtr base = Field::get_order(*r);
  return build(base, BasePolynomial::parse(base, *f_text), *k);
}

} // namespace ffzeta
