#include "ffzeta/poly.hpp"

#include <algorithm>
#include <cctype>

#include "ffzeta/detail/f2poly.hpp"

namespace ffzeta {

BasePolynomial::BasePolynomial(FieldPtr field, std::vector<uint16_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) raise(errc::invalid_input, "polynomial needs a field");
  for (uint16_t c : c_)
    if (c >= field_->size()) raise(errc::invalid_input, "coefficient code out of range");
  trim();
}

BasePolynomial BasePolynomial::constant(FieldPtr field, uint16_t c) {
  return BasePolynomial(std::move(field), {c});
}

BasePolynomial BasePolynomial::monomial(FieldPtr field, size_t exp, uint16_t c) {
  std::vector<uint16_t> v(exp + 1, 0);
  v[exp] = c;
  return BasePolynomial(std::move(field), std::move(v));
}

void BasePolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void BasePolynomial::check_fields(const BasePolynomial& a, const BasePolynomial& b) {
  if (!a.field_ || !b.field_ || !a.field_->same_as(*b.field_))
    raise(errc::spec_mismatch, "polynomials over different fields");
}

BasePolynomial operator+(const BasePolynomial& a, const BasePolynomial& b) {
  BasePolynomial::check_fields(a, b);
  const Field& F = *a.field_;
  std::vector<uint16_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
  return BasePolynomial(a.field_, std::move(r));
}

BasePolynomial operator-(const BasePolynomial& a, const BasePolynomial& b) {
  BasePolynomial::check_fields(a, b);
  const Field& F = *a.field_;
  std::vector<uint16_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
  return BasePolynomial(a.field_, std::move(r));
}

BasePolynomial operator*(const BasePolynomial& a, const BasePolynomial& b) {
  BasePolynomial::check_fields(a, b);
  if (a.is_zero() || b.is_zero()) return BasePolynomial::zero(a.field_);
  const Field& F = *a.field_;
  std::vector<uint16_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    uint16_t ca = a.c_[i];
    if (!ca) continue;
    const uint16_t* row = F.mul_row(ca);
    for (size_t k = 0; k < b.c_.size(); ++k) {
      uint16_t cb = b.c_[k];
      if (!cb) continue;
      r[i + k] = F.add(r[i + k], row ? row[cb] : F.mul(ca, cb));
    }
  }
  return BasePolynomial(a.field_, std::move(r));
}

BasePolynomial& BasePolynomial::operator+=(const BasePolynomial& o) {
  *this = *this + o;
  return *this;
}

bool operator==(const BasePolynomial& a, const BasePolynomial& b) {
  if (!a.field_ || !b.field_) return a.c_ == b.c_ && !a.field_ == !b.field_;
  return a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

std::pair<BasePolynomial, BasePolynomial> BasePolynomial::divrem(const BasePolynomial& a,
                                                                 const BasePolynomial& b) {
  check_fields(a, b);
  if (b.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
  const Field& F = *a.field_;
  if (a.degree() < b.degree()) return {zero(a.field_), a};
  std::vector<uint16_t> rem = a.c_;
  std::vector<uint16_t> quot(size_t(a.degree() - b.degree()) + 1, 0);
  uint16_t ilead = F.inv(b.leading());
  for (int i = a.degree(); i >= b.degree(); --i) {
    uint16_t c = rem[size_t(i)];
    if (!c) continue;
    uint16_t qc = F.mul(c, ilead);
    quot[size_t(i - b.degree())] = qc;
    for (int k = 0; k <= b.degree(); ++k) {
      size_t pos = size_t(i - b.degree() + k);
      rem[pos] = F.sub(rem[pos], F.mul(qc, b.c_[size_t(k)]));
    }
  }
  return {BasePolynomial(a.field_, std::move(quot)), BasePolynomial(a.field_, std::move(rem))};
}

BasePolynomial BasePolynomial::scalar_mul(uint16_t c) const {
  if (c == 0 || is_zero()) return zero(field_);
  std::vector<uint16_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c, c_[i]);
  return BasePolynomial(field_, std::move(r));
}

BasePolynomial BasePolynomial::pow(uint64_t e) const {
  BasePolynomial result = one(field_);
  BasePolynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

BasePolynomial BasePolynomial::spread(unsigned i) const {
  if (i == 0 || is_zero()) return *this;
  uint64_t step = 1;
  for (unsigned t = 0; t < i; ++t) step *= uint64_t(field_->characteristic());
  std::vector<uint16_t> r(uint64_t(c_.size() - 1) * step + 1, 0);
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k]) r[size_t(uint64_t(k) * step)] = field_->frobenius(c_[k], i);
  return BasePolynomial(field_, std::move(r));
}

BasePolynomial BasePolynomial::shift(size_t k) const {
  if (is_zero()) return *this;
  std::vector<uint16_t> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + ptrdiff_t(k));
  return BasePolynomial(field_, std::move(r));
}

uint16_t BasePolynomial::eval(uint16_t x) const {
  uint16_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

BasePolynomial BasePolynomial::derivative_hasse(uint64_t i) const {
  if (i == 0) return *this;
  if (uint64_t(degree()) < i || is_zero()) return zero(field_);
  int p = field_->characteristic();
  std::vector<uint16_t> r(c_.size() - size_t(i), 0);
  for (size_t d = size_t(i); d < c_.size(); ++d) {
    int binom = lucas_binomial(uint64_t(d), i, p);
    if (binom && c_[d]) r[d - size_t(i)] = field_->mul(field_->from_int(binom), c_[d]);
  }
  return BasePolynomial(field_, std::move(r));
}

BasePolynomial BasePolynomial::map_coeffs(const FieldPtr& big,
                                          const std::vector<uint16_t>& embed) const {
  std::vector<uint16_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = embed[c_[i]];
  return BasePolynomial(big, std::move(r));
}

std::string BasePolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  const Field& F = *field_;
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    uint16_t c = c_[i];
    if (!c) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += F.render_element(c);
      continue;
    }
    if (c != 1) {
      out += F.render_element(c);
      if (!F.prime_field()) out += '*';
    }
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::string_view var;
  const Field& F;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    raise(errc::parse_error, what + " at position " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  uint64_t parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoull(std::string(text.substr(start, pos - start)));
  }

  // coef := uint | '[' uint (',' uint)* ']'
  std::optional<uint16_t> try_coefficient() {
    skip_ws();
    if (pos >= text.size()) return std::nullopt;
    if (text[pos] == '[') {
      ++pos;
      std::vector<int> coords;
      while (true) {
        coords.push_back(int(parse_uint()));
        if (eat(',')) continue;
        break;
      }
      if (!eat(']')) fail("expected ']'");
      for (int c : coords)
        if (c >= F.characteristic()) fail("coordinate not below the characteristic");
      if (coords.size() > size_t(F.extension_degree())) fail("too many coordinates");
      uint32_t code = 0, mult = 1;
      for (size_t i = 0; i < coords.size(); ++i) {
        code += uint32_t(coords[i]) * mult;
        mult *= uint32_t(F.characteristic());
      }
      return uint16_t(code);
    }
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      uint64_t v = parse_uint();
      if (v >= uint64_t(F.characteristic()))
        fail("bare coefficient must lie below the characteristic");
      return uint16_t(v);
    }
    return std::nullopt;
  }

  bool try_variable() {
    skip_ws();
    if (text.substr(pos, var.size()) != var) return false;
    size_t after = pos + var.size();
    // the variable name must not continue into a longer identifier
    if (after < text.size()) {
      char c = text[after];
      if (std::isalnum(static_cast<unsigned char>(c)) &&
          !(c == '^')) {
        // allow digits only if they belong to the exponent marker, which
        // requires '^' first; anything else is a different identifier
        return false;
      }
    }
    pos = after;
    return true;
  }

  // term := coef | coef ('*')? var ('^' uint)? | var ('^' uint)?
  void parse_term(std::vector<uint16_t>& acc) {
    auto coef = try_coefficient();
    bool star = false;
    if (coef) star = eat('*');
    bool has_var = try_variable();
    if (star && !has_var) fail("expected variable after '*'");
    if (!coef && !has_var) fail("expected term");
    uint64_t exp = 0;
    if (has_var) {
      exp = 1;
      if (eat('^')) exp = parse_uint();
    }
    uint16_t c = coef ? *coef : uint16_t(1);
    if (exp > 1u << 20) fail("exponent too large");
    if (acc.size() <= exp) acc.resize(size_t(exp) + 1, 0);
    acc[size_t(exp)] = F.add(acc[size_t(exp)], c);
  }
};

} // namespace

BasePolynomial BasePolynomial::parse(const FieldPtr& field, std::string_view text,
                                     std::string_view var) {
  Parser ps{text, var, *field};
  std::vector<uint16_t> acc;
  ps.parse_term(acc);
  while (true) {
    ps.skip_ws();
    if (ps.pos >= text.size()) break;
    if (!ps.eat('+')) ps.fail("expected '+'");
    ps.parse_term(acc);
  }
  return BasePolynomial(field, std::move(acc));
}

MonicRange::MonicRange(FieldPtr field, int degree) : field_(std::move(field)), degree_(degree) {
  if (degree < 0) raise(errc::invalid_input, "negative degree");
  if (degree > 40) raise(errc::invalid_input, "enumeration degree too large");
  count_ = 1;
  for (int i = 0; i < degree; ++i) {
    count_ *= field_->size();
    if (count_ > (uint64_t(1) << 40)) raise(errc::invalid_input, "enumeration too large");
  }
}

BasePolynomial MonicRange::at(uint64_t index) const {
  if (index >= count_) raise(errc::invalid_index, "monic index out of range");
  std::vector<uint16_t> c(size_t(degree_) + 1, 0);
  for (int k = 0; k < degree_; ++k) {
    c[size_t(k)] = uint16_t(index % field_->size());
    index /= field_->size();
  }
  c[size_t(degree_)] = 1;
  return BasePolynomial(field_, std::move(c));
}

namespace {

using detail::F2Poly;

BasePolynomial power_sum_f2(const FieldPtr& field, int d, uint64_t j) {
  F2Poly acc, base, cur, prod, tmp;
  int top_bit = 63 - __builtin_clzll(j);
  MonicRange range(field, d);
  range.for_each([&](const std::vector<uint16_t>& coeffs) {
    base.clear();
    for (size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k]) base.set_bit(k);
    cur = base;
    prod.clear();
    prod.set_bit(0);
    for (int i = 0; i <= top_bit; ++i) {
      if ((j >> i) & 1) {
        int dp = prod.degree(), dc = cur.degree();
        tmp.w.assign(size_t(dp + dc) / 64 + 1, 0);
        F2Poly::mul_acc(tmp, cur, prod);
        std::swap(prod, tmp);
      }
      if (i < top_bit) cur = cur.square();
    }
    acc.add_assign(prod);
  });
  int deg = acc.degree();
  std::vector<uint16_t> out(size_t(deg + 1), 0);
  for (int i = 0; i <= deg; ++i)
    if (acc.bit(size_t(i))) out[size_t(i)] = 1;
  return BasePolynomial(field, std::move(out));
}

using Sparse = std::vector<std::pair<uint32_t, uint16_t>>;

Sparse sparse_mul(const Field& F, const Sparse& a, const Sparse& b) {
  Sparse r;
  r.reserve(a.size() * b.size());
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) r.emplace_back(ea + eb, F.mul(ca, cb));
  std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.first < y.first; });
  Sparse out;
  for (auto& [e, c] : r) {
    if (!out.empty() && out.back().first == e)
      out.back().second = F.add(out.back().second, c);
    else
      out.emplace_back(e, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](auto& t) { return t.second == 0; }),
            out.end());
  return out;
}

BasePolynomial power_sum_generic(const FieldPtr& field, int d, uint64_t j) {
  const Field& F = *field;
  int p = F.characteristic();
  auto digits = base_digits(j, p);
  std::vector<uint64_t> psteps(digits.size(), 1);
  for (size_t i = 1; i < digits.size(); ++i) psteps[i] = psteps[i - 1] * uint64_t(p);

  std::vector<uint16_t> acc(size_t(uint64_t(d) * j) + 1, 0);
  std::vector<uint16_t> cur, next;
  cur.reserve(acc.size());
  next.reserve(acc.size());

  MonicRange range(field, d);
  range.for_each([&](const std::vector<uint16_t>& coeffs) {
    cur.assign(1, 1);
    for (size_t i = 0; i < digits.size(); ++i) {
      if (!digits[i]) continue;
      Sparse factor;
      for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k])
          factor.emplace_back(uint32_t(uint64_t(k) * psteps[i]), F.frobenius(coeffs[k], unsigned(i)));
      Sparse powered = factor;
      for (int e = 1; e < digits[i]; ++e) powered = sparse_mul(F, powered, factor);
      // dense * sparse
      next.assign(cur.size() + size_t(powered.back().first), 0);
      for (auto& [e, c] : powered) {
        const uint16_t* row = F.mul_row(c);
        if (row) {
          for (size_t t = 0; t < cur.size(); ++t)
            if (cur[t]) next[size_t(e) + t] = F.add(next[size_t(e) + t], row[cur[t]]);
        } else {
          for (size_t t = 0; t < cur.size(); ++t)
            if (cur[t]) next[size_t(e) + t] = F.add(next[size_t(e) + t], F.mul(c, cur[t]));
        }
      }
      std::swap(cur, next);
    }
    for (size_t t = 0; t < cur.size(); ++t)
      if (cur[t]) acc[t] = F.add(acc[t], cur[t]);
  });
  return BasePolynomial(field, std::move(acc));
}

} // namespace

BasePolynomial frobenius_power_sum(const FieldPtr& field, int d, uint64_t j) {
  if (d < 0) raise(errc::invalid_input, "negative degree stratum");
  if (j == 0)
    return d == 0 ? BasePolynomial::one(field) : BasePolynomial::zero(field);
  if (d == 0) return BasePolynomial::one(field);
  if (field->size() == 2) return power_sum_f2(field, d, j);
  return power_sum_generic(field, d, j);
}

BasePolynomial frobenius_pow(const BasePolynomial& a, uint64_t j) {
  const FieldPtr& field = a.field();
  if (j == 0) return BasePolynomial::one(field);
  if (a.is_zero()) return BasePolynomial::zero(field);
  int p = field->characteristic();
  BasePolynomial out = BasePolynomial::one(field);
  unsigned i = 0;
  for (uint64_t rest = j; rest; rest /= uint64_t(p), ++i) {
    int digit = int(rest % uint64_t(p));
    if (digit == 0) continue;
    out = out * a.spread(i).pow(uint64_t(digit));
  }
  return out;
}

bool is_irreducible(const BasePolynomial& f) {
  if (f.is_zero()) raise(errc::invalid_input, "zero polynomial");
  int deg = f.degree();
  if (deg == 0) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    MonicRange range(f.field(), d);
    bool divisible = false;
    range.for_each([&](const std::vector<uint16_t>& coeffs) {
      if (divisible) return;
      BasePolynomial g(f.field(), coeffs);
      if (BasePolynomial::divrem(f, g).second.is_zero()) divisible = true;
    });
    if (divisible) return false;
  }
  return true;
}

uint64_t ord_at(const BasePolynomial& c, const BasePolynomial& v) {
  if (c.is_zero()) raise(errc::invalid_input, "order of the zero polynomial");
  if (v.degree() < 1) raise(errc::invalid_input, "place must have positive degree");
  uint64_t ord = 0;
  BasePolynomial cur = c;
  while (true) {
    auto [q, r] = BasePolynomial::divrem(cur, v);
    if (!r.is_zero()) return ord;
    ++ord;
    cur = q;
  }
}

} // namespace ffzeta
