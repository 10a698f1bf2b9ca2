#include "ffzeta/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ffzeta {

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::invalid_index: return "InvalidIndex";
    case errc::invalid_input: return "InvalidInput";
    case errc::truncation_insufficient: return "TruncationInsufficient";
    case errc::precision_exceeds_digits: return "PrecisionExceedsDigits";
    case errc::ramified_place: return "RamifiedPlace";
    case errc::unsupported_place_degree: return "UnsupportedPlaceDegree";
    case errc::invalid_pair: return "InvalidPair";
    case errc::not_a_trivial_zero: return "NotATrivialZero";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense F_p[x] helpers on int vectors (ascending coefficients), build-time only.
using IPoly = std::vector<int>;

void itrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic
IPoly imod(IPoly a, const IPoly& b, int p) {
  itrim(a);
  while (a.size() >= b.size()) {
    int c = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      int t = (a[shift + i] - c * b[i]) % p;
      a[shift + i] = (t + p) % p;
    }
    itrim(a);
  }
  return a;
}

bool idivides(const IPoly& d, const IPoly& a, int p) { return imod(a, d, p).empty(); }

// monic polynomial of degree deg from an enumeration code (constant term fastest)
IPoly monic_from_code(uint64_t code, int deg, int p) {
  IPoly f(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[i] = int(code % p);
    code /= p;
  }
  f[deg] = 1;
  return f;
}

bool irreducible_int(const IPoly& f, int p) {
  int deg = int(f.size()) - 1;
  if (deg <= 0) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= uint64_t(p);
    for (uint64_t c = 0; c < count; ++c)
      if (idivides(monic_from_code(c, d, p), f, p)) return false;
  }
  return true;
}

} // namespace

Field::Field(int p, int m) : p_(p), m_(m) {
  uint64_t q = 1;
  for (int i = 0; i < m; ++i) q *= uint64_t(p);
  if (q > 32768) raise(errc::invalid_input, "field order too large");
  q_ = uint32_t(q);

  if (m_ > 1) {
    // Conway-style canonical modulus: first irreducible in enumeration order
    // whose class of x is primitive.
    uint64_t count = 1;
    for (int i = 0; i < m_; ++i) count *= uint64_t(p_);
    bool found = false;
    for (uint64_t c = 0; c < count && !found; ++c) {
      IPoly f = monic_from_code(c, m_, p_);
      if (!irreducible_int(f, p_)) continue;
      modulus_ = f;
      // walk powers of x; adopt only if x has full order q-1
      exp_.assign(2 * (q_ - 1), 0);
      log_.assign(q_, -1);
      exp_[0] = 1;
      uint16_t cur = 1;
      uint32_t t = 0;
      bool primitive = true;
      for (t = 1; t < q_; ++t) {
        cur = mul_mod(cur, uint16_t(p_)); // multiply by x
        if (cur == 1) break;
        if (t < q_ - 1) exp_[t] = cur;
      }
      primitive = (t == q_ - 1);
      if (primitive) found = true;
    }
    if (!found) raise(errc::invalid_input, "no primitive modulus found");
  } else {
    modulus_.clear();
    exp_.assign(2 * std::max<uint32_t>(q_ - 1, 1), 0);
    log_.assign(q_, -1);
    // smallest primitive root
    uint16_t g = 1;
    if (q_ > 2) {
      for (g = 2; g < q_; ++g)
        if (element_order(g) == q_ - 1) break;
    }
    exp_[0] = 1;
    uint16_t cur = 1;
    for (uint32_t t = 1; t < q_ - 1; ++t) {
      cur = uint16_t((uint32_t(cur) * g) % q_);
      exp_[t] = cur;
    }
  }

  for (uint32_t t = 0; t < q_ - 1; ++t) {
    exp_[t + q_ - 1] = exp_[t];
    log_[exp_[t]] = int32_t(t);
  }

  neg_t_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    uint32_t r = 0, mult = 1, x = a;
    for (int i = 0; i < m_; ++i) {
      int d = int(x % p_);
      x /= p_;
      r += uint32_t((p_ - d) % p_) * mult;
      mult *= p_;
    }
    neg_t_[a] = uint16_t(r);
  }

  if (q_ <= 256) {
    add_t_.assign(size_t(q_) * q_, 0);
    mul_t_.assign(size_t(q_) * q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b) {
        add_t_[size_t(a) * q_ + b] = add_slow(uint16_t(a), uint16_t(b));
        mul_t_[size_t(a) * q_ + b] = mul_slow(uint16_t(a), uint16_t(b));
      }
  }

  // exhaustive order scan; lands on x for extension fields by construction
  generator_ = 1;
  for (uint32_t a = 2; a < q_; ++a) {
    uint64_t order = (q_ - 1) / std::gcd(uint64_t(log_[a]), uint64_t(q_ - 1));
    if (order == q_ - 1) {
      generator_ = uint16_t(a);
      break;
    }
  }
  if (q_ == 2) generator_ = 1;
}

uint16_t Field::add_slow(uint16_t a, uint16_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t r = 0, mult = 1, x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    r += uint32_t((x % p_ + y % p_) % p_) * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return uint16_t(r);
}

uint16_t Field::mul_mod(uint16_t a, uint16_t b) const {
  // polynomial-basis product, reduction by modulus_; used while building tables
  if (m_ == 1) return uint16_t((uint32_t(a) * b) % q_);
  std::vector<int> av(m_), bv(m_), prod(2 * m_ - 1, 0);
  uint32_t x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    av[i] = int(x % p_);
    bv[i] = int(y % p_);
    x /= p_;
    y /= p_;
  }
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + av[i] * bv[j]) % p_;
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < m_; ++i) {
      int t = (prod[d - m_ + i] - c * modulus_[i]) % p_;
      prod[d - m_ + i] = (t + p_) % p_;
    }
  }
  uint32_t r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    r += uint32_t(prod[i]) * mult;
    mult *= p_;
  }
  return uint16_t(r);
}

uint16_t Field::mul_slow(uint16_t a, uint16_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[uint32_t(log_[a]) + uint32_t(log_[b])];
}

uint64_t Field::element_order(uint16_t a) const {
  // repeated multiplication; only used during construction of prime fields
  uint64_t order = 1;
  uint32_t cur = a;
  while (cur != 1) {
    cur = (cur * uint32_t(a)) % q_;
    ++order;
    if (order > q_) raise(errc::invalid_input, "order walk failed");
  }
  return order;
}

uint16_t Field::pow(uint16_t a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) raise(errc::division_by_zero, "negative power of zero");
    return 0;
  }
  int64_t L = int64_t(q_) - 1;
  if (L == 0) return 1;
  int64_t em = ((e % L) + L) % L;
  return exp_[(uint64_t(log_[a]) * uint64_t(em)) % uint64_t(L)];
}

uint16_t Field::frobenius(uint16_t a, unsigned i) const {
  if (a == 0) return 0;
  uint64_t L = q_ - 1;
  if (L == 1) return a;
  uint64_t pw = 1;
  for (unsigned t = 0; t < i; ++t) pw = (pw * uint64_t(p_)) % L;
  return exp_[(uint64_t(log_[a]) * pw) % L];
}

uint16_t Field::from_int(int64_t v) const {
  int64_t r = ((v % p_) + p_) % p_;
  return uint16_t(r);
}

std::vector<int> Field::coords(uint16_t a) const {
  std::vector<int> c(m_);
  uint32_t x = a;
  for (int i = 0; i < m_; ++i) {
    c[i] = int(x % p_);
    x /= p_;
  }
  return c;
}

uint16_t Field::from_coords(const std::vector<int>& c) const {
  if (c.size() > size_t(m_)) raise(errc::invalid_input, "too many coordinates");
  uint32_t r = 0, mult = 1;
  for (size_t i = 0; i < size_t(m_); ++i) {
    int d = i < c.size() ? c[i] : 0;
    if (d < 0 || d >= p_) raise(errc::invalid_input, "coordinate out of range");
    r += uint32_t(d) * mult;
    mult *= p_;
  }
  return uint16_t(r);
}

std::string Field::render_element(uint16_t a) const {
  if (m_ == 1) return std::to_string(a);
  std::string s = "[";
  auto c = coords(a);
  for (int i = 0; i < m_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ']';
  return s;
}

uint16_t Field::parse_element(const std::string& text) const {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    std::vector<int> c;
    while (true) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) raise(errc::parse_error, "expected digit in element at " + std::to_string(pos));
      c.push_back(std::stoi(text.substr(start, pos - start)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != ']') raise(errc::parse_error, "unterminated element list");
    ++pos;
    skip_ws();
    if (pos != text.size()) raise(errc::parse_error, "trailing characters in element");
    return from_coords(c);
  }
  size_t start = pos;
  while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (start == pos) raise(errc::parse_error, "expected field element");
  skip_ws();
  long v = std::stol(text.substr(start, pos - start));
  if (v >= p_ && m_ == 1) raise(errc::parse_error, "element exceeds field size");
  if (v >= p_) raise(errc::parse_error, "bare integer must lie in the prime subfield");
  return uint16_t(v);
}

std::string Field::modulus_string() const {
  if (m_ == 1) return "p=" + std::to_string(p_);
  std::string s;
  for (int d = m_; d >= 0; --d) {
    int c = d == m_ ? 1 : modulus_[d];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (d == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += 'x';
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s.empty() ? "0" : s;
}

std::vector<uint16_t> Field::embedding(const Field& small, const Field& big) {
  if (small.characteristic() != big.characteristic())
    raise(errc::invalid_input, "embedding requires equal characteristic");
  if (big.extension_degree() % small.extension_degree() != 0)
    raise(errc::invalid_input, "no subfield of the requested degree");
  std::vector<uint16_t> table(small.size(), 0);
  if (small.extension_degree() == 1) {
    for (uint32_t c = 0; c < small.size(); ++c) table[c] = uint16_t(c);
    return table;
  }
  // smallest root of the small modulus in the big field
  uint16_t beta = 0;
  bool found = false;
  for (uint32_t b = 0; b < big.size() && !found; ++b) {
    uint16_t acc = 0, pw = 1;
    for (size_t i = 0; i < small.modulus().size(); ++i) {
      acc = big.add(acc, big.mul(big.from_int(small.modulus()[i]), pw));
      pw = big.mul(pw, uint16_t(b));
    }
    if (acc == 0) {
      beta = uint16_t(b);
      found = true;
    }
  }
  if (!found) raise(errc::invalid_input, "modulus has no root in target field");
  for (uint32_t a = 0; a < small.size(); ++a) {
    auto c = small.coords(uint16_t(a));
    uint16_t acc = 0, pw = 1;
    for (int i = 0; i < small.extension_degree(); ++i) {
      acc = big.add(acc, big.mul(big.from_int(c[i]), pw));
      pw = big.mul(pw, beta);
    }
    table[a] = acc;
  }
  return table;
}

FieldPtr Field::get(int p, int m) {
  if (!is_prime(p)) raise(errc::invalid_input, "characteristic must be prime");
  if (m < 1 || m > 15) raise(errc::invalid_input, "extension degree out of range");
  static std::mutex mx;
  static std::map<std::pair<int, int>, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mx);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  FieldPtr f(new Field(p, m));
  registry.emplace(key, f);
  return f;
}

FieldPtr Field::get_order(uint32_t q) {
  if (q < 2) raise(errc::invalid_input, "field order must be at least 2");
  int p = 2;
  while (q % uint32_t(p) != 0) {
    ++p;
    if (uint32_t(p) > q) raise(errc::invalid_input, "not a prime power");
  }
  int m = 0;
  uint32_t t = q;
  while (t > 1) {
    if (t % uint32_t(p) != 0) raise(errc::invalid_input, "not a prime power");
    t /= uint32_t(p);
    ++m;
  }
  return get(p, m);
}

int lucas_binomial(uint64_t d, uint64_t i, int p) {
  auto small_binom = [p](int a, int b) -> int {
    if (b > a) return 0;
    // multiplicative formula mod p, all factors invertible since b < p
    int64_t num = 1;
    for (int t = 1; t <= b; ++t) {
      int64_t factor = (a - b + t) % p;
      int64_t invt = 1, base = t % p, e = p - 2;
      while (e) {
        if (e & 1) invt = invt * base % p;
        base = base * base % p;
        e >>= 1;
      }
      num = num * factor % p * invt % p;
    }
    return int(num);
  };
  int64_t result = 1;
  while (d || i) {
    int dd = int(d % uint64_t(p)), ii = int(i % uint64_t(p));
    result = result * small_binom(dd, ii) % p;
    if (result == 0) return 0;
    d /= uint64_t(p);
    i /= uint64_t(p);
  }
  return int(result);
}

int digit_sum(uint64_t j, int base) {
  int s = 0;
  while (j) {
    s += int(j % uint64_t(base));
    j /= uint64_t(base);
  }
  return s;
}

std::vector<int> base_digits(uint64_t j, int base) {
  std::vector<int> d;
  while (j) {
    d.push_back(int(j % uint64_t(base)));
    j /= uint64_t(base);
  }
  return d;
}

} // namespace ffzeta
