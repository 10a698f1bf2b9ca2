#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ffzeta/errors.hpp"

namespace ffzeta {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A small finite field F_{p^m}. Elements are codes in [0, q): the coordinate
// vector (c_0, ..., c_{m-1}) over F_p in the polynomial basis, packed as
// sum c_i p^i. All arithmetic is table-driven; instances are immutable and
// shared through the registry in get().
class Field {
public:
  // Canonical instance for p^m. The modulus for m > 1 is the first monic
  // irreducible polynomial of degree m (coefficient codes enumerated with the
  // constant term varying fastest) whose residue class of x generates the
  // multiplicative group.
  static FieldPtr get(int p, int m = 1);
  static FieldPtr get_order(uint32_t q); // factors q as p^m

  int characteristic() const { return p_; }
  int extension_degree() const { return m_; }
  uint32_t size() const { return q_; }
  bool prime_field() const { return m_ == 1; }

  // Monic modulus coefficients over F_p, ascending, length m+1. Empty for m == 1.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const; // "x^2+x+1"; "x" placeholder spelled with 'x'
  uint16_t generator() const { return generator_; }

  uint16_t add(uint16_t a, uint16_t b) const {
    if (add_t_.empty()) return add_slow(a, b);
    return add_t_[size_t(a) * q_ + b];
  }
  uint16_t neg(uint16_t a) const { return neg_t_[a]; }
  uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
  uint16_t mul(uint16_t a, uint16_t b) const {
    if (mul_t_.empty()) return mul_slow(a, b);
    return mul_t_[size_t(a) * q_ + b];
  }
  uint16_t inv(uint16_t a) const {
    if (a == 0) raise(errc::division_by_zero, "inverse of zero field element");
    return exp_[q_ - 1 - log_[a]];
  }
  // a^e for any integer e (negative allowed, needs a != 0 then).
  uint16_t pow(uint16_t a, int64_t e) const;
  // a^{p^i}
  uint16_t frobenius(uint16_t a, unsigned i = 1) const;

  uint16_t from_int(int64_t v) const; // image of an integer in the prime subfield
  std::vector<int> coords(uint16_t a) const;
  uint16_t from_coords(const std::vector<int>& c) const;

  // "3" for prime fields, "[c0,c1]" otherwise.
  std::string render_element(uint16_t a) const;
  uint16_t parse_element(const std::string& text) const;

  // Row of the multiplication table for a fixed factor, or nullptr when the
  // table is not materialized (q > 256).
  const uint16_t* mul_row(uint16_t a) const {
    return mul_t_.empty() ? nullptr : mul_t_.data() + size_t(a) * q_;
  }
  int32_t dlog(uint16_t a) const { return log_[a]; } // -1 for zero
  uint16_t exp(uint64_t e) const { return exp_[e % (q_ - 1)]; }

  // Embedding table small -> big (size small.q); error when no embedding exists.
  static std::vector<uint16_t> embedding(const Field& small, const Field& big);

  bool same_as(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

private:
  Field(int p, int m);
  uint16_t add_slow(uint16_t a, uint16_t b) const;
  uint16_t mul_slow(uint16_t a, uint16_t b) const;
  uint16_t mul_mod(uint16_t a, uint16_t b) const; // polynomial-basis product, build time
  uint64_t element_order(uint16_t a) const;

  int p_, m_;
  uint32_t q_;
  std::vector<int> modulus_;
  uint16_t generator_ = 0;
  std::vector<uint16_t> exp_;  // size 2(q-1)
  std::vector<int32_t> log_;   // size q, log_[0] = -1
  std::vector<uint16_t> neg_t_;
  std::vector<uint16_t> add_t_; // q*q when q <= 256
  std::vector<uint16_t> mul_t_; // q*q when q <= 256
};

// Value-typed element for desk use; hot loops work on raw codes instead.
struct FieldElement {
  FieldPtr field;
  uint16_t code = 0;

  FieldElement() = default;
  FieldElement(FieldPtr f, uint16_t c) : field(std::move(f)), code(c) {}

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field, a.field->add(a.code, b.code)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field, a.field->sub(a.code, b.code)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field, a.field->mul(a.code, b.code)};
  }
  FieldElement inv() const { return {field, field->inv(code)}; }
  FieldElement pow(int64_t e) const { return {field, field->pow(code, e)}; }
  FieldElement frobenius(unsigned i = 1) const { return {field, field->frobenius(code, i)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field->same_as(*b.field) && a.code == b.code;
  }

private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field || !a.field->same_as(*b.field))
      raise(errc::spec_mismatch, "field elements from different fields");
  }
};

// C(d, i) mod p through base-p digits; 0 <= result < p.
int lucas_binomial(uint64_t d, uint64_t i, int p);
// Sum of base-`base` digits of j.
int digit_sum(uint64_t j, int base);
std::vector<int> base_digits(uint64_t j, int base);

} // namespace ffzeta
