#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffzeta/poly.hpp"

namespace ffzeta {

// Tame Dirichlet character modulo an irreducible f over F_r: residues prime to
// f map through a discrete log to powers of a fixed generator of the value
// field F_{r^{deg f}}. Index k = 0 is the principal character.
class DirichletCharacter {
public:
  static DirichletCharacter build(FieldPtr base, BasePolynomial f, uint64_t k);
  // "r=2,f=T^2+T+1,k=1", the same shape id() prints
  static DirichletCharacter parse_spec(const std::string& text);

  const FieldPtr& base_field() const { return base_; }
  const FieldPtr& value_field() const { return value_; }
  const BasePolynomial& modulus() const { return f_; }
  const BasePolynomial& group_generator() const { return gen_; }
  uint64_t index() const { return k_; }
  uint64_t group_order() const { return group_order_; } // r^{deg f} - 1
  uint64_t order() const;                               // order of the character
  // Size of the subfield generated by the character values; the exponent
  // multiplier whose powers preserve the character.
  uint64_t q_chi() const;
  bool is_principal() const { return k_ == 0; }

  // nullopt marks n divisible by f (struck term)
  std::optional<uint16_t> value(const BasePolynomial& n) const;
  // residue given as a code (coefficients of n mod f packed base r)
  std::optional<uint16_t> value_at_residue(uint32_t code) const;
  uint32_t residue_code(const BasePolynomial& n) const;

  // embedding table of the base field into the value field
  const std::vector<uint16_t>& base_embedding() const { return embed_; }

  std::string id() const;

private:
  DirichletCharacter() = default;

  FieldPtr base_, value_;
  BasePolynomial f_, gen_;
  uint64_t k_ = 0, group_order_ = 0;
  std::vector<int64_t> dlog_; // by residue code; -1 for the zero residue
  std::vector<uint16_t> embed_;
};

} // namespace ffzeta
