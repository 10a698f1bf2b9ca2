#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ffzeta/curve.hpp"
#include "ffzeta/field.hpp"
#include "ffzeta/poly.hpp"

namespace ffzeta {

// One of the supported coefficient rings: F_r[T] for r in {2,3,4,5,8,9}, the
// two named Artin-Schreier rings, or an experimental odd-weight curve ring
// given by its defining h(T2).
struct RingSelector {
  enum class Kind { fqt, curve };

  Kind kind = Kind::fqt;
  FieldPtr field;      // fqt only
  CurveSpecPtr curve;  // curve only
  std::string id;

  // "fqt:R" | "genus1" | "genus2" | "curve:H" with H a poly in T2 over F_2
  static RingSelector parse(const std::string& text);

  uint32_t r() const { return kind == Kind::fqt ? field->size() : 2; }
  int characteristic() const { return kind == Kind::fqt ? field->characteristic() : 2; }
  int genus() const { return kind == Kind::fqt ? 0 : curve->genus; }
  bool experimental() const { return kind == Kind::curve && curve->experimental; }
  // field modulus / curve relation, for report metadata
  std::string modulus_text() const;
};

struct Place {
  bool at_infty = true;
  std::optional<BasePolynomial> v; // monic irreducible, finite places only

  static Place infty() { return Place{}; }
  static Place finite(BasePolynomial place);
  // "infty" | "v=POLY" with POLY over the ring's base field
  static Place parse(const std::string& text, const FieldPtr& field);

  std::string to_string() const;
  friend bool operator==(const Place& a, const Place& b);
};

} // namespace ffzeta
