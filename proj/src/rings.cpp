#include "ffzeta/rings.hpp"

#include "ffzeta/errors.hpp"

namespace ffzeta {

RingSelector RingSelector::parse(const std::string& text) {
  RingSelector sel;
  if (text.rfind("fqt:", 0) == 0) {
    std::string num = text.substr(4);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      raise(errc::config_error, "ring '" + text + "': expected fqt:R with numeric R");
    long r = std::stol(num);
    if (r != 2 && r != 3 && r != 4 && r != 5 && r != 8 && r != 9)
      raise(errc::config_error,
            "ring '" + text + "': supported sizes are 2, 3, 4, 5, 8, 9");
    sel.kind = Kind::fqt;
    sel.field = Field::get_order(uint32_t(r));
    sel.id = "fqt:" + num;
    return sel;
  }
  if (text == "genus1" || text == "genus2") {
    sel.kind = Kind::curve;
    sel.curve = text == "genus1" ? CurveSpec::genus1() : CurveSpec::genus2();
    sel.id = text;
    return sel;
  }
  if (text.rfind("curve:", 0) == 0) {
    FieldPtr f2 = Field::get(2, 1);
    BasePolynomial h = BasePolynomial::parse(f2, text.substr(6), "T2");
    sel.kind = Kind::curve;
    sel.curve = CurveSpec::make(h);
    sel.id = sel.curve->label;
    return sel;
  }
  raise(errc::config_error,
        "unknown ring '" + text + "': expected fqt:R, genus1, genus2, or curve:H");
}

std::string RingSelector::modulus_text() const {
  if (kind == Kind::fqt) return field->modulus_string();
  return curve->relation.to_string("T2");
}

Place Place::finite(BasePolynomial place) {
  if (place.degree() < 1) raise(errc::invalid_input, "place must have positive degree");
  if (!place.is_monic()) raise(errc::invalid_input, "place must be monic");
  if (!is_irreducible(place)) raise(errc::not_irreducible, "place must be irreducible");
  Place p;
  p.at_infty = false;
  p.v = std::move(place);
  return p;
}

Place Place::parse(const std::string& text, const FieldPtr& field) {
  if (text == "infty") return infty();
  if (text.rfind("v=", 0) == 0)
    return finite(BasePolynomial::parse(field, text.substr(2)));
  raise(errc::config_error, "unknown place '" + text + "': expected infty or v=POLY");
}

std::string Place::to_string() const {
  return at_infty ? "infty" : "v=" + v->to_string();
}

bool operator==(const Place& a, const Place& b) {
  if (a.at_infty != b.at_infty) return false;
  if (a.at_infty) return true;
  return *a.v == *b.v;
}

} // namespace ffzeta
