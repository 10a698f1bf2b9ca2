#include "ffzeta/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "ffzeta/errors.hpp"
#include "ffzeta/rings.hpp"
#include "ffzeta/version.hpp"

namespace ffzeta {

using nlohmann::json;

void atomic_write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(errc::io_error, "cannot open " + tmp + " for writing");
    out.write(content.data(), std::streamsize(content.size()));
    out.flush();
    if (!out) raise(errc::io_error, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    raise(errc::io_error, "cannot move " + tmp + " to " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) raise(errc::io_error, "read failed for " + path);
  return buf.str();
}

std::string iso_timestamp_from_env() {
  const char* v = std::getenv("SOURCE_DATE_EPOCH");
  if (!v || !*v) return "";
  char* end = nullptr;
  long long secs = std::strtoll(v, &end, 10);
  if (!end || *end) return "";
  std::time_t t = std::time_t(secs);
  std::tm tm{};
  if (!gmtime_r(&t, &tm)) return "";
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json special_common(const std::string& ring_id, const std::string& char_id, uint64_t j,
                    json coeffs, int d_max_used, bool tail_certified,
                    const std::string& modulus) {
  return json{{"ring", ring_id},       {"char", char_id},
              {"j", j},                {"coeffs", std::move(coeffs)},
              {"d_max_used", d_max_used}, {"tail_certified", tail_certified},
              {"modulus", modulus},    {"version", version_string}};
}

} // namespace

json special_to_json(const SpecialPolynomial<BasePolynomial>& sp) {
  json coeffs = json::array();
  for (const auto& c : sp.coeffs) coeffs.push_back(c.to_string());
  return special_common(sp.ring_id, sp.char_id, sp.j, std::move(coeffs), sp.d_max_used,
                        sp.tail_certified, sp.coeffs.at(0).field()->modulus_string());
}

json special_to_json(const SpecialPolynomial<CurveElement>& sp) {
  json coeffs = json::array();
  for (const auto& c : sp.coeffs) coeffs.push_back(c.to_string());
  return special_common(sp.ring_id, sp.char_id, sp.j, std::move(coeffs), sp.d_max_used,
                        sp.tail_certified,
                        sp.coeffs.at(0).spec()->relation.to_string("T2"));
}

SpecialPolynomial<BasePolynomial> special_fqt_from_json(const json& js) {
  SpecialPolynomial<BasePolynomial> sp;
  sp.ring_id = js.at("ring").get<std::string>();
  sp.char_id = js.at("char").get<std::string>();
  sp.j = js.at("j").get<uint64_t>();
  sp.d_max_used = js.at("d_max_used").get<int>();
  sp.tail_certified = js.at("tail_certified").get<bool>();
  RingSelector ring = RingSelector::parse(sp.ring_id);
  if (ring.kind != RingSelector::Kind::fqt)
    raise(errc::parse_error, "ring " + sp.ring_id + " does not have F_r[T] coefficients");
  FieldPtr dom = ring.field;
  if (sp.char_id != "trivial")
    dom = DirichletCharacter::parse_spec(sp.char_id).value_field();
  for (const auto& s : js.at("coeffs"))
    sp.coeffs.push_back(BasePolynomial::parse(dom, s.get<std::string>()));
  return sp;
}

SpecialPolynomial<CurveElement> special_curve_from_json(const json& js) {
  SpecialPolynomial<CurveElement> sp;
  sp.ring_id = js.at("ring").get<std::string>();
  sp.char_id = js.at("char").get<std::string>();
  sp.j = js.at("j").get<uint64_t>();
  sp.d_max_used = js.at("d_max_used").get<int>();
  sp.tail_certified = js.at("tail_certified").get<bool>();
  RingSelector ring = RingSelector::parse(sp.ring_id);
  if (ring.kind != RingSelector::Kind::curve)
    raise(errc::parse_error, "ring " + sp.ring_id + " is not a curve ring");
  for (const auto& s : js.at("coeffs"))
    sp.coeffs.push_back(CurveElement::parse(ring.curve, s.get<std::string>()));
  return sp;
}

json np_to_json(const NewtonPolygon& np) {
  json points = json::array();
  for (const auto& [d, v] : np.points) points.push_back(json::array({d, v}));
  json segments = json::array();
  for (const auto& seg : np.segments)
    segments.push_back(
        json{{"num", seg.slope.num}, {"den", seg.slope.den}, {"len", seg.length}});
  return json{{"points", points}, {"segments", segments}, {"slopes", np_slopes_string(np)}};
}

NewtonPolygon np_from_json(const json& js) {
  std::vector<std::pair<int, int64_t>> pts;
  for (const auto& p : js.at("points"))
    pts.emplace_back(p.at(0).get<int>(), p.at(1).get<int64_t>());
  return NewtonPolygon::from_points(std::move(pts));
}

json tz_report_to_json(const TrivialZeroReport& rep) {
  return json{{"ring", rep.ring_id}, {"j", rep.j},
              {"v0", rep.v0},        {"v1", rep.v1},
              {"nonclassical", rep.nonclassical}, {"l_p", rep.l_p},
              {"l_r", rep.l_r}};
}

TrivialZeroReport tz_report_from_json(const json& js) {
  TrivialZeroReport rep;
  rep.ring_id = js.at("ring").get<std::string>();
  rep.j = js.at("j").get<uint64_t>();
  rep.v0 = js.at("v0").get<int>();
  rep.v1 = js.at("v1").get<int>();
  rep.nonclassical = js.at("nonclassical").get<bool>();
  rep.l_p = js.at("l_p").get<int>();
  rep.l_r = js.at("l_r").get<int>();
  return rep;
}

json vadic_to_json(const VadicSpecial& vs) {
  json q = json::array();
  for (const auto& c : vs.Q) q.push_back(c.to_string());
  return json{{"ring", vs.ring_id}, {"char", vs.char_id},
              {"v", vs.v.to_string()}, {"d_v", vs.d_v},
              {"j", vs.j},           {"Q", std::move(q)},
              {"z", special_to_json(vs.z)}, {"version", version_string}};
}

VadicSpecial vadic_from_json(const json& js) {
  VadicSpecial vs;
  vs.ring_id = js.at("ring").get<std::string>();
  vs.char_id = js.at("char").get<std::string>();
  vs.d_v = js.at("d_v").get<int>();
  vs.j = js.at("j").get<uint64_t>();
  RingSelector ring = RingSelector::parse(vs.ring_id);
  if (ring.kind != RingSelector::Kind::fqt)
    raise(errc::parse_error, "v-adic data is only defined over F_r[T]");
  vs.v = BasePolynomial::parse(ring.field, js.at("v").get<std::string>());
  FieldPtr dom = ring.field;
  if (vs.char_id != "trivial")
    dom = DirichletCharacter::parse_spec(vs.char_id).value_field();
  for (const auto& s : js.at("Q"))
    vs.Q.push_back(BasePolynomial::parse(dom, s.get<std::string>()));
  vs.z = special_fqt_from_json(js.at("z"));
  return vs;
}

json scan_to_json(const ScanReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back(json{{"report", tz_report_to_json(e.report)},
                           {"np", np_to_json(e.np)},
                           {"frobenius_checked", e.frobenius_checked}});
  json violations = json::array();
  for (const auto& [a, b] : rep.closure_violations) violations.push_back(json::array({a, b}));
  json meta{{"ring_modulus", rep.ring_modulus},
            {"version", rep.version},
            {"timestamp", rep.timestamp},
            {"d_max_policy", rep.d_max_policy},
            {"experimental_ring", rep.experimental_ring}};
  return json{{"ring", rep.ring_id},
              {"place", rep.place},
              {"j_max", rep.j_max},
              {"entries", std::move(entries)},
              {"nonclassical_set", rep.nonclassical_set},
              {"max_lp_nonclassical",
               rep.max_lp_nonclassical ? json(*rep.max_lp_nonclassical) : json(nullptr)},
              {"closure_violations", std::move(violations)},
              {"metadata", std::move(meta)}};
}

ScanReport scan_from_json(const json& js) {
  ScanReport rep;
  rep.ring_id = js.at("ring").get<std::string>();
  rep.place = js.at("place").get<std::string>();
  rep.j_max = js.at("j_max").get<uint64_t>();
  for (const auto& e : js.at("entries")) {
    ScanEntry entry;
    entry.report = tz_report_from_json(e.at("report"));
    entry.np = np_from_json(e.at("np"));
    entry.frobenius_checked = e.at("frobenius_checked").get<bool>();
    rep.entries.push_back(std::move(entry));
  }
  rep.nonclassical_set = js.at("nonclassical_set").get<std::vector<uint64_t>>();
  if (!js.at("max_lp_nonclassical").is_null())
    rep.max_lp_nonclassical = js.at("max_lp_nonclassical").get<int>();
  for (const auto& v : js.at("closure_violations"))
    rep.closure_violations.emplace_back(v.at(0).get<uint64_t>(), v.at(1).get<uint64_t>());
  const json& meta = js.at("metadata");
  rep.ring_modulus = meta.at("ring_modulus").get<std::string>();
  rep.version = meta.at("version").get<std::string>();
  rep.timestamp = meta.at("timestamp").get<std::string>();
  rep.d_max_policy = meta.at("d_max_policy").get<std::string>();
  rep.experimental_ring = meta.at("experimental_ring").get<bool>();
  return rep;
}

ScanReport load_scan_report(const std::string& path) {
  json js;
  try {
    js = json::parse(read_file(path));
  } catch (const json::exception& e) {
    raise(errc::parse_error, path + ": " + e.what());
  }
  try {
    return scan_from_json(js);
  } catch (const json::exception& e) {
    raise(errc::parse_error, path + ": " + e.what());
  }
}

json piseries_to_json(const PiSeries& s) {
  return json{{"p", s.field->characteristic()},
              {"m", s.field->extension_degree()},
              {"precision", s.precision},
              {"coeffs", s.c}};
}

PiSeries piseries_from_json(const json& js) {
  PiSeries s;
  s.field = Field::get(js.at("p").get<int>(), js.at("m").get<int>());
  s.precision = js.at("precision").get<int>();
  s.c = js.at("coeffs").get<std::vector<uint16_t>>();
  if (int(s.c.size()) != s.precision)
    raise(errc::parse_error, "pi-series coefficient count does not match precision");
  return s;
}

json profile_to_json(const std::string& ring_id, const std::vector<DegreeProfileRow>& rows) {
  json out = json::array();
  for (const auto& row : rows)
    out.push_back(json{{"j", row.j},
                       {"deg_u", row.deg_u},
                       {"l_r", row.l_r},
                       {"envelope_margin", row.envelope_margin}});
  return json{{"ring", ring_id}, {"rows", std::move(out)}, {"version", version_string}};
}

std::vector<DegreeProfileRow> profile_rows_from_json(const json& js) {
  std::vector<DegreeProfileRow> rows;
  for (const auto& r : js.at("rows")) {
    DegreeProfileRow row;
    row.j = r.at("j").get<uint64_t>();
    row.deg_u = r.at("deg_u").get<int>();
    row.l_r = r.at("l_r").get<int>();
    row.envelope_margin = r.at("envelope_margin").get<int>();
    rows.push_back(row);
  }
  return rows;
}

json character_to_json(const DirichletCharacter& chi) {
  return json{{"spec", chi.id()},
              {"r", chi.base_field()->size()},
              {"f", chi.modulus().to_string()},
              {"k", chi.index()},
              {"value_field_modulus", chi.value_field()->modulus_string()},
              {"group_generator", chi.group_generator().to_string()},
              {"group_order", chi.group_order()},
              {"order", chi.order()},
              {"q_chi", chi.q_chi()},
              {"principal", chi.is_principal()},
              {"version", version_string}};
}

json continuity_to_json(const ContinuityResult& res, uint64_t j1, uint64_t j2, int N) {
  return json{{"j1", j1},
              {"j2", j2},
              {"N", N},
              {"holds", res.holds},
              {"witness_degree", res.holds ? json(nullptr) : json(res.witness_degree)}};
}

json unit_roots_to_json(const UnitRootReport& rep) {
  json roots = json::array();
  for (const auto& [code, mult] : rep.multiplicities)
    roots.push_back(json{{"element", rep.field->render_element(code)}, {"multiplicity", mult}});
  return json{{"field_order", rep.field->size()}, {"roots", std::move(roots)}};
}

json hayes_to_json(const std::vector<HayesShiftRow>& rows) {
  json out = json::array();
  for (const auto& row : rows)
    out.push_back(json{{"j", row.j},
                       {"l_p_j", row.lp_j},
                       {"l_p_next", row.lp_next},
                       {"nonclassical_shifted", row.nonclassical_shifted}});
  return out;
}

json digit_closure_to_json(const DigitClosureAnalysis& a) {
  json hist_nc = json::array(), hist_all = json::array();
  for (const auto& [lp, count] : a.lp_histogram_nonclassical)
    hist_nc.push_back(json::array({lp, count}));
  for (const auto& [lp, count] : a.lp_histogram_all) hist_all.push_back(json::array({lp, count}));
  return json{{"bounded_evidence", a.bounded_evidence ? json(*a.bounded_evidence) : json(nullptr)},
              {"lp_histogram_nonclassical", std::move(hist_nc)},
              {"lp_histogram_all", std::move(hist_all)},
              {"closure_ok", a.closure_ok}};
}

std::string csv_column_header() { return "j,l_p,l_r,v0,v1,nonclassical,np_slopes"; }

std::string tz_row_csv(const TrivialZeroReport& rep, const NewtonPolygon& np) {
  return std::to_string(rep.j) + "," + std::to_string(rep.l_p) + "," + std::to_string(rep.l_r) +
         "," + std::to_string(rep.v0) + "," + std::to_string(rep.v1) + "," +
         (rep.nonclassical ? "true" : "false") + "," + np_slopes_string(np);
}

std::string scan_to_csv(const ScanReport& rep) {
  std::string out;
  out += "# ring," + rep.ring_id + "\n";
  out += "# place," + rep.place + "\n";
  out += "# j_max," + std::to_string(rep.j_max) + "\n";
  out += "# modulus," + rep.ring_modulus + "\n";
  out += "# version," + rep.version + "\n";
  out += "# d_max_policy," + rep.d_max_policy + "\n";
  if (!rep.timestamp.empty()) out += "# timestamp," + rep.timestamp + "\n";
  if (rep.experimental_ring) out += "# experimental,true\n";
  std::string nc;
  for (size_t i = 0; i < rep.nonclassical_set.size(); ++i)
    nc += (i ? "|" : "") + std::to_string(rep.nonclassical_set[i]);
  out += "# nonclassical_set," + nc + "\n";
  out += "# max_lp_nonclassical," +
         (rep.max_lp_nonclassical ? std::to_string(*rep.max_lp_nonclassical)
                                  : std::string("none")) +
         "\n";
  std::string cv;
  for (size_t i = 0; i < rep.closure_violations.size(); ++i)
    cv += (i ? "|" : "") + std::to_string(rep.closure_violations[i].first) + "->" +
          std::to_string(rep.closure_violations[i].second);
  out += "# closure_violations," + (cv.empty() ? std::string("none") : cv) + "\n";
  out += csv_column_header() + "\n";
  for (const auto& e : rep.entries) out += tz_row_csv(e.report, e.np) + "\n";
  return out;
}

std::string profile_to_csv(const std::vector<DegreeProfileRow>& rows) {
  std::string out = "j,deg_u,l_r,envelope_margin\n";
  for (const auto& row : rows)
    out += std::to_string(row.j) + "," + std::to_string(row.deg_u) + "," +
           std::to_string(row.l_r) + "," + std::to_string(row.envelope_margin) + "\n";
  return out;
}

} // namespace ffzeta
