#include "ffzeta/driver.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffzeta/character.hpp"
#include "ffzeta/errors.hpp"
#include "ffzeta/rings.hpp"
#include "ffzeta/scan.hpp"
#include "ffzeta/serialize.hpp"
#include "ffzeta/special.hpp"
#include "ffzeta/vadic.hpp"
#include "ffzeta/version.hpp"
#include "ffzeta/zeros.hpp"

namespace ffzeta {

using nlohmann::json;

namespace {

int exit_code_for(errc c) {
  switch (c) {
  case errc::config_error:
  case errc::parse_error:
  case errc::invalid_input:
  case errc::invalid_index:
  case errc::not_irreducible:
    return 2;
  default:
    return 1;
  }
}

const char* hint_for(errc c) {
  switch (c) {
  case errc::truncation_insufficient:
    return "raise --dmax above the failing degree";
  case errc::spec_mismatch:
    return "an internal cross-check failed; rerun with --workers 1 and report the invocation";
  case errc::not_a_trivial_zero:
    return "trivial zeros need the trivial character and j >= 1 with (r-1) | j";
  case errc::invalid_pair:
    return "continuity needs j1 = j2 mod (r^{d_v}-1) p^N";
  case errc::precision_exceeds_digits:
    return "supply more base-p digits for y or lower --N";
  case errc::unsupported_place_degree:
    return "order analysis supports degree-1 places only";
  case errc::ramified_place:
    return "pick a place v that does not divide the character modulus f";
  case errc::not_irreducible:
    return "the place polynomial must be monic irreducible; try T or T+1";
  case errc::io_error:
    return "check the path and directory permissions";
  case errc::parse_error:
  case errc::invalid_input:
  case errc::invalid_index:
  case errc::config_error:
    return "see --help for the accepted forms";
  default:
    return "";
  }
}

struct Params {
  std::string ring = "fqt:2";
  std::string char_spec;
  std::string place = "infty";
  std::string v_text;
  uint32_t r = 2;
  uint64_t j = 0;
  uint64_t jlo = 1;
  uint64_t jhi = 1;
  uint64_t jmax = 0; // 0 = per-ring default
  int dmax = -1;     // negative = policy default
  int N = 1;
  int L = 0; // unit-root extension degree; 0 skips the analysis
  bool order = false;
  std::vector<uint64_t> congr; // j2 N
  int d = 0;
  std::string y_csv;
  uint64_t yint = 0;
  int ydigits = 0;
  std::string out;
  std::string format = "json";
  int workers = 1;
  std::string resume;
  std::string config_path;
};

struct Binding {
  CLI::Option* opt = nullptr;
  std::function<void(const json&)> apply;
};

struct Cmd {
  CLI::App* app = nullptr;
  std::map<std::string, Binding> bindings;

  bool given(const std::string& key, const json& cfg) const {
    auto it = bindings.find(key);
    if (it != bindings.end() && it->second.opt && it->second.opt->count() > 0) return true;
    return cfg.contains(key);
  }
};

template <class T> void bind_key(Cmd& cmd, CLI::Option* opt, const std::string& key, T& target) {
  cmd.bindings[key] = Binding{opt, [&target, key](const json& v) {
                                try {
                                  target = v.get<T>();
                                } catch (const json::exception&) {
                                  raise(errc::config_error,
                                        "config key '" + key + "' has the wrong type");
                                }
                              }};
}

std::string resolve_out(const std::string& out) {
  if (out.empty() || out.front() == '/') return out;
  const char* dir = std::getenv("FFZETA_OUT_DIR");
  if (!dir || !*dir) return out;
  std::string prefix = dir;
  if (prefix.back() != '/') prefix += '/';
  return prefix + out;
}

void emit(const Params& P, const std::string& content) {
  if (P.out.empty()) {
    std::cout << content;
    return;
  }
  atomic_write_file(resolve_out(P.out), content);
}

void require_format(const Params& P, bool csv_ok) {
  if (P.format == "json") return;
  if (P.format == "csv" && csv_ok) return;
  raise(errc::config_error, "--format " + P.format + " is not supported here");
}

std::optional<int> dmax_opt(const Params& P) {
  if (P.dmax < 0) return std::nullopt;
  return P.dmax;
}

std::optional<DirichletCharacter> parse_char(const Params& P) {
  if (P.char_spec.empty()) return std::nullopt;
  return DirichletCharacter::parse_spec(P.char_spec);
}

// --- subcommand bodies -----------------------------------------------------

int cmd_special(const Params& P) {
  require_format(P, false);
  auto chi = parse_char(P);
  json js;
  if (chi) {
    RingSelector ring = RingSelector::parse(P.ring);
    if (ring.kind != RingSelector::Kind::fqt || !ring.field->same_as(*chi->base_field()))
      raise(errc::config_error,
            "--char is defined over F_" + std::to_string(chi->base_field()->size()) +
                "[T], which does not match --ring " + P.ring);
    js = special_to_json(special_lseries(*chi, P.j, dmax_opt(P)));
  } else {
    RingSelector ring = RingSelector::parse(P.ring);
    if (ring.kind == RingSelector::Kind::fqt)
      js = special_to_json(special_zeta_fqt(ring.field, P.j, dmax_opt(P)));
    else
      js = special_to_json(special_zeta_curve(ring.curve, P.j, dmax_opt(P)));
  }
  emit(P, js.dump(2) + "\n");
  return 0;
}

int cmd_trivzero(const Params& P) {
  require_format(P, true);
  RingSelector ring = RingSelector::parse(P.ring);
  TrivialZeroReport rep;
  NewtonPolygon np;
  json extra;
  if (ring.kind == RingSelector::Kind::fqt) {
    auto z = special_zeta_fqt(ring.field, P.j, dmax_opt(P));
    rep = trivial_zero_report(z);
    np = newton_polygon_infty(z.coeffs);
    if (P.L > 0) extra = unit_roots_to_json(unit_root_multiplicities(z.coeffs, P.L));
  } else {
    if (P.L > 0)
      raise(errc::config_error, "--L unit-root analysis needs F_r[T] coefficients");
    auto z = special_zeta_curve(ring.curve, P.j, dmax_opt(P));
    rep = trivial_zero_report(z);
    np = newton_polygon_infty(z.coeffs);
  }
  if (P.format == "csv") {
    emit(P, csv_column_header() + "\n" + tz_row_csv(rep, np) + "\n");
    return 0;
  }
  json js{{"report", tz_report_to_json(rep)},
          {"np", np_to_json(np)},
          {"version", version_string}};
  if (!extra.is_null()) js["unit_roots"] = std::move(extra);
  emit(P, js.dump(2) + "\n");
  return 0;
}

int cmd_newton(const Params& P) {
  require_format(P, false);
  RingSelector ring = RingSelector::parse(P.ring);
  auto chi = parse_char(P);
  if (chi && (ring.kind != RingSelector::Kind::fqt || !ring.field->same_as(*chi->base_field())))
    raise(errc::config_error, "--char does not match --ring " + P.ring);
  NewtonPolygon np;
  std::string char_id = chi ? chi->id() : "trivial";
  if (ring.kind == RingSelector::Kind::curve) {
    if (P.place != "infty")
      raise(errc::config_error, "finite places are only available over F_r[T]");
    auto z = special_zeta_curve(ring.curve, P.j, dmax_opt(P));
    np = newton_polygon_infty(z.coeffs);
  } else {
    auto z = chi ? special_lseries(*chi, P.j, dmax_opt(P))
                 : special_zeta_fqt(ring.field, P.j, dmax_opt(P));
    Place place = Place::parse(P.place, ring.field);
    if (place.at_infty) {
      np = newton_polygon_infty(z.coeffs);
    } else {
      BasePolynomial v = chi ? place.v->map_coeffs(chi->value_field(), chi->base_embedding())
                             : *place.v;
      np = newton_polygon_at(z.coeffs, v);
    }
  }
  SimplicityResult simp = rh_simplicity_check(np);
  json js{{"ring", ring.id},
          {"char", char_id},
          {"j", P.j},
          {"place", P.place},
          {"np", np_to_json(np)},
          {"all_segments_simple", simp.holds},
          {"version", version_string}};
  emit(P, js.dump(2) + "\n");
  return 0;
}

int cmd_vadic(const Params& P) {
  require_format(P, false);
  RingSelector ring = RingSelector::parse("fqt:" + std::to_string(P.r));
  auto chi = parse_char(P);
  if (chi && !ring.field->same_as(*chi->base_field()))
    raise(errc::config_error, "--char is not defined over F_" + std::to_string(P.r) + "[T]");
  BasePolynomial v = BasePolynomial::parse(ring.field, P.v_text);
  VadicSpecial vs = vadic_special_polynomial(ring.field, chi, v, P.j, dmax_opt(P));
  json js = vadic_to_json(vs);
  if (P.order) js["order"] = tz_report_to_json(vadic_trivial_zero_order(vs));
  if (!P.congr.empty()) {
    if (P.congr.size() != 2)
      raise(errc::config_error, "--congr takes exactly two values: j2 N");
    uint64_t j2 = P.congr[0];
    int N = int(P.congr[1]);
    ContinuityResult res = vadic_continuity_check(ring.field, chi, v, P.j, j2, N);
    js["continuity"] = continuity_to_json(res, P.j, j2, N);
  }
  emit(P, js.dump(2) + "\n");
  return 0;
}

uint64_t default_jmax(const RingSelector& ring, const Place& place) {
  if (!place.at_infty) return 128;
  if (ring.kind == RingSelector::Kind::curve) return 256;
  return 1024;
}

int cmd_scan(const Params& P) {
  require_format(P, true);
  if (P.out.empty())
    raise(errc::config_error, "scan requires --out FILE (reports are not streamed to stdout)");
  RingSelector ring = RingSelector::parse(P.ring);
  Place place = Place::infty();
  if (ring.kind == RingSelector::Kind::fqt)
    place = Place::parse(P.place, ring.field);
  else if (P.place != "infty")
    raise(errc::config_error, "curve rings are scanned at infty only");
  uint64_t jmax = P.jmax ? P.jmax : default_jmax(ring, place);
  std::string out_path = resolve_out(P.out);
  ScanOptions opts;
  opts.workers = P.workers;
  opts.checkpoint_path = out_path + ".ckpt.json";
  if (!P.resume.empty()) opts.resume = load_scan_report(resolve_out(P.resume));
  ScanReport rep = scan_nonclassical_set(ring, place, jmax, opts);
  std::string content =
      P.format == "csv" ? scan_to_csv(rep) : scan_to_json(rep).dump(2) + "\n";
  atomic_write_file(out_path, content);
  std::remove(opts.checkpoint_path.c_str());
  std::cout << "scan " << ring.id << " at " << place.to_string() << ": " << rep.entries.size()
            << " exponents, " << rep.nonclassical_set.size() << " non-classical, "
            << rep.closure_violations.size() << " closure violations -> " << out_path << "\n";
  return 0;
}

int cmd_char(const Params& P) {
  require_format(P, false);
  if (P.char_spec.empty()) raise(errc::config_error, "char requires --char r=R,f=POLY,k=K");
  DirichletCharacter chi = DirichletCharacter::parse_spec(P.char_spec);
  emit(P, character_to_json(chi).dump(2) + "\n");
  return 0;
}

int cmd_family(const Params& P, bool y_given, bool yint_given) {
  require_format(P, false);
  RingSelector ring = RingSelector::parse("fqt:" + std::to_string(P.r));
  int p = ring.field->characteristic();
  if (y_given == yint_given)
    raise(errc::config_error, "family needs exactly one of --y (digit list) or --yint");
  PadicExponent y;
  if (yint_given) {
    y = PadicExponent::from_integer(P.yint, p, size_t(std::max(P.ydigits, 0)));
  } else {
    y.p = p;
    std::string token;
    std::istringstream in(P.y_csv);
    while (std::getline(in, token, ',')) {
      try {
        y.digits.push_back(std::stoi(token));
      } catch (const std::exception&) {
        raise(errc::config_error, "--y expects comma-separated digits, got '" + token + "'");
      }
    }
  }
  PiSeries a = family_coefficient(ring.field, P.d, y, P.N);
  json js{{"d", P.d},
          {"y_p", y.p},
          {"y_digits", y.digits},
          {"a_d", piseries_to_json(a)},
          {"version", version_string}};
  emit(P, js.dump(2) + "\n");
  return 0;
}

int cmd_profile(const Params& P) {
  require_format(P, true);
  RingSelector ring = RingSelector::parse(P.ring);
  std::vector<DegreeProfileRow> rows = ring.kind == RingSelector::Kind::fqt
                                           ? degree_profile_fqt(ring.field, P.jlo, P.jhi)
                                           : degree_profile_curve(ring.curve, P.jlo, P.jhi);
  if (P.format == "csv")
    emit(P, profile_to_csv(rows));
  else
    emit(P, profile_to_json(ring.id, rows).dump(2) + "\n");
  return 0;
}

// --- wiring ----------------------------------------------------------------

int run_cli_impl(int argc, const char* const* argv) {
  Params P;
  CLI::App app{"special zeta and L-polynomials over function-field coefficient rings"};
  app.set_version_flag("--version", std::string(version_string));
  app.add_option("--config", P.config_path, "JSON config file; command-line flags override it");
  app.require_subcommand(0, 1);

  std::map<std::string, Cmd> cmds;
  auto add_cmd = [&](const std::string& name, const std::string& desc) -> Cmd& {
    Cmd& c = cmds[name];
    c.app = app.add_subcommand(name, desc);
    c.app->fallthrough(true);
    return c;
  };
  auto opt_ring = [&](Cmd& c) {
    bind_key(c, c.app->add_option("--ring", P.ring, "fqt:R | genus1 | genus2 | curve:H"), "ring",
         P.ring);
  };
  auto opt_j = [&](Cmd& c) {
    bind_key(c, c.app->add_option("--j", P.j, "exponent j"), "j", P.j);
  };
  auto opt_dmax = [&](Cmd& c) {
    bind_key(c, c.app->add_option("--dmax", P.dmax, "truncation degree override"), "dmax", P.dmax);
  };
  auto opt_char = [&](Cmd& c) {
    bind_key(c, c.app->add_option("--char", P.char_spec, "character spec r=R,f=POLY,k=K"), "char",
         P.char_spec);
  };
  auto opt_out = [&](Cmd& c) {
    bind_key(c, c.app->add_option("--out", P.out, "output file (stdout when omitted)"), "out",
         P.out);
  };
  auto opt_format = [&](Cmd& c) {
    bind_key(c, c.app->add_option("--format", P.format, "json | csv"), "format", P.format);
  };

  Cmd& c_special = add_cmd("special", "compute the special polynomial z(u,-j)");
  opt_ring(c_special);
  opt_j(c_special);
  opt_dmax(c_special);
  opt_char(c_special);
  opt_out(c_special);
  opt_format(c_special);

  Cmd& c_trivzero = add_cmd("trivzero", "trivial-zero order report at u=1");
  opt_ring(c_trivzero);
  opt_j(c_trivzero);
  opt_dmax(c_trivzero);
  opt_out(c_trivzero);
  opt_format(c_trivzero);
  bind_key(c_trivzero, c_trivzero.app->add_option("--L", P.L, "also list zeros over F_{r^L}"), "L",
       P.L);

  Cmd& c_newton = add_cmd("newton", "Newton polygon of z(u,-j) at a place");
  opt_ring(c_newton);
  opt_j(c_newton);
  opt_dmax(c_newton);
  opt_char(c_newton);
  opt_out(c_newton);
  opt_format(c_newton);
  bind_key(c_newton, c_newton.app->add_option("--place", P.place, "infty | v=POLY"), "place",
       P.place);

  Cmd& c_vadic = add_cmd("vadic", "v-adic interpolated polynomial Q(u)");
  bind_key(c_vadic, c_vadic.app->add_option("--r", P.r, "base field order"), "r", P.r);
  bind_key(c_vadic, c_vadic.app->add_option("--v", P.v_text, "monic irreducible place polynomial"),
       "v", P.v_text);
  opt_j(c_vadic);
  opt_dmax(c_vadic);
  opt_char(c_vadic);
  opt_out(c_vadic);
  opt_format(c_vadic);
  bind_key(c_vadic, c_vadic.app->add_flag("--order", P.order, "order of Q at the Euler root"),
       "order", P.order);
  bind_key(c_vadic,
       c_vadic.app->add_option("--congr", P.congr, "j2 N: check Q(j) = Q(j2) mod v^{N+1}")
           ->expected(2),
       "congr", P.congr);

  Cmd& c_scan = add_cmd("scan", "scan trivial-zero exponents for a non-classical set");
  opt_ring(c_scan);
  opt_out(c_scan);
  opt_format(c_scan);
  bind_key(c_scan, c_scan.app->add_option("--place", P.place, "infty | v=POLY"), "place", P.place);
  bind_key(c_scan, c_scan.app->add_option("--jmax", P.jmax, "largest exponent scanned"), "jmax",
       P.jmax);
  bind_key(c_scan, c_scan.app->add_option("--workers", P.workers, "worker threads"), "workers",
       P.workers);
  bind_key(c_scan, c_scan.app->add_option("--resume", P.resume, "reuse entries from a JSON report"),
       "resume", P.resume);

  Cmd& c_char = add_cmd("char", "describe a Dirichlet character");
  opt_char(c_char);
  opt_out(c_char);
  opt_format(c_char);

  Cmd& c_family = add_cmd("family", "family coefficient a_d(y) mod pi^N");
  bind_key(c_family, c_family.app->add_option("--r", P.r, "base field order"), "r", P.r);
  bind_key(c_family, c_family.app->add_option("--d", P.d, "coefficient degree d"), "d", P.d);
  bind_key(c_family, c_family.app->add_option("--y", P.y_csv, "p-adic digits of y, LSB first"), "y",
       P.y_csv);
  bind_key(c_family, c_family.app->add_option("--yint", P.yint, "integer exponent y"), "yint",
       P.yint);
  bind_key(c_family,
       c_family.app->add_option("--ydigits", P.ydigits, "minimum digit count for --yint"),
       "ydigits", P.ydigits);
  bind_key(c_family, c_family.app->add_option("--N", P.N, "pi-adic precision"), "N", P.N);
  opt_out(c_family);
  opt_format(c_family);

  Cmd& c_profile = add_cmd("profile", "u-degree profile of z(u,-j) over a range of j");
  opt_ring(c_profile);
  opt_out(c_profile);
  opt_format(c_profile);
  bind_key(c_profile, c_profile.app->add_option("--jlo", P.jlo, "first exponent"), "jlo", P.jlo);
  bind_key(c_profile, c_profile.app->add_option("--jhi", P.jhi, "last exponent"), "jhi", P.jhi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  json cfg = json::object();
  if (!P.config_path.empty()) {
    try {
      cfg = json::parse(read_file(P.config_path));
    } catch (const json::exception& e) {
      raise(errc::config_error, P.config_path + ": " + e.what());
    }
    if (!cfg.is_object()) raise(errc::config_error, P.config_path + ": expected a JSON object");
  }

  std::string command;
  for (auto& [name, cmd] : cmds)
    if (cmd.app->parsed()) command = name;
  if (command.empty()) {
    if (cfg.contains("command")) {
      try {
        command = cfg.at("command").get<std::string>();
      } catch (const json::exception&) {
        raise(errc::config_error, "config key 'command' must be a string");
      }
    }
  }
  if (command.empty())
    raise(errc::config_error,
          "no command given; pass a subcommand or a config with a 'command' key");
  auto it = cmds.find(command);
  if (it == cmds.end()) raise(errc::config_error, "unknown command '" + command + "' in config");
  Cmd& cmd = it->second;

  for (const auto& [key, value] : cfg.items()) {
    if (key == "command") continue;
    auto bit = cmd.bindings.find(key);
    if (bit == cmd.bindings.end())
      raise(errc::config_error, "config key '" + key + "' is not an option of " + command);
    if (bit->second.opt->count() > 0) continue; // flags override the config
    bit->second.apply(value);
  }

  auto need = [&](const std::string& key, const std::string& why) {
    if (!cmd.given(key, cfg))
      raise(errc::config_error, command + " requires --" + key + " (" + why + ")");
  };

  if (command == "special" || command == "trivzero" || command == "newton")
    need("j", "the exponent to evaluate at");
  if (command == "vadic") {
    need("v", "the finite place");
    need("j", "the exponent to evaluate at");
  }
  if (command == "scan") need("out", "scan reports are written to a file");
  if (command == "char") need("char", "the character to describe");
  if (command == "family") need("d", "the coefficient degree");
  if (command == "profile") need("jhi", "the top of the exponent range");

  if (command == "special") return cmd_special(P);
  if (command == "trivzero") return cmd_trivzero(P);
  if (command == "newton") return cmd_newton(P);
  if (command == "vadic") return cmd_vadic(P);
  if (command == "scan") return cmd_scan(P);
  if (command == "char") return cmd_char(P);
  if (command == "family") return cmd_family(P, cmd.given("y", cfg), cmd.given("yint", cfg));
  if (command == "profile") return cmd_profile(P);
  raise(errc::config_error, "unknown command '" + command + "'");
}

} // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    return run_cli_impl(argc, argv);
  } catch (const error& e) {
    std::cerr << "ffzeta: " << e.what() << "\n";
    const char* hint = hint_for(e.code());
    if (*hint) std::cerr << "  hint: " << hint << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ffzeta: unexpected error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace ffzeta
