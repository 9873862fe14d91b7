#pragma once

#include <k3hilb/k3hilb.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace k3hilb::cli {

using json = nlohmann::json;

// Integers are emitted as decimal strings so arbitrary precision survives
// any JSON reader.
inline json to_json(const Integer& n) { return n.str(); }
inline json to_json(const DivisorClass& c) { return {{"x", c.x.str()}, {"y", c.y.str()}}; }

template <class T>
json to_json(const std::optional<T>& v) {
  return v ? to_json(*v) : json(nullptr);
}

inline json to_json(const ClassificationReport& r) {
  json pre = json::array();
  for (const auto& p : r.preconditions) pre.push_back({{"name", p.name}, {"passed", p.passed}});
  json dots = nullptr;
  if (r.D_dot_rays) dots = json::array({r.D_dot_rays->first.str(), r.D_dot_rays->second.str()});
  return {
      {"ambient", std::string(ambient_name(r.ambient))},
      {"family", std::string(kind_name(r.family))},
      {"e", to_json(r.e)},
      {"s", to_json(r.s)},
      {"curve_class", to_json(r.curve_class)},
      {"d", to_json(r.d)},
      {"g", to_json(r.g)},
      {"D_class", to_json(r.D_class)},
      {"D_effective", r.D_effective},
      {"D_nef", r.D_nef},
      {"D_dot_rays", dots},
      {"h1_SD", to_json(r.h1_SD)},
      {"h1_certified", r.h1_certified},
      {"status", std::string(status_name(r.status))},
      {"reason", r.reason.empty() ? json(nullptr) : json(r.reason)},
      {"rule", std::string(clause_name(r.rule))},
      {"dim_W", to_json(r.dim_W)},
      {"h0_NCV", to_json(r.h0_NCV)},
      {"preconditions", pre},
      {"notes", r.notes},
  };
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline const char* kTsvHeader =
    "ambient\tfamily\te\ts\tx\ty\td\tg\tD_x\tD_y\tD_effective\tD_nef\th1_SD\tstatus\tdim_W\th0_NCV\n";

inline std::string tsv_row(const ClassificationReport& r) {
  auto opt = [](const std::optional<Integer>& v) { return v ? v->str() : std::string("-"); };
  std::ostringstream os;
  os << ambient_name(r.ambient) << '\t' << kind_name(r.family) << '\t' << r.e << '\t' << r.s << '\t'
     << r.curve_class.x << '\t' << r.curve_class.y << '\t' << r.d << '\t' << r.g << '\t'
     << r.D_class.x << '\t' << r.D_class.y << '\t' << (r.D_effective ? "true" : "false") << '\t'
     << (r.D_nef ? "true" : "false") << '\t' << r.h1_SD << '\t' << status_name(r.status) << '\t'
     << opt(r.dim_W) << '\t' << opt(r.h0_NCV) << '\n';
  return os.str();
}

// key: value lines, nested keys joined with '.'
inline void pretty(std::ostream& os, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      pretty(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) pretty(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

inline Integer parse_integer(const std::string& text, const std::string& what) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) throw CLI::ValidationError(what, "expected an integer, got '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw CLI::ValidationError(what, "expected an integer, got '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

inline DivisorClass parse_class(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--class", "expected a,b");
  return {parse_integer(text.substr(0, comma), "--class"), parse_integer(text.substr(comma + 1), "--class")};
}

inline AmbientThreefold parse_ambient(const std::string& name) {
  if (name == "p3") return AmbientThreefold::projective_space();
  if (name == "v4") return AmbientThreefold::quartic_threefold();
  throw Error(ErrorCode::UnsupportedAmbient, "unsupported ambient '" + name + "' (expected p3 or v4)");
}

struct SurfaceArgs {
  std::string family;
  std::string e;
  std::string s;
};

inline SurfaceModel build_surface(const SurfaceArgs& a) {
  const std::optional<Integer> s =
      a.s.empty() ? std::nullopt : std::optional<Integer>(parse_integer(a.s, "--s"));
  auto e = [&] {
    if (a.e.empty()) throw CLI::ValidationError("--e", "required for family " + a.family);
    return parse_integer(a.e, "--e");
  };
  auto check_s = [&](const Integer& expected) {
    if (s && *s != expected)
      throw Error(ErrorCode::KindMismatch,
                  a.family + " family requires s = " + expected.str() + ", got " + s->str());
  };
  if (a.family == "rational") {
    check_s(-2);
    return SurfaceModel::rational(e());
  }
  if (a.family == "elliptic") {
    check_s(0);
    return SurfaceModel::elliptic(e());
  }
  if (a.family == "line") {
    check_s(-2);
    if (!a.e.empty() && parse_integer(a.e, "--e") != 1)
      throw Error(ErrorCode::KindMismatch, "line family requires e = 1");
    return SurfaceModel::line();
  }
  if (a.family == "none") {
    if (!s) throw CLI::ValidationError("--s", "required for family none");
    return SurfaceModel::no_special_curves(e(), *s);
  }
  throw Error(ErrorCode::UnsupportedFamily, "unsupported family '" + a.family + "'");
}

inline void add_surface_options(CLI::App* cmd, SurfaceArgs& a, bool family_required = true) {
  auto* f = cmd->add_option("--family", a.family, "rational|elliptic|line|none");
  if (family_required) f->required();
  cmd->add_option("--e", a.e, "degree h.G of the generator");
  cmd->add_option("--s", a.s, "self-intersection G^2 (family none)");
}

inline json ray_json(const PicardLattice& L, const ExtremalRay& r) {
  json out{{"kind", std::string(ray_kind_name(r.kind))}, {"class", to_json(r.cls)}};
  out["degree"] = r.cls ? to_json(degree(L, *r.cls)) : json(nullptr);
  out["square"] = r.cls ? to_json(square(L, *r.cls)) : json(nullptr);
  return out;
}

/// Rows e = 2..9 of the (−2)-ray table, in the x·h − y·E convention.
inline std::string minus_two_ray_table_tsv() {
  std::ostringstream os;
  os << "e\t(x,y)\td(E')\n";
  for (int e = 2; e <= 9; ++e) {
    const SurfaceModel S = SurfaceModel::rational(e);
    const DivisorClass& ray = *S.cone().second.cls;
    os << e << "\t(" << ray.x << ',' << -ray.y << ")\t" << degree(S.lattice(), ray) << '\n';
  }
  return os.str();
}

inline json example_summary(const ClassificationReport& r) {
  return {{"class", to_json(r.curve_class)}, {"d", to_json(r.d)},         {"g", to_json(r.g)},
          {"dim", to_json(r.dim_W)},         {"h1", to_json(r.h1_SD)},     {"h0_NCV", to_json(r.h0_NCV)},
          {"status", std::string(status_name(r.status))}};
}

inline json examples_json() {
  const auto v4 = AmbientThreefold::quartic_threefold();
  const auto p3 = AmbientThreefold::projective_space();
  const SurfaceModel conic = SurfaceModel::rational(2);
  const Assumptions gg{true, false};

  json out;
  out["conic_on_quartic_threefold"] = example_summary(classify_curve(v4, conic, {2, 2}, gg));
  out["plane_cubic_in_p3"] =
      example_summary(classify_curve(p3, SurfaceModel::elliptic(3), {4, 2}, {}));

  json family = json::array();
  for (int n = 2; n <= 10; ++n) {
    json row = example_summary(classify_curve(v4, conic, {n, n}, gg));
    row["n"] = std::to_string(n);
    family.push_back(row);
  }
  out["conic_family"] = family;

  const SurfaceModel plain = SurfaceModel::no_special_curves(6, 2);
  const PicardLattice& L = plain.lattice();
  out["no_special_curves"] = {
      {"e", "6"},
      {"s", "2"},
      {"represents_minus_two", represents(L, -2).representable},
      {"has_null_class", represents(L, 0).representable},
      {"verified", verify_no_special_curves(L)},
      {"sample_curve", example_summary(classify_curve(v4, plain, {2, 1}, {}))},
  };
  return out;
}

/// Runs one CLI invocation. Exit codes: 0 success, 1 domain error (JSON error
/// object on `out`), 2 usage error (diagnostic on `err`).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisor positivity, cohomology and Hilbert-scheme status on quartic K3 surfaces",
               "k3hilb"};
  app.require_subcommand(1, 1);

  std::string pell_n;
  auto* pell = app.add_subcommand("pell", "fundamental solution of X^2 - N Y^2 = 1");
  pell->add_option("N", pell_n)->required();

  std::string rep_e, rep_s, rep_n;
  auto* rep = app.add_subcommand("represents", "does 4x^2 + 2exy + sy^2 = n have a nonzero solution");
  rep->add_option("--e", rep_e)->required();
  rep->add_option("--s", rep_s)->required();
  rep->add_option("n", rep_n)->required();

  SurfaceArgs rays_args;
  auto* rays = app.add_subcommand("rays", "extremal rays of the Mori cone");
  add_surface_options(rays, rays_args);

  auto* table1 = app.add_subcommand("table1", "(-2)-ray classes for rational generators, e = 2..9 (TSV)");

  SurfaceArgs coh_args;
  std::string coh_class;
  auto* coh = app.add_subcommand("coh", "h0, h1, h2 of a divisor class");
  add_surface_options(coh, coh_args);
  coh->add_option("--class", coh_class, "a,b for a*h + b*G")->required();

  SurfaceArgs cls_args;
  std::string cls_ambient, cls_class, format = "json";
  bool assume_gg = false, assume_pi = false;
  auto* cls = app.add_subcommand("classify", "Hilbert-scheme status of a curve class");
  cls->add_option("--ambient", cls_ambient, "p3|v4")->required();
  add_surface_options(cls, cls_args);
  cls->add_option("--class", cls_class, "a,b for a*h + b*G")->required();
  cls->add_flag("--assume-gg", assume_gg, "N_{E/V} globally generated (rational curve in V4)");
  cls->add_flag("--assume-pi", assume_pi, "pi-map non-surjective (elliptic curve in V4)");
  cls->add_option("--format", format, "json|tsv|pretty")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));

  std::string ex_d, ex_g;
  auto* exists = app.add_subcommand("exists", "smooth curves of degree d, genus g on a quartic?");
  exists->add_option("d", ex_d)->required();
  exists->add_option("g", ex_g)->required();

  SurfaceArgs scan_args;
  std::string scan_ambient, scan_dmax;
  auto* scan = app.add_subcommand("scan", "all generically non-reduced families up to a degree");
  scan->add_option("--ambient", scan_ambient, "p3|v4")->required();
  add_surface_options(scan, scan_args);
  scan->add_option("--dmax", scan_dmax)->required();
  scan->add_flag("--assume-gg", assume_gg);
  scan->add_flag("--assume-pi", assume_pi);
  scan->add_option("--format", format, "json|tsv|pretty")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}));

  auto* examples = app.add_subcommand("examples", "reproduce the worked examples (JSON)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return 0;
    }
    err << "k3hilb: " << e.what() << '\n';
    return 2;
  }

  auto emit_reports = [&](const std::vector<ClassificationReport>& reports, bool single) {
    if (format == "tsv") {
      out << kTsvHeader;
      for (const auto& r : reports) out << tsv_row(r);
      return;
    }
    json j = json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    if (single) j = j.front();
    if (format == "pretty")
      pretty(out, j);
    else
      out << dump(j);
  };

  try {
    if (pell->parsed()) {
      const Integer N = parse_integer(pell_n, "N");
      const PellSolution sol = fundamental_solution(N);
      const SqrtContinuedFraction cf = sqrt_continued_fraction(N);
      json period = json::array();
      for (const Integer& a : cf.period) period.push_back(a.str());
      out << dump({{"N", to_json(N)}, {"X", to_json(sol.X)}, {"Y", to_json(sol.Y)},
                   {"a0", to_json(cf.a0)}, {"period", period}});
    } else if (rep->parsed()) {
      const auto L = IntersectionForm::make(parse_integer(rep_e, "--e"), parse_integer(rep_s, "--s"));
      const RepresentationResult res = represents(L, parse_integer(rep_n, "n"));
      out << dump({{"representable", res.representable}, {"witness", to_json(res.witness)}});
    } else if (rays->parsed()) {
      const SurfaceModel S = build_surface(rays_args);
      const MoriCone& cone = extremal_rays(S);
      out << dump({{"family", std::string(kind_name(S.kind()))},
                   {"e", to_json(S.lattice().e())},
                   {"s", to_json(S.lattice().s())},
                   {"rays", json::array({ray_json(S.lattice(), cone.first),
                                         ray_json(S.lattice(), cone.second)})}});
    } else if (table1->parsed()) {
      out << minus_two_ray_table_tsv();
    } else if (coh->parsed()) {
      const SurfaceModel S = build_surface(coh_args);
      const DivisorClass D = parse_class(coh_class);
      const CohomologyTriple h = cohomology(S, D);
      out << dump({{"class", to_json(D)},
                   {"h0", to_json(h.h0)},
                   {"h1", to_json(h.h1)},
                   {"h2", to_json(h.h2)},
                   {"effective", is_effective(S, D)},
                   {"nef", is_nef(S, D)}});
    } else if (cls->parsed()) {
      const AmbientThreefold V = parse_ambient(cls_ambient);
      const SurfaceModel S = build_surface(cls_args);
      emit_reports({classify_curve(V, S, parse_class(cls_class), {assume_gg, assume_pi})}, true);
    } else if (exists->parsed()) {
      const Integer d = parse_integer(ex_d, "d"), g = parse_integer(ex_g, "g");
      out << dump({{"d", to_json(d)}, {"g", to_json(g)}, {"exists", mori_exists(d, g)}});
    } else if (scan->parsed()) {
      const AmbientThreefold V = parse_ambient(scan_ambient);
      const SurfaceModel S = build_surface(scan_args);
      emit_reports(scan_nonreduced(V, S, parse_integer(scan_dmax, "--dmax"), {assume_gg, assume_pi}),
                   false);
    } else if (examples->parsed()) {
      out << dump(examples_json());
    }
  } catch (const CLI::ValidationError& e) {
    err << "k3hilb: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    out << dump({{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}

}  // namespace k3hilb::cli
