#pragma once

// JSON job documents and results, command dispatch, and SVG fan plots.
// Coefficients travel as strings ("3/7"); exponents and rays as integer
// arrays; fans as a ray list plus ray-index arrays for the maximal cones.

#include "toric_gfan/nnd_resolve.hpp"
#include "toric_gfan/oracle.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>

namespace toric_gfan::io {

using json = nlohmann::json;

/// Malformed or inconsistent job document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Scalars and vectors

inline Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    Integer p;
    if (p.set_str(text.substr(3), 10) != 0) throw InputError("field: cannot parse '" + text + "'");
    return Field::prime(p);
  }
  throw InputError("field: expected \"Q\" or \"Fp:<p>\", got '" + text + "'");
}

inline LatticeVector parse_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an integer array");
  LatticeVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(what + ": expected integers, got " + x.dump());
    v.push_back(Integer(x.get<long>()));
  }
  return v;
}

inline json to_json(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("to_json: integer exceeds 64 bits");
    a.push_back(x.get_si());
  }
  return a;
}

inline json to_json(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline std::string coeff_string(const Rational& c) { return c.get_str(); }

// ---------------------------------------------------------------------------
// Polynomials

inline json to_json(const ToricPolynomial& f) {
  json terms = json::array();
  for (const auto& [beta, c] : f.terms()) terms.push_back({{"coeff", coeff_string(c)}, {"exponent", to_json(beta)}});
  return terms;
}

inline json to_json(const Polynomial& f, const std::string& var = "y") {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json ex = json::array();
    for (long x : e) ex.push_back(x);
    terms.push_back({{"coeff", coeff_string(c)}, {"exponent", ex}});
  }
  return {{"terms", terms}, {"text", f.to_string(var)}};
}

inline json to_json(const ToricIdealSpec& J) {
  json gens = json::array();
  for (const auto& g : J.generators) gens.push_back(to_json(g));
  return gens;
}

inline json ideal_json(const Ideal& I, const std::string& var = "y") {
  json gens = json::array();
  for (const auto& g : I.groebner_basis()) gens.push_back(to_json(g, var));
  return gens;
}

inline ToricPolynomial parse_toric_polynomial(const json& j, const ToricRingPtr& ring, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected a list of terms");
  ToricPolynomial f(ring);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exponent"))
      throw InputError(what + ": each term needs \"coeff\" and \"exponent\"");
    const auto& c = t.at("coeff");
    std::string text = c.is_string() ? c.get<std::string>() : c.is_number_integer() ? c.dump() : "";
    if (text.empty()) throw InputError(what + ": coefficient must be a string or integer");
    LatticeVector beta = parse_vector(t.at("exponent"), what + " exponent");
    if (beta.size() != ring->rank()) throw InputError(what + ": exponent " + to_string(beta) + " has wrong length");
    f.add_term(beta, ring->field().parse(text));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Fans

inline json to_json(const Fan& fan) {
  json cones = json::array();
  for (const auto& idx : fan.maximal_cone_indices()) cones.push_back(idx);
  return {{"ambient_rank", fan.ambient_rank()}, {"rays", to_json(fan.rays())}, {"cones", cones}};
}

inline Fan parse_fan(const json& j) {
  if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
    throw InputError("fan: needs \"rays\" and \"cones\"");
  std::vector<LatticeVector> rays;
  for (const auto& r : j.at("rays")) rays.push_back(parse_vector(r, "fan ray"));
  std::size_t n = j.contains("ambient_rank") ? j.at("ambient_rank").get<std::size_t>() : rays.empty() ? 2 : rays[0].size();
  for (const auto& r : rays)
    if (r.size() != n) throw InputError("fan: rays of different lengths");
  std::vector<Cone> cones;
  for (const auto& c : j.at("cones")) {
    std::vector<LatticeVector> gens;
    for (const auto& i : c) {
      auto k = i.get<std::size_t>();
      if (k >= rays.size()) throw InputError("fan: ray index " + std::to_string(k) + " out of range");
      gens.push_back(rays[k]);
    }
    cones.push_back(Cone::from_generators(n, gens));
  }
  return Fan::from_maximal_cones(n, std::move(cones));
}

// ---------------------------------------------------------------------------
// Job documents

struct JobDocument {
  Field field = Field::rationals();
  ToricRingPtr ring;                    // from "sigma"
  std::optional<ToricIdealSpec> ideal;  // from "ideal"
  std::optional<LatticeVector> weight;  // omega in Z^s (trop)
  std::optional<LatticeVector> point;   // v in N (trop)
  std::optional<LatticeVector> section; // cross-section normal for rank-3 plots
  std::optional<Fan> fan;               // explicit fan for plot
};

inline JobDocument parse_job(const json& j, std::optional<Field> field_override = std::nullopt) {
  if (!j.is_object()) throw InputError("job: top level must be an object");
  JobDocument doc;
  if (j.contains("field")) doc.field = parse_field(j.at("field").get<std::string>());
  if (field_override) doc.field = *field_override;
  if (j.contains("sigma")) {
    std::vector<LatticeVector> rays;
    for (const auto& r : j.at("sigma")) rays.push_back(parse_vector(r, "sigma ray"));
    if (rays.empty()) throw InputError("sigma: empty ray list");
    for (const auto& r : rays)
      if (r.size() != rays[0].size()) throw InputError("sigma: rays of different lengths");
    doc.ring = ToricRing::make(Cone::from_generators(rays[0].size(), rays), doc.field);
  }
  if (j.contains("ideal")) {
    if (!doc.ring) throw InputError("ideal: needs \"sigma\"");
    std::vector<ToricPolynomial> gens;
    std::size_t k = 0;
    for (const auto& g : j.at("ideal")) gens.push_back(parse_toric_polynomial(g, doc.ring, "ideal[" + std::to_string(k++) + "]"));
    doc.ideal = ToricIdealSpec(doc.ring, std::move(gens));
  }
  if (j.contains("weight")) doc.weight = parse_vector(j.at("weight"), "weight");
  if (j.contains("v")) doc.point = parse_vector(j.at("v"), "v");
  if (j.contains("section")) doc.section = parse_vector(j.at("section"), "section");
  if (j.contains("fan")) doc.fan = parse_fan(j.at("fan"));
  return doc;
}

/// Canonical form: primitive sorted rays, sorted terms, reduced coefficients.
inline json to_json(const JobDocument& doc) {
  json j;
  j["field"] = doc.field.to_string();
  if (doc.ring) j["sigma"] = to_json(doc.ring->sigma().rays());
  if (doc.ideal) j["ideal"] = to_json(*doc.ideal);
  if (doc.weight) j["weight"] = to_json(*doc.weight);
  if (doc.point) j["v"] = to_json(*doc.point);
  if (doc.section) j["section"] = to_json(*doc.section);
  if (doc.fan) j["fan"] = to_json(*doc.fan);
  return j;
}

// ---------------------------------------------------------------------------
// SVG

/// FNV-1a; stable across platforms, unlike std::hash.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string color_for(const std::string& payload) {
  return "hsl(" + std::to_string(stable_hash(payload) % 360) + ",60%,70%)";
}

struct PlotOptions {
  std::optional<LatticeVector> section;   // plane <c, v> = 1 for rank 3
  std::vector<std::string> payloads;      // one per maximal cone, for colors
  std::string title;
};

namespace detail {

struct P2 {
  double x, y;
};

inline std::string fmt(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << (std::abs(x) < 0.005 ? 0.0 : x);
  return os.str();
}

inline std::vector<double> to_double(const LatticeVector& v) {
  std::vector<double> d;
  for (const auto& x : v) d.push_back(x.get_d());
  return d;
}

inline double ddot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

inline std::string plot_svg(const Fan& fan, const PlotOptions& opt = {}) {
  using detail::P2;
  const std::size_t n = fan.ambient_rank();
  if (n != 2 && n != 3) throw GeometryError("plot: ambient rank " + std::to_string(n) + " is not 2 or 3");
  const double size = 400, mid = size / 2, radius = 160;

  // Map rays to plane points.
  std::vector<P2> pts;
  if (n == 2) {
    for (const auto& r : fan.rays()) {
      auto d = detail::to_double(r);
      double len = std::hypot(d[0], d[1]);
      pts.push_back({d[0] / len, d[1] / len});
    }
  } else if (!fan.rays().empty()) {
    LatticeVector c;
    if (opt.section) {
      c = *opt.section;
    } else {
      Cone hull = Cone::from_generators(n, fan.rays());
      if (!hull.is_full_dimensional()) throw GeometryError("plot: support is not full-dimensional; pass a section");
      c = LatticeVector(n, 0);
      const Cone dual = dual_cone(hull);
      for (const auto& r : dual.rays()) c = add(c, r);
    }
    if (c.size() != 3) throw GeometryError("plot: section must have length 3");
    auto cd = detail::to_double(c);
    // Orthonormal basis of c-perp.
    std::vector<double> e1 = std::abs(cd[0]) < std::abs(cd[2]) ? std::vector<double>{0, cd[2], -cd[1]}
                                                               : std::vector<double>{cd[1], -cd[0], 0};
    if (detail::ddot(e1, e1) == 0) e1 = {0, cd[2], -cd[1]};
    double l1 = std::sqrt(detail::ddot(e1, e1));
    for (auto& x : e1) x /= l1;
    std::vector<double> e2{cd[1] * e1[2] - cd[2] * e1[1], cd[2] * e1[0] - cd[0] * e1[2], cd[0] * e1[1] - cd[1] * e1[0]};
    double l2 = std::sqrt(detail::ddot(e2, e2));
    for (auto& x : e2) x /= l2;
    std::vector<P2> raw;
    for (const auto& r : fan.rays()) {
      Integer h = dot(c, r);
      if (h <= 0) throw GeometryError("plot: ray " + to_string(r) + " does not meet the section plane");
      auto d = detail::to_double(r);
      for (auto& x : d) x /= h.get_d();
      raw.push_back({detail::ddot(d, e1), detail::ddot(d, e2)});
    }
    double cx = 0, cy = 0;
    for (const auto& p : raw) cx += p.x, cy += p.y;
    cx /= raw.size(), cy /= raw.size();
    double extent = 1e-9;
    for (const auto& p : raw) extent = std::max(extent, std::hypot(p.x - cx, p.y - cy));
    for (const auto& p : raw) pts.push_back({(p.x - cx) / extent, (p.y - cy) / extent});
  }
  auto screen = [&](const P2& p) { return P2{mid + radius * p.x, mid - radius * p.y}; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  if (!opt.title.empty()) svg << "  <title>" << opt.title << "</title>\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <line x1=\"0\" y1=\"" << mid << "\" x2=\"" << size << "\" y2=\"" << mid << "\" stroke=\"#bbb\"/>\n";
  svg << "  <line x1=\"" << mid << "\" y1=\"0\" x2=\"" << mid << "\" y2=\"" << size << "\" stroke=\"#bbb\"/>\n";

  const auto idx = fan.maximal_cone_indices();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::string color = color_for(k < opt.payloads.size() ? opt.payloads[k] : fan.maximal_cones()[k].to_string());
    std::vector<P2> poly;
    for (auto i : idx[k]) poly.push_back(pts[i]);
    if (n == 2) poly.insert(poly.begin(), P2{0, 0});
    // Convex polygon: order by angle around the centroid.
    double cx = 0, cy = 0;
    for (const auto& p : poly) cx += p.x, cy += p.y;
    cx /= poly.size(), cy /= poly.size();
    std::sort(poly.begin(), poly.end(), [&](const P2& a, const P2& b) {
      return std::atan2(a.y - cy, a.x - cx) < std::atan2(b.y - cy, b.x - cx);
    });
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      auto s = screen(poly[i]);
      svg << (i ? " " : "") << detail::fmt(s.x) << "," << detail::fmt(s.y);
    }
    svg << "\" fill=\"" << color << "\" stroke=\"" << color << "\" stroke-width=\"3\" fill-opacity=\"0.8\"/>\n";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto s = screen(pts[i]);
    auto o = n == 2 ? screen({0, 0}) : s;
    svg << "  <line x1=\"" << detail::fmt(o.x) << "\" y1=\"" << detail::fmt(o.y) << "\" x2=\"" << detail::fmt(s.x)
        << "\" y2=\"" << detail::fmt(s.y) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg << "  <circle cx=\"" << detail::fmt(s.x) << "\" cy=\"" << detail::fmt(s.y) << "\" r=\"3\" fill=\"black\"/>\n";
    svg << "  <text x=\"" << detail::fmt(s.x + 6) << "\" y=\"" << detail::fmt(s.y - 6)
        << "\" font-family=\"monospace\" font-size=\"12\">" << i << " " << to_string(fan.rays()[i]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// ---------------------------------------------------------------------------
// Commands

struct Result {
  json document;
  std::optional<std::string> svg;
};

namespace detail {

inline const ToricRing& need_ring(const JobDocument& doc) {
  if (!doc.ring) throw InputError("job: missing \"sigma\"");
  return *doc.ring;
}

inline const ToricIdealSpec& need_ideal(const JobDocument& doc) {
  if (!doc.ideal) throw InputError("job: missing \"ideal\"");
  return *doc.ideal;
}

inline json groebner_fan_json(const RestrictedGroebnerFan& gf) {
  json j = to_json(gf.fan);
  json chambers = json::array();
  for (std::size_t k = 0; k < gf.chambers.size(); ++k) {
    const auto& ch = gf.chambers[k];
    chambers.push_back({{"cone", k},
                        {"interior_point", to_json(ch.cone.relative_interior_point())},
                        {"toric_initial_ideal", to_json(ch.toric_initial)},
                        {"initial_ideal", ideal_json(ch.initial)}});
  }
  j["chambers"] = chambers;
  return j;
}

inline std::vector<std::string> chamber_keys(const RestrictedGroebnerFan& gf) {
  std::vector<std::string> keys;
  for (const auto& ch : gf.chambers) keys.push_back(ch.key);
  return keys;
}

inline json chart_json(const ResolutionChart& c, const Fan& fan) {
  json mults = json::array();
  for (const auto& m : c.exceptional_mults) mults.push_back(to_json(m));
  json total = json::array(), residual = json::array();
  for (const auto& p : c.total_transforms) total.push_back(to_json(p, "z"));
  for (const auto& p : c.residuals) residual.push_back(to_json(p, "z"));
  return {{"cone", fan.indices_of(c.cone)},
          {"rays", to_json(c.rays)},
          {"exceptional", c.exceptional},
          {"total_transforms", total},
          {"exceptional_mults", mults},
          {"residuals", residual},
          {"strict_transform", ideal_json(c.strict_transform, "z")},
          {"snc", c.snc}};
}

/// Named checks comparing fast paths with the brute-force oracles.
inline json selftest() {
  const long d = oracle::truncation_degree();
  const Field Q = Field::rationals();
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"ok", ok}});
    all = all && ok;
  };
  auto a1 = ToricRing::make(dual_cone(Cone::from_generators({make_vector({1, 0}), make_vector({1, 2})})), Q);
  ToricPolynomial f(a1);
  f.add_term(make_vector({1, 0}), 1);
  f.add_term(make_vector({1, 2}), 1);
  ToricIdealSpec J(a1, {f});

  bool fixed = true;
  for (const auto& v : {make_vector({0, 1}), make_vector({1, 0}), make_vector({3, 1})})
    fixed = fixed && ideal_equal(initial_ideal(a1->toric_ideal(), a1->phi_weight(v)), a1->toric_ideal());
  record("toric ideal is fixed by weights from sigma", fixed);

  bool in_ok = true;
  Ideal lifted = lift_ideal(J);
  for (const auto& w : std::vector<std::vector<long>>{{1, 1, 1}, {0, 1, 2}, {2, 1, 0}, {3, 0, 1}}) {
    auto cmp = oracle::compare_initial_ideal(lifted, w, initial_ideal(lifted, w), d);
    in_ok = in_ok && cmp.forms_in_candidate && cmp.candidate_in_forms;
  }
  record("initial ideals agree with truncated linear algebra", in_ok);

  bool toric_ok = true;
  for (const auto& v : {make_vector({0, 1}), make_vector({1, 0}), make_vector({2, -1}), make_vector({1, 1})}) {
    auto cmp = oracle::compare_toric_initial_ideal(J, v, toric_initial_ideal(J, v), d);
    toric_ok = toric_ok && cmp.forms_in_candidate && cmp.candidate_in_forms;
  }
  record("toric initial ideals agree with truncated linear algebra", toric_ok);

  auto gf = restricted_groebner_fan(J);
  auto cells = oracle::exhaustive_cells(J);
  bool cells_ok = check_fan(gf.fan, a1->sigma()).ok;
  for (const auto& cell : cells) {
    bool placed = false;
    for (const auto& ch : gf.chambers) placed = placed || (ch.key == cell.key && ch.cone.contains_cone(cell.cone));
    cells_ok = cells_ok && placed;
  }
  record("restricted Groebner fan matches exhaustive refinement", cells_ok);

  auto res = resolve(J);
  bool res_ok = res.fan.is_smooth() && refines(res.fan, res.groebner_fan.fan);
  for (const auto& c : res.charts) res_ok = res_ok && c.snc;
  record("resolution is smooth, compatible and normal crossing", res_ok);

  return {{"truncation_degree", d}, {"checks", checks}, {"ok", all}};
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"dual", "hilbert", "toric-ideal", "trop", "gfan",
                                          "nnd",  "resolve", "plot",        "selftest"};
  return c;
}

/// Runs one command. Returns the output document and, when `want_plot` is set
/// or the command is `plot`, an SVG of the relevant fan.
inline Result execute(const std::string& command, const JobDocument& doc, bool override_nnd = false,
                      bool want_plot = false) {
  Result out;
  json& j = out.document;
  j["command"] = command;
  PlotOptions popt;
  popt.section = doc.section;
  std::optional<Fan> plot_fan;

  if (command == "selftest") {
    j["selftest"] = detail::selftest();
    return out;
  }
  j["field"] = doc.field.to_string();
  if (command == "dual" || command == "hilbert") {
    const auto& ring = detail::need_ring(doc);
    j["sigma"] = to_json(ring.sigma().rays());
    j["dual"] = to_json(ring.sigma_dual().rays());
    if (command == "hilbert") j["hilbert_basis"] = to_json(ring.hilbert());
    plot_fan = Fan::single_cone(ring.sigma());
  } else if (command == "toric-ideal") {
    const auto& ring = detail::need_ring(doc);
    j["sigma"] = to_json(ring.sigma().rays());
    j["hilbert_basis"] = to_json(ring.hilbert());
    j["variables"] = ring.num_vars();
    j["toric_ideal"] = ideal_json(ring.toric_ideal());
    plot_fan = Fan::single_cone(ring.sigma());
  } else if (command == "trop") {
    const auto& ring = detail::need_ring(doc);
    std::vector<long> w;
    if (doc.point) {
      w = ring.phi_weight(*doc.point);
      j["v"] = to_json(*doc.point);
    } else if (doc.weight) {
      if (doc.weight->size() != ring.num_vars()) throw InputError("weight: expected length " + std::to_string(ring.num_vars()));
      w = to_weight(*doc.weight);
    } else {
      throw InputError("trop: needs \"weight\" or \"v\"");
    }
    Ideal I = doc.ideal ? lift_ideal(*doc.ideal) : ring.toric_ideal();
    j["weight"] = w;
    j["ideal"] = ideal_json(I);
    j["initial_ideal"] = ideal_json(initial_ideal(I, w));
    j["in_tropical_variety"] = trop_membership(I, w);
  } else if (command == "gfan") {
    auto gf = restricted_groebner_fan(detail::need_ideal(doc));
    j["groebner_fan"] = detail::groebner_fan_json(gf);
    plot_fan = gf.fan;
    popt.payloads = detail::chamber_keys(gf);
  } else if (command == "nnd") {
    auto report = is_nnd(detail::need_ideal(doc));
    const auto& fan = report.groebner_fan.fan;
    json ws = json::array();
    for (const auto& w : report.witnesses)
      ws.push_back({{"cone", fan.indices_of(w.cone)},
                    {"dim", w.cone.dim()},
                    {"representative", to_json(w.representative)},
                    {"toric_initial_ideal", to_json(w.toric_initial)},
                    {"smooth_on_torus", w.smooth}});
    j["verdict"] = report.verdict;
    j["witnesses"] = ws;
    j["groebner_fan"] = to_json(fan);
    if (report.failing) j["failing"] = *report.failing;
    plot_fan = fan;
    popt.payloads = detail::chamber_keys(report.groebner_fan);
  } else if (command == "resolve") {
    auto res = resolve(detail::need_ideal(doc), override_nnd);
    json charts = json::array();
    for (const auto& c : res.charts) charts.push_back(detail::chart_json(c, res.fan));
    j["nnd_verdict"] = res.nnd_verdict;
    j["overridden"] = res.overridden;
    j["fan"] = to_json(res.fan);
    j["groebner_fan"] = to_json(res.groebner_fan.fan);
    j["charts"] = charts;
    json compat = json::array();
    const auto all = res.fan.all_cones();
    for (std::size_t i = 0; i < all.size(); ++i)
      compat.push_back({{"cone", res.fan.indices_of(all[i])}, {"groebner_cone", res.groebner_fan.fan.indices_of(
                                                                  res.groebner_fan.fan.all_cones()[res.compatibility[i]])}});
    j["compatibility"] = compat;
    plot_fan = res.fan;
    for (const auto& c : res.fan.maximal_cones())
      for (const auto& ch : res.groebner_fan.chambers)
        if (ch.cone.contains_cone(c)) {
          popt.payloads.push_back(ch.key);
          break;
        }
  } else if (command == "plot") {
    if (doc.fan) {
      plot_fan = *doc.fan;
    } else if (doc.ideal) {
      auto gf = restricted_groebner_fan(*doc.ideal);
      plot_fan = gf.fan;
      popt.payloads = detail::chamber_keys(gf);
    } else {
      plot_fan = Fan::single_cone(detail::need_ring(doc).sigma());
    }
    j["fan"] = to_json(*plot_fan);
    want_plot = true;
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  if (want_plot) {
    if (!plot_fan) throw InputError(command + ": nothing to plot");
    popt.title = command;
    out.svg = plot_svg(*plot_fan, popt);
  }
  return out;
}

}  // namespace toric_gfan::io
