#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fhyp/groups.hpp"
#include "fhyp/io.hpp"
#include "fhyp/octonion.hpp"
#include "fhyp/suites.hpp"

namespace {

using fhyp::BallPoint;
using fhyp::FMat;
using fhyp::FRow;
using fhyp::GroupData;
using fhyp::NPoint;
using fhyp::Quaterniond;
using Cplx = std::complex<double>;

constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

template <typename Fn>
int with_field(const std::string& field, Fn&& fn) {
  if (field == "R") return fn.template operator()<double>();
  if (field == "C") return fn.template operator()<Cplx>();
  if (field == "H") return fn.template operator()<Quaterniond>();
  throw std::invalid_argument("unknown field '" + field + "' (expected R, C or H)");
}

// Unit bending scalar for the rotation block; the quaternionic directions
// form a 3-parameter family, the complex ones a single circle.
template <typename F>
F bend_scalar(const std::array<double, 3>& axis, double eta) {
  if constexpr (std::is_same_v<F, Quaterniond>) {
    return fhyp::unit_rotation<double>(
        fhyp::ImaginaryDirection<double>::from_components(axis[0], axis[1], axis[2]), eta);
  } else if constexpr (std::is_same_v<F, Cplx>) {
    return Cplx(std::cos(eta), std::sin(eta));
  } else {
    throw std::invalid_argument("the real field admits no bending rotations");
  }
}

struct GridSpec {
  double lo = 0.0, hi = 0.3;
  int count = 21;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.count) || c1 != ':' || c2 != ':' || !in.eof())
    throw std::invalid_argument("grid spec must be lo:hi:count, got '" + s + "'");
  if (g.count < 1) throw std::invalid_argument("grid needs at least one point");
  if (!(g.lo <= g.hi)) throw std::invalid_argument("grid bounds out of order");
  if (std::fabs(g.lo) >= M_PI || std::fabs(g.hi) >= M_PI)
    throw std::invalid_argument("grid bounds must lie within (-pi, pi)");
  return g;
}

std::array<double, 3> parse_axis(const std::string& s) {
  std::array<double, 3> a{};
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> a[0] >> c1 >> a[1] >> c2 >> a[2]) || c1 != ',' || c2 != ',' || !in.eof())
    throw std::invalid_argument("axis must be x,y,z, got '" + s + "'");
  return a;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return in;
}

// ----- invariant ------------------------------------------------------------

struct InvariantOpts {
  std::string field = "H";
  int n = 2;
  std::string x1, x2, x3;
  std::string out;
};

std::string class_name(const std::string& field, fhyp::TripleKind k) {
  switch (k) {
    case fhyp::TripleKind::real_plane:
      return "real-plane";
    case fhyp::TripleKind::f_line:
      return field + "-line";
    default:
      return "generic";
  }
}

fhyp::Octoniond parse_octonion(const std::string& spec) {
  if (spec.rfind("b:", 0) != 0)
    throw std::invalid_argument("octonionic points use b: with 8 components");
  std::array<double, 8> c{};
  std::istringstream in(spec.substr(2));
  std::string tok;
  for (int i = 0; i < 8; ++i) {
    if (!std::getline(in, tok, ',')) throw std::invalid_argument("expected 8 components");
    std::size_t used = 0;
    c[i] = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad component: " + tok);
  }
  if (std::getline(in, tok, ',')) throw std::invalid_argument("expected exactly 8 components");
  return fhyp::Octoniond::from_components(c);
}

int run_invariant_octonion(const InvariantOpts& o) {
  // Reduced standard position: x1, x2 must be the real poles -1 and +1 and
  // x3 supplies the last octonionic coordinate.
  const auto p1 = parse_octonion(o.x1), p2 = parse_octonion(o.x2), p3 = parse_octonion(o.x3);
  if (abs(p1 - fhyp::Octoniond(-1.0)) > 1e-12 || abs(p2 - fhyp::Octoniond(1.0)) > 1e-12)
    throw std::invalid_argument(
        "octonionic triples are supported in standard position only: x1 = -1, x2 = 1");
  const double a = fhyp::octonion_angular(p3);
  std::cout << "angular        " << fhyp::format_double(a) << "\n";
  std::cout << "tan_angular    " << fhyp::format_double(std::tan(a)) << "\n";
  std::cout << "toledo         " << fhyp::format_double(2.0 * a) << "\n";
  std::cout << "dist_to_spine  n/a\n";
  std::cout << "class          " << class_name("O", fhyp::classify(a)) << "\n";
  return 0;
}

int run_invariant(const InvariantOpts& o) {
  if (o.field == "O") return run_invariant_octonion(o);
  return with_field(o.field, [&]<typename F>() {
    const BallPoint<F> x1 = fhyp::parse_ball_point<F>(o.x1);
    const BallPoint<F> x2 = fhyp::parse_ball_point<F>(o.x2);
    const BallPoint<F> x3 = fhyp::parse_ball_point<F>(o.x3);
    for (const auto* p : {&x1, &x2, &x3})
      if (p->n() != o.n)
        throw std::invalid_argument("point dimension " + std::to_string(p->n()) +
                                    " does not match --n " + std::to_string(o.n));
    const double a = fhyp::cartan_angular<F>(x1, x2, x3);
    const double tau = fhyp::toledo<F>(x1, x2, x3);
    std::optional<double> spine;
    if (x1.is_boundary() && x2.is_boundary() && x3.is_boundary())
      spine = fhyp::dist_to_spine<F>(x1, x2, x3);

    std::cout << "angular        " << fhyp::format_double(a) << "\n";
    std::cout << "tan_angular    " << fhyp::format_double(std::tan(a)) << "\n";
    std::cout << "toledo         " << fhyp::format_double(tau) << "\n";
    std::cout << "dist_to_spine  " << (spine ? fhyp::format_double(*spine) : "n/a") << "\n";
    std::cout << "class          " << class_name(o.field, fhyp::classify(a)) << "\n";

    if (!o.out.empty()) {
      nlohmann::ordered_json j;
      j["command"] = "invariant";
      j["field"] = o.field;
      j["n"] = o.n;
      j["angular"] = fhyp::format_double(a);
      j["tan_angular"] = fhyp::format_double(std::tan(a));
      j["toledo"] = fhyp::format_double(tau);
      j["dist_to_spine"] = spine ? fhyp::format_double(*spine) : "n/a";
      j["class"] = class_name(o.field, fhyp::classify(a));
      auto out = open_out(o.out);
      out << j.dump(2) << "\n";
    }
    return 0;
  });
}

// ----- verify ---------------------------------------------------------------

struct VerifyOpts {
  std::string suite;
  std::uint64_t seed = 7;
  int count = 0;
  double tol_scale = 1.0;
  std::string out;
};

int run_verify(const VerifyOpts& o) {
  const auto reports = fhyp::run_suites(o.suite, o.seed, o.count);
  bool all_pass = true;
  nlohmann::ordered_json jsuites = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    std::cout << "suite " << rep.suite << " seed " << o.seed << "\n";
    bool pass = true;
    nlohmann::ordered_json jchecks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
      const double tol = c.tolerance * o.tol_scale;
      const bool ok = c.residual <= tol;
      pass = pass && ok;
      std::cout << "  [" << (ok ? "PASS" : "FAIL") << "] " << c.name << "  residual "
                << fhyp::format_double(c.residual) << "  tolerance " << fhyp::format_double(tol)
                << "\n";
      jchecks.push_back({{"name", c.name},
                         {"residual", fhyp::format_double(c.residual)},
                         {"tolerance", fhyp::format_double(tol)},
                         {"pass", ok}});
    }
    std::cout << "suite " << rep.suite << ": " << (pass ? "PASS" : "FAIL") << " ("
              << rep.checks.size() << " checks)\n";
    all_pass = all_pass && pass;
    jsuites.push_back({{"suite", rep.suite}, {"pass", pass}, {"checks", jchecks}});
  }
  if (!o.out.empty()) {
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["seed"] = o.seed;
    j["count"] = o.count;
    j["tol_scale"] = fhyp::format_double(o.tol_scale);
    j["pass"] = all_pass;
    j["suites"] = jsuites;
    auto out = open_out(o.out);
    out << j.dump(2) << "\n";
  }
  return all_pass ? 0 : kExitVerifyFail;
}

// ----- bend -----------------------------------------------------------------

struct BendOpts {
  std::string field = "H";
  std::string group;  // empty: built-in configuration
  std::string marker;
  std::string grid = "0:0.3:21";
  std::string axis = "1,0,0";
  std::uint64_t seed = 7;
  int samples = 60;
  int word_length = 5;
  std::string out;
  std::string emit_group;
};

// Minimal cygan distance from a boundary sample to the real circle through
// the standard axis endpoints (the chart's real horizontal line plus the
// point at infinity), by scanning the real parameter.
template <typename F>
double dist_to_real_circle(const BallPoint<F>& p) {
  const int n = p.n();
  bool exactly_real = true;
  for (int i = 0; i < n; ++i) exactly_real = exactly_real && fhyp::im_abs(p.z(i)) == 0.0;
  for (int i = 1; i + 1 < n; ++i) exactly_real = exactly_real && fhyp::abs(p.z(i)) == 0.0;
  if (n == 2 && exactly_real) return 0.0;

  const NPoint<F> q = fhyp::ball_to_boundary<F>(BallPoint<F>{p.z * F(1.0 / p.norm())});
  if (q.infinite) return 0.0;
  const fhyp::CarnotPoint<F> P = q.carnot();
  const int h = n - 1;
  auto circle_point = [&](double x) {
    FRow<F> xi = FRow<F>::Zero(h);
    xi(0) = F(x);
    return fhyp::CarnotPoint<F>{std::move(xi), F{}, 0.0};
  };
  double xi_norm = 0.0;
  for (int i = 0; i < h; ++i) xi_norm += fhyp::abs2(P.xi(i));
  const double R = 2.0 * (1.0 + std::sqrt(xi_norm));

  double best_x = 0.0, best = std::numeric_limits<double>::infinity();
  const int grid = 512;
  for (int k = 0; k <= grid; ++k) {
    const double x = -R + 2.0 * R * k / grid;
    const double d = fhyp::cygan_dist<F>(P, circle_point(x));
    if (d < best) {
      best = d;
      best_x = x;
    }
  }
  double lo = best_x - 2.0 * R / grid, hi = best_x + 2.0 * R / grid;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
  double fa = fhyp::cygan_dist<F>(P, circle_point(a));
  double fb = fhyp::cygan_dist<F>(P, circle_point(b));
  for (int it = 0; it < 120; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - phi * (hi - lo);
      fa = fhyp::cygan_dist<F>(P, circle_point(a));
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + phi * (hi - lo);
      fb = fhyp::cygan_dist<F>(P, circle_point(b));
    }
  }
  return std::min({best, fa, fb});
}

// Distance between two geodesics by nested scans of the joint distance.
template <typename F>
double axis_separation(const fhyp::Geodesic<F>& A, const fhyp::Geodesic<F>& B) {
  auto inner = [&](double s) {
    const BallPoint<F> x = fhyp::geodesic_point<F>(A, s);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 160; ++k) {
      const double t = -8.0 + k * 0.1;
      best = std::min(best, fhyp::distance<F>(x, fhyp::geodesic_point<F>(B, t)));
    }
    return best;
  };
  double best = std::numeric_limits<double>::infinity(), best_s = 0.0;
  for (int k = 0; k <= 160; ++k) {
    const double s = -8.0 + k * 0.1;
    const double d = inner(s);
    if (d < best) {
      best = d;
      best_s = s;
    }
  }
  double lo = best_s - 0.1, hi = best_s + 0.1;
  for (int it = 0; it < 60; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (inner(m1) < inner(m2))
      hi = m2;
    else
      lo = m1;
  }
  return inner(0.5 * (lo + hi));
}

template <typename F>
int run_bend_field(const BendOpts& o) {
  GroupData<F> G{fhyp::GroupKind::amalgam, {}, {}, FMat<F>()};
  BallPoint<F> marker = BallPoint<F>::origin(2);
  double ell = 0.0, delta = 0.0;

  if (o.group.empty()) {
    if constexpr (std::is_same_v<F, Quaterniond>) {
      const auto cfg = fhyp::schottky_bend_config<F>();
      G = cfg.group;
      marker = cfg.marker_point;
      ell = cfg.length;
      delta = cfg.separation;
    } else {
      throw std::invalid_argument("the built-in bending group is quaternionic; pass --group");
    }
  } else {
    auto in = open_in(o.group);
    G = fhyp::read_group<F>(in);
    // Normalize the splitting axis onto (0,..,-1),(0,..,1).
    const auto fp = fhyp::fixed_points<F>(G.gamma_alpha);
    const FMat<F> g = fhyp::move_to_standard<F>(fp.repelling, fp.attracting);
    const FMat<F> gi = fhyp::form_inverse<F>(g);
    auto conj_all = [&](std::vector<FMat<F>>& v) {
      for (auto& M : v) M = gi * M * g;
    };
    conj_all(G.gamma1);
    conj_all(G.gamma2);
    G.gamma_alpha = gi * G.gamma_alpha * g;
    ell = fhyp::translation_length<F>(G.gamma_alpha).spectral;
    if (G.gamma1.empty() || G.gamma2.empty())
      throw std::invalid_argument("bending needs generators on both sides of the splitting");
    const auto fp2 = fhyp::fixed_points<F>(G.gamma2.front());
    const int n = int(G.gamma_alpha.rows()) - 1;
    FRow<F> sm = FRow<F>::Zero(n), sp = FRow<F>::Zero(n);
    sm(n - 1) = F(-1);
    sp(n - 1) = F(1);
    const fhyp::Geodesic<F> std_axis =
        fhyp::Geodesic<F>::from_endpoints(BallPoint<F>{sm}, BallPoint<F>{sp});
    delta = axis_separation<F>(
        std_axis, fhyp::Geodesic<F>::from_endpoints(fp2.repelling, fp2.attracting));
    marker = fhyp::fixed_points<F>(G.gamma1.back()).attracting;
  }
  if (!o.marker.empty()) marker = fhyp::parse_ball_point<F>(o.marker);

  if (!o.emit_group.empty()) {
    auto out = open_out(o.emit_group);
    fhyp::write_group<F>(out, G);
    std::cout << "wrote group file " << o.emit_group << "\n";
    return 0;
  }

  const GridSpec grid = parse_grid(o.grid);
  const auto axis = parse_axis(o.axis);
  const fhyp::CollarBound collar = fhyp::collar_check(ell, delta);

  fhyp::Table table;
  table.columns = {"eta_x",          "eta_y",     "eta_z",
                   "marker",         "circle_min", "circle_max",
                   "collar_product", "collar_ok", "form_residual_max"};
  std::vector<std::vector<BallPoint<F>>> clouds;
  const double axis_norm =
      std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(axis_norm > 0)) throw std::invalid_argument("axis must be nonzero");

  for (int k = 0; k < grid.count; ++k) {
    const double eta =
        grid.count == 1 ? grid.lo : grid.lo + (grid.hi - grid.lo) * k / (grid.count - 1);
    const F nu = bend_scalar<F>(axis, eta);
    const GroupData<F> Gb = G.kind == fhyp::GroupKind::amalgam ? fhyp::bend_amalgam<F>(G, nu)
                                                               : fhyp::bend_hnn<F>(G, nu);
    const double m = fhyp::marker_invariant<F>(Gb, marker);
    const fhyp::LimitSample<F> s =
        fhyp::limit_set_sample<F>(Gb, o.word_length, o.samples, o.seed);
    double cmin = std::numeric_limits<double>::infinity(), cmax = 0.0;
    for (const auto& p : s.points) {
      const double d = dist_to_real_circle<F>(p);
      cmin = std::min(cmin, d);
      cmax = std::max(cmax, d);
    }
    if (s.points.empty()) cmin = cmax = std::numeric_limits<double>::quiet_NaN();
    double fres = 0.0;
    for (const auto& g : Gb.gamma1) fres = std::max(fres, fhyp::form_residual<F>(g));
    for (const auto& g : Gb.gamma2) fres = std::max(fres, fhyp::form_residual<F>(g));
    fres = std::max(fres, fhyp::form_residual<F>(Gb.gamma_alpha));

    table.rows.push_back({fhyp::format_double(eta * axis[0] / axis_norm),
                          fhyp::format_double(eta * axis[1] / axis_norm),
                          fhyp::format_double(eta * axis[2] / axis_norm),
                          fhyp::format_double(m), fhyp::format_double(cmin),
                          fhyp::format_double(cmax), fhyp::format_double(collar.product),
                          collar.ok ? "1" : "0", fhyp::format_double(fres)});
    clouds.push_back(s.points);
  }

  nlohmann::ordered_json meta;
  meta["command"] = "bend";
  meta["field"] = o.field;
  meta["seed"] = o.seed;
  meta["samples"] = o.samples;
  meta["word_length"] = o.word_length;
  meta["grid"] = o.grid;
  meta["axis"] = o.axis;
  meta["group"] = o.group.empty() ? "builtin" : o.group;
  meta["collar_product"] = fhyp::format_double(collar.product);
  meta["collar_ok"] = collar.ok;

  if (o.out.empty()) {
    fhyp::write_csv(std::cout, table);
  } else {
    auto csv = open_out(o.out + ".csv");
    fhyp::write_csv(csv, table);
    auto js = open_out(o.out + ".json");
    fhyp::write_json(js, table, meta);
    for (int k = 0; k < int(clouds.size()); ++k) {
      char suffix[32];
      std::snprintf(suffix, sizeof suffix, "_cloud_%03d.txt", k);
      auto cf = open_out(o.out + suffix);
      fhyp::write_vertices<F>(cf, clouds[k]);
    }
    std::cout << "wrote " << o.out << ".csv, " << o.out << ".json and " << clouds.size()
              << " cloud files\n";
  }
  return 0;
}

int run_bend(const BendOpts& o) {
  return with_field(o.field, [&]<typename F>() { return run_bend_field<F>(o); });
}

// ----- character ------------------------------------------------------------

struct CharacterOpts {
  std::string field = "H";
  std::string cycle, vertices;
  std::string out;
};

int run_character(const CharacterOpts& o) {
  return with_field(o.field, [&]<typename F>() {
    auto vin = open_in(o.vertices);
    auto cin_ = open_in(o.cycle);
    fhyp::TriangulatedCycle<F> cycle;
    cycle.vertices = fhyp::read_vertices<F>(vin);
    cycle.triangles = fhyp::read_triangles(cin_);

    const auto res = fhyp::character_eval<F>(cycle);
    const double bound = 4.0 * M_PI * M_PI;
    bool bound_ok = true;
    nlohmann::ordered_json jtris = nlohmann::ordered_json::array();
    for (const auto& t : cycle.triangles) {
      const double term = 4.0 * M_PI *
                          fhyp::toledo<F>(cycle.vertices[t.a], cycle.vertices[t.b],
                                          cycle.vertices[t.c]);
      const bool ok = std::fabs(term) <= bound + 1e-9;
      bound_ok = bound_ok && ok;
      std::cout << "triangle " << t.a << " " << t.b << " " << t.c << " mult " << t.mult
                << "  term " << fhyp::format_double(term) << "  |term| <= 4pi^2 "
                << (ok ? "OK" : "VIOLATED") << "\n";
      jtris.push_back({{"a", t.a},
                       {"b", t.b},
                       {"c", t.c},
                       {"mult", t.mult},
                       {"term", fhyp::format_double(term)},
                       {"bound_ok", ok}});
    }
    if (!res.closed) std::cerr << "warning: the chain is not a closed cycle\n";
    std::cout << "closed " << (res.closed ? "yes" : "no") << "\n";
    std::cout << "c = " << fhyp::format_double(res.value) << "\n";

    if (!o.out.empty()) {
      nlohmann::ordered_json j;
      j["command"] = "character";
      j["field"] = o.field;
      j["closed"] = res.closed;
      j["value"] = fhyp::format_double(res.value);
      j["max_term"] = fhyp::format_double(res.max_term);
      j["bound_ok"] = bound_ok;
      j["triangles"] = jtris;
      auto out = open_out(o.out);
      out << j.dump(2) << "\n";
    }
    return bound_ok ? 0 : kExitVerifyFail;
  });
}

// ----- limitset ---------------------------------------------------------------

struct LimitsetOpts {
  std::string field = "H";
  std::string group;
  std::uint64_t seed = 7;
  int count = 200;
  int word_length = 6;
  std::string out;
};

int run_limitset(const LimitsetOpts& o) {
  return with_field(o.field, [&]<typename F>() {
    GroupData<F> G{fhyp::GroupKind::amalgam, {}, {}, FMat<F>()};
    if (o.group.empty()) {
      if constexpr (std::is_same_v<F, Quaterniond>) {
        G = fhyp::schottky_bend_config<F>().group;
      } else {
        throw std::invalid_argument("the built-in group is quaternionic; pass --group");
      }
    } else {
      auto in = open_in(o.group);
      G = fhyp::read_group<F>(in);
    }
    const fhyp::LimitSample<F> s =
        fhyp::limit_set_sample<F>(G, o.word_length, o.count, o.seed);
    if (o.out.empty()) {
      fhyp::write_vertices<F>(std::cout, s.points);
    } else {
      auto out = open_out(o.out);
      fhyp::write_vertices<F>(out, s.points);
      std::cout << "wrote " << s.points.size() << " limit points to " << o.out << " ("
                << s.skipped << " words skipped)\n";
    }
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic and octonionic hyperbolic geometry toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  InvariantOpts io_;
  auto* inv = app.add_subcommand("invariant", "angular and Toledo invariants of a triple");
  inv->add_option("--field", io_.field, "scalar field: R, C, H or O")->capture_default_str();
  inv->add_option("--n", io_.n, "ball dimension")->capture_default_str();
  inv->add_option("--x1", io_.x1, "first point (b: ball or c: carnot syntax)")->required();
  inv->add_option("--x2", io_.x2, "second point")->required();
  inv->add_option("--x3", io_.x3, "third point")->required();
  inv->add_option("--out", io_.out, "write the report as JSON");

  VerifyOpts vo;
  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("--suite", vo.suite, "suite name or 'all'")->required();
  ver->add_option("--seed", vo.seed, "random seed")->capture_default_str();
  ver->add_option("--count", vo.count, "sample count override (0 = suite default)")
      ->capture_default_str();
  ver->add_option("--tol", vo.tol_scale, "tolerance scale factor")->capture_default_str();
  ver->add_option("--out", vo.out, "write the residual table as JSON");

  BendOpts bo;
  auto* bend = app.add_subcommand("bend", "sweep a bending deformation over an eta grid");
  bend->add_option("--field", bo.field, "scalar field: C or H")->capture_default_str();
  bend->add_option("--group", bo.group, "group file (default: built-in Fuchsian seed)");
  bend->add_option("--marker", bo.marker, "marker point spec (default: from gamma1)");
  bend->add_option("--grid", bo.grid, "eta grid lo:hi:count")->capture_default_str();
  bend->add_option("--axis", bo.axis, "imaginary bending axis x,y,z")->capture_default_str();
  bend->add_option("--seed", bo.seed, "random seed")->capture_default_str();
  bend->add_option("--samples", bo.samples, "limit samples per eta")->capture_default_str();
  bend->add_option("--wordlen", bo.word_length, "maximum sampled word length")
      ->capture_default_str();
  bend->add_option("--out", bo.out, "output prefix for CSV/JSON/cloud files");
  bend->add_option("--emit-group", bo.emit_group, "write the group file and exit");

  CharacterOpts co;
  auto* chr = app.add_subcommand("character", "evaluate the character on a 2-cycle");
  chr->add_option("--field", co.field, "scalar field: R, C or H")->capture_default_str();
  chr->add_option("--cycle", co.cycle, "triangle file")->required();
  chr->add_option("--vertices", co.vertices, "vertex file")->required();
  chr->add_option("--out", co.out, "write the report as JSON");

  LimitsetOpts lo;
  auto* lim = app.add_subcommand("limitset", "sample limit points of a group");
  lim->add_option("--field", lo.field, "scalar field: R, C or H")->capture_default_str();
  lim->add_option("--group", lo.group, "group file (default: built-in Fuchsian seed)");
  lim->add_option("--seed", lo.seed, "random seed")->capture_default_str();
  lim->add_option("--count", lo.count, "number of sampled words")->capture_default_str();
  lim->add_option("--wordlen", lo.word_length, "maximum word length")->capture_default_str();
  lim->add_option("--out", lo.out, "output vertex file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (inv->parsed()) return run_invariant(io_);
    if (ver->parsed()) return run_verify(vo);
    if (bend->parsed()) return run_bend(bo);
    if (chr->parsed()) return run_character(co);
    if (lim->parsed()) return run_limitset(lo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
