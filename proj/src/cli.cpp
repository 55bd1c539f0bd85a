#include "hecke/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/bfree.hpp"
#include "hecke/bounds.hpp"
#include "hecke/eigenvalues.hpp"
#include "hecke/fit.hpp"
#include "hecke/nonvanishing.hpp"
#include "hecke/primes.hpp"
#include "hecke/report.hpp"
#include "hecke/signchange.hpp"

namespace hecke {

RunConfig RunConfig::from_env() {
  RunConfig cfg;
  if (const char* v = std::getenv("HECKE_CACHE_DIR")) cfg.cache_dir = v;
  if (const char* v = std::getenv("HECKE_FETCH_URL")) cfg.fetch_base_url = v;
  return cfg;
}

Newform resolve_form(const std::string& spec, std::uint64_t limit,
                     const RunConfig& cfg) {
  if (spec == "delta") return delta_form(limit);
  if (spec.size() > 1 && spec[0] == 'k') {
    unsigned k = static_cast<unsigned>(std::stoul(spec.substr(1)));
    return level_one_eigenform(k, limit);
  }
  if (spec.rfind("file:", 0) == 0) return load_coefficients(spec.substr(5));
  if (spec.rfind("ec:", 0) == 0) {
    std::string rest = spec.substr(3);
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::domain_error("elliptic spec must be ec:<A>,<B>");
    long long A = std::stoll(rest.substr(0, comma));
    long long B = std::stoll(rest.substr(comma + 1));
    return elliptic_curve_form(A, B, limit);
  }
  if (spec.rfind("fetch:", 0) == 0) {
    FetchConfig fc;
    fc.base_url = cfg.fetch_base_url;
    fc.cache_dir = cfg.cache_dir;
    return fetch_coefficients(spec.substr(6), limit, fc);
  }
  throw std::domain_error("unknown form spec '" + spec +
                          "' (use delta, k<weight>, file:<path>, ec:<A>,<B>, "
                          "fetch:<label>)");
}

namespace {

std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(10) << v;
  return o.str();
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::domain_error("cannot parse rational '" + s +
                            "' (use <num> or <num>/<den>)");
  r.canonicalize();
  return r;
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& report,
          const Csv& csv, const std::string& table) {
  switch (cfg.output) {
    case OutputKind::Json: out << report.dump(2) << "\n"; break;
    case OutputKind::Csv: out << csv.to_string(); break;
    case OutputKind::Table: out << table; break;
  }
}

Json horizons_of(const Newform& f, const Newform& g) {
  return Json{{f.label, f.horizon()}, {g.label, g.horizon()}};
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream& err,
               const std::string& spec, bool validate, const std::string& emit_path) {
  Newform f = resolve_form(spec, cfg.horizon, cfg);
  std::vector<HeckeViolation> violations;
  std::vector<HeckeViolation> deligne;
  if (validate) {
    violations = verify_hecke_relations(f);
    deligne = deligne_verify(normalize(f), f.level);
  }
  if (!emit_path.empty()) {
    if (emit_path == "-") write_coefficients(f, out);
    else save_coefficients(f, emit_path);
  }

  Json results = Json::array();
  results.push_back(Json{{"label", f.label},
                         {"weight", f.weight},
                         {"level", f.level},
                         {"source", to_string(f.source)},
                         {"horizon", f.horizon()},
                         {"hecke_violations", violations.size()},
                         {"deligne_violations", deligne.size()}});
  Json report = make_report(
      "coeffs", Json{{"form", spec}, {"limit", cfg.horizon}, {"validate", validate}},
      results, Json{{f.label, f.horizon()}});
  std::ostringstream table;
  table << f.label << ": weight " << f.weight << " level " << f.level
        << " horizon " << f.horizon() << "\n";
  if (validate)
    table << "hecke violations: " << violations.size()
          << ", deligne violations: " << deligne.size() << "\n";
  emit(out, cfg, report, Csv{{"label", "weight", "level", "horizon"},
                             {{f.label, std::to_string(f.weight),
                               std::to_string(f.level), std::to_string(f.horizon())}}},
       table.str());
  for (const auto& v : violations) err << "violation: " << v.message << "\n";
  for (const auto& v : deligne) err << "violation: " << v.message << "\n";
  return (violations.empty() && deligne.empty()) ? 0 : 2;
}

int cmd_signchange(const RunConfig& cfg, std::ostream& out,
                   const std::string& fspec, const std::string& gspec,
                   double eps, double C) {
  Newform f = resolve_form(fspec, cfg.horizon, cfg);
  Newform g = resolve_form(gspec, cfg.horizon, cfg);
  SignChangeReport r = first_simultaneous_sign_change(f, g, cfg.horizon, eps, C);

  Json res{{"pair", r.pair_labels},
           {"found", r.first_negative_n.has_value()},
           {"bound", r.bound_value},
           {"scanned_to", r.scanned_to}};
  if (r.first_negative_n) {
    res["n_first"] = *r.first_negative_n;
    res["ratio"] = r.ratio;
  }
  Json report = make_report(
      "signchange",
      Json{{"f", fspec}, {"g", gspec}, {"limit", cfg.horizon}, {"epsilon", eps}, {"C", C}},
      Json::array({res}), horizons_of(f, g));
  Csv csv{{"pair", "n_first", "bound", "ratio"},
          {{r.pair_labels,
            r.first_negative_n ? std::to_string(*r.first_negative_n) : "not-found",
            fmt(r.bound_value), r.first_negative_n ? fmt(r.ratio) : ""}}};
  std::ostringstream table;
  if (r.first_negative_n)
    table << r.pair_labels << ": first sign change at n = " << *r.first_negative_n
          << ", bound " << fmt(r.bound_value) << ", ratio " << fmt(r.ratio) << "\n";
  else
    table << r.pair_labels << ": no sign change up to " << r.scanned_to << "\n";
  emit(out, cfg, report, csv, table.str());
  return 0;
}

int cmd_windows(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                const std::string& fspec, const std::string& gspec,
                double delta, const std::string& grid_csv) {
  Newform f = resolve_form(fspec, cfg.horizon, cfg);
  Newform g = resolve_form(gspec, cfg.horizon, cfg);
  std::vector<double> grid = parse_grid(grid_csv);
  WindowScanResult r = scan_fg2_windows(f, g, delta, grid, cfg.horizon);
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";

  Json results = Json::array();
  Csv csv{{"x", "delta", "n_lo", "n_hi", "nonzero", "changes"}, {}};
  std::ostringstream table;
  for (const auto& w : r.windows) {
    results.push_back(Json{{"x", w.x},
                           {"delta", w.delta},
                           {"n_lo", w.n_lo},
                           {"n_hi", w.n_hi},
                           {"nonzero_terms", w.nonzero_terms},
                           {"changes", w.changes}});
    csv.rows.push_back({fmt(w.x), fmt(w.delta), std::to_string(w.n_lo),
                        std::to_string(w.n_hi), std::to_string(w.nonzero_terms),
                        std::to_string(w.changes)});
    table << "(" << fmt(w.x) << ", " << fmt(w.x) << "+" << fmt(w.x) << "^"
          << fmt(w.delta) << "]: " << w.changes << " sign change(s) over "
          << w.nonzero_terms << " nonzero terms\n";
  }
  Json report = make_report(
      "windows",
      Json{{"f", fspec}, {"g", gspec}, {"delta", delta}, {"x_grid", grid_csv},
           {"limit", cfg.horizon}},
      results, horizons_of(f, g));
  emit(out, cfg, report, csv, table.str());
  return 0;
}

int cmd_nonvanish(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                  const std::string& fspec, const std::string& gspec) {
  Newform f = resolve_form(fspec, cfg.horizon, cfg);
  Newform g = resolve_form(gspec, cfg.horizon, cfg);
  NonvanishReport r = first_simultaneous_nonvanishing(f, g, cfg.horizon);
  if (r.warning) err << "warning: " << *r.warning << "\n";

  Json res{{"found", r.first_n.has_value()},
           {"bound", r.bound},
           {"hypothesis_ok", r.hypothesis_ok},
           {"scanned_to", r.scanned_to}};
  if (r.first_n) {
    res["first_n"] = *r.first_n;
    res["within_bound"] = r.within_bound;
  }
  Json report = make_report(
      "nonvanish", Json{{"f", fspec}, {"g", gspec}, {"limit", cfg.horizon}},
      Json::array({res}), horizons_of(f, g));
  std::ostringstream table;
  if (r.first_n)
    table << "first n > 1 with both coefficients nonzero: " << *r.first_n
          << " (bound " << fmt(r.bound) << ", "
          << (r.hypothesis_ok ? (r.within_bound ? "within bound" : "OUTSIDE bound")
                              : "bound vacuous: lcm of levels <= 3")
          << ")\n";
  else
    table << "no simultaneous nonvanishing found up to " << r.scanned_to << "\n";
  emit(out, cfg, report, Csv{{"first_n", "bound", "within_bound"},
                             {{r.first_n ? std::to_string(*r.first_n) : "not-found",
                               fmt(r.bound),
                               r.first_n && r.hypothesis_ok
                                   ? (r.within_bound ? "yes" : "no")
                                   : "n/a"}}},
       table.str());
  return 0;
}

int cmd_primepower(const RunConfig& cfg, std::ostream& out,
                   const std::string& fspec, const std::string& gspec,
                   std::uint64_t pmax) {
  Newform f = resolve_form(fspec, cfg.horizon, cfg);
  Newform g = resolve_form(gspec, cfg.horizon, cfg);

  Json results = Json::array();
  Csv csv{{"p", "m_star", "branch"}, {}};
  std::ostringstream table;
  for (std::uint64_t p : primes_up_to(pmax)) {
    if (f.ramified(p) || g.ramified(p)) continue;
    PrimePowerCase c = prime_power_first_nonvanish(f, g, p);
    std::string m = c.m_star ? std::to_string(*c.m_star) : "none";
    results.push_back(Json{{"p", p}, {"m_star", m}, {"branch", to_string(c.branch)}});
    csv.rows.push_back({std::to_string(p), m, to_string(c.branch)});
    table << "p=" << p << " m*=" << m << " " << to_string(c.branch) << "\n";
  }
  Json report = make_report(
      "primepower", Json{{"f", fspec}, {"g", gspec}, {"pmax", pmax}}, results,
      horizons_of(f, g));
  emit(out, cfg, report, csv, table.str());
  return 0;
}

int cmd_density(const RunConfig& cfg, std::ostream& out,
                const std::string& fspec, const std::string& gspec,
                std::uint64_t p, std::uint64_t M, unsigned s1, unsigned s2) {
  DensityRecord rec;
  Json inputs;
  Json horizons = Json::object();
  if (s1 > 0 && s2 > 0) {
    rec = density_from_lambdas(2.0 * std::cos(M_PI / s1), 2.0 * std::cos(M_PI / s2), M);
    inputs = Json{{"s1", s1}, {"s2", s2}, {"M", M}};
  } else {
    Newform f = resolve_form(fspec, cfg.horizon, cfg);
    Newform g = resolve_form(gspec, cfg.horizon, cfg);
    rec = density_at_prime(f, g, p, M);
    inputs = Json{{"f", fspec}, {"g", gspec}, {"p", p}, {"M", M}};
    horizons = horizons_of(f, g);
  }
  std::string exact = rec.exact_density ? rat_to_string(*rec.exact_density) : "";
  Json res{{"p", rec.prime},
           {"empirical", rec.empirical_density},
           {"case", to_string(rec.case_label)}};
  if (rec.exact_density) res["exact"] = exact;  // "num/den", derived, not from source data
  Json report = make_report("density", inputs, Json::array({res}), horizons);
  Csv csv{{"p", "empirical", "exact", "case"},
          {{std::to_string(rec.prime), fmt(rec.empirical_density), exact,
            to_string(rec.case_label)}}};
  std::ostringstream table;
  table << "nonvanishing density over m <= " << M << ": "
        << fmt(rec.empirical_density);
  if (rec.exact_density) table << " (exact " << exact << ", derived closed form)";
  table << " [" << to_string(rec.case_label) << "]\n";
  emit(out, cfg, report, csv, table.str());
  return 0;
}

int cmd_bfree(const RunConfig& cfg, std::ostream& out, const std::string& plist,
              const std::string& zeros_of, double x, double y, std::uint64_t a,
              std::uint64_t q) {
  PrimeSet P;
  std::string set_desc;
  if (!zeros_of.empty()) {
    Newform f = resolve_form(zeros_of, cfg.horizon, cfg);
    std::uint64_t need = static_cast<std::uint64_t>(std::floor(x + y));
    P = prime_zero_set(f, std::min(need, f.horizon()));
    set_desc = "zeros-of:" + zeros_of;
  } else if (!plist.empty()) {
    std::vector<std::uint64_t> ps;
    for (double v : parse_grid(plist)) ps.push_back(static_cast<std::uint64_t>(v));
    P = PrimeSet::from_list(ps);
    set_desc = plist;
  }
  BFreeCount c = q > 0 ? count_bfree_in_ap(P, x, y, a, q) : count_bfree(P, x, y);

  Json res{{"x", c.x}, {"y", c.y}, {"count", c.count}, {"density", c.density}};
  if (c.ap) {
    res["a"] = c.ap->first;
    res["q"] = c.ap->second;
  }
  Json report = make_report(
      "bfree", Json{{"P", set_desc}, {"x", x}, {"y", y}, {"a", a}, {"q", q}},
      Json::array({res}), Json::object());
  Csv csv{{"x", "y", "a", "q", "count", "density"},
          {{fmt(x), fmt(y), c.ap ? std::to_string(c.ap->first) : "",
            c.ap ? std::to_string(c.ap->second) : "", std::to_string(c.count),
            fmt(c.density)}}};
  std::ostringstream table;
  table << "B-free count in (" << fmt(x) << ", " << fmt(x) << "+" << fmt(y)
        << "]: " << c.count << " (density " << fmt(c.density) << ")\n";
  emit(out, cfg, report, csv, table.str());
  return 0;
}

int cmd_exponents(const RunConfig& cfg, std::ostream& out, const std::string& rho_s) {
  Rat rho = parse_rat(rho_s);
  Rat theta = theta_exponent(rho);
  std::string theta_s = rat_to_string(theta);
  std::string psi_s;
  double psi_d = 0;
  bool have_psi = false;
  try {
    Rat psi = psi_exponent(rho);
    psi_s = rat_to_string(psi);
    psi_d = psi.get_d();
    have_psi = true;
  } catch (const std::domain_error&) {
    psi_s = "undefined";
  }

  Json res{{"rho", rat_to_string(rho)}, {"theta", theta_s}, {"psi", psi_s}};
  Json report = make_report("exponents", Json{{"rho", rho_s}},
                            Json::array({res}), Json::object());
  Csv csv{{"rho", "theta", "psi"}, {{rat_to_string(rho), theta_s, psi_s}}};
  std::ostringstream table;
  table << "theta=" << theta_s << " psi=" << psi_s << "\n";
  table << "theta_decimal=" << fmt(theta.get_d());
  if (have_psi) table << " psi_decimal=" << fmt(psi_d);
  table << "\n";
  emit(out, cfg, report, csv, table.str());
  return 0;
}

int cmd_rankin(const RunConfig& cfg, std::ostream& out, const std::string& fspec,
               const std::string& gspec, const std::string& grid_csv,
               const std::string& smoothing_s, unsigned J) {
  Newform f = resolve_form(fspec, cfg.horizon, cfg);
  Newform g = resolve_form(gspec, cfg.horizon, cfg);
  EigenvalueSeries sf = normalize(f), sg = normalize(g);
  std::uint64_t N = std::lcm(f.level, g.level);

  Smoothing sm = Smoothing::None;
  if (smoothing_s == "log2") sm = Smoothing::LogSquared;
  else if (smoothing_s == "logJ") sm = Smoothing::LogPower;
  else if (smoothing_s != "none")
    throw std::domain_error("smoothing must be none, log2 or logJ");

  std::vector<double> grid = parse_grid(grid_csv);
  std::vector<double> lx, ls;
  Json results = Json::array();
  Csv csv{{"x", "sum", "smoothing", "fit_exponent"}, {}};
  for (double x : grid) {
    double s = rankin_partial_sum(sf, sg, N, x, sm, J);
    lx.push_back(std::log(x));
    ls.push_back(std::log(std::abs(s) + 1.0));
    results.push_back(Json{{"x", x}, {"sum", s}});
  }
  double slope = lx.size() >= 2 ? fit_line(lx, ls).slope : 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    results[i]["fit_exponent"] = slope;
    csv.rows.push_back({fmt(grid[i]), fmt(results[i]["sum"].get<double>()),
                        smoothing_s, fmt(slope)});
  }
  Json report = make_report(
      "rankin",
      Json{{"f", fspec}, {"g", gspec}, {"x_grid", grid_csv},
           {"smoothing", smoothing_s}, {"J", J}},
      results, horizons_of(f, g));
  std::ostringstream table;
  for (std::size_t i = 0; i < grid.size(); ++i)
    table << "x=" << fmt(grid[i])
          << " sum=" << fmt(results[i]["sum"].get<double>()) << "\n";
  table << "fitted growth exponent: " << fmt(slope) << "\n";
  emit(out, cfg, report, csv, table.str());
  return 0;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, const std::string& kind,
               double sigma, double t, std::uint64_t N, unsigned k1, unsigned k2,
               double eps, double C, double B, std::uint64_t P) {
  Json res;
  std::ostringstream table;
  if (kind == "thm1") {
    double v = thm1_bound(k1, k2, N, eps, C);
    table << "C*[N(1+(k2-k1)/2)((k1+k2)/2)]^(1+eps) = " << fmt(v) << "\n";
    res = Json{{"kind", kind}, {"value", v}};
  } else if (kind == "thmK") {
    double v = thmK_bound(N, eps, C);
    table << "C*N1^(1-1/40+eps) = " << fmt(v) << "\n";
    res = Json{{"kind", kind}, {"value", v}};
  } else if (kind == "convexity") {
    BoundQuery qy{sigma, t, N, 1, k1, k2, eps, C};
    double v = convexity_rhs(qy);
    table << "C*N^(1-sigma+eps)*(1+(k2-k1)/2)^(1-sigma+eps)*((k1+k2)/2)^"
             "(1-sigma+eps)*(3+|t|)^(2(1-sigma)+eps) = "
          << fmt(v) << "\n";
    res = Json{{"kind", kind}, {"value", v}};
  } else if (kind == "subconvexity") {
    double v = subconvexity_rhs(N, t, B, eps, C);
    table << "C*|1+it|^B*N^(1/2-1/80+eps) = " << fmt(v) << "\n";
    res = Json{{"kind", kind}, {"value", v}};
  } else if (kind == "zeta") {
    ZetaPartial z = zeta_N_partial({sigma, t}, N, P);
    table << "prod_{p<=P, p∤N} (1-p^-s)^-1 = " << fmt(z.value.real());
    if (std::abs(z.value.imag()) > 0) table << " + " << fmt(z.value.imag()) << "i";
    table << " (tail <= " << fmt(z.tail_bound) << ")\n";
    res = Json{{"kind", kind},
               {"value_re", z.value.real()},
               {"value_im", z.value.imag()},
               {"tail_bound", z.tail_bound}};
  } else {
    throw std::domain_error("unknown bound kind '" + kind + "'");
  }
  Json report = make_report(
      "bounds",
      Json{{"kind", kind}, {"sigma", sigma}, {"t", t}, {"N", N}, {"k1", k1},
           {"k2", k2}, {"eps", eps}, {"C", C}, {"B", B}, {"P", P}},
      Json::array({res}), Json::object());
  emit(out, cfg, report, Csv{{"kind", "value"}, {{kind, table.str()}}}, table.str());
  return 0;
}

int cmd_fetch(const RunConfig& cfg, std::ostream& out, const std::string& label) {
  FetchConfig fc;
  fc.base_url = cfg.fetch_base_url;
  fc.cache_dir = cfg.cache_dir;
  Newform f = fetch_coefficients(label, cfg.horizon, fc);
  Json report = make_report(
      "fetch", Json{{"label", label}, {"limit", cfg.horizon}},
      Json::array({Json{{"label", f.label},
                        {"weight", f.weight},
                        {"level", f.level},
                        {"horizon", f.horizon()}}}),
      Json{{f.label, f.horizon()}});
  std::ostringstream table;
  table << "fetched " << f.label << ": weight " << f.weight << " level "
        << f.level << " horizon " << f.horizon() << "\n";
  emit(out, cfg, report, Csv{{"label", "weight", "level", "horizon"},
                             {{f.label, std::to_string(f.weight),
                               std::to_string(f.level), std::to_string(f.horizon())}}},
       table.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Hecke eigenvalue scans: sign changes, non-vanishing, B-free sieves"};
  app.fallthrough(true);

  RunConfig cfg = RunConfig::from_env();
  std::string output_s = "table";
  app.add_option("--output", output_s, "table, json or csv");
  app.add_option("--limit", cfg.horizon, "coefficient horizon X");
  app.add_option("--cache-dir", cfg.cache_dir, "coefficient cache directory");
  app.add_option("--fetch-url", cfg.fetch_base_url, "base URL for fetch: specs");

  std::string fspec = "delta", gspec = "k16", spec = "delta";
  double eps = 1.0, C = 1.0, delta = 0.95, x = 0, y = 0, sigma = 0.75, t = 0, B = 1;
  std::uint64_t p = 5, M = 1000, a = 0, q = 0, N = 1, P = 100000, pmax = 1000;
  unsigned k1 = 12, k2 = 12, J = 2, s1 = 0, s2 = 0;
  std::string grid = "1000,10000,100000", plist, zeros_of, rho_s = "1",
              smoothing = "none", kind = "thm1", emit_path;
  bool validate = false;

  CLI::App* c_coeffs = app.add_subcommand("coeffs", "generate/validate/emit a coefficient table");
  c_coeffs->add_option("--builtin,--form", spec, "form spec");
  c_coeffs->add_flag("--validate", validate, "verify all structural relations");
  c_coeffs->add_option("--emit", emit_path, "write canonical text format ('-' = stdout)");

  CLI::App* c_sign = app.add_subcommand("signchange", "first simultaneous sign change");
  c_sign->add_option("--f", fspec);
  c_sign->add_option("--g", gspec);
  c_sign->add_option("--eps", eps);
  c_sign->add_option("--C", C);

  CLI::App* c_win = app.add_subcommand("windows", "sign changes of a_f(n)a_g(n^2) in short windows");
  c_win->add_option("--f", fspec);
  c_win->add_option("--g", gspec);
  c_win->add_option("--delta", delta);
  c_win->add_option("--x", grid, "comma-separated window starts");

  CLI::App* c_nv = app.add_subcommand("nonvanish", "first simultaneous non-vanishing");
  c_nv->add_option("--f", fspec);
  c_nv->add_option("--g", gspec);

  CLI::App* c_pp = app.add_subcommand("primepower", "minimal nonvanishing prime power per prime");
  c_pp->add_option("--f", fspec);
  c_pp->add_option("--g", gspec);
  c_pp->add_option("--pmax", pmax);

  CLI::App* c_den = app.add_subcommand("density", "non-vanishing density along prime powers");
  c_den->add_option("--f", fspec);
  c_den->add_option("--g", gspec);
  c_den->add_option("--p", p);
  c_den->add_option("--M", M);
  c_den->add_option("--s1", s1, "synthetic angle denominator for f");
  c_den->add_option("--s2", s2, "synthetic angle denominator for g");

  CLI::App* c_bf = app.add_subcommand("bfree", "sieve an interval for B-free numbers");
  c_bf->add_option("--P", plist, "comma-separated excluded primes");
  c_bf->add_option("--zeros-of", zeros_of, "use the zero set of this form");
  c_bf->add_option("--x", x)->required();
  c_bf->add_option("--y", y)->required();
  c_bf->add_option("--a", a);
  c_bf->add_option("--q", q);

  CLI::App* c_exp = app.add_subcommand("exponents", "piecewise sieve exponents at rho");
  c_exp->add_option("--rho", rho_s, "exact rational, e.g. 3/4");

  CLI::App* c_rk = app.add_subcommand("rankin", "eigenvalue-product partial sums");
  c_rk->add_option("--f", fspec);
  c_rk->add_option("--g", gspec);
  c_rk->add_option("--x", grid, "comma-separated evaluation points");
  c_rk->add_option("--smoothing", smoothing, "none, log2 or logJ");
  c_rk->add_option("--J", J);

  CLI::App* c_bd = app.add_subcommand("bounds", "evaluate explicit bound expressions");
  c_bd->add_option("--kind", kind, "thm1, thmK, convexity, subconvexity, zeta");
  c_bd->add_option("--sigma", sigma);
  c_bd->add_option("--t", t);
  c_bd->add_option("--N", N);
  c_bd->add_option("--k1", k1);
  c_bd->add_option("--k2", k2);
  c_bd->add_option("--eps", eps);
  c_bd->add_option("--C", C);
  c_bd->add_option("--B", B);
  c_bd->add_option("--P", P);

  CLI::App* c_fetch = app.add_subcommand("fetch", "fetch a coefficient table over HTTP");
  std::string label;
  c_fetch->add_option("--label", label)->required();

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("heckescan");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  }

  if (output_s == "json") cfg.output = OutputKind::Json;
  else if (output_s == "csv") cfg.output = OutputKind::Csv;
  else if (output_s == "table") cfg.output = OutputKind::Table;
  else {
    err << "usage error: unknown output '" << output_s << "'\n";
    return 64;
  }
  if (cfg.horizon < 2) {
    err << "usage error: --limit must be >= 2\n";
    return 64;
  }
  if (cfg.horizon > kHorizonCap) {
    err << "error: --limit exceeds the hard cap " << kHorizonCap << "\n";
    return 1;
  }

  try {
    if (c_coeffs->parsed()) return cmd_coeffs(cfg, out, err, spec, validate, emit_path);
    if (c_sign->parsed()) return cmd_signchange(cfg, out, fspec, gspec, eps, C);
    if (c_win->parsed()) return cmd_windows(cfg, out, err, fspec, gspec, delta, grid);
    if (c_nv->parsed()) return cmd_nonvanish(cfg, out, err, fspec, gspec);
    if (c_pp->parsed()) return cmd_primepower(cfg, out, fspec, gspec, pmax);
    if (c_den->parsed()) return cmd_density(cfg, out, fspec, gspec, p, M, s1, s2);
    if (c_bf->parsed()) return cmd_bfree(cfg, out, plist, zeros_of, x, y, a, q);
    if (c_exp->parsed()) return cmd_exponents(cfg, out, rho_s);
    if (c_rk->parsed()) return cmd_rankin(cfg, out, fspec, gspec, grid, smoothing, J);
    if (c_bd->parsed()) return cmd_bounds(cfg, out, kind, sigma, t, N, k1, k2, eps, C, B, P);
    if (c_fetch->parsed()) return cmd_fetch(cfg, out, label);
  } catch (const invariant_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 64;
}

}  // namespace hecke
