#include "gfcs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "gfcs/checks.hpp"
#include "gfcs/errors.hpp"
#include "gfcs/genfun.hpp"
#include "gfcs/report.hpp"
#include "gfcs/specfun.hpp"
#include "gfcs/spectrum.hpp"
#include "gfcs/states.hpp"
#include "gfcs/suite.hpp"

namespace gfcs::cli {

namespace {

using cplx = std::complex<double>;
using verify::format_double;

double to_double(const std::string& s) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw UsageError("not a number: '" + s + "'");
  return v;
}

int to_int(const std::string& s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

void need(const std::vector<std::string>& a, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (a.size() < lo || a.size() > hi) throw UsageError("usage: " + usage);
}

std::string row(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s;
}

// Options shared by eval and plotdata.
struct ValueOptions {
  std::optional<double> beta;
  std::optional<double> lambda;
  std::optional<int> truncation;
  double m = 0.0;
  int k = 0;
  int order = 40;
  bool series = false;
  bool printed = false;
  bool closed = false;
  bool printed_a = false;
  double x = 0.5;
};

void add_value_options(CLI::App* app, ValueOptions& v) {
  app->add_option("--beta", v.beta, "flat-band beta > 0");
  app->add_option("--lambda", v.lambda, "Calogero-Sutherland lambda > -1/2");
  app->add_option("--truncation", v.truncation, "coefficient-series truncation N");
  app->add_option("--m", v.m, "generating-function parameter m");
  app->add_option("--k", v.k, "Bessel sequence index k");
  app->add_option("--order", v.order, "series order");
  app->add_flag("--series", v.series, "include the defining series");
  app->add_flag("--printed", v.printed, "include the printed closed form");
  app->add_flag("--closed", v.closed, "include the derived closed form");
  app->add_flag("--printed-a", v.printed_a, "flat-band basis with the printed a_{l,m}");
  app->add_option("--x", v.x, "fixed x for residual curves");
}

genfun::GeneratingFunctionSpec gf_spec(const std::string& name, const ValueOptions& v) {
  genfun::GeneratingFunctionSpec s;
  try {
    s.family = genfun::family_from_string(name);
  } catch (const DomainError&) {
    throw UsageError("unknown generating function '" + name + "'");
  }
  s.m = v.m;
  s.k = v.k;
  s.beta = v.beta.value_or(1.0);
  return s;
}

fock::CoefficientSeries make_state(const std::string& family, double param, cplx z, const ValueOptions& v) {
  const double r = std::abs(z);
  const auto entire = [&] { return v.truncation.value_or(states::default_truncation_entire(r)); };
  if (family == "canonical") return states::canonical_cs(z, entire());
  if (family == "legendre") {
    const int m = static_cast<int>(param);
    return states::legendre_cs(m, z, v.truncation.value_or(states::legendre_truncation(m, std::min(r, 0.999999))));
  }
  if (family == "bg") return states::cs_bg(param, z, entire());
  if (family == "kp") return states::cs_kp(param, z, v.truncation.value_or(states::default_truncation_disc(std::min(r, 0.999999))));
  if (family == "landau") return states::landau_cs(static_cast<int>(param), z, entire());
  if (family == "flatband-even" || family == "flatband-odd") {
    auto s = states::bessel_cs(family == "flatband-even" ? fock::Family::FlatBandEven : fock::Family::FlatBandOdd,
                               static_cast<int>(param), z, entire(), v.beta.value_or(1.0));
    if (!v.printed_a) return s;
    auto p = s.params();
    p.bessel_printed_norm = true;
    return fock::CoefficientSeries(s.family(), s.terms(), s.truncation_order(), p, s.normalization());
  }
  throw UsageError("unknown state family '" + family +
                   "' (canonical, legendre, bg, kp, landau, flatband-even, flatband-odd)");
}

states::Point make_point(fock::Family f, double a, double b) {
  switch (f) {
    case fock::Family::SHO:
    case fock::Family::CalogeroSutherland: return states::LinePoint{a};
    case fock::Family::Sphere: return states::SpherePoint{a, b};
    case fock::Family::Landau: return states::PolarPoint{a, b};
    default: return states::BandPoint{a, b};
  }
}

double measure_value(const std::string& kind, double r, int m) {
  if (kind == "even") return states::bessel_measure(fock::Family::FlatBandEven, r);
  if (kind == "odd") return states::bessel_measure(fock::Family::FlatBandOdd, r);
  if (kind == "odd-corrected") {
    return states::bessel_measure(fock::Family::FlatBandOdd, r, states::MeasureReading::Corrected);
  }
  if (kind == "legendre1") return states::legendre_measure_printed(m, r, states::MeasureLine::First);
  if (kind == "legendre2") return states::legendre_measure_printed(m, r, states::MeasureLine::Second);
  throw UsageError("unknown measure '" + kind + "' (even, odd, odd-corrected, legendre1, legendre2)");
}

// --- eval ------------------------------------------------------------------------

void cmd_eval(const std::vector<std::string>& a, const ValueOptions& v, std::ostream& out) {
  if (a.empty()) throw UsageError("eval: missing quantity");
  const std::string& what = a[0];
  const std::vector<std::string> p(a.begin() + 1, a.end());
  if (what == "hermite") {
    need(p, 2, 2, "eval hermite N X");
    out << format_double(specfun::hermite(to_int(p[0]), to_double(p[1]))) << "\n";
  } else if (what == "hermite-function") {
    need(p, 2, 2, "eval hermite-function N X");
    out << format_double(specfun::hermite_function(to_int(p[0]), to_double(p[1]))) << "\n";
  } else if (what == "legendre") {
    need(p, 3, 3, "eval legendre L M X");
    out << format_double(specfun::assoc_legendre(to_int(p[0]), to_int(p[1]), to_double(p[2]))) << "\n";
  } else if (what == "laguerre") {
    need(p, 3, 3, "eval laguerre N ALPHA X");
    out << format_double(specfun::assoc_laguerre(to_int(p[0]), to_double(p[1]), to_double(p[2]))) << "\n";
  } else if (what == "bessel-j") {
    need(p, 2, 2, "eval bessel-j NU X");
    out << format_double(specfun::bessel_j(to_double(p[0]), to_double(p[1]))) << "\n";
  } else if (what == "hyp2f1") {
    need(p, 4, 5, "eval hyp2f1 A B C X [XI]");
    if (p.size() == 4) {
      out << format_double(specfun::gauss_2f1(to_double(p[0]), to_double(p[1]), to_double(p[2]), to_double(p[3])))
          << "\n";
    } else {
      const cplx f = specfun::gauss_2f1(to_double(p[0]), to_double(p[1]), to_double(p[2]),
                                        cplx(to_double(p[3]), to_double(p[4])));
      out << row({f.real(), f.imag()}) << "\n";
    }
  } else if (what == "ylm") {
    need(p, 4, 4, "eval ylm L M THETA PHI");
    const cplx y = specfun::spherical_harmonic(to_int(p[0]), to_int(p[1]), to_double(p[2]), to_double(p[3]));
    out << row({y.real(), y.imag()}) << "\n";
  } else if (what == "gf") {
    need(p, 3, 4, "eval gf FAMILY X T_RE [T_IM] [--m M --k K --beta B --series --order N]");
    const auto spec = gf_spec(p[0], v);
    const cplx t(to_double(p[2]), p.size() == 4 ? to_double(p[3]) : 0.0);
    const cplx c = genfun::gf_closed(spec, to_double(p[1]), t);
    std::vector<double> vals{c.real(), c.imag()};
    if (v.series) {
      const auto s = genfun::gf_series(spec, to_double(p[1]), t, v.order);
      vals.insert(vals.end(), {s.partial_sum.real(), s.partial_sum.imag(), s.last_term_magnitude});
    }
    out << row(vals) << "\n";
  } else if (what == "taylor") {
    need(p, 2, 2, "eval taylor FAMILY X [--order N --m M --k K --beta B]");
    const auto t = genfun::extract_taylor(gf_spec(p[0], v), to_double(p[1]), v.order);
    for (std::size_t n = 0; n < t.coefficients.size(); ++n) {
      out << n << "," << row({t.coefficients[n].real(), t.coefficients[n].imag()}) << "\n";
    }
  } else if (what == "spectrum") {
    need(p, 2, 2, "eval spectrum L M");
    states::ModelConstants c;
    out << format_double(verify::spectrum(to_int(p[0]), to_int(p[1]), c)) << "\n";
  } else if (what == "legendre-norm") {
    need(p, 2, 2, "eval legendre-norm M R [--series] [--printed] [--closed]");
    const int m = to_int(p[0]);
    const double r = to_double(p[1]);
    const bool none = !v.series && !v.printed && !v.closed;
    std::vector<double> vals;
    if (v.series || none) {
      vals.push_back(states::legendre_norm_series(m, r, v.truncation.value_or(states::legendre_truncation(m, r))));
    }
    if (v.printed) vals.push_back(states::legendre_norm_printed(m, r));
    if (v.closed) vals.push_back(states::legendre_norm_closed(m, r));
    out << row(vals) << "\n";
  } else if (what == "assoc-bessel") {
    need(p, 4, 4, "eval assoc-bessel K even|odd M X [--beta B] [--printed-a]");
    const auto parity = p[1] == "even" ? genfun::Parity::Even
                        : p[1] == "odd" ? genfun::Parity::Odd
                                        : throw UsageError("parity must be even or odd");
    out << format_double(genfun::assoc_bessel(to_int(p[0]), parity, to_int(p[2]), v.beta.value_or(1.0), to_double(p[3]),
                                              v.printed_a ? genfun::BesselNormalization::Printed
                                                          : genfun::BesselNormalization::Corrected))
        << "\n";
  } else if (what == "state") {
    need(p, 3, 4, "eval state FAMILY PARAM Z_RE [Z_IM] [--truncation N]");
    const auto s = make_state(p[0], to_double(p[1]), cplx(to_double(p[2]), p.size() == 4 ? to_double(p[3]) : 0.0), v);
    for (const auto& t : s.terms()) {
      out << t.label.first << "," << t.label.second << "," << row({t.coefficient.real(), t.coefficient.imag()})
          << "\n";
    }
  } else if (what == "wavefunction") {
    need(p, 5, 6, "eval wavefunction FAMILY PARAM Z_RE Z_IM C1 [C2]");
    const auto s = make_state(p[0], to_double(p[1]), cplx(to_double(p[2]), to_double(p[3])), v);
    const double c2 = p.size() == 6 ? to_double(p[5]) : 0.0;
    const cplx psi = states::cs_wavefunction(s, make_point(s.family(), to_double(p[4]), c2));
    out << row({psi.real(), psi.imag()}) << "\n";
  } else if (what == "measure") {
    need(p, 2, 3, "eval measure KIND R [M]");
    out << format_double(measure_value(p[0], to_double(p[1]), p.size() == 3 ? to_int(p[2]) : 1)) << "\n";
  } else {
    throw UsageError("eval: unknown quantity '" + what +
                     "' (hermite, hermite-function, legendre, laguerre, bessel-j, hyp2f1, ylm, gf, taylor, spectrum, "
                     "legendre-norm, assoc-bessel, state, wavefunction, measure)");
  }
}

// --- plotdata --------------------------------------------------------------------

struct PlotRange {
  std::optional<double> from;
  std::optional<double> to;
  int points = 500;
};

std::vector<double> plot_grid(const PlotRange& g, double lo, double hi, bool open_left) {
  const double a = g.from.value_or(lo);
  const double b = g.to.value_or(hi);
  if (g.points < 2 || !(b > a)) throw UsageError("plotdata: need --points >= 2 and --to > --from");
  std::vector<double> xs;
  for (int i = 0; i < g.points; ++i) {
    // open at the left end: (a, b]
    xs.push_back(open_left ? a + (b - a) * (i + 1) / g.points : a + (b - a) * i / (g.points - 1));
  }
  return xs;
}

void cmd_plotdata(const std::vector<std::string>& a, const ValueOptions& v, const PlotRange& g, std::ostream& out) {
  if (a.empty()) throw UsageError("plotdata: missing kind (measure, gf-residual, density)");
  const std::string& what = a[0];
  const std::vector<std::string> p(a.begin() + 1, a.end());
  if (what == "measure") {
    need(p, 1, 1, "plotdata measure KIND [--m M] [--from A --to B --points N]");
    const bool legendre = p[0].rfind("legendre", 0) == 0;
    const int m = std::max(1, static_cast<int>(v.m));
    out << "r,density\n";
    const auto xs = plot_grid(g, 0.0, legendre ? 1.0 : 10.0, true);
    for (double r : xs) {
      if (legendre && r >= 1.0) continue;
      out << row({r, measure_value(p[0], r, m)}) << "\n";
    }
  } else if (what == "gf-residual") {
    need(p, 1, 1, "plotdata gf-residual FAMILY [--x X --order N --m M --k K --beta B] [--to TMAX]");
    const auto spec = gf_spec(p[0], v);
    out << "t,residual\n";
    for (double t : plot_grid(g, 0.0, 0.9, true)) {
      const cplx c = genfun::gf_closed(spec, v.x, t);
      const auto s = genfun::gf_series(spec, v.x, t, v.order);
      out << row({t, std::abs(c - s.partial_sum) / std::max(1.0, std::abs(c))}) << "\n";
    }
  } else if (what == "density") {
    need(p, 3, 4, "plotdata density FAMILY PARAM Z_RE [Z_IM] (canonical, bg, kp)");
    if (p[0] != "canonical" && p[0] != "bg" && p[0] != "kp") {
      throw UsageError("plotdata density: line families only (canonical, bg, kp)");
    }
    const auto s = make_state(p[0], to_double(p[1]), cplx(to_double(p[2]), p.size() == 4 ? to_double(p[3]) : 0.0), v);
    const bool half = p[0] != "canonical";
    out << "x,density\n";
    for (double x : plot_grid(g, half ? 0.0 : -4.0, 4.0, half)) {
      out << row({x, std::norm(states::cs_wavefunction(s, states::LinePoint{x}))}) << "\n";
    }
  } else {
    throw UsageError("plotdata: unknown kind '" + what + "' (measure, gf-residual, density)");
  }
}

// --- verify ----------------------------------------------------------------------

struct VerifyOptions {
  std::vector<std::string> suite;
  std::string format = "json";
  std::string out;
  std::optional<double> tol;
  std::optional<double> beta;
  std::optional<double> lambda;
  std::optional<int> truncation;
  std::optional<std::uint64_t> seed;
  bool list = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.list) {
    for (const auto& e : verify::registry()) {
      out << e.id << "," << (e.baseline ? "baseline" : e.gated ? "gated" : "informational") << "," << e.description
          << "\n";
    }
    return kPass;
  }
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
  verify::RunOptions ro;
  ro.tolerance = o.tol;
  ro.beta = o.beta;
  ro.lambda = o.lambda;
  ro.truncation = o.truncation;
  if (o.seed) ro.seed = *o.seed;
  const auto ids = verify::resolve_selection(o.suite);
  const auto result = verify::run_suite(ids, ro);
  const std::string text = o.format == "json" ? verify::reports_to_json(result.reports)
                                              : verify::reports_to_csv(result.reports);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kCheckFailure;
    }
  }
  for (const auto& r : result.reports) {
    err << (r.pass ? "PASS " : "FAIL ") << (r.gated ? "        " : "[info]  ") << r.check_id
        << " max_residual=" << format_double(r.max_residual) << " tol=" << format_double(r.tolerance) << "\n";
  }
  if (!result.baseline_passed) err << "baseline self-test failed; remaining checks not run\n";
  for (const auto& e : result.errors) err << "runtime error: " << e << "\n";
  return result.gated_passed && result.errors.empty() ? kPass : kCheckFailure;
}

// flat key = value file; keys as the long flags without dashes
std::vector<std::string> config_arguments(const std::string& path, const std::set<std::string>& allowed,
                                          const std::set<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(in);
  } catch (const CLI::Error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  std::vector<std::string> extra;
  for (const auto& it : items) {
    if (it.name == "++" || it.name == "--") continue;  // section markers
    if (!it.parents.empty()) throw UsageError("config file: sections are not supported (" + it.fullname() + ")");
    if (!allowed.count(it.name)) throw UsageError("config file: unknown key '" + it.name + "'");
    if (given.count(it.name)) continue;  // command line wins
    for (const auto& value : it.inputs) {
      extra.push_back("--" + it.name);
      extra.push_back(value);
    }
  }
  return extra;
}

struct Parsed {
  std::unique_ptr<CLI::App> app;
  CLI::App* verify = nullptr;
  CLI::App* eval = nullptr;
  CLI::App* plot = nullptr;
  VerifyOptions vo;
  ValueOptions value;
  PlotRange range;
  std::vector<std::string> positional;
  std::string config;
  std::string plot_out;
};

std::unique_ptr<Parsed> build() {
  auto p = std::make_unique<Parsed>();
  p->app = std::make_unique<CLI::App>("Coherent states from classical generating functions", "gfcs");
  p->app->require_subcommand(1);
  p->app->set_version_flag("--version", "gfcs 0.1.0");

  auto* v = p->app->add_subcommand("verify", "run identity checks and write a report");
  v->add_option("--suite", p->vo.suite, "check ids, 'baseline' or 'all' (comma separated)")->delimiter(',');
  v->add_option("--format", p->vo.format, "json or csv");
  v->add_option("--out", p->vo.out, "report path (stdout when absent)");
  v->add_option("--tol", p->vo.tol, "override every tolerance");
  v->add_option("--beta", p->vo.beta, "flat-band beta");
  v->add_option("--lambda", p->vo.lambda, "Calogero-Sutherland lambda");
  v->add_option("--truncation", p->vo.truncation, "coefficient-series truncation");
  v->add_option("--seed", p->vo.seed, "seed of the randomised ladder vectors");
  v->add_option("--config", p->config, "flat key = value file with the same keys");
  v->add_flag("--list", p->vo.list, "list the registered checks");
  p->verify = v;

  auto* e = p->app->add_subcommand("eval", "print special-function, generating-function or state values");
  e->add_option("args", p->positional, "quantity and its arguments")->allow_extra_args();
  add_value_options(e, p->value);
  e->prefix_command(false);
  p->eval = e;

  auto* pd = p->app->add_subcommand("plotdata", "write CSV columns for plotting");
  pd->add_option("args", p->positional, "kind and its arguments");
  add_value_options(pd, p->value);
  pd->add_option("--from", p->range.from, "grid start");
  pd->add_option("--to", p->range.to, "grid end");
  pd->add_option("--points", p->range.points, "grid points");
  pd->add_option("--out", p->plot_out, "output path (stdout when absent)");
  p->plot = pd;
  return p;
}

void parse(Parsed& p, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  p.app->parse(args);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto p = build();
  try {
    try {
      parse(*p, args);
      if (p->verify->parsed() && !p->config.empty()) {
        const std::set<std::string> keys = {"suite", "format", "out", "tol", "beta", "lambda", "truncation", "seed"};
        std::set<std::string> given;
        for (const auto& k : keys) {
          if (p->verify->get_option("--" + k)->count() > 0) given.insert(k);
        }
        auto extra = config_arguments(p->config, keys, given);
        if (!extra.empty()) {
          auto merged = args;
          merged.insert(merged.end(), extra.begin(), extra.end());
          p = build();
          parse(*p, merged);
        }
      }
    } catch (const CLI::CallForHelp& e) {
      return p->app->exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return p->app->exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
      return p->app->exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      p->app->exit(e, out, err);
      return kUsageError;
    }

    if (p->verify->parsed()) return cmd_verify(p->vo, out, err);
    if (p->eval->parsed()) {
      cmd_eval(p->positional, p->value, out);
      return kPass;
    }
    if (p->plot->parsed()) {
      std::ostringstream buf;
      cmd_plotdata(p->positional, p->value, p->range, buf);
      if (p->plot_out.empty()) {
        out << buf.str();
        return kPass;
      }
      std::ofstream f(p->plot_out, std::ios::binary);
      f << buf.str();
      f.close();
      if (!f) {
        err << "error: cannot write " << p->plot_out << "\n";
        return kCheckFailure;
      }
      return kPass;
    }
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}

}  // namespace gfcs::cli
