// Command-line front end: constants, point evaluation, tabulation, complex
// grid export, Taylor coefficients, and the verification suites.
// Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 I/O failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptrig/complex_trig.hpp"
#include "ptrig/constants.hpp"
#include "ptrig/real_trig.hpp"
#include "ptrig/verify.hpp"

using ptrig::PParam;
using ptrig::cplx;
namespace ct = ptrig::complex_trig;
namespace rt = ptrig::real_trig;

namespace {

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON value: finite numbers bare, non-finite as quoted literals.
std::string jnum(double v) {
  if (!std::isfinite(v)) return "\"" + fmt17(v) + "\"";
  return fmt17(v);
}

struct Out {
  std::FILE* f = stdout;
  bool owned = false;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    f = std::fopen(path.c_str(), "wb");
    if (!f) {
      std::fprintf(stderr, "error: cannot open '%s' for writing\n", path.c_str());
      return false;
    }
    owned = true;
    return true;
  }
  void line(const std::string& s) { std::fprintf(f, "%s\n", s.c_str()); }
  ~Out() {
    if (owned) std::fclose(f);
  }
};

const char* status_str(rt::RealStatus st) {
  switch (st) {
    case rt::RealStatus::ok: return "ok";
    case rt::RealStatus::at_pole_of_t: return "at_pole_of_t";
    default: return "out_of_domain";
  }
}

const char* status_str(ct::ComplexStatus st) {
  return st == ct::ComplexStatus::ok ? "ok" : "rejected_outside_domain";
}

bool valid_p(int p) {
  if (p < 2) {
    std::fprintf(stderr, "error: --p must be an integer >= 2 (got %d)\n", p);
    return false;
  }
  return true;
}

int cmd_constants(int p, bool json, const std::string& out_path) {
  if (!valid_p(p)) return 2;
  const PParam pp = PParam::make(p);
  const auto& cs = ptrig::constants_for(pp);
  const double ratio_resid = cs.a / cs.b - 2.0 * std::cos(ptrig::constants::pi / p);
  const double a2k_resid = cs.a - 2.0 * cs.k;
  const double lb_resid = cs.l - cs.b;

  Out out;
  if (!out.open(out_path)) return 3;
  if (json) {
    std::string s = "{";
    s += "\"p\": " + std::to_string(p);
    s += ", \"a\": " + jnum(cs.a);
    s += ", \"b\": " + jnum(cs.b);
    s += ", \"k\": " + jnum(cs.k);
    s += ", \"l\": " + jnum(cs.l);
    s += ", \"picard_r\": " + jnum(cs.picard_r);
    s += ", \"band_halfwidth\": " + jnum(cs.band_halfwidth);
    s += ", \"real_period\": " + jnum(cs.real_period);
    s += ", \"complex_period\": " + jnum(cs.complex_period);
    s += std::string(", \"b_infinite\": ") + (cs.b_infinite ? "true" : "false");
    s += ", \"residual_ratio\": " + jnum(ratio_resid);
    s += ", \"residual_a_minus_2k\": " + jnum(a2k_resid);
    s += ", \"residual_l_minus_b\": " + jnum(lb_resid);
    s += "}";
    out.line(s);
  } else {
    out.line("p = " + std::to_string(p));
    out.line("a = " + fmt17(cs.a));
    out.line("b = " + fmt17(cs.b));
    out.line("k = " + fmt17(cs.k));
    out.line("l = " + fmt17(cs.l));
    out.line("picard_r = " + fmt17(cs.picard_r));
    out.line("band_halfwidth = " + fmt17(cs.band_halfwidth));
    out.line("real_period = " + fmt17(cs.real_period));
    out.line("complex_period = " + fmt17(cs.complex_period));
    out.line(std::string("b_infinite = ") + (cs.b_infinite ? "true" : "false"));
    out.line("residual_ratio = " + fmt17(ratio_resid));
    out.line("residual_a_minus_2k = " + fmt17(a2k_resid));
    out.line("residual_l_minus_b = " + fmt17(lb_resid));
  }
  return 0;
}

int cmd_eval(int p, bool have_x, double x, bool have_z, const std::string& zarg,
             bool json, const std::string& out_path) {
  if (!valid_p(p)) return 2;
  if (have_x == have_z) {
    std::fprintf(stderr, "error: eval needs exactly one of --x or --z\n");
    return 2;
  }
  const PParam pp = PParam::make(p);
  Out out;
  if (!out.open(out_path)) return 3;

  if (have_x) {
    const auto e = rt::eval_real(pp, x);
    if (json) {
      std::string s = "{\"p\": " + std::to_string(p);
      s += ", \"x\": " + jnum(e.x);
      s += ", \"s\": " + jnum(e.s);
      s += ", \"c\": " + jnum(e.c);
      s += ", \"t\": " + jnum(e.t);
      s += std::string(", \"status\": \"") + status_str(e.status) + "\"}";
      out.line(s);
    } else {
      out.line("x = " + fmt17(e.x));
      out.line("s = " + fmt17(e.s));
      out.line("c = " + fmt17(e.c));
      out.line("t = " + fmt17(e.t));
      out.line(std::string("status = ") + status_str(e.status));
    }
    return 0;
  }

  double zre = 0, zim = 0;
  char tail = 0;
  if (std::sscanf(zarg.c_str(), "%lf,%lf%c", &zre, &zim, &tail) != 2) {
    std::fprintf(stderr, "error: --z expects '<re>,<im>' (got '%s')\n", zarg.c_str());
    return 2;
  }
  const auto e = ct::eval_complex(pp, cplx(zre, zim));
  const cplx t = ct::t_complex(pp, cplx(zre, zim));
  double resid = std::numeric_limits<double>::quiet_NaN();
  if (e.status == ct::ComplexStatus::ok) {
    resid = std::abs(ptrig::quadrature::detail::cpow_int(e.s, p) +
                     ptrig::quadrature::detail::cpow_int(e.c, p) - 1.0);
  }
  if (json) {
    std::string s = "{\"p\": " + std::to_string(p);
    s += ", \"z_re\": " + jnum(zre) + ", \"z_im\": " + jnum(zim);
    s += ", \"s_re\": " + jnum(e.s.real()) + ", \"s_im\": " + jnum(e.s.imag());
    s += ", \"c_re\": " + jnum(e.c.real()) + ", \"c_im\": " + jnum(e.c.imag());
    s += ", \"t_re\": " + jnum(t.real()) + ", \"t_im\": " + jnum(t.imag());
    s += std::string(", \"status\": \"") + status_str(e.status) + "\"";
    s += ", \"pythagorean_residual\": " + jnum(resid) + "}";
    out.line(s);
  } else {
    out.line("z = " + fmt17(zre) + "," + fmt17(zim));
    out.line("s = " + fmt17(e.s.real()) + "," + fmt17(e.s.imag()));
    out.line("c = " + fmt17(e.c.real()) + "," + fmt17(e.c.imag()));
    out.line("t = " + fmt17(t.real()) + "," + fmt17(t.imag()));
    out.line(std::string("status = ") + status_str(e.status));
    out.line("pythagorean_residual = " + fmt17(resid));
  }
  return 0;
}

int cmd_table(int p, double from, double to, double step, bool json,
              const std::string& out_path) {
  if (!valid_p(p)) return 2;
  if (!(from < to) || !(step > 0)) {
    std::fprintf(stderr, "error: table requires --from < --to and --step > 0\n");
    return 2;
  }
  const PParam pp = PParam::make(p);
  Out out;
  if (!out.open(out_path)) return 3;

  std::vector<rt::RealEval> rows;
  for (long long k = 0;; ++k) {
    const double x = from + k * step;
    if (x > to + 0.25 * step) break;
    rows.push_back(rt::eval_real(pp, x));
  }
  if (json) {
    std::string s = "{\"p\": " + std::to_string(p) + ", \"rows\": [";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& e = rows[i];
      if (i) s += ", ";
      s += "[" + jnum(e.x) + ", " + jnum(e.s) + ", " + jnum(e.c) + ", " + jnum(e.t) +
           ", \"" + status_str(e.status) + "\"]";
    }
    s += "]}";
    out.line(s);
  } else {
    out.line("x,s,c,t,status");
    for (const auto& e : rows) {
      out.line(fmt17(e.x) + "," + fmt17(e.s) + "," + fmt17(e.c) + "," + fmt17(e.t) +
               "," + status_str(e.status));
    }
  }
  return 0;
}

bool parse_range(const std::string& s, double& lo, double& hi, int& count) {
  char tail = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &lo, &hi, &count, &tail) != 3) return false;
  return count >= 2;
}

int cmd_grid(int p, const std::string& re_spec, const std::string& im_spec,
             const std::string& func, bool json, const std::string& out_path) {
  if (!valid_p(p)) return 2;
  double re_lo, re_hi, im_lo, im_hi;
  int nre, nim;
  if (!parse_range(re_spec, re_lo, re_hi, nre) ||
      !parse_range(im_spec, im_lo, im_hi, nim)) {
    std::fprintf(stderr, "error: grid ranges must be '<min>:<max>:<count>' with count >= 2\n");
    return 2;
  }
  if (func != "s" && func != "c" && func != "t") {
    std::fprintf(stderr, "error: --func must be one of s, c, t\n");
    return 2;
  }
  const PParam pp = PParam::make(p);
  Out out;
  if (!out.open(out_path)) return 3;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::string body;
  if (json) body = "{\"p\": " + std::to_string(p) + ", \"func\": \"" + func + "\", \"rows\": [";
  else out.line("re,im,val_re,val_im,status");

  bool first = true;
  for (int j = 0; j < nim; ++j) {
    const double im = im_lo + j * (im_hi - im_lo) / (nim - 1);
    for (int i = 0; i < nre; ++i) {
      const double re = re_lo + i * (re_hi - re_lo) / (nre - 1);
      const auto e = ct::eval_complex(pp, cplx(re, im));
      cplx val(nan, nan);
      std::string st = status_str(e.status);
      if (e.status == ct::ComplexStatus::ok) {
        if (func == "s") {
          val = e.s;
        } else if (func == "c") {
          val = e.c;
        } else {
          if (std::abs(e.c) < 1e-9 * std::max(1.0, std::abs(e.s))) {
            val = {std::numeric_limits<double>::infinity(), nan};
            st = "at_pole_of_t";
          } else {
            val = e.s / e.c;
          }
        }
      }
      if (json) {
        if (!first) body += ", ";
        first = false;
        body += "[" + jnum(re) + ", " + jnum(im) + ", " + jnum(val.real()) + ", " +
                jnum(val.imag()) + ", \"" + st + "\"]";
      } else {
        out.line(fmt17(re) + "," + fmt17(im) + "," + fmt17(val.real()) + "," +
                 fmt17(val.imag()) + "," + st);
      }
    }
  }
  if (json) out.line(body + "]}");
  return 0;
}

int cmd_coeffs(int p, int n, bool json, const std::string& out_path) {
  if (!valid_p(p)) return 2;
  if (n < 2) {
    std::fprintf(stderr, "error: --n must be >= 2\n");
    return 2;
  }
  const PParam pp = PParam::make(p);
  const auto sp = ct::taylor_coeffs(pp, n);
  Out out;
  if (!out.open(out_path)) return 3;

  if (json) {
    std::string s = "{\"p\": " + std::to_string(p) + ", \"n\": " + std::to_string(n);
    s += ", \"a\": [";
    bool first = true;
    for (int i = 0; i < sp.length; ++i) {
      if (sp.a[i] == 0.0) continue;
      if (!first) s += ", ";
      first = false;
      s += "[" + std::to_string(i) + ", " + jnum(sp.a[i]) + "]";
    }
    s += "], \"b\": [";
    first = true;
    for (int i = 0; i < sp.length; ++i) {
      if (sp.b[i] == 0.0) continue;
      if (!first) s += ", ";
      first = false;
      s += "[" + std::to_string(i) + ", " + jnum(sp.b[i]) + "]";
    }
    s += "]}";
    out.line(s);
  } else {
    out.line("# n a_n");
    for (int i = 0; i < sp.length; ++i) {
      if (sp.a[i] != 0.0) out.line(std::to_string(i) + " " + fmt17(sp.a[i]));
    }
    out.line("# n b_n");
    for (int i = 0; i < sp.length; ++i) {
      if (sp.b[i] != 0.0) out.line(std::to_string(i) + " " + fmt17(sp.b[i]));
    }
  }
  return 0;
}

bool parse_p_list(const std::string& arg, std::vector<int>& ps) {
  size_t pos = 0;
  while (pos < arg.size()) {
    size_t comma = arg.find(',', pos);
    if (comma == std::string::npos) comma = arg.size();
    const std::string tok = arg.substr(pos, comma - pos);
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || end == nullptr || *end != '\0') return false;
    ps.push_back(int(v));
    pos = comma + 1;
  }
  return !ps.empty();
}

int cmd_verify(const std::string& p_arg, double tol, bool acceptance, bool json,
               const std::string& out_path) {
  std::vector<int> ps;
  if (!parse_p_list(p_arg, ps)) {
    std::fprintf(stderr, "error: --p expects a comma-separated integer list (got '%s')\n",
                 p_arg.c_str());
    return 2;
  }
  for (int p : ps) {
    if (!valid_p(p)) return 2;
  }
  Out out;
  if (!out.open(out_path)) return 3;

  char buf[256];
  if (acceptance) {
    const auto crits = ptrig::verify::run_acceptance();
    int failed = 0;
    if (json) {
      std::string s = "{\"criteria\": [";
      for (size_t i = 0; i < crits.size(); ++i) {
        const auto& c = crits[i];
        if (i) s += ", ";
        s += "{\"index\": " + std::to_string(c.index) + ", \"name\": \"" + c.name +
             "\", \"pass\": " + (c.pass ? "true" : "false") + ", \"detail\": \"" +
             c.detail + "\"}";
        if (!c.pass) ++failed;
      }
      s += "], \"failed\": " + std::to_string(failed) + "}";
      out.line(s);
    } else {
      for (const auto& c : crits) {
        std::snprintf(buf, sizeof buf, "[criterion %2d] %-28s %s  %s", c.index,
                      c.name.c_str(), c.pass ? "PASS" : "FAIL", c.detail.c_str());
        out.line(buf);
        if (!c.pass) ++failed;
      }
      std::snprintf(buf, sizeof buf, "summary: %zu criteria, %zu passed, %d failed",
                    crits.size(), crits.size() - failed, failed);
      out.line(buf);
    }
    return failed ? 1 : 0;
  }

  std::vector<ptrig::verify::CheckResult> all = ptrig::verify::run_global_checks(tol);
  for (int p : ps) {
    auto rs = ptrig::verify::run_checks(p, tol);
    all.insert(all.end(), rs.begin(), rs.end());
  }
  int failed = 0;
  if (json) {
    std::string s = "{\"checks\": [";
    for (size_t i = 0; i < all.size(); ++i) {
      const auto& c = all[i];
      if (i) s += ", ";
      s += "{\"p\": " + std::to_string(c.p) + ", \"name\": \"" + c.name +
           "\", \"pass\": " + (c.pass ? "true" : "false");
      if (c.worst >= 0) s += ", \"worst\": " + jnum(c.worst) + ", \"tol\": " + jnum(c.tol);
      if (!c.detail.empty()) s += ", \"detail\": \"" + c.detail + "\"";
      s += "}";
      if (!c.pass) ++failed;
    }
    s += "], \"failed\": " + std::to_string(failed) + "}";
    out.line(s);
  } else {
    for (const auto& c : all) {
      std::string tag = c.p ? "[p=" + std::to_string(c.p) + "]" : "[global]";
      std::string meas;
      if (c.worst >= 0) meas = "worst=" + fmt17(c.worst).substr(0, 10) + " tol=" + fmt17(c.tol).substr(0, 8);
      std::snprintf(buf, sizeof buf, "%-8s %-36s %s  %s %s", tag.c_str(), c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", meas.c_str(), c.detail.c_str());
      out.line(buf);
      if (!c.pass) ++failed;
    }
    std::snprintf(buf, sizeof buf, "summary: %zu checks, %zu passed, %d failed",
                  all.size(), all.size() - failed, failed);
    out.line(buf);
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher trigonometric pair (s_p, c_p): constants, evaluation, verification"};
  app.require_subcommand(1);

  int p = 2;
  bool json = false;
  std::string out_path;
  double tol = 0.0;

  auto* sc_constants = app.add_subcommand("constants", "print the constant set for one p");
  sc_constants->add_option("--p", p, "integer parameter p >= 2")->required();
  sc_constants->add_flag("--json", json, "emit a single JSON object");
  sc_constants->add_option("--out", out_path, "write to file instead of stdout");

  double eval_x = 0.0;
  std::string eval_z;
  auto* sc_eval = app.add_subcommand("eval", "evaluate s, c, t at one point");
  sc_eval->add_option("--p", p, "integer parameter p >= 2")->required();
  auto* ox = sc_eval->add_option("--x", eval_x, "real argument");
  auto* oz = sc_eval->add_option("--z", eval_z, "complex argument '<re>,<im>'");
  ox->excludes(oz);
  sc_eval->add_flag("--json", json, "emit a single JSON object");
  sc_eval->add_option("--out", out_path, "write to file instead of stdout");

  double tbl_from = 0.0, tbl_to = 1.0, tbl_step = 0.1;
  auto* sc_table = app.add_subcommand("table", "tabulate s, c, t over a real interval (CSV)");
  sc_table->add_option("--p", p, "integer parameter p >= 2")->required();
  sc_table->add_option("--from", tbl_from, "interval start")->required();
  sc_table->add_option("--to", tbl_to, "interval end")->required();
  sc_table->add_option("--step", tbl_step, "sample spacing")->required();
  sc_table->add_flag("--json", json, "emit a single JSON object");
  sc_table->add_option("--out", out_path, "write to file instead of stdout");

  std::string grid_re, grid_im, grid_func = "s";
  auto* sc_grid = app.add_subcommand("grid", "sample one function on a complex grid (CSV)");
  sc_grid->add_option("--p", p, "integer parameter p >= 2")->required();
  sc_grid->add_option("--re", grid_re, "real axis range '<min>:<max>:<count>'")->required();
  sc_grid->add_option("--im", grid_im, "imaginary axis range '<min>:<max>:<count>'")->required();
  sc_grid->add_option("--func", grid_func, "function to sample: s, c, or t");
  sc_grid->add_flag("--json", json, "emit a single JSON object");
  sc_grid->add_option("--out", out_path, "write to file instead of stdout");

  int coeffs_n = 20;
  auto* sc_coeffs = app.add_subcommand("coeffs", "print nonzero Taylor coefficients");
  sc_coeffs->add_option("--p", p, "integer parameter p >= 2")->required();
  sc_coeffs->add_option("--n", coeffs_n, "highest index to print (>= 2)");
  sc_coeffs->add_flag("--json", json, "emit a single JSON object");
  sc_coeffs->add_option("--out", out_path, "write to file instead of stdout");

  std::string verify_p = "2,3,4,5,6";
  bool acceptance = false;
  auto* sc_verify = app.add_subcommand("verify", "run the invariant suite, exit 0 iff all pass");
  sc_verify->add_option("--p", verify_p, "comma-separated list of p values");
  sc_verify->add_option("--tol", tol, "relax residual tolerances up to this value");
  sc_verify->add_flag("--acceptance", acceptance, "run the fixed acceptance list instead");
  sc_verify->add_flag("--json", json, "emit a single JSON object");
  sc_verify->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_constants->parsed()) return cmd_constants(p, json, out_path);
    if (sc_eval->parsed())
      return cmd_eval(p, ox->count() > 0, eval_x, oz->count() > 0, eval_z, json, out_path);
    if (sc_table->parsed()) return cmd_table(p, tbl_from, tbl_to, tbl_step, json, out_path);
    if (sc_grid->parsed()) return cmd_grid(p, grid_re, grid_im, grid_func, json, out_path);
    if (sc_coeffs->parsed()) return cmd_coeffs(p, coeffs_n, json, out_path);
    if (sc_verify->parsed()) return cmd_verify(verify_p, tol, acceptance, json, out_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
