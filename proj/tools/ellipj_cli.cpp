// ellipj: command-line front end.
//
//   ellipj eval --z 0.5+0i --m 1+0i [--tol 1e-13]
//   ellipj verify [--R 1.5] [--samples 100000] [--seed 42] [--tol 1e-13]
//                 [--format json|csv] [--out PATH]
//   ellipj monotone [--u-count 15] [--m1-count 21] [--fd-step 1e-5] [--out PATH]
//   ellipj coeffs [--n 40] [--out PATH]
//
// Complex literals are a+bi / a-bi (or a bare real), no whitespace.
// Exit codes: 0 ok; 2 domain/parse/config error; 3 coefficient table
// exhausted; 4 verification found a failing sample/row.
// ELLIPK_TABLE_N overrides the series-table size (default 384).

#include <CLI11.hpp>

#include <charconv>
#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include "ellipj/bounds.hpp"
#include "ellipj/coefficient_table.hpp"
#include "ellipj/series_eval.hpp"
#include "ellipj/sweep.hpp"

namespace {

double parse_double_strict(const char* first, const char* last,
                           const std::string& whole) {
  if (first != last && *first == '+') ++first;  // from_chars rejects '+'
  double v = 0.0;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    throw ellipj::DomainError("cannot parse complex literal '" + whole +
                              "' (expected a+bi, a-bi, or a bare real)");
  return v;
}

std::complex<double> parse_complex(const std::string& s) {
  if (s.empty())
    throw ellipj::DomainError("empty complex literal");
  const char* b = s.data();
  if (s.back() == 'i') {
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
        split = i;
    if (split == std::string::npos)
      throw ellipj::DomainError("cannot parse complex literal '" + s +
                                "' (expected a+bi or a-bi)");
    double re = parse_double_strict(b, b + split, s);
    double im = parse_double_strict(b + split, b + s.size() - 1, s);
    return {re, im};
  }
  return {parse_double_strict(b, b + s.size(), s), 0.0};
}

// "-" means stdout.
struct OutStream {
  explicit OutStream(const std::string& path) {
    if (path != "-") {
      file.open(path, std::ios::binary);
      if (!file)
        throw ellipj::DomainError("cannot open output path '" + path + "'");
    }
  }
  std::ostream& get() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

int cmd_eval(const std::string& zs, const std::string& ms, double tol) {
  std::complex<double> z = parse_complex(zs), m = parse_complex(ms);
  const ellipj::SeriesTable& table = ellipj::default_table();
  ellipj::EvalResult rs = ellipj::sn_series(z, m, tol, table);
  ellipj::EvalResult rc = ellipj::cn_series(z, m, tol, table);
  ellipj::EvalResult rd = ellipj::dn_series(z, m, tol, table);

  std::string out;
  auto put = [&out](const char* name, const ellipj::EvalResult& r) {
    out += '"';
    out += name;
    out += R"(":{"value":)";
    ellipj::detail::json_complex(out, r.value);
    out += R"(,"error_radius":)";
    ellipj::detail::json_number(out, r.error_radius);
    out += R"(,"terms_used":)";
    out += std::to_string(r.terms_used);
    out += R"(,"rounding_estimate":)";
    ellipj::detail::json_number(out, r.rounding_estimate);
    out += '}';
  };
  out += R"({"z":)";
  ellipj::detail::json_complex(out, z);
  out += R"(,"m":)";
  ellipj::detail::json_complex(out, m);
  out += R"(,"tol":)";
  ellipj::detail::json_number(out, tol);
  out += ',';
  put("sn", rs);
  out += ',';
  put("cn", rc);
  out += ',';
  put("dn", rd);
  out += '}';
  std::cout << out << '\n';
  return 0;
}

int cmd_verify(const ellipj::SweepConfig& cfg) {
  OutStream out(cfg.output_path);
  ellipj::VerifySummary sum = ellipj::run_verify(cfg, out.get());
  if (cfg.format == ellipj::OutputFormat::csv)
    std::cerr << ellipj::summary_json(cfg, sum) << '\n';
  return sum.all_passed() ? 0 : 4;
}

int cmd_monotone(unsigned u_count, unsigned m1_count, double h,
                 const std::string& out_path) {
  OutStream out(out_path);
  ellipj::MonotoneRunResult res =
      ellipj::run_monotone(u_count, m1_count, out.get(), h);
  return res.all_rows_negative ? 0 : 4;
}

int cmd_coeffs(unsigned n, const std::string& out_path) {
  ellipj::CoefficientTable table = ellipj::generate_table(n);
  OutStream out(out_path);
  ellipj::write_table_json(table, out.get());
  out.get().flush();
  if (!out.get())
    throw ellipj::DomainError("failed writing coefficient table to '" +
                              out_path + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi elliptic functions sn/cn/dn for complex argument and "
               "complex parameter, with bound verification sweeps"};
  app.require_subcommand(1);

  std::string zs, ms;
  double tol = 1e-13;
  auto* eval = app.add_subcommand("eval", "evaluate sn, cn, dn at one (z, m)");
  eval->add_option("--z", zs, "argument, a+bi")->required();
  eval->add_option("--m", ms, "parameter, a+bi (|m| <= 1)")->required();
  eval->add_option("--tol", tol, "truncation tolerance (default 1e-13)");

  ellipj::SweepConfig cfg;
  std::string format = "json";
  auto* verify = app.add_subcommand(
      "verify", "sweep the bound chains over random (z, m) samples");
  verify->add_option("--R", cfg.R, "argument-disk radius (default 1.5)");
  verify->add_option("--samples", cfg.samples, "sample count (default 100000)");
  verify->add_option("--seed", cfg.seed, "RNG seed (default 42)");
  verify->add_option("--tol", cfg.tol, "series tolerance (default 1e-13)");
  verify->add_option("--format", format, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", cfg.output_path, "output path, - for stdout");

  unsigned u_count = 15, m1_count = 21;
  double fd_h = 1e-5;
  std::string mono_out = "-";
  auto* monotone = app.add_subcommand(
      "monotone", "verify the quotient bounds decrease in m1");
  monotone->add_option("--u-count", u_count, "u grid points on (0, 1.5]");
  monotone->add_option("--m1-count", m1_count, "m1 grid points on [0, 1]");
  monotone->add_option("--fd-step", fd_h,
                       "finite-difference stride (default 1e-5)");
  monotone->add_option("--out", mono_out, "output path, - for stdout");

  unsigned coeffs_n = 40;
  std::string coeffs_out = "-";
  auto* coeffs = app.add_subcommand(
      "coeffs", "export the exact coefficient table as JSON");
  coeffs->add_option("--n", coeffs_n, "max index (default 40)");
  coeffs->add_option("--out", coeffs_out, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(zs, ms, tol);
    if (verify->parsed()) {
      cfg.format = format == "csv" ? ellipj::OutputFormat::csv
                                   : ellipj::OutputFormat::json_lines;
      return cmd_verify(cfg);
    }
    if (monotone->parsed()) return cmd_monotone(u_count, m1_count, fd_h, mono_out);
    if (coeffs->parsed()) return cmd_coeffs(coeffs_n, coeffs_out);
  } catch (const ellipj::TableExhausted& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: raise ELLIPK_TABLE_N or relax --tol; convergence "
                 "slows sharply as |z| approaches pi/2\n";
    return 3;
  } catch (const ellipj::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
