#include "knotconc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>

#include "knotconc/errors.hpp"
#include "knotconc/lspace.hpp"
#include "knotconc/polyio.hpp"
#include "knotconc/rootloc.hpp"
#include "knotconc/scan.hpp"

namespace knotconc {

namespace {

std::string render_int_poly(const IntPoly& p, char var) {
  std::string s = render_poly(LaurentPoly(p));
  std::replace(s.begin(), s.end(), 't', var);
  return s;
}

std::string verify_line_json(const PnFamily& fam) {
  const PnCertificates& c = *fam.verified;
  nlohmann::ordered_json j;
  j["n"] = fam.n;
  j["poly"] = render_poly(fam.laurent());
  j["symmetric"] = c.symmetric;
  j["value_at_1"] = c.value_at_1.get_str();
  j["irreducible"] = c.irreducible;
  j["trace_polynomial"] = render_int_poly(c.trace_quadratic, 'x');
  j["unit_circle_roots"] = c.unit_circle_roots;
  j["real_root_outside_2"] = c.real_root_outside_2;
  j["value_at_minus_n_minus_1"] = c.value_at_minus_n_minus_1.get_str();
  j["value_at_minus_n_minus_2"] = c.value_at_minus_n_minus_2.get_str();
  j["real_root_interval"] = {c.outside_witness->lo.get_str(), c.outside_witness->hi.get_str()};
  return j.dump();
}

std::string verify_line_tsv(const PnFamily& fam) {
  const PnCertificates& c = *fam.verified;
  return std::to_string(fam.n) + '\t' + render_poly(fam.laurent()) + '\t' + (c.symmetric ? "true" : "false") +
         '\t' + c.value_at_1.get_str() + '\t' + (c.irreducible ? "true" : "false") + '\t' +
         render_int_poly(c.trace_quadratic, 'x') + '\t' + std::to_string(c.unit_circle_roots) + '\t' +
         c.value_at_minus_n_minus_1.get_str() + '\t' + c.value_at_minus_n_minus_2.get_str() + '\t' + "(" +
         c.outside_witness->lo.get_str() + "," + c.outside_witness->hi.get_str() + ")";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concordance obstruction checks for Alexander polynomials", "knotconc"};
  app.require_subcommand(1);

  std::optional<std::int64_t> nmax;
  int digits = 12;
  std::string format = "json";
  unsigned jobs = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nmax", nmax, "Upper end of the fallback candidate scan")->check(CLI::PositiveNumber);
    sub->add_option("--digits", digits, "Precision of numeric diagnostics")
        ->check(CLI::Range(1, kMaxNumericDigits));
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  };

  std::string poly_text;
  auto* check = app.add_subcommand("check", "Report on a single polynomial");
  check->add_option("poly", poly_text, "Polynomial, e.g. 1+7t-15t^2+7t^3+t^4")->required();
  add_common(check);

  std::string csv_path;
  auto* scan = app.add_subcommand("scan", "Scan a name,alexander CSV corpus");
  scan->add_option("csv", csv_path, "Input CSV")->required();
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  add_common(scan);

  std::int64_t pn_n = 0;
  auto* pn_cmd = app.add_subcommand("pn", "Print the quartic P_n");
  pn_cmd->add_option("n", pn_n, "Family parameter, n >= 1")->required();

  std::int64_t family_max = 0;
  std::string family_format = "json";
  auto* family = app.add_subcommand("verify-family", "Certify P_n for n = 1..nmax, one line per n");
  family->add_option("--nmax", family_max, "Largest n")->required()->check(CLI::PositiveNumber);
  family->add_option("--format", family_format, "Line format")->check(CLI::IsMember({"json", "tsv"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ScanOptions opts;
  opts.nmax = nmax;
  opts.digits = digits;
  opts.format = format == "tsv" ? OutputFormat::tsv : OutputFormat::json;
  opts.jobs = jobs;

  try {
    if (*check) {
      try {
        out << serialize(check_poly(poly_text, opts));
      } catch (const ParseError& e) {
        err << "knotconc: " << e.what() << '\n';
        return kExitData;
      } catch (const ZeroPolynomial& e) {
        err << "knotconc: " << e.what() << '\n';
        return kExitData;
      }
      return kExitOk;
    }
    if (*scan) {
      ScanReport report;
      try {
        report = scan_csv(csv_path, opts);
      } catch (const HeaderMismatch& e) {
        err << "knotconc: " << e.what() << '\n';
        return kExitData;
      }
      out << serialize(report);
      return report.any_error() ? kExitRowErrors : kExitOk;
    }
    if (*pn_cmd) {
      if (pn_n < 1) {
        err << "knotconc: n must be at least 1\n";
        return kExitUsage;
      }
      out << render_poly(pn(pn_n).laurent()) << '\n';
      return kExitOk;
    }
    if (*family) {
      if (family_format == "tsv")
        out << "n\tpoly\tsymmetric\tvalue_at_1\tirreducible\ttrace_polynomial\tunit_circle_roots\t"
               "value_at_minus_n_minus_1\tvalue_at_minus_n_minus_2\treal_root_interval\n";
      for (std::int64_t n = 1; n <= family_max; ++n) {
        const PnFamily fam = verify_pn(pn(n));
        out << (family_format == "tsv" ? verify_line_tsv(fam) : verify_line_json(fam)) << '\n';
      }
      return kExitOk;
    }
  } catch (const VerificationFailure& e) {
    err << "knotconc: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "knotconc: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace knotconc
