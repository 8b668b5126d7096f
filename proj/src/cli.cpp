#include "semigraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semigraph/io.hpp"
#include "semigraph/parse.hpp"

namespace semigraph {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoError("failed while reading '" + path + "'");
  return buffer.str();
}

Semigraph load(const std::string& path, std::istream& in) {
  return parse_semigraph(read_input(path, in));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"semigraph Laplacian spectra toolkit"};
  app.require_subcommand(1);

  std::string path = "-";
  double tol = 1e-8;        // connectivity / bound-flag threshold
  double solver_tol = 1e-12;
  int max_sweeps = 100;
  int precision = 12;
  bool as_csv = false;
  bool as_json = false;
  std::string variant = "proof";
  std::string family;
  std::int64_t n = 1;
  std::string spectrum_mode;

  auto* validate = app.add_subcommand("validate", "check a semigraph file");
  validate->add_option("input", path, "semigraph file, or - for stdin");

  auto* report = app.add_subcommand("report", "full classification, matrix and spectrum report");
  report->add_option("input", path, "semigraph file, or - for stdin");
  report->add_flag("--json", as_json, "emit JSON (default)");
  report->add_flag("--csv", as_csv, "emit CSV instead of JSON");
  report->add_option("--tol", tol, "connectivity and bound-flag tolerance (default 1e-8)");
  report->add_option("--precision", precision, "significant digits for CSV reals (default 12)");
  report->add_option("--max-sweeps", max_sweeps, "Jacobi sweep budget (default 100)");

  auto* spectrum = app.add_subcommand("spectrum", "numeric Laplacian eigenvalues");
  spectrum->add_option("input", path, "semigraph file, or - for stdin");
  spectrum->add_option("--tol", solver_tol, "eigensolver tolerance (default 1e-12)");
  spectrum->add_option("--max-sweeps", max_sweeps, "Jacobi sweep budget (default 100)");

  auto* bounds = app.add_subcommand("bounds", "extreme-eigenvalue bounds");
  bounds->add_option("input", path, "semigraph file, or - for stdin");
  bounds->add_option("--variant", variant, "argmax pair to report: literal or proof (default)")
      ->check(CLI::IsMember({"literal", "proof"}));
  bounds->add_option("--tol", tol, "bound-flag tolerance (default 1e-8)");
  bounds->add_option("--max-sweeps", max_sweeps, "Jacobi sweep budget (default 100)");

  auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
  charpoly->add_option("input", path, "semigraph file, or - for stdin");

  auto* gen = app.add_subcommand("gen", "generate a parametric family instance");
  gen->add_option("family", family, "star or tree3")
      ->required()
      ->check(CLI::IsMember({"star", "tree3"}));
  gen->add_option("--n", n, "family parameter (>= 1)")->required();
  gen->add_option("--spectrum", spectrum_mode, "emit spectrum instead of the file: closed, "
                                               "numeric or both")
      ->check(CLI::IsMember({"closed", "numeric", "both"}));
  gen->add_option("--tol", solver_tol, "eigensolver tolerance for numeric output");
  gen->add_option("--max-sweeps", max_sweeps, "Jacobi sweep budget (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  const JacobiOptions opts{solver_tol, max_sweeps};

  try {
    if (*validate) {
      const Semigraph g = load(path, in);
      out << "valid semigraph: n=" << g.vertex_count() << ", m=" << g.edge_count() << '\n';
    } else if (*report) {
      if (as_csv && as_json) throw ValidationError("--json and --csv are mutually exclusive");
      const Semigraph g = load(path, in);
      if (as_csv) {
        out << report_csv(g, tol, {1e-12, max_sweeps}, precision);
      } else {
        out << report_json(g, tol, {1e-12, max_sweeps});
      }
    } else if (*spectrum) {
      const Semigraph g = load(path, in);
      out << spectrum_json(eigenvalues_sym(laplacian(g), opts)) << '\n';
    } else if (*bounds) {
      const Semigraph g = load(path, in);
      const BoundsReport r = bounds_report(g, tol, {1e-12, max_sweeps});
      out << bounds_json(r, g,
                         variant == "literal" ? UpperVariant::Literal : UpperVariant::Proof)
          << '\n';
    } else if (*charpoly) {
      const Semigraph g = load(path, in);
      out << charpoly_json(charpoly_exact(laplacian(g))) << '\n';
    } else if (*gen) {
      const Semigraph g = family == "star" ? gen_star(n) : gen_tree3(n);
      if (spectrum_mode.empty()) {
        out << emit_semigraph(g);
      } else {
        const auto closed = family == "star" ? star_spectrum_closed(n) : tree3_spectrum_closed(n);
        if (spectrum_mode == "closed") {
          out << closed_spectrum_json(closed, family, n) << '\n';
        } else if (spectrum_mode == "numeric") {
          out << spectrum_json(eigenvalues_sym(laplacian(g), opts)) << '\n';
        } else {
          out << "{\"closed\":" << closed_spectrum_json(closed, family, n)
              << ",\"numeric\":" << spectrum_json(eigenvalues_sym(laplacian(g), opts)) << "}\n";
        }
      }
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace semigraph
