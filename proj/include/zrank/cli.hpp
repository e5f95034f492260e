#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. Kept in a header so tests can drive it in-process.
 *
 * Exit codes: 0 success, 1 validation failure, 2 usage error.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zrank/zrank.hpp"

namespace zrank::cli {

inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kUsageError = 2;

/// Environment variable naming the directory searched for problem files given by bare name.
inline constexpr const char* kDataDirEnv = "ZRANK_DATA_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::filesystem::path locate(const std::string& file) {
  std::filesystem::path p(file);
  if (std::filesystem::exists(p)) return p;
  if (const char* dir = std::getenv(kDataDirEnv); dir && *dir && p.is_relative()) {
    auto candidate = std::filesystem::path(dir) / p;
    if (std::filesystem::exists(candidate)) return candidate;
  }
  throw UsageError("cannot open problem file '" + file + "'");
}

inline ProblemDocument load_document(const std::string& file) {
  const auto path = locate(file);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open problem file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

/// Comma-separated theta list; every entry must be a positive number.
inline std::vector<double> parse_theta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t index = 0;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty theta at index " + std::to_string(index));
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("theta at index " + std::to_string(index) + " is not a number: " + item);
    if (!(v > 0.0)) throw UsageError("theta at index " + std::to_string(index) + " must be positive: " + item);
    out.push_back(v);
    ++index;
  }
  if (out.empty()) throw UsageError("theta list is empty");
  return out;
}

struct Settings {
  std::string file;
  std::string method;
  std::optional<double> theta;
  std::string thetas;
  std::string ideal;
  std::string centroid;
  std::string format = "table";
  int precision = 4;
  bool drop_degenerate = false;
};

inline SolveOptions resolve_options(const Settings& s, const ProblemDocument& doc) {
  SolveOptions o = doc.options();
  if (s.theta) {
    if (!(*s.theta > 0.0)) throw UsageError("--theta must be positive");
    o.theta = *s.theta;
  }
  if (!s.ideal.empty()) {
    auto v = parse_ideal_strategy(s.ideal);
    if (!v) throw UsageError("--ideal must be argmax or componentwise");
    o.ideal = *v;
  }
  if (!s.centroid.empty()) {
    auto v = parse_centroid_mode(s.centroid);
    if (!v) throw UsageError("--centroid must be exact or eq19");
    o.centroid = *v;
  }
  o.drop_degenerate = s.drop_degenerate;
  return o;
}

inline ReportFormat resolve_format(const Settings& s) {
  auto f = parse_report_format(s.format);
  if (!f) throw UsageError("unknown format '" + s.format + "'");
  return *f;
}

inline void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& err) {
  for (const auto& d : diags) {
    err << (d.severity == Severity::error ? "error" : "warning") << " [" << d.code << "]";
    if (d.row && d.col) err << " at (" << *d.row << ", " << *d.col << ")";
    else if (d.col) err << " at criterion " << *d.col;
    err << ": " << d.message << '\n';
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Rank alternatives rated with Z-numbers using TODIM or TOPSIS", "zrank"};
  app.require_subcommand(1);
  Settings s;

  auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", s.file, "problem document (JSON)")->required(); };
  auto add_format = [&](CLI::App* cmd, const std::string& allowed) {
    cmd->add_option("--format", s.format, "output format: " + allowed);
    cmd->add_option("--precision", s.precision, "decimal places")->check(CLI::Range(0, 17));
  };
  auto add_conventions = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", s.ideal, "TOPSIS ideal strategy: argmax|componentwise");
    cmd->add_option("--centroid", s.centroid, "reliability collapse: exact|eq19");
    cmd->add_flag("--drop-degenerate", s.drop_degenerate, "drop zero-range criteria instead of failing");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a problem document");
  add_file(validate_cmd);
  validate_cmd->add_flag("--drop-degenerate", s.drop_degenerate, "treat zero-range criteria as warnings");

  auto* convert_cmd = app.add_subcommand("convert", "print the matrix after Z-number conversion");
  add_file(convert_cmd);
  add_format(convert_cmd, "table|json|csv");
  convert_cmd->add_option("--centroid", s.centroid, "reliability collapse: exact|eq19");

  auto* solve_cmd = app.add_subcommand("solve", "rank the alternatives");
  add_file(solve_cmd);
  solve_cmd->add_option("--method", s.method, "todim|topsis")->required();
  solve_cmd->add_option("--theta", s.theta, "TODIM loss attenuation factor");
  add_conventions(solve_cmd);
  add_format(solve_cmd, "table|json|csv");

  auto* sens_cmd = app.add_subcommand("sensitivity", "TODIM global values over a list of theta");
  add_file(sens_cmd);
  sens_cmd->add_option("--theta", s.thetas, "comma-separated theta list")->required();
  sens_cmd->add_option("--centroid", s.centroid, "reliability collapse: exact|eq19");
  sens_cmd->add_flag("--drop-degenerate", s.drop_degenerate, "drop zero-range criteria instead of failing");
  add_format(sens_cmd, "table|json|csv|plot");

  auto* compare_cmd = app.add_subcommand("compare", "TODIM and TOPSIS side by side");
  add_file(compare_cmd);
  compare_cmd->add_option("--theta", s.theta, "TODIM loss attenuation factor");
  add_conventions(compare_cmd);
  add_format(compare_cmd, "table|json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) err << sub->help();
    else err << app.help();
    return kUsageError;
  }

  try {
    const ProblemDocument doc = load_document(s.file);

    if (validate_cmd->parsed()) {
      SolveOptions o = doc.options();
      o.drop_degenerate = s.drop_degenerate;
      const auto diags = validate(doc.problem, o);
      print_diagnostics(diags, err);
      if (has_errors(diags)) return kValidationFailure;
      out << "ok: " << doc.problem.alternative_count() << " alternatives x " << doc.problem.criterion_count()
          << " criteria\n";
      return kOk;
    }

    const ReportFormat format = resolve_format(s);
    if (convert_cmd->parsed()) {
      const SolveOptions o = resolve_options(s, doc);
      out << emit_conversion(doc.problem, format, s.precision, o.centroid);
      return kOk;
    }
    if (solve_cmd->parsed()) {
      const auto method = parse_method(s.method);
      if (!method) throw UsageError("--method must be todim or topsis");
      const auto result = solve(doc.problem, *method, resolve_options(s, doc));
      out << emit_report(result, format, s.precision);
      return kOk;
    }
    if (sens_cmd->parsed()) {
      const auto thetas = parse_theta_list(s.thetas);
      const auto report = sensitivity(doc.problem, thetas, resolve_options(s, doc));
      out << emit_report(report, format, s.precision);
      return kOk;
    }
    if (compare_cmd->parsed()) {
      const SolveOptions o = resolve_options(s, doc);
      out << emit_comparison(rank_todim(doc.problem, o), rank_topsis(doc.problem, o), format, s.precision);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedFormat& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidTheta& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DocumentError& e) {
    for (const auto& i : e.issues()) {
      err << e.kind() << " error";
      if (i.line) err << " at line " << *i.line;
      if (!i.path.empty()) err << " at " << i.path;
      err << ": " << i.message << '\n';
    }
    return kValidationFailure;
  } catch (const ValidationError& e) {
    print_diagnostics(e.diagnostics(), err);
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kUsageError;
}

}  // namespace zrank::cli
