#pragma once

/**
 * @file io.hpp
 * @brief JSON problem documents and report rendering.
 *
 * Cell forms accepted in a document:
 *   {"crisp": x}  or a bare number
 *   {"tri": [a, b, c], "height": h}          height optional
 *   {"trap": [a, b, c, d], "height": h}      height optional
 *   {"z": {"a": <fuzzy|term>, "b": <fuzzy|term>}}
 *   {"term": "H", "scale": "ratings"}
 *   null                                      missing (reported by validate)
 */

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zrank/problem.hpp"
#include "zrank/result.hpp"
#include "zrank/todim.hpp"
#include "zrank/topsis.hpp"

namespace zrank {

using json = nlohmann::json;

/// Method settings a document may carry; unset fields fall back to SolveOptions defaults.
struct MethodDefaults {
  std::optional<double> theta;
  std::optional<IdealStrategy> ideal;
  std::optional<CentroidMode> centroid;

  friend bool operator==(const MethodDefaults&, const MethodDefaults&) = default;
};

struct ProblemDocument {
  DecisionProblem problem;
  MethodDefaults defaults;

  [[nodiscard]] SolveOptions options() const {
    SolveOptions o;
    if (defaults.theta) o.theta = *defaults.theta;
    if (defaults.ideal) o.ideal = *defaults.ideal;
    if (defaults.centroid) o.centroid = *defaults.centroid;
    return o;
  }

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

/// One located problem in a document. `path` is a JSON pointer; `line` is set for syntax errors.
struct DocumentIssue {
  std::string path;
  std::string message;
  std::optional<std::size_t> line;
};

class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string kind, std::vector<DocumentIssue> issues)
      : std::runtime_error(summarize(kind, issues)), kind_(std::move(kind)), issues_(std::move(issues)) {}

  /// "syntax" for malformed JSON, "schema" for well-formed JSON that is not a valid problem.
  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<DocumentIssue>& issues() const noexcept { return issues_; }

 private:
  static std::string summarize(const std::string& kind, const std::vector<DocumentIssue>& issues) {
    std::string out = kind + " error";
    for (const auto& i : issues) {
      out += "; ";
      if (i.line) out += "line " + std::to_string(*i.line) + ": ";
      if (!i.path.empty()) out += i.path + ": ";
      out += i.message;
    }
    return out;
  }

  std::string kind_;
  std::vector<DocumentIssue> issues_;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class DocumentReader {
 public:
  explicit DocumentReader(const json& root) : root_(root) {}

  ProblemDocument read() {
    ProblemDocument doc;
    if (!root_.is_object()) {
      fail("", "document must be a JSON object");
      finish();
    }
    auto& p = doc.problem;
    if (root_.contains("name")) p.name = string_at(root_["name"], "/name");

    if (root_.contains("scales")) read_scales(root_["scales"], p);

    const json& alts = member(root_, "alternatives", "");
    if (alts.is_array()) {
      for (std::size_t i = 0; i < alts.size(); ++i)
        p.alternatives.push_back(string_at(alts[i], "/alternatives/" + std::to_string(i)));
    } else if (!alts.is_null()) {
      fail("/alternatives", "must be an array of labels");
    }

    const json& crits = member(root_, "criteria", "");
    if (crits.is_array()) {
      for (std::size_t j = 0; j < crits.size(); ++j) p.criteria.push_back(read_criterion(crits[j], j, p));
    } else if (!crits.is_null()) {
      fail("/criteria", "must be an array");
    }

    const json& rows = member(root_, "ratings", "");
    if (rows.is_array()) {
      if (rows.size() != p.alternatives.size())
        fail("/ratings", "dimension mismatch: " + std::to_string(rows.size()) + " rows for " +
                             std::to_string(p.alternatives.size()) + " alternatives");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string path = "/ratings/" + std::to_string(i);
        if (!rows[i].is_array()) {
          fail(path, "row must be an array");
          p.ratings.emplace_back();
          continue;
        }
        if (rows[i].size() != p.criteria.size())
          fail(path, "dimension mismatch: " + std::to_string(rows[i].size()) + " cells for " +
                         std::to_string(p.criteria.size()) + " criteria");
        std::vector<Cell> row;
        for (std::size_t j = 0; j < rows[i].size(); ++j)
          row.push_back(read_cell(rows[i][j], path + "/" + std::to_string(j), p, true));
        p.ratings.push_back(std::move(row));
      }
    } else if (!rows.is_null()) {
      fail("/ratings", "must be an array of rows");
    }

    if (root_.contains("defaults")) read_defaults(root_["defaults"], doc.defaults);
    if (uses_default_scale_) p.scales.emplace(kDefaultReliabilityScale, default_reliability_scale());
    finish();
    return doc;
  }

 private:
  void fail(std::string path, std::string message) { issues_.push_back({std::move(path), std::move(message), {}}); }

  void finish() {
    if (!issues_.empty()) throw DocumentError("schema", std::move(issues_));
  }

  const json& member(const json& obj, const char* key, const std::string& path) {
    static const json null_value;
    if (!obj.is_object() || !obj.contains(key)) {
      fail(path + "/" + key, "required field is missing");
      return null_value;
    }
    return obj[key];
  }

  std::string string_at(const json& v, const std::string& path) {
    if (!v.is_string()) {
      fail(path, "must be a string");
      return {};
    }
    return v.get<std::string>();
  }

  /// A missing field is reported once, not again as a type error.
  std::string required_string(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) {
      fail(path + "/" + key, "required field is missing");
      return {};
    }
    return string_at(obj[key], path + "/" + key);
  }

  double number_at(const json& v, const std::string& path) {
    if (!v.is_number()) {
      fail(path, "must be a number");
      return 0.0;
    }
    return v.get<double>();
  }

  void read_scales(const json& scales, DecisionProblem& p) {
    if (!scales.is_object()) {
      fail("/scales", "must be an object of named scales");
      return;
    }
    for (const auto& [name, entries] : scales.items()) {
      const std::string path = "/scales/" + name;
      LinguisticScale scale{name, {}};
      if (!entries.is_object()) {
        fail(path, "scale must map term labels to fuzzy numbers");
        continue;
      }
      for (const auto& [label, value] : entries.items()) {
        if (auto f = read_fuzzy(value, path + "/" + label, nullptr)) scale.entries.emplace(label, *f);
      }
      p.scales.emplace(name, std::move(scale));
    }
  }

  Criterion read_criterion(const json& v, std::size_t j, const DecisionProblem& p) {
    const std::string path = "/criteria/" + std::to_string(j);
    Criterion c;
    if (!v.is_object()) {
      fail(path, "criterion must be an object");
      return c;
    }
    c.id = required_string(v, "id", path);
    const std::string kind = required_string(v, "kind", path);
    if (auto k = parse_criterion_kind(kind)) {
      c.kind = *k;
    } else if (!kind.empty()) {
      fail(path + "/kind", "kind must be \"benefit\" or \"cost\", got \"" + kind + "\"");
    }
    c.weight = v.contains("weight") ? read_cell(v["weight"], path + "/weight", p, false) : Cell{Crisp{1.0}};
    return c;
  }

  std::optional<FuzzyTrapezoid> check_trapezoid(FuzzyTrapezoid f, const std::string& path) {
    if (!f.valid()) {
      fail(path, "invalid trapezoid " + to_string(f) + ": requires a1 <= a2 <= a3 <= a4 and 0 < height <= 1");
      return std::nullopt;
    }
    return f;
  }

  std::optional<double> height_of(const json& v, const std::string& path) {
    if (!v.contains("height")) return 1.0;
    const json& h = v["height"];
    if (!h.is_number()) {
      fail(path + "/height", "must be a number");
      return std::nullopt;
    }
    return h.get<double>();
  }

  std::optional<std::vector<double>> numbers(const json& arr, std::size_t count, const std::string& path) {
    if (!arr.is_array() || arr.size() != count) {
      fail(path, "expected an array of " + std::to_string(count) + " numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    for (std::size_t k = 0; k < count; ++k) {
      if (!arr[k].is_number()) {
        fail(path + "/" + std::to_string(k), "must be a number");
        return std::nullopt;
      }
      out.push_back(arr[k].get<double>());
    }
    return out;
  }

  /// tri / trap / crisp literal. Term objects are handled by the caller.
  std::optional<FuzzyTrapezoid> read_fuzzy(const json& v, const std::string& path, bool* is_term) {
    if (is_term) *is_term = false;
    if (v.is_number()) return FuzzyTrapezoid::crisp(v.get<double>());
    if (!v.is_object()) {
      fail(path, "expected a fuzzy number");
      return std::nullopt;
    }
    if (v.contains("tri")) {
      auto h = height_of(v, path);
      auto xs = numbers(v["tri"], 3, path + "/tri");
      if (!xs || !h) return std::nullopt;
      return check_trapezoid(FuzzyTrapezoid::triangular((*xs)[0], (*xs)[1], (*xs)[2], *h), path);
    }
    if (v.contains("trap")) {
      auto h = height_of(v, path);
      auto xs = numbers(v["trap"], 4, path + "/trap");
      if (!xs || !h) return std::nullopt;
      return check_trapezoid({(*xs)[0], (*xs)[1], (*xs)[2], (*xs)[3], *h}, path);
    }
    if (v.contains("crisp")) return FuzzyTrapezoid::crisp(number_at(v["crisp"], path + "/crisp"));
    if (v.contains("term") && is_term) {
      *is_term = true;
      return std::nullopt;
    }
    fail(path, "expected one of \"tri\", \"trap\", \"crisp\"");
    return std::nullopt;
  }

  std::optional<TermRef> read_term(const json& v, const std::string& path, const DecisionProblem& p) {
    TermRef t;
    t.label = string_at(v["term"], path + "/term");
    t.scale = required_string(v, "scale", path);
    if (t.label.empty() || t.scale.empty()) return std::nullopt;
    const auto it = p.scales.find(t.scale);
    if (it == p.scales.end() && t.scale == kDefaultReliabilityScale) {
      if (!default_reliability_scale().contains(t.label))
        fail(path + "/term", "unknown term '" + t.label + "' in scale '" + t.scale + "'");
      uses_default_scale_ = true;
    } else if (it == p.scales.end()) {
      fail(path + "/scale", "unknown scale '" + t.scale + "'");
    } else if (!it->second.contains(t.label)) {
      fail(path + "/term", "unknown term '" + t.label + "' in scale '" + t.scale + "'");
    }
    return t;
  }

  FuzzyOperand read_operand(const json& v, const std::string& path, const DecisionProblem& p) {
    bool is_term = false;
    if (v.is_object() && v.contains("term")) is_term = true;
    if (is_term) {
      if (auto t = read_term(v, path, p)) return *t;
      return FuzzyTrapezoid{};
    }
    if (auto f = read_fuzzy(v, path, nullptr)) return *f;
    return FuzzyTrapezoid{};
  }

  Cell read_cell(const json& v, const std::string& path, const DecisionProblem& p, bool allow_missing) {
    if (v.is_null()) {
      if (!allow_missing) fail(path, "value is required");
      return std::monostate{};
    }
    if (v.is_number()) return Crisp{v.get<double>()};
    if (!v.is_object()) {
      fail(path, "expected a cell object");
      return std::monostate{};
    }
    if (v.contains("crisp")) return Crisp{number_at(v["crisp"], path + "/crisp")};
    if (v.contains("term")) {
      if (auto t = read_term(v, path, p)) return *t;
      return std::monostate{};
    }
    if (v.contains("z")) {
      const json& z = v["z"];
      const std::string zp = path + "/z";
      if (!z.is_object()) {
        fail(zp, "must be an object with \"a\" and \"b\"");
        return std::monostate{};
      }
      ZCell cell;
      cell.restriction = read_operand(member(z, "a", zp), zp + "/a", p);
      cell.reliability = read_operand(member(z, "b", zp), zp + "/b", p);
      return cell;
    }
    if (auto f = read_fuzzy(v, path, nullptr)) return *f;
    return std::monostate{};
  }

  void read_defaults(const json& v, MethodDefaults& d) {
    if (!v.is_object()) {
      fail("/defaults", "must be an object");
      return;
    }
    if (v.contains("theta")) {
      const double t = number_at(v["theta"], "/defaults/theta");
      if (!(t > 0.0)) fail("/defaults/theta", "theta must be positive");
      d.theta = t;
    }
    if (v.contains("ideal")) {
      const std::string s = string_at(v["ideal"], "/defaults/ideal");
      if (auto i = parse_ideal_strategy(s)) d.ideal = *i;
      else fail("/defaults/ideal", "expected \"argmax\" or \"componentwise\"");
    }
    if (v.contains("centroid")) {
      const std::string s = string_at(v["centroid"], "/defaults/centroid");
      if (auto c = parse_centroid_mode(s)) d.centroid = *c;
      else fail("/defaults/centroid", "expected \"exact\" or \"eq19\"");
    }
  }

  const json& root_;
  std::vector<DocumentIssue> issues_;
  bool uses_default_scale_ = false;
};

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace detail

/// Reads an already parsed JSON value as a problem document.
inline ProblemDocument document_from_json(const json& root) { return detail::DocumentReader(root).read(); }

/// Parses a problem document. Throws DocumentError with located issues.
inline ProblemDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw DocumentError("syntax", {{"", e.what(), detail::line_of(text, byte)}});
  }
  return document_from_json(root);
}

inline DecisionProblem parse_problem(std::string_view text) { return parse_document(text).problem; }

// ---------------------------------------------------------------------------
// Serialization

inline json fuzzy_to_json(const FuzzyTrapezoid& f) {
  json out;
  if (f.is_triangular()) out["tri"] = {f.a1, f.a2, f.a4};
  else out["trap"] = {f.a1, f.a2, f.a3, f.a4};
  if (f.height != 1.0) out["height"] = f.height;
  return out;
}

inline json term_to_json(const TermRef& t) { return {{"term", t.label}, {"scale", t.scale}}; }

inline json operand_to_json(const FuzzyOperand& op) {
  if (const auto* t = std::get_if<TermRef>(&op)) return term_to_json(*t);
  return fuzzy_to_json(std::get<FuzzyTrapezoid>(op));
}

inline json cell_to_json(const Cell& cell) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const Crisp& c) const { return {{"crisp", c.value}}; }
    json operator()(const FuzzyTrapezoid& f) const { return fuzzy_to_json(f); }
    json operator()(const TermRef& t) const { return term_to_json(t); }
    json operator()(const ZCell& z) const {
      return {{"z", {{"a", operand_to_json(z.restriction)}, {"b", operand_to_json(z.reliability)}}}};
    }
  };
  return std::visit(Visitor{}, cell);
}

inline json document_to_json(const ProblemDocument& doc) {
  const auto& p = doc.problem;
  json out;
  out["name"] = p.name;
  out["alternatives"] = p.alternatives;
  json crits = json::array();
  for (const auto& c : p.criteria)
    crits.push_back({{"id", c.id}, {"kind", std::string(to_string(c.kind))}, {"weight", cell_to_json(c.weight)}});
  out["criteria"] = std::move(crits);
  json rows = json::array();
  for (const auto& row : p.ratings) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell_to_json(cell));
    rows.push_back(std::move(r));
  }
  out["ratings"] = std::move(rows);
  if (!p.scales.empty()) {
    json scales = json::object();
    for (const auto& [name, scale] : p.scales) {
      json entries = json::object();
      for (const auto& [label, f] : scale.entries) entries[label] = fuzzy_to_json(f);
      scales[name] = std::move(entries);
    }
    out["scales"] = std::move(scales);
  }
  json defaults = json::object();
  if (doc.defaults.theta) defaults["theta"] = *doc.defaults.theta;
  if (doc.defaults.ideal) defaults["ideal"] = std::string(to_string(*doc.defaults.ideal));
  if (doc.defaults.centroid) defaults["centroid"] = std::string(to_string(*doc.defaults.centroid));
  if (!defaults.empty()) out["defaults"] = std::move(defaults);
  return out;
}

inline std::string serialize_document(const ProblemDocument& doc, int indent = 2) {
  return document_to_json(doc).dump(indent);
}

inline std::string serialize_problem(const DecisionProblem& p, int indent = 2) {
  return serialize_document({p, {}}, indent);
}

inline json diagnostic_to_json(const Diagnostic& d) {
  json out{{"severity", d.severity == Severity::error ? "error" : "warning"}, {"code", d.code}, {"message", d.message}};
  if (d.row) out["row"] = *d.row;
  if (d.col) out["col"] = *d.col;
  return out;
}

inline json diagnostics_to_json(const std::vector<Diagnostic>& diags) {
  json out = json::array();
  for (const auto& d : diags) out.push_back(diagnostic_to_json(d));
  return out;
}

inline json issues_to_json(const std::vector<DocumentIssue>& issues) {
  json out = json::array();
  for (const auto& i : issues) {
    json e{{"path", i.path}, {"message", i.message}};
    if (i.line) e["line"] = *i.line;
    out.push_back(std::move(e));
  }
  return out;
}

inline json matrix_to_json(const Matrix<FuzzyTrapezoid>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& f : m.row(i)) row.push_back(fuzzy_to_json(f));
    out.push_back(std::move(row));
  }
  return out;
}

inline json matrix_to_json(const Matrix<double>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    out.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return out;
}

inline json fuzzy_list_to_json(std::span<const FuzzyTrapezoid> v) {
  json out = json::array();
  for (const auto& f : v) out.push_back(fuzzy_to_json(f));
  return out;
}

inline json conventions_to_json(const SolveOptions& o, std::optional<Method> method) {
  json out{{"centroid", std::string(to_string(o.centroid))},
           {"drop_degenerate", o.drop_degenerate},
           {"flip_cost", o.flip_cost}};
  if (!method || *method == Method::topsis) out["ideal"] = std::string(to_string(o.ideal));
  if (method && *method == Method::todim) out["theta"] = o.theta;
  return out;
}

inline json engine_json() { return {{"name", std::string(kEngineName)}, {"version", std::string(kEngineVersion)}}; }

inline json result_to_json(const RankingResult& r) {
  json out;
  out["engine"] = engine_json();
  out["method"] = std::string(to_string(r.method));
  out["conventions"] = conventions_to_json(r.options, r.method);
  out["alternatives"] = r.alternatives;
  out["criteria"] = r.criteria;
  out["scores"] = r.scores;
  out["ranks"] = r.ranks;
  out["order"] = r.order();
  out["tie"] = r.tie;
  out["degenerate"] = r.degenerate;

  json audit;
  audit["converted"] = matrix_to_json(r.converted);
  audit["converted_weights"] = fuzzy_list_to_json(r.converted_weights);
  audit["weights"] = r.weights;
  std::vector<std::string> kept;
  for (std::size_t j : r.normalized.criteria) kept.push_back(r.criteria[j]);
  audit["normalized"] = {{"criteria", kept},
                         {"values", matrix_to_json(r.normalized.values)},
                         {"weights", r.normalized.weights}};
  if (r.todim) {
    json partial = json::object();
    for (std::size_t k = 0; k < r.todim->dominance.partial.size(); ++k)
      partial[kept[k]] = matrix_to_json(r.todim->dominance.partial[k]);
    audit["dominance"] = {{"total", matrix_to_json(r.todim->dominance.total)},
                          {"partial", std::move(partial)},
                          {"row_sums", r.todim->row_sums}};
  }
  if (r.topsis) {
    audit["weighted"] = matrix_to_json(r.topsis->weighted);
    audit["ideals"] = {{"strategy", std::string(to_string(r.topsis->ideals.strategy))},
                       {"positive", fuzzy_list_to_json(r.topsis->ideals.positive)},
                       {"negative", fuzzy_list_to_json(r.topsis->ideals.negative)}};
    audit["distance_positive"] = r.topsis->distance_positive;
    audit["distance_negative"] = r.topsis->distance_negative;
  }
  out["audit"] = std::move(audit);
  out["warnings"] = diagnostics_to_json(r.warnings);
  return out;
}

inline json sensitivity_to_json(const SensitivityReport& rep) {
  json out;
  out["engine"] = engine_json();
  out["method"] = "todim";
  out["conventions"] = conventions_to_json(rep.options, std::nullopt);
  out["alternatives"] = rep.alternatives;
  out["thetas"] = rep.thetas;
  out["scores"] = matrix_to_json(rep.scores);
  out["ranks"] = rep.ranks;
  out["stable"] = rep.stable;
  return out;
}

// ---------------------------------------------------------------------------
// Text reports

enum class ReportFormat { table, json, csv, plot };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "table") return ReportFormat::table;
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "plot") return ReportFormat::plot;
  return std::nullopt;
}

class UnsupportedFormat : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-point rendering with `precision` decimals.
inline std::string format_fixed(double v, int precision = 4) {
  if (v == 0.0) v = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

/// Shortest decimal that round-trips, e.g. 1 -> "1", 0.5 -> "0.5".
inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string format_fuzzy(const FuzzyTrapezoid& f, int precision) {
  std::string out = "(" + format_fixed(f.a1, precision) + ", " + format_fixed(f.a2, precision);
  if (!f.is_triangular()) out += ", " + format_fixed(f.a3, precision);
  out += ", " + format_fixed(f.a4, precision);
  if (f.height != 1.0) out += "; " + format_fixed(f.height, precision);
  return out + ")";
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

/// Left-aligned text table with a dashed rule under the header.
inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    if (widths.size() < r.size()) widths.resize(r.size(), 0);
    for (std::size_t k = 0; k < r.size(); ++k) widths[k] = std::max(widths[k], r[k].size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      if (k) line += "  ";
      line += k + 1 == rows[i].size() ? rows[i][k] : pad(rows[i][k], widths[k]);
    }
    os << line << '\n';
    if (i == 0) {
      std::size_t total = 0;
      for (std::size_t k = 0; k < widths.size(); ++k) total += widths[k] + (k ? 2 : 0);
      os << std::string(total, '-') << '\n';
    }
  }
  return os.str();
}

}  // namespace detail

inline std::string emit_report(const RankingResult& r, ReportFormat format, int precision = 4) {
  switch (format) {
    case ReportFormat::json:
      return result_to_json(r).dump(2) + "\n";
    case ReportFormat::csv: {
      std::string out = "alt,xi,rank\n";
      for (std::size_t i = 0; i < r.scores.size(); ++i)
        out += csv_field(r.alternatives[i]) + "," + format_fixed(r.scores[i], precision) + "," +
               std::to_string(r.ranks[i]) + "\n";
      return out;
    }
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows{{"rank", "alternative", "xi"}};
      for (std::size_t i : r.order()) {
        std::string rank = std::to_string(r.ranks[i]);
        rows.push_back({rank, r.alternatives[i], format_fixed(r.scores[i], precision)});
      }
      std::string out = "method: " + std::string(to_string(r.method));
      if (r.method == Method::todim) out += "  theta: " + format_shortest(r.options.theta);
      else out += "  ideal: " + std::string(to_string(r.options.ideal));
      out += "  centroid: " + std::string(to_string(r.options.centroid)) + "\n";
      out += detail::render_table(rows);
      if (r.tie) out += "note: tied scores share a rank\n";
      if (r.degenerate) out += "note: degenerate result, every alternative scored 1\n";
      for (const auto& w : r.warnings) out += "warning: " + w.message + "\n";
      return out;
    }
    case ReportFormat::plot:
      break;
  }
  throw UnsupportedFormat("format 'plot' is only available for sensitivity reports");
}

inline std::string emit_report(const SensitivityReport& rep, ReportFormat format, int precision = 4) {
  switch (format) {
    case ReportFormat::json:
      return sensitivity_to_json(rep).dump(2) + "\n";
    case ReportFormat::csv: {
      std::string out = "alt";
      for (double t : rep.thetas) out += "," + format_shortest(t);
      out += "\n";
      for (std::size_t i = 0; i < rep.alternatives.size(); ++i) {
        out += csv_field(rep.alternatives[i]);
        for (std::size_t k = 0; k < rep.thetas.size(); ++k) out += "," + format_fixed(rep.scores(i, k), precision);
        out += "\n";
      }
      return out;
    }
    case ReportFormat::plot: {
      std::string out = "alternative,theta,xi\n";
      for (std::size_t i = 0; i < rep.alternatives.size(); ++i)
        for (std::size_t k = 0; k < rep.thetas.size(); ++k)
          out += csv_field(rep.alternatives[i]) + "," + format_shortest(rep.thetas[k]) + "," +
                 format_fixed(rep.scores(i, k), precision) + "\n";
      return out;
    }
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"alternative", "order"};
      for (double t : rep.thetas) header.push_back("theta=" + format_shortest(t));
      rows.push_back(std::move(header));
      for (std::size_t i = 0; i < rep.alternatives.size(); ++i) {
        std::vector<std::string> row{rep.alternatives[i], std::to_string(rep.ranks.front()[i])};
        for (std::size_t k = 0; k < rep.thetas.size(); ++k) row.push_back(format_fixed(rep.scores(i, k), precision));
        rows.push_back(std::move(row));
      }
      return detail::render_table(rows) + "rank order stable across theta: " + (rep.stable ? "yes" : "no") + "\n";
    }
  }
  throw UnsupportedFormat("unknown format");
}

/// Converted matrix (fuzzy numbers after applying reliabilities) with converted weights.
inline std::string emit_conversion(const DecisionProblem& p, ReportFormat format, int precision = 4,
                                   CentroidMode mode = CentroidMode::exact) {
  require_solvable(p, SolveOptions{.centroid = mode, .drop_degenerate = true});
  const auto converted = convert_matrix(p, mode);
  const auto weights = convert_weights(p, mode);
  const auto crisp = resolve_weights(p, mode);
  switch (format) {
    case ReportFormat::json: {
      json out;
      out["engine"] = engine_json();
      out["alternatives"] = p.alternatives;
      std::vector<std::string> ids;
      for (const auto& c : p.criteria) ids.push_back(c.id);
      out["criteria"] = ids;
      out["centroid"] = std::string(to_string(mode));
      out["converted"] = matrix_to_json(converted);
      out["converted_weights"] = fuzzy_list_to_json(weights);
      out["weights"] = crisp;
      return out.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::string out = "alt,criterion,a1,a2,a3,a4,height\n";
      auto line = [&](const std::string& alt, const std::string& crit, const FuzzyTrapezoid& f) {
        out += csv_field(alt) + "," + csv_field(crit) + "," + format_fixed(f.a1, precision) + "," +
               format_fixed(f.a2, precision) + "," + format_fixed(f.a3, precision) + "," +
               format_fixed(f.a4, precision) + "," + format_shortest(f.height) + "\n";
      };
      for (std::size_t j = 0; j < p.criteria.size(); ++j) line("weight", p.criteria[j].id, weights[j]);
      for (std::size_t i = 0; i < p.alternatives.size(); ++i)
        for (std::size_t j = 0; j < p.criteria.size(); ++j) line(p.alternatives[i], p.criteria[j].id, converted(i, j));
      return out;
    }
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{""};
      for (const auto& c : p.criteria) header.push_back(c.id + " (" + std::string(to_string(c.kind)) + ")");
      rows.push_back(std::move(header));
      std::vector<std::string> wrow{"weight"};
      for (const auto& w : weights) wrow.push_back(format_fuzzy(w, precision));
      rows.push_back(std::move(wrow));
      std::vector<std::string> crow{"crisp weight"};
      for (double w : crisp) crow.push_back(format_fixed(w, precision));
      rows.push_back(std::move(crow));
      for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
        std::vector<std::string> row{p.alternatives[i]};
        for (std::size_t j = 0; j < p.criteria.size(); ++j) row.push_back(format_fuzzy(converted(i, j), precision));
        rows.push_back(std::move(row));
      }
      return detail::render_table(rows);
    }
    case ReportFormat::plot:
      break;
  }
  throw UnsupportedFormat("format 'plot' is only available for sensitivity reports");
}

/// Both methods side by side, one row per alternative.
inline std::string emit_comparison(const RankingResult& todim, const RankingResult& topsis, ReportFormat format,
                                   int precision = 4) {
  switch (format) {
    case ReportFormat::json:
      return json{{"engine", engine_json()}, {"todim", result_to_json(todim)}, {"topsis", result_to_json(topsis)}}
                 .dump(2) + "\n";
    case ReportFormat::csv: {
      std::string out = "alt,todim,todim_rank,topsis,topsis_rank\n";
      for (std::size_t i = 0; i < todim.alternatives.size(); ++i)
        out += csv_field(todim.alternatives[i]) + "," + format_fixed(todim.scores[i], precision) + "," +
               std::to_string(todim.ranks[i]) + "," + format_fixed(topsis.scores[i], precision) + "," +
               std::to_string(topsis.ranks[i]) + "\n";
      return out;
    }
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows{
          {"alternative", "Z-TODIM (theta=" + format_shortest(todim.options.theta) + ")", "rank",
           "Z-TOPSIS (" + std::string(to_string(topsis.options.ideal)) + ")", "rank"}};
      for (std::size_t i = 0; i < todim.alternatives.size(); ++i)
        rows.push_back({todim.alternatives[i], format_fixed(todim.scores[i], precision), std::to_string(todim.ranks[i]),
                        format_fixed(topsis.scores[i], precision), std::to_string(topsis.ranks[i])});
      return detail::render_table(rows);
    }
    case ReportFormat::plot:
      break;
  }
  throw UnsupportedFormat("format 'plot' is only available for sensitivity reports");
}

}  // namespace zrank
