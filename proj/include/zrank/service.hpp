#pragma once

/**
 * @file service.hpp
 * @brief HTTP routes over the engine and the problem store.
 *
 *   GET    /api/health
 *   GET    /api/problems
 *   POST   /api/problems                     body: problem document
 *   GET    /api/problems/{id}
 *   PUT    /api/problems/{id}                body: problem document; If-Match or ?revision= for optimistic locking
 *   DELETE /api/problems/{id}
 *   POST   /api/problems/{id}/solve          {"method", "theta"?, "ideal"?, "centroid"?}
 *   POST   /api/problems/{id}/sensitivity    {"thetas": [...], "centroid"?}
 */

#include <cstdint>
#include <optional>
#include <string>

#include "httplib.h"
#include "zrank/io.hpp"
#include "zrank/store.hpp"
#include "zrank/todim.hpp"
#include "zrank/topsis.hpp"

namespace zrank {

namespace detail {

/// Error carrying the HTTP status it maps to.
struct HttpError {
  int status;
  json body;
};

inline HttpError http_error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return {status, std::move(extra)};
}

inline void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

inline json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw http_error(400, std::string("malformed JSON: ") + e.what());
  }
}

/// Parses and validates a problem document for storage. Degenerate criteria are
/// accepted here and reported when solving.
inline ProblemDocument accept_document(const std::string& body) {
  ProblemDocument doc;
  try {
    doc = parse_document(body);
  } catch (const DocumentError& e) {
    const int status = e.kind() == "syntax" ? 400 : 422;
    throw http_error(status, e.what(), {{"issues", issues_to_json(e.issues())}});
  }
  SolveOptions relaxed = doc.options();
  relaxed.drop_degenerate = true;
  const auto diags = validate(doc.problem, relaxed);
  if (has_errors(diags)) throw http_error(422, "problem is not solvable", {{"diagnostics", diagnostics_to_json(diags)}});
  return doc;
}

inline double theta_from(const json& v) {
  if (!v.is_number()) throw http_error(400, "theta must be a number");
  const double t = v.get<double>();
  if (!(t > 0.0) || !std::isfinite(t)) throw http_error(400, "theta must be positive, got " + v.dump());
  return t;
}

/// Request fields override the document defaults.
inline SolveOptions options_from(const json& body, const ProblemDocument& doc) {
  SolveOptions o = doc.options();
  if (!body.is_object()) throw http_error(400, "request body must be a JSON object");
  if (body.contains("theta")) o.theta = theta_from(body["theta"]);
  if (body.contains("ideal")) {
    const auto s = body["ideal"].is_string() ? body["ideal"].get<std::string>() : std::string{};
    auto ideal = parse_ideal_strategy(s);
    if (!ideal) throw http_error(400, "ideal must be \"argmax\" or \"componentwise\"");
    o.ideal = *ideal;
  }
  if (body.contains("centroid")) {
    const auto s = body["centroid"].is_string() ? body["centroid"].get<std::string>() : std::string{};
    auto mode = parse_centroid_mode(s);
    if (!mode) throw http_error(400, "centroid must be \"exact\" or \"eq19\"");
    o.centroid = *mode;
  }
  if (body.contains("drop_degenerate")) {
    if (!body["drop_degenerate"].is_boolean()) throw http_error(400, "drop_degenerate must be a boolean");
    o.drop_degenerate = body["drop_degenerate"].get<bool>();
  }
  return o;
}

inline std::optional<std::uint64_t> expected_revision(const httplib::Request& req) {
  std::string raw;
  if (req.has_header("If-Match")) raw = req.get_header_value("If-Match");
  else if (req.has_param("revision")) raw = req.get_param_value("revision");
  else return std::nullopt;
  if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') raw = raw.substr(1, raw.size() - 2);
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw http_error(400, "revision must be an unsigned integer, got '" + raw + "'");
  }
}

inline json problem_ref(const StoredProblem& s) { return {{"id", s.id}, {"revision", s.revision}}; }

}  // namespace detail

class Service {
 public:
  explicit Service(ProblemStore& store) : store_(store) {}

  void mount(httplib::Server& server) {
    using httplib::Request;
    using httplib::Response;

    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type, If-Match"},
                                {"Access-Control-Allow-Methods", "GET, POST, PUT, DELETE, OPTIONS"}});
    server.Options(R"(/api/.*)", [](const Request&, Response& res) { res.status = 204; });

    server.Get("/api/health", wrap([](const Request&, Response& res) {
                 detail::send_json(res, 200, {{"status", "ok"}, {"engine", engine_json()}});
               }));

    server.Get("/api/problems", wrap([this](const Request&, Response& res) {
                 json items = json::array();
                 for (const auto& s : store_.list()) items.push_back(stored_to_json(s, false));
                 detail::send_json(res, 200, {{"problems", std::move(items)}});
               }));

    server.Post("/api/problems", wrap([this](const Request& req, Response& res) {
                  auto stored = store_.create(detail::accept_document(req.body));
                  res.set_header("Location", "/api/problems/" + stored.id);
                  detail::send_json(res, 201, stored_to_json(stored, false));
                }));

    server.Get(R"(/api/problems/([0-9a-f]+))", wrap([this](const Request& req, Response& res) {
                 detail::send_json(res, 200, stored_to_json(require(req.matches[1])));
               }));

    server.Put(R"(/api/problems/([0-9a-f]+))", wrap([this](const Request& req, Response& res) {
                 const std::string id = req.matches[1];
                 require(id);
                 const auto expected = detail::expected_revision(req);
                 auto stored = store_.update(id, detail::accept_document(req.body), expected);
                 detail::send_json(res, 200, stored_to_json(stored, false));
               }));

    server.Delete(R"(/api/problems/([0-9a-f]+))", wrap([this](const Request& req, Response& res) {
                    store_.remove(req.matches[1]);
                    res.status = 204;
                  }));

    server.Post(R"(/api/problems/([0-9a-f]+)/solve)", wrap([this](const Request& req, Response& res) {
                  const auto stored = require(req.matches[1]);
                  const json body = detail::parse_body(req);
                  const SolveOptions opts = detail::options_from(body, stored.document);
                  const std::string method_name =
                      body.contains("method") && body["method"].is_string() ? body["method"].get<std::string>() : "";
                  const auto method = parse_method(method_name);
                  if (!method) throw detail::http_error(400, "method must be \"todim\" or \"topsis\"");
                  const auto result = *method == Method::todim ? rank_todim(stored.document.problem, opts)
                                                               : rank_topsis(stored.document.problem, opts);
                  json out = result_to_json(result);
                  out["problem"] = detail::problem_ref(stored);
                  detail::send_json(res, 200, out);
                }));

    server.Post(R"(/api/problems/([0-9a-f]+)/sensitivity)", wrap([this](const Request& req, Response& res) {
                  const auto stored = require(req.matches[1]);
                  const json body = detail::parse_body(req);
                  if (!body.is_object() || !body.contains("thetas") || !body["thetas"].is_array() ||
                      body["thetas"].empty())
                    throw detail::http_error(400, "thetas must be a non-empty array of positive numbers");
                  std::vector<double> thetas;
                  for (std::size_t k = 0; k < body["thetas"].size(); ++k) {
                    try {
                      thetas.push_back(detail::theta_from(body["thetas"][k]));
                    } catch (detail::HttpError& e) {
                      e.body["index"] = k;
                      throw;
                    }
                  }
                  json opts_body = body;
                  opts_body.erase("thetas");
                  const SolveOptions opts = detail::options_from(opts_body, stored.document);
                  json out = sensitivity_to_json(sensitivity(stored.document.problem, thetas, opts));
                  out["problem"] = detail::problem_ref(stored);
                  detail::send_json(res, 200, out);
                }));
  }

 private:
  StoredProblem require(const std::string& id) const {
    auto s = store_.get(id);
    if (!s) throw NotFound(id);
    return *s;
  }

  /// Maps domain exceptions onto status codes.
  template <typename Handler>
  static httplib::Server::Handler wrap(Handler handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const detail::HttpError& e) {
        detail::send_json(res, e.status, e.body);
      } catch (const NotFound& e) {
        detail::send_json(res, 404, {{"error", e.what()}});
      } catch (const StaleRevision& e) {
        detail::send_json(res, 409, {{"error", e.what()}, {"current_revision", e.current()}});
      } catch (const InvalidTheta& e) {
        detail::send_json(res, 400, {{"error", e.what()}});
      } catch (const DegenerateCriterion& e) {
        detail::send_json(res, 422, {{"error", e.what()}, {"criterion", e.index()}});
      } catch (const ValidationError& e) {
        detail::send_json(res, 422, {{"error", e.what()}, {"diagnostics", diagnostics_to_json(e.diagnostics())}});
      } catch (const std::exception& e) {
        detail::send_json(res, 500, {{"error", e.what()}});
      }
    };
  }

  ProblemStore& store_;
};

}  // namespace zrank
