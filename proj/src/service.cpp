#include "tautilt/service.hpp"

#include <algorithm>

#include "httplib.h"
#include "tautilt/errors.hpp"

namespace tautilt {

namespace {

ServiceResponse error_response(int status, const std::string& kind, const std::string& message) {
  return {status, {{"error", kind}, {"message", message}}};
}

ServiceResponse not_found(const std::string& what) { return error_response(404, "NotFound", what); }

template <typename F>
ServiceResponse guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_response(e.kind() == ErrorKind::ParseError ? 400 : 422, to_string(e.kind()), e.what());
  } catch (const io::json::exception& e) {
    return error_response(400, "ParseError", e.what());
  }
}

io::json positions_json(const TauPair& pair) {
  io::json out = io::json::array();
  for (std::size_t k = 0; k < pair.size(); ++k) {
    io::json p = {{"index", k},
                  {"kind", pair.is_module_position(k) ? "module" : "support"},
                  {"direction", to_string(mutation_direction(pair, k))}};
    if (pair.is_module_position(k)) {
      p["label"] = loewy_label(pair.summands()[k].module);
    } else {
      p["vertex"] = pair.algebra()->vertex_name(pair.support_vertex(k));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionService::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

ServiceResponse SessionService::create_session(const std::string& algebra_document) {
  return guarded([&] {
    auto session = std::make_shared<Session>();
    session->algebra = io::parse_algebra(io::parse_json(algebra_document));
    session->explored.algebra = session->algebra;
    TauPair root = TauPair::regular(session->algebra);
    session->current = root.key();
    io::json summary = io::pair_summary(root);
    session->explored.vertices.emplace(root.key(), std::move(root));

    std::string id;
    {
      std::lock_guard lock(mutex_);
      id = "s" + std::to_string(next_id_++);
      sessions_.emplace(id, session);
    }
    return ServiceResponse{200, {{"sessionId", id}, {"rootKey", summary["key"]}, {"pair", summary}}};
  });
}

ServiceResponse SessionService::pair(const std::string& id, const std::string& key) {
  auto session = find(id);
  if (!session) return not_found("unknown session '" + id + "'");
  return guarded([&] {
    std::lock_guard lock(session->mutex);
    const auto it = session->explored.vertices.find(parse_key(key));
    if (it == session->explored.vertices.end()) return not_found("pair '" + key + "' has not been visited");
    io::json body = io::pair_summary(it->second);
    body["positions"] = positions_json(it->second);
    return ServiceResponse{200, body};
  });
}

ServiceResponse SessionService::mutate(const std::string& id, const std::string& key, const std::string& body) {
  auto session = find(id);
  if (!session) return not_found("unknown session '" + id + "'");
  return guarded([&] {
    const io::json request = io::parse_json(body);
    if (!request.is_object() || !request.contains("position") || !request.at("position").is_number_unsigned()) {
      throw Error(ErrorKind::ParseError, "body must be {\"position\": <nonnegative integer>}");
    }
    const auto position = request.at("position").get<std::size_t>();

    std::lock_guard lock(session->mutex);
    auto& graph = session->explored;
    const auto it = graph.vertices.find(parse_key(key));
    if (it == graph.vertices.end()) return not_found("pair '" + key + "' has not been visited");
    Mutation m = tautilt::mutate(it->second, position);
    const PairKey from = it->second.key();
    const PairKey to = m.pair.key();
    const GraphArrow arrow = m.direction == Direction::Left ? GraphArrow{from, to, position}
                                                            : GraphArrow{to, from, m.exchanged};
    if (std::find(graph.arrows.begin(), graph.arrows.end(), arrow) == graph.arrows.end()) {
      graph.arrows.insert(std::upper_bound(graph.arrows.begin(), graph.arrows.end(), arrow), arrow);
    }
    io::json summary = io::pair_summary(m.pair);
    graph.vertices.emplace(to, std::move(m.pair));
    session->current = to;
    return ServiceResponse{200, {{"newKey", key_string(to)},
                                  {"direction", to_string(m.direction)},
                                  {"exchanged", m.exchanged},
                                  {"pair", summary}}};
  });
}

ServiceResponse SessionService::graph(const std::string& id) {
  auto session = find(id);
  if (!session) return not_found("unknown session '" + id + "'");
  return guarded([&] {
    std::lock_guard lock(session->mutex);
    io::json body = io::graph_to_json(session->explored);
    body["current"] = session->current;
    return ServiceResponse{200, body};
  });
}

ServiceResponse SessionService::order(const std::string& id, const std::string& a, const std::string& b) {
  auto session = find(id);
  if (!session) return not_found("unknown session '" + id + "'");
  return guarded([&] {
    std::lock_guard lock(session->mutex);
    const auto& vertices = session->explored.vertices;
    const auto pa = vertices.find(parse_key(a));
    const auto pb = vertices.find(parse_key(b));
    if (pa == vertices.end() || pb == vertices.end()) return not_found("both pairs must have been visited");
    return ServiceResponse{200, {{"leq", leq(pa->second, pb->second)}, {"geq", leq(pb->second, pa->second)}}};
  });
}

void install_routes(httplib::Server& server, SessionService& service) {
  const auto reply = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Post("/session", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.create_session(req.body));
  });
  server.Get(R"(/session/([^/]+)/pair/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.pair(req.matches[1], req.matches[2]));
  });
  server.Post(R"(/session/([^/]+)/pair/([^/]+)/mutate)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.mutate(req.matches[1], req.matches[2], req.body));
  });
  server.Get(R"(/session/([^/]+)/graph)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.graph(req.matches[1]));
  });
  server.Get(R"(/session/([^/]+)/order)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("a") || !req.has_param("b")) {
      reply(res, error_response(400, "ParseError", "query parameters a and b are required"));
      return;
    }
    reply(res, service.order(req.matches[1], req.get_param_value("a"), req.get_param_value("b")));
  });
}

int serve(SessionService& service, const std::string& host, int port) {
  httplib::Server server;
  install_routes(server, service);
  if (!server.bind_to_port(host, port)) return 1;
  return server.listen_after_bind() ? 0 : 1;
}

}  // namespace tautilt
