#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "tautilt/io.hpp"

namespace httplib {
class Server;
}

namespace tautilt {

struct ServiceResponse {
  int status = 200;
  io::json body;
};

/// In-memory exploration sessions behind the HTTP endpoints. Sessions are
/// independent; requests against one session are serialized.
class SessionService {
 public:
  ServiceResponse create_session(const std::string& algebra_document);
  ServiceResponse pair(const std::string& session, const std::string& key);
  ServiceResponse mutate(const std::string& session, const std::string& key, const std::string& body);
  ServiceResponse graph(const std::string& session);
  ServiceResponse order(const std::string& session, const std::string& a, const std::string& b);

  std::size_t session_count() const;

 private:
  struct Session {
    std::mutex mutex;
    AlgebraPtr algebra;
    ExchangeGraph explored;
    PairKey current;
  };

  std::shared_ptr<Session> find(const std::string& id) const;

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long long next_id_ = 1;
};

void install_routes(httplib::Server& server, SessionService& service);

/// Blocks serving the endpoints on the given port.
int serve(SessionService& service, const std::string& host, int port);

}  // namespace tautilt
