#pragma once

#include <httplib.h>

#include <chrono>
#include <string>

#include "oramsey/session.hpp"

namespace oramsey {

namespace detail {

inline void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <class F>
void guarded(httplib::Response& res, F&& f) {
  try {
    f();
  } catch (const ProtocolError& e) {
    send_json(res, e.status(), {{"error", e.what()}});
  } catch (const nlohmann::json::exception& e) {
    send_json(res, 400, {{"error", std::string("bad JSON: ") + e.what()}});
  } catch (const Error& e) {
    send_json(res, 400, {{"error", e.what()}});
  }
}

}  // namespace detail

// POST /sessions, GET /sessions/{id}, POST /sessions/{id}/move and the
// server-sent event stream GET /sessions/{id}/events (one state per turn).
inline void install_session_routes(httplib::Server& server, SessionManager& sessions) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/sessions.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [&sessions](const httplib::Request& req, httplib::Response& res) {
    detail::guarded(res, [&] { detail::send_json(res, 201, sessions.create(nlohmann::json::parse(req.body))); });
  });

  server.Get(R"(/sessions/([A-Za-z0-9]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
    detail::guarded(res, [&] { detail::send_json(res, 200, sessions.get(req.matches[1])); });
  });

  server.Post(R"(/sessions/([A-Za-z0-9]+)/move)", [&sessions](const httplib::Request& req, httplib::Response& res) {
    detail::guarded(res, [&] {
      detail::send_json(res, 200, sessions.move(req.matches[1], nlohmann::json::parse(req.body)));
    });
  });

  server.Get(R"(/sessions/([A-Za-z0-9]+)/events)", [&sessions](const httplib::Request& req, httplib::Response& res) {
    detail::guarded(res, [&] {
      const std::string id = req.matches[1];
      sessions.get(id);  // 404 before the stream starts
      res.set_chunked_content_provider(
          "text/event-stream", [&sessions, id, next = std::size_t{0}](std::size_t, httplib::DataSink& sink) mutable {
            bool finished = false;
            const auto batch = sessions.events(id, next, std::chrono::seconds(15), &finished);
            for (const auto& state : batch) {
              const std::string chunk = "id: " + std::to_string(next++) + "\ndata: " + state.dump() + "\n\n";
              if (!sink.write(chunk.data(), chunk.size())) return false;
            }
            if (batch.empty()) {
              static const std::string ping = ": ping\n\n";
              if (!sink.write(ping.data(), ping.size())) return false;
            }
            if (finished) {
              sink.done();
            }
            return true;
          });
    });
  });
}

}  // namespace oramsey
