#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "qhdl/debug/session.hpp"

namespace qhdl::debug {

class PortInUse : public Error {
public:
    using Error::Error;
};

struct ServerOptions {
    std::string address = "127.0.0.1";
    std::uint16_t port = 4711;  // 0 picks a free port
    std::filesystem::path asset_dir;
};

/// Default location of the debugger UI bundle.
std::filesystem::path default_asset_dir();

/// The page served at GET /.
const std::string& index_html();

/// HTTP + WebSocket front end of a DebugSession.
///
///   GET /          debugger page
///   GET /assets/*  files below ServerOptions::asset_dir
///   WS  /ws        one client at a time; later clients are closed with
///                  code 1013 (try again later)
///
/// All network handling and every session access run on the single thread
/// that calls run(), so commands are processed strictly one at a time.
class DebugServer {
public:
    DebugServer(DebugSession& session, ServerOptions options);
    ~DebugServer();

    DebugServer(const DebugServer&) = delete;
    DebugServer& operator=(const DebugServer&) = delete;

    /// Binds the listening socket. Throws PortInUse.
    void listen();
    /// Actual bound port (after listen()).
    std::uint16_t port() const;
    /// Serves until stop(). Calls listen() first if needed.
    void run();
    /// Thread-safe.
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qhdl::debug
