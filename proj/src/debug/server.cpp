#include "qhdl/debug/server.hpp"

#include <boost/asio.hpp>
#include <boost/asio/co_spawn.hpp>
#include <boost/asio/detached.hpp>
#include <boost/asio/use_awaitable.hpp>
#include <boost/beast.hpp>
#include <fstream>
#include <sstream>

namespace qhdl::debug {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

std::filesystem::path default_asset_dir() {
#ifdef QHDL_ASSET_DIR
    return QHDL_ASSET_DIR;
#else
    return "assets";
#endif
}

const std::string& index_html() {
    static const std::string page = R"(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>QSIM debugger</title>
<link rel="stylesheet" href="/assets/debugger.css">
</head>
<body>
<h1>QSIM debugger</h1>
<div id="state"></div>
<div id="status">Simulation time - step -</div>
<div id="controls"><button id="step" type="button" disabled>step</button></div>
<div id="banner" hidden></div>
<script src="/assets/debugger.js"></script>
</body>
</html>
)";
    return page;
}

namespace {

std::string mime_type(const std::filesystem::path& p) {
    const auto ext = p.extension().string();
    if (ext == ".html") return "text/html; charset=utf-8";
    if (ext == ".js") return "text/javascript; charset=utf-8";
    if (ext == ".css") return "text/css; charset=utf-8";
    if (ext == ".svg") return "image/svg+xml";
    if (ext == ".json" || ext == ".map") return "application/json";
    return "application/octet-stream";
}

}  // namespace

struct DebugServer::Impl {
    DebugSession& session;
    ServerOptions options;
    asio::io_context io{1};
    tcp::acceptor acceptor{io};
    bool listening = false;
    bool client_active = false;

    Impl(DebugSession& s, ServerOptions o) : session(s), options(std::move(o)) {
        if (options.asset_dir.empty()) options.asset_dir = default_asset_dir();
    }

    http::response<http::string_body> respond(const http::request<http::string_body>& req) {
        auto reply = [&](http::status status, std::string body, std::string type) {
            http::response<http::string_body> res{status, req.version()};
            res.set(http::field::server, "qsim-debugger");
            res.set(http::field::content_type, type);
            res.set(http::field::cache_control, "no-store");
            res.keep_alive(req.keep_alive());
            res.body() = req.method() == http::verb::head ? std::string{} : std::move(body);
            res.prepare_payload();
            return res;
        };
        if (req.method() != http::verb::get && req.method() != http::verb::head) {
            return reply(http::status::method_not_allowed, "method not allowed\n", "text/plain");
        }
        std::string target(req.target());
        if (auto q = target.find('?'); q != std::string::npos) target.resize(q);
        if (target == "/" || target == "/index.html") return reply(http::status::ok, index_html(), mime_type("x.html"));
        constexpr std::string_view kAssets = "/assets/";
        if (target.rfind(kAssets, 0) == 0) {
            std::filesystem::path rel(target.substr(kAssets.size()));
            bool safe = !rel.empty() && rel.is_relative();
            for (const auto& part : rel) safe = safe && part != "..";
            if (safe) {
                std::ifstream in(options.asset_dir / rel, std::ios::binary);
                if (in) {
                    std::ostringstream body;
                    body << in.rdbuf();
                    return reply(http::status::ok, body.str(), mime_type(rel));
                }
            }
        }
        return reply(http::status::not_found, "not found\n", "text/plain");
    }

    asio::awaitable<void> websocket_session(tcp::socket socket, http::request<http::string_body> req) {
        websocket::stream<tcp::socket> ws(std::move(socket));
        co_await ws.async_accept(req, asio::use_awaitable);
        if (client_active) {
            co_await ws.async_close(websocket::close_reason(websocket::close_code::try_again_later),
                                    asio::use_awaitable);
            co_return;
        }
        client_active = true;
        struct Release {
            bool& flag;
            ~Release() { flag = false; }
        } release{client_active};

        ws.text(true);
        co_await ws.async_write(asio::buffer(session.current().to_json().dump()), asio::use_awaitable);
        for (;;) {
            beast::flat_buffer buffer;
            co_await ws.async_read(buffer, asio::use_awaitable);
            std::string reply = session.handle(beast::buffers_to_string(buffer.data()));
            co_await ws.async_write(asio::buffer(reply), asio::use_awaitable);
        }
    }

    asio::awaitable<void> connection(tcp::socket socket) {
        try {
            beast::tcp_stream stream(std::move(socket));
            beast::flat_buffer buffer;
            for (;;) {
                http::request<http::string_body> req;
                co_await http::async_read(stream, buffer, req, asio::use_awaitable);
                if (websocket::is_upgrade(req)) {
                    if (req.target() == "/ws") {
                        co_await websocket_session(stream.release_socket(), std::move(req));
                    } else {
                        auto res = respond(req);
                        res.result(http::status::not_found);
                        res.keep_alive(false);
                        co_await http::async_write(stream, res, asio::use_awaitable);
                    }
                    co_return;
                }
                auto res = respond(req);
                const bool keep = res.keep_alive();
                co_await http::async_write(stream, res, asio::use_awaitable);
                if (!keep) break;
            }
            beast::error_code ec;
            stream.socket().shutdown(tcp::socket::shutdown_send, ec);
        } catch (const std::exception&) {
            // Peer went away or sent garbage; the session state is unaffected.
        }
    }

    asio::awaitable<void> accept_loop() {
        for (;;) {
            tcp::socket socket = co_await acceptor.async_accept(asio::use_awaitable);
            asio::co_spawn(io, connection(std::move(socket)), asio::detached);
        }
    }
};

DebugServer::DebugServer(DebugSession& session, ServerOptions options)
    : impl_(std::make_unique<Impl>(session, std::move(options))) {}

DebugServer::~DebugServer() { stop(); }

void DebugServer::listen() {
    if (impl_->listening) return;
    beast::error_code ec;
    auto address = asio::ip::make_address(impl_->options.address, ec);
    if (ec) throw Error("invalid listen address '" + impl_->options.address + "'");
    tcp::endpoint endpoint(address, impl_->options.port);
    auto& acc = impl_->acceptor;
    acc.open(endpoint.protocol(), ec);
    if (!ec) acc.set_option(asio::socket_base::reuse_address(true), ec);
    if (!ec) acc.bind(endpoint, ec);
    if (!ec) acc.listen(asio::socket_base::max_listen_connections, ec);
    if (ec) {
        beast::error_code ignored;
        acc.close(ignored);
        throw PortInUse("cannot listen on " + impl_->options.address + ":" + std::to_string(impl_->options.port) +
                        ": " + ec.message());
    }
    impl_->listening = true;
}

std::uint16_t DebugServer::port() const {
    beast::error_code ec;
    auto ep = impl_->acceptor.local_endpoint(ec);
    return ec ? 0 : ep.port();
}

void DebugServer::run() {
    listen();
    asio::co_spawn(impl_->io, impl_->accept_loop(), asio::detached);
    impl_->io.run();
}

void DebugServer::stop() { impl_->io.stop(); }

}  // namespace qhdl::debug
