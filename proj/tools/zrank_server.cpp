// HTTP service over the ranking engine with a file-backed problem store.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zrank/service.hpp"

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : std::move(fallback);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zrank HTTP service", "zrank-server"};
  std::string bind = env_or("ZRANK_BIND", "127.0.0.1");
  int port = std::atoi(env_or("ZRANK_PORT", "8080").c_str());
  std::string store_dir = env_or("ZRANK_STORE_DIR", "zrank-store");
  std::string static_dir;
  app.add_option("--bind", bind, "address to listen on (env ZRANK_BIND)");
  app.add_option("--port", port, "TCP port (env ZRANK_PORT)")->check(CLI::Range(0, 65535));
  app.add_option("--store-dir", store_dir, "directory holding stored problems (env ZRANK_STORE_DIR)");
  app.add_option("--static", static_dir, "optional directory served at / (the web workbench build)");
  CLI11_PARSE(app, argc, argv);

  zrank::ProblemStore store(store_dir);
  zrank::Service service(store);
  httplib::Server server;
  service.mount(server);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    std::cerr << "cannot serve static files from " << static_dir << '\n';
    return 2;
  }
  std::cerr << "zrank " << zrank::kEngineVersion << " listening on " << bind << ':' << port << ", store in "
            << std::filesystem::absolute(store_dir).string() << '\n';
  if (!server.listen(bind, port)) {
    std::cerr << "cannot listen on " << bind << ':' << port << '\n';
    return 1;
  }
  return 0;
}
