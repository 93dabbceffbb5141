#include "iocl/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace iocl {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("IOCL_LOG");
    if (env == nullptr) return LogLevel::off;
    if (std::strcmp(env, "debug") == 0) return LogLevel::debug;
    if (std::strcmp(env, "info") == 0) return LogLevel::info;
    return LogLevel::off;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (static_cast<int>(log_level()) >= static_cast<int>(LogLevel::info)) {
    std::fprintf(stderr, "[iocl] %s\n", msg.c_str());
  }
}

void log_debug(const std::string& msg) {
  if (static_cast<int>(log_level()) >= static_cast<int>(LogLevel::debug)) {
    std::fprintf(stderr, "[iocl:debug] %s\n", msg.c_str());
  }
}

}  // namespace iocl
