#ifndef IOCL_LOG_HPP
#define IOCL_LOG_HPP

#include <string>

namespace iocl {

enum class LogLevel { off = 0, info = 1, debug = 2 };

/// Level is read once from the IOCL_LOG environment variable
/// ("off" | "info" | "debug", default "off").
LogLevel log_level();

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace iocl

#endif  // IOCL_LOG_HPP
