#pragma once

#include <string>

namespace uniclf {

// Verbosity is read once from the CLF_LOG environment variable
// (quiet | info | debug); unset or unrecognized values mean info.
enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace uniclf
