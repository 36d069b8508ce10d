#ifndef RSVO_LOG_HPP
#define RSVO_LOG_HPP

namespace rsvo {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Level parsed once from RSVO_LOG_LEVEL (error|warn|info|debug, default warn).
LogLevel log_level();

bool log_enabled(LogLevel level);

/// printf-style message to stderr, filtered by RSVO_LOG_LEVEL.
void log_message(LogLevel level, const char* fmt, ...);

}  // namespace rsvo

#endif  // RSVO_LOG_HPP
