#pragma once

#include <atomic>
#include <cstdio>
#include <string>

namespace railloc::log {

enum class Level : int { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3, kOff = 4 };

inline std::atomic<int>& threshold() {
    static std::atomic<int> level{static_cast<int>(Level::kWarn)};
    return level;
}

inline void set_level(Level level) { threshold().store(static_cast<int>(level)); }

inline void write(Level level, const std::string& message) {
    if (static_cast<int>(level) < threshold().load()) return;
    static constexpr const char* kNames[] = {"debug", "info", "warn", "error"};
    std::fprintf(stderr, "[%s] %s\n", kNames[static_cast<int>(level)], message.c_str());
}

inline void debug(const std::string& message) { write(Level::kDebug, message); }
inline void info(const std::string& message) { write(Level::kInfo, message); }
inline void warn(const std::string& message) { write(Level::kWarn, message); }
inline void error(const std::string& message) { write(Level::kError, message); }

}  // namespace railloc::log
