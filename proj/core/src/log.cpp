#include "ac/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace ac::log {
namespace {

Level parse_level() {
    const char* env = std::getenv("ACTIVE_CONSENSUS_LOG");
    if (env == nullptr) return Level::off;
    const std::string value(env);
    if (value == "info") return Level::info;
    if (value == "debug") return Level::debug;
    return Level::off;
}

std::mutex& sink_mutex() {
    static std::mutex m;
    return m;
}

void emit(const char* tag, const std::string& message) {
    std::lock_guard<std::mutex> lock(sink_mutex());
    std::cerr << tag << message << '\n';
}

}  // namespace

Level level() {
    static const Level lvl = parse_level();
    return lvl;
}

bool enabled(Level lvl) { return static_cast<int>(level()) >= static_cast<int>(lvl); }

void info(const std::string& message) {
    if (enabled(Level::info)) emit("[info] ", message);
}

void debug(const std::string& message) {
    if (enabled(Level::debug)) emit("[debug] ", message);
}

}  // namespace ac::log
