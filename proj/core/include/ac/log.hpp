#pragma once

#include <string>

namespace ac::log {

enum class Level { off = 0, info = 1, debug = 2 };

// Level comes from ACTIVE_CONSENSUS_LOG (off|info|debug), read once.
Level level();
bool enabled(Level lvl);

// Writes "[info] ..." / "[debug] ..." to stderr when the level allows.
void info(const std::string& message);
void debug(const std::string& message);

}  // namespace ac::log
