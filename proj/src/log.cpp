// Copyright 2026 the smc-toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smc/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace smc::logging {

namespace {

Level read_threshold() {
  const char* env = std::getenv("SMC_LOG");
  if (env == nullptr) return Level::warn;
  const std::string value(env);
  if (value == "error") return Level::error;
  if (value == "warn") return Level::warn;
  if (value == "info") return Level::info;
  if (value == "debug") return Level::debug;
  return Level::warn;
}

const char* level_tag(Level level) {
  switch (level) {
    case Level::error: return "error";
    case Level::warn: return "warn";
    case Level::info: return "info";
    case Level::debug: return "debug";
  }
  return "?";
}

std::mutex g_mutex;

}  // namespace

bool enabled(Level level) {
  static const Level threshold = read_threshold();
  return static_cast<int>(level) <= static_cast<int>(threshold);
}

void write(Level level, const std::string& message) {
  if (!enabled(level)) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << "[smc " << level_tag(level) << "] " << message << "\n";
}

}  // namespace smc::logging
