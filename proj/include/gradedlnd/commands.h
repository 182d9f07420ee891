// Copyright 2026 The gradedlnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRADEDLND_COMMANDS_H_
#define GRADEDLND_COMMANDS_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradedlnd/spec_file.h"

namespace gradedlnd {

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 domain error, 2 parse or usage error
  std::string out;
  std::string err;
};

struct CommandOptions {
  std::int64_t d = 0;  // 0 when not given
  int bound = 64;
  std::string s, e, h, x;
};

/// Arguments exclude the program name, e.g. {"pb", "2", "3", "5"}.
CommandResult run_command(const std::vector<std::string>& args);

/// The report of one command on a parsed file. Throws Error.
nlohmann::json spec_report(const std::string& command, const SpecFile& spec,
                           const CommandOptions& options);

/// "key.sub: value" lines in key order.
std::string render_text(const nlohmann::json& report);

/// GRADEDLND_BOUND if set to a positive integer, otherwise the default.
int default_bound();

}  // namespace gradedlnd

#endif  // GRADEDLND_COMMANDS_H_
