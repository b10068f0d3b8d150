// Copyright 2026 The chiralq Authors
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

#pragma once

// Scenario runners behind the `chiralq` command line. Each runner renders its
// whole report into a string so a run is byte-for-byte reproducible for a
// fixed config and seed.
//
// Exit codes:
//   0 success            4 StepTooLarge
//   1 config error       5 gate-script error (with line number)
//   2 GaplessTexture     6 weak-link violation
//   3 NotConverged       7 any other domain error

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "chiralq/config.hpp"
#include "chiralq/error.hpp"

namespace chiralq {

enum class Subcommand { Chern, Beat, Damp, Rabi, Chain, Device };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand cmd);

int exit_code_for(ErrorKind kind);

/// Each runner appends its report to `out`. On failure the partial report is
/// kept and the Error propagates.
void run_chern(const Config& cfg, std::string& out);
void run_beat(const Config& cfg, std::string& out);
void run_damp(const Config& cfg, std::string& out);
void run_rabi(const Config& cfg, std::string& out);
void run_chain(const Config& cfg, std::string& out);
void run_device(const Config& cfg, std::string& out);

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
};

/// Runs `cmd` and writes the report to `opts.out`, else the config's
/// output_path, else `stdout_stream`. Returns the exit code.
int run(Subcommand cmd, Config cfg, const RunOptions& opts, std::ostream& stdout_stream,
        std::ostream& stderr_stream);

/// Writes `contents` to `path` through a sibling temporary and a rename.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace chiralq
