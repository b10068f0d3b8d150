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

// Flat `key = value` scenario files. '#' starts a comment; keys are unique.

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chiralq {

class Config {
 public:
  static Config parse(std::string_view text, std::string origin = "<config>");
  static Config load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  /// Numeric getters reject anything that is not a finite number.
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  /// Comma-separated list of finite numbers.
  std::vector<double> get_list(const std::string& key) const;

  /// Throws ConfigError naming the first key not in `allowed`.
  void require_known(std::initializer_list<std::string_view> allowed) const;

  /// Directory relative paths inside the file resolve against.
  const std::filesystem::path& base_dir() const { return base_dir_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };

  [[noreturn]] void fail(const std::string& key, const std::string& why) const;

  std::map<std::string, Entry> entries_;
  std::string origin_;
  std::filesystem::path base_dir_;
};

}  // namespace chiralq
