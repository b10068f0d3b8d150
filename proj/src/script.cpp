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

#include "chiralq/script.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "chiralq/error.hpp"

namespace chiralq::script {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

class LineParser {
 public:
  LineParser(int line, std::vector<std::string> tokens) : line_(line), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(const std::string& why) const {
    std::ostringstream msg;
    msg << "line " << line_ << ": " << why;
    throw Error(ErrorKind::ScriptError, msg.str());
  }

  void expect_args(std::size_t n) const {
    if (tokens_.size() != n + 1) {
      std::ostringstream msg;
      msg << tokens_[0] << " takes " << n << " argument(s), got " << tokens_.size() - 1;
      fail(msg.str());
    }
  }

  int qubit(std::size_t k) const {
    const std::string& s = tokens_[k];
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
      fail("'" + s + "' is not a qubit index");
    return v;
  }

  int chirality(std::size_t k) const {
    const std::string& s = tokens_[k];
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    fail("'" + s + "' is not a chirality (+1 or -1)");
  }

  double number(std::size_t k) const {
    const std::string& s = tokens_[k];
    const char* begin = s.data();
    if (!s.empty() && s[0] == '+') ++begin;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
      fail("'" + s + "' is not a finite number");
    return v;
  }

  const std::string& token(std::size_t k) const { return tokens_[k]; }

 private:
  int line_;
  std::vector<std::string> tokens_;
};

}  // namespace

std::vector<Instruction> parse(std::string_view source) {
  std::vector<Instruction> program;
  int line_no = 0;
  while (!source.empty()) {
    const auto nl = source.find('\n');
    std::string_view raw = source.substr(0, nl);
    source = nl == std::string_view::npos ? std::string_view{} : source.substr(nl + 1);
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;

    std::string text = tokens[0];
    for (std::size_t k = 1; k < tokens.size(); ++k) text += " " + tokens[k];
    const std::string keyword = upper(tokens[0]);
    const LineParser p(line_no, std::move(tokens));

    Op op;
    if (keyword == "RESET") {
      p.expect_args(2);
      op = Reset{p.qubit(1), p.chirality(2)};
    } else if (keyword == "GATE") {
      p.expect_args(2);
      op = Gate{p.qubit(1), p.token(2)};
    } else if (keyword == "LINK") {
      p.expect_args(3);
      const std::string state = upper(p.token(3));
      if (state != "ON" && state != "OFF") p.fail("LINK state must be ON or OFF");
      op = Link{p.qubit(1), p.qubit(2), state == "ON"};
    } else if (keyword == "XCHG") {
      p.expect_args(3);
      op = Exchange{p.qubit(1), p.qubit(2), p.number(3)};
    } else if (keyword == "CNOT") {
      p.expect_args(2);
      op = Cnot{p.qubit(1), p.qubit(2)};
    } else if (keyword == "RF") {
      p.expect_args(3);
      op = Rf{p.qubit(1), p.number(2), p.number(3)};
    } else if (keyword == "MEASURE") {
      p.expect_args(1);
      op = Measure{p.qubit(1)};
    } else {
      p.fail("unknown instruction '" + keyword + "'");
    }
    program.push_back({line_no, std::move(text), std::move(op)});
  }
  return program;
}

int max_qubit(const std::vector<Instruction>& program) {
  int m = -1;
  for (const auto& ins : program) {
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, Link> || std::is_same_v<T, Exchange>) {
            m = std::max({m, op.i, op.j});
          } else if constexpr (std::is_same_v<T, Cnot>) {
            m = std::max({m, op.control, op.target});
          } else {
            m = std::max(m, op.q);
          }
        },
        ins.op);
  }
  return m;
}

}  // namespace chiralq::script
