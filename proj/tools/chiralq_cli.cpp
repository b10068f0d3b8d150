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

// chiralq: scenario runner for chiral-state qubit simulations.
//
//   chiralq <chern|beat|damp|rabi|chain|device> [--config FILE] [--out FILE] [--seed N]

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "chiralq/config.hpp"
#include "chiralq/error.hpp"
#include "chiralq/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Chiral-state qubit simulator"};
  app.require_subcommand(1);

  struct Options {
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
  };
  Options opts;

  const std::pair<const char*, const char*> commands[] = {
      {"chern", "topological chirality number of the order-parameter texture"},
      {"beat", "closed tunneling dynamics from a collapsed chiral state (CSV)"},
      {"damp", "dephased dynamics with purity column (CSV)"},
      {"rabi", "RF-driven dynamics (CSV)"},
      {"chain", "run a gate script on a qubit chain"},
      {"device", "device sizing estimate (report + CSV)"},
  };
  std::vector<CLI::App*> subs;
  std::vector<CLI::Option*> seed_opts;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opts.config, "key = value scenario file")->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out, "output file (written atomically)");
    seed_opts.push_back(sub->add_option("--seed", opts.seed, "overrides the config seed"));
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (!subs[k]->parsed()) continue;
    const auto cmd = chiralq::parse_subcommand(subs[k]->get_name());
    chiralq::RunOptions run_opts;
    if (seed_opts[k]->count() > 0) run_opts.seed = opts.seed;
    if (!opts.out.empty()) run_opts.out = opts.out;
    try {
      chiralq::Config cfg = opts.config.empty() ? chiralq::Config{} : chiralq::Config::load(opts.config);
      return chiralq::run(*cmd, std::move(cfg), run_opts, std::cout, std::cerr);
    } catch (const chiralq::Error& e) {
      std::cerr << "chiralq " << subs[k]->get_name() << ": " << e.what() << "\n";
      return chiralq::exit_code_for(e.kind());
    }
  }
  return 1;
}
