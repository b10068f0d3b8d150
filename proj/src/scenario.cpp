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

#include "chiralq/scenario.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "chiralq/chirality.hpp"
#include "chiralq/device.hpp"
#include "chiralq/dynamics.hpp"
#include "chiralq/kspace.hpp"
#include "chiralq/register.hpp"
#include "chiralq/script.hpp"

namespace chiralq {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string signed_int(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

std::string chirality_label(int v) { return v > 0 ? "+1" : "-1"; }

void append_result(std::string& out, std::string_view method, const ChernResult& r) {
  out += "method=" + std::string(method) + " n_integer=" + signed_int(r.n_integer) +
         " raw=" + num(r.raw) + " residual=" + num(r.residual) +
         " grid=" + std::to_string(r.grid_size) + " k_max=" + num(r.k_max) +
         " cap=" + num(r.cap_correction) + "\n";
}

TwoLevelParams two_level_from(const Config& cfg, double default_delta, double default_eps) {
  TwoLevelParams p;
  p.e0 = cfg.get_double("e0", 0.0);
  p.delta = cfg.get_double("delta", default_delta);
  p.epsilon = cfg.get_double("epsilon", default_eps);
  return p;
}

QubitState initial_from(const Config& cfg) {
  const long long v = cfg.get_int("initial", 1);
  if (v == 1) return QubitState::plus();
  if (v == -1) return QubitState::minus();
  throw Error(ErrorKind::ConfigError, "key 'initial' must be +1 or -1");
}

void append_state_row(std::string& out, double t, double pop_plus, double pop_minus) {
  out += num(t) + "," + num(pop_plus - pop_minus) + "," + num(pop_plus) + "," + num(pop_minus);
}

std::string basis_label(std::size_t index, int n) {
  std::string s = "|";
  for (int q = 0; q < n; ++q) {
    if (q) s += ",";
    s += (index >> q) & 1u ? "+1" : "-1";
  }
  return s + ">";
}

// Rewraps errors raised while executing a script line so they carry the line.
[[noreturn]] void rethrow_for_line(const Error& e, const script::Instruction& ins) {
  std::ostringstream msg;
  msg << "line " << ins.line << " (" << ins.text << "): " << e.what();
  switch (e.kind()) {
    case ErrorKind::InvalidParams:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::NotUnitary:
      throw Error(ErrorKind::ScriptError, msg.str());
    default:
      throw Error(e.kind(), msg.str());
  }
}

struct ChainRun {
  RegisterState state;
  std::vector<int> outcomes;
};

ChainRun execute(const std::vector<script::Instruction>& program, int n,
                 const FieldProfile& profile, double dt, double v0, Rng& rng, std::string* log) {
  ChainRun run{RegisterState::all_minus(n), {}};
  for (const auto& ins : program) {
    std::string note;
    try {
      std::visit(
          [&](const auto& op) {
            using T = std::decay_t<decltype(op)>;
            RegisterState& s = run.state;
            if constexpr (std::is_same_v<T, script::Reset>) {
              s = initialize_reset(s, op.q, op.value);
            } else if constexpr (std::is_same_v<T, script::Gate>) {
              s = apply_single_gate(s, op.q, gates::named(op.name));
            } else if constexpr (std::is_same_v<T, script::Link>) {
              s = s.with_link(op.i, op.j, op.on);
            } else if constexpr (std::is_same_v<T, script::Exchange>) {
              CouplingLink link = s.link(op.i, op.j);
              link.i = op.i;
              link.j = op.j;
              s = exchange_pulse(s, link, op.theta);
            } else if constexpr (std::is_same_v<T, script::Cnot>) {
              s = cnot_composed(s, op.control, op.target);
            } else if constexpr (std::is_same_v<T, script::Rf>) {
              s = selective_rf_pulse(s, profile, op.q, op.amp, op.duration, dt);
            } else if constexpr (std::is_same_v<T, script::Measure>) {
              Measurement m = measure(s, op.q, rng);
              s = std::move(m.state);
              run.outcomes.push_back(m.outcome);
              note = " -> " + chirality_label(m.outcome) + " (V_Hall = " +
                     (m.outcome > 0 ? "+" : "") + num(hall_voltage(m.outcome, v0)) + " V)";
            }
          },
          ins.op);
    } catch (const Error& e) {
      rethrow_for_line(e, ins);
    }
    if (log) *log += "[" + std::to_string(ins.line) + "] " + ins.text + note + "\n";
  }
  return run;
}

std::string outcome_key(const std::vector<int>& outcomes) {
  std::string s;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (k) s += " ";
    s += chirality_label(outcomes[k]);
  }
  return s.empty() ? "(none)" : s;
}

std::string read_file(const std::filesystem::path& path, ErrorKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(kind, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  static const std::map<std::string_view, Subcommand> table{
      {"chern", Subcommand::Chern}, {"beat", Subcommand::Beat},   {"damp", Subcommand::Damp},
      {"rabi", Subcommand::Rabi},   {"chain", Subcommand::Chain}, {"device", Subcommand::Device}};
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::Chern: return "chern";
    case Subcommand::Beat: return "beat";
    case Subcommand::Damp: return "damp";
    case Subcommand::Rabi: return "rabi";
    case Subcommand::Chain: return "chain";
    case Subcommand::Device: return "device";
  }
  return "unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigError:
    case ErrorKind::InvalidParams:
      return 1;
    case ErrorKind::GaplessTexture:
      return 2;
    case ErrorKind::NotConverged:
    case ErrorKind::DegeneratePlaquette:
      return 3;
    case ErrorKind::StepTooLarge:
      return 4;
    case ErrorKind::ScriptError:
      return 5;
    case ErrorKind::LinkOff:
    case ErrorKind::LinksActive:
      return 6;
    default:
      return 7;
  }
}

void run_chern(const Config& cfg, std::string& out) {
  cfg.require_known({"gap", "mu", "chi", "k_max", "n_grid", "method", "seed", "output_path"});
  const GapParams params = make_gap_params(cfg.get_double("gap", 1.0), cfg.get_double("mu", 1.0),
                                           static_cast<int>(cfg.get_int("chi", 1)));
  const double k_max = cfg.get_double("k_max", default_k_max(params));
  const long long n_grid = cfg.get_int("n_grid", 256);
  if (n_grid < kMinGrid || n_grid > kMaxGrid)
    throw Error(ErrorKind::ConfigError, "n_grid must lie in [" + std::to_string(kMinGrid) + ", " +
                                            std::to_string(kMaxGrid) + "]");
  const std::string method = cfg.get_string("method", "cross");
  const int n = static_cast<int>(n_grid);

  auto guarded = [&](std::string_view name, auto&& compute) {
    try {
      const ChernResult r = compute();
      append_result(out, name, r);
      return r;
    } catch (const Error& e) {
      out += "method=" + std::string(name) + " error=" + std::string(to_string(e.kind())) + "\n";
      throw;
    }
  };

  ChernResult result;
  if (method == "plaquette") {
    result = guarded("plaquette", [&] { return chern_plaquette(params, k_max, n); });
  } else if (method == "quadrature") {
    result = guarded("quadrature", [&] { return chern_quadrature(params, k_max, n); });
  } else if (method == "cross") {
    CrossValidation cv;
    try {
      cv = cross_validate(params, k_max, n);
    } catch (const Error& e) {
      out += "method=cross error=" + std::string(to_string(e.kind())) + "\n";
      throw;
    }
    append_result(out, "plaquette", cv.plaquette);
    append_result(out, "quadrature", cv.quadrature);
    result = cv.plaquette;
  } else {
    throw Error(ErrorKind::ConfigError, "method must be plaquette, quadrature or cross");
  }
  out += "N = " + signed_int(result.n_integer) + "\n";
}

void run_beat(const Config& cfg, std::string& out) {
  cfg.require_known({"e0", "delta", "epsilon", "t_max", "dt", "seed", "output_path"});
  const TwoLevelParams p = two_level_from(cfg, 0.5, 0.0);
  p.validate();
  const auto times = sample_times(cfg.get_double("t_max", 2.0 * std::numbers::pi),
                                  cfg.get_double("dt", std::numbers::pi / 100.0));
  out += "t,p_diff,pop_plus,pop_minus\n";
  for (double t : times) {
    const QubitState s = evolve_closed(QubitState::plus(), p, t);
    append_state_row(out, t, s.pop_plus(), s.pop_minus());
    out += "\n";
  }
}

void run_damp(const Config& cfg, std::string& out) {
  cfg.require_known(
      {"e0", "delta", "epsilon", "gamma", "t_max", "dt", "initial", "seed", "output_path"});
  TwoLevelParams p = two_level_from(cfg, 0.5, 0.0);
  p.gamma = cfg.get_double("gamma", 0.1);
  const auto traj = evolve_damped(DensityMatrix::pure(initial_from(cfg)), p,
                                  cfg.get_double("t_max", 20.0), cfg.get_double("dt", 0.01));
  out += "t,p_diff,pop_plus,pop_minus,purity\n";
  for (const auto& s : traj) {
    append_state_row(out, s.t, s.rho.pop_plus(), s.rho.pop_minus());
    out += "," + num(s.rho.purity()) + "\n";
  }
}

void run_rabi(const Config& cfg, std::string& out) {
  cfg.require_known({"e0", "delta", "epsilon", "amp", "omega", "t_max", "dt", "initial", "seed",
                     "output_path"});
  TwoLevelParams p = two_level_from(cfg, 0.0, 1.0);
  p.drive_amp = cfg.get_double("amp", 0.05);
  p.drive_freq = cfg.get_double("omega", 2.0 * p.splitting());
  const double default_t = p.drive_amp > 0.0 ? std::numbers::pi / p.drive_amp : 20.0;
  const auto traj = drive_evolve(initial_from(cfg), p, cfg.get_double("t_max", default_t),
                                 cfg.get_double("dt", 0.01));
  out += "t,p_diff,pop_plus,pop_minus\n";
  for (const auto& s : traj) {
    append_state_row(out, s.t, s.state.pop_plus(), s.state.pop_minus());
    out += "\n";
  }
}

void run_chain(const Config& cfg, std::string& out) {
  cfg.require_known(
      {"script_path", "n_qubits", "shots", "eps_profile", "dt", "v0", "seed", "output_path"});
  std::vector<script::Instruction> program;
  if (cfg.has("script_path")) {
    std::filesystem::path path = cfg.get_string("script_path", "");
    if (path.is_relative()) path = cfg.base_dir() / path;
    program = script::parse(read_file(path, ErrorKind::ScriptError));
  }
  const int needed = script::max_qubit(program) + 1;
  const long long n = cfg.get_int("n_qubits", std::max(needed, 1));
  if (n < 1 || n > kMaxQubits)
    throw Error(ErrorKind::ConfigError,
                "n_qubits must lie in [1, " + std::to_string(kMaxQubits) + "]");
  if (needed > n)
    throw Error(ErrorKind::ScriptError, "script addresses qubit " + std::to_string(needed - 1) +
                                            " but the register has " + std::to_string(n));
  const long long shots = cfg.get_int("shots", 1);
  if (shots < 1) throw Error(ErrorKind::ConfigError, "shots must be >= 1");
  const std::uint64_t seed = cfg.get_u64("seed", 0);
  const double dt = cfg.get_double("dt", 0.01);
  const double v0 = cfg.get_double("v0", 1e-6);
  if (!(v0 > 0.0)) throw Error(ErrorKind::ConfigError, "v0 must be > 0");

  // Default bias gradient: eps_q = 1 + q / 2.
  FieldProfile profile{cfg.get_list("eps_profile")};
  if (profile.eps.empty())
    for (long long q = 0; q < n; ++q) profile.eps.push_back(1.0 + 0.5 * static_cast<double>(q));
  if (profile.eps.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::ConfigError, "eps_profile needs one entry per qubit");

  out += "# chain n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
         " shots=" + std::to_string(shots) + "\n";
  Rng rng(seed);
  std::map<std::string, long long> histogram;
  ChainRun first;
  for (long long shot = 0; shot < shots; ++shot) {
    ChainRun r =
        execute(program, static_cast<int>(n), profile, dt, v0, rng, shot == 0 ? &out : nullptr);
    ++histogram[outcome_key(r.outcomes)];
    if (shot == 0) first = std::move(r);
  }
  out += "outcomes: " + outcome_key(first.outcomes) + "\n";
  out += "final probabilities:\n";
  const auto probs = first.state.probabilities();
  for (std::size_t k = 0; k < probs.size(); ++k)
    if (probs[k] > 1e-15)
      out += "  " + basis_label(k, static_cast<int>(n)) + " " + num(probs[k]) + "\n";
  if (shots > 1) {
    out += "histogram over " + std::to_string(shots) + " shots:\n";
    for (const auto& [key, count] : histogram)
      out += "  " + key + " " + std::to_string(count) + " " +
             num(static_cast<double>(count) / static_cast<double>(shots)) + "\n";
  }
}

void run_device(const Config& cfg, std::string& out) {
  cfg.require_known({"h_gauss", "mass_ratio", "gap_ev", "cell_volume_a3", "lambda_l_a",
                     "film_thickness_a", "seed", "output_path"});
  device::MaterialParams m;
  m.gap_ev = cfg.get_double("gap_ev", m.gap_ev);
  m.mass_ratio = cfg.get_double("mass_ratio", m.mass_ratio);
  m.cell_volume_a3 = cfg.get_double("cell_volume_a3", m.cell_volume_a3);
  m.lambda_l_a = cfg.get_double("lambda_l_a", m.lambda_l_a);
  m.film_thickness_a = cfg.get_double("film_thickness_a", m.film_thickness_a);
  const double h = cfg.get_double("h_gauss", 1.0);
  if (!(h > 0.0)) throw Error(ErrorKind::ConfigError, "h_gauss must be > 0");
  const device::Report r = device::estimate(h, m);
  const auto& g = r.geometry;

  char buf[32];
  std::snprintf(buf, sizeof buf, "%" PRIu64, r.n_pairs);
  const std::string pairs = buf;
  const double nm = device::kAngstromPerNanometre;
  out += "field            " + num(r.h_gauss) + " G\n";
  out += "splitting eps    " + num(r.eps_ev) + " eV\n";
  out += "pair budget n_s  " + pairs + "\n";
  out += "volume           " + num(g.volume_a3) + " A^3\n";
  out += "geometry         " + num(g.lx_a / nm) + " x " + num(g.ly_a / nm) + " x " +
         num(g.lz_a / nm) + " nm^3\n";
  out += "below lambda_L   " + std::string(g.within_lambda ? "yes" : "no") +
         " (lambda_L = " + num(m.lambda_l_a) + " A)\n";
  out += "\nh_gauss,eps_ev,n_pairs,volume_a3,lx_a,ly_a,lz_a,within_lambda\n";
  out += num(r.h_gauss) + "," + num(r.eps_ev) + "," + pairs + "," + num(g.volume_a3) + "," +
         num(g.lx_a) + "," + num(g.ly_a) + "," + num(g.lz_a) + "," +
         (g.within_lambda ? "1" : "0") + "\n";
}

void write_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::ConfigError, "cannot write '" + tmp.string() + "'");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw Error(ErrorKind::ConfigError, "write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

int run(Subcommand cmd, Config cfg, const RunOptions& opts, std::ostream& stdout_stream,
        std::ostream& stderr_stream) {
  if (opts.seed) cfg.set("seed", std::to_string(*opts.seed));
  std::optional<std::filesystem::path> target = opts.out;
  if (!target && cfg.has("output_path")) target = cfg.get_string("output_path", "");

  std::string report;
  int code = 0;
  try {
    switch (cmd) {
      case Subcommand::Chern: run_chern(cfg, report); break;
      case Subcommand::Beat: run_beat(cfg, report); break;
      case Subcommand::Damp: run_damp(cfg, report); break;
      case Subcommand::Rabi: run_rabi(cfg, report); break;
      case Subcommand::Chain: run_chain(cfg, report); break;
      case Subcommand::Device: run_device(cfg, report); break;
    }
  } catch (const Error& e) {
    stderr_stream << "chiralq " << to_string(cmd) << ": " << e.what() << "\n";
    code = exit_code_for(e.kind());
  }
  // Chern keeps its summary line on failure; other failures leave no output.
  if (code != 0 && cmd != Subcommand::Chern) return code;
  if (report.empty()) return code;

  try {
    if (target)
      write_atomically(*target, report);
    else
      stdout_stream << report;
  } catch (const std::exception& e) {
    stderr_stream << "chiralq " << to_string(cmd) << ": " << e.what() << "\n";
    return code != 0 ? code : 1;
  }
  return code;
}

}  // namespace chiralq
