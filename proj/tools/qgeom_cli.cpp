// SPDX-License-Identifier: Apache-2.0
//
// qgeom: batch front end over the C API.
//
// Exit codes: 0 success, 1 input error, 2 semantic refusal (e.g. factoring an
// entangled state), 3 invariance violation reported by orbit-check.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgeom/qgeom.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitViolation = 3;
constexpr int kSchemaVersion = 1;

constexpr const char* kStateFileHelp =
    "State files are JSON documents {\"qubits\": n, \"amplitudes\": [[re, im], ...]}\n"
    "holding 2^n amplitudes in big-endian basis order: for three qubits the\n"
    "amplitude of |ABC> sits at index 4A + 2B + C, qubit 1 leftmost.";

struct StateDeleter {
  void operator()(qg_state* s) const { qg_state_free(s); }
};
using State = std::unique_ptr<qg_state, StateDeleter>;

// Failure carrying the process exit code.
struct CliFailure {
  int exit_code;
  std::string message;
};

[[noreturn]] void raise(qg_status status) {
  const int code = status == QG_ERR_NOT_PRODUCT ? kExitRefusal : kExitInput;
  std::string msg = qg_last_error();
  if (msg.empty()) msg = qg_status_string(status);
  throw CliFailure{code, msg};
}

void check(qg_status status) {
  if (status != QG_OK) raise(status);
}

std::string read_input(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitInput, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

State load_state(const std::string& path) {
  const std::string text = read_input(path);
  qg_state* raw = nullptr;
  const qg_status st = qg_state_from_json(text.c_str(), &raw);
  if (st != QG_OK) throw CliFailure{kExitInput, path + ": " + qg_last_error()};
  return State(raw);
}

State load_state(const std::string& path, int qubits) {
  State s = load_state(path);
  if (qg_state_qubits(s.get()) != qubits)
    throw CliFailure{kExitInput, path + ": expected a " + std::to_string(qubits) +
                                     "-qubit state, got " +
                                     std::to_string(qg_state_qubits(s.get()))};
  return s;
}

std::string state_json(const qg_state* s) {
  size_t needed = 0;
  qg_state_to_json(s, nullptr, 0, &needed);
  std::string buf(needed, '\0');
  check(qg_state_to_json(s, buf.data(), buf.size(), &needed));
  buf.resize(needed - 1);
  return buf;
}

json amplitudes_json(const qg_state* s) {
  const size_t n = size_t{2} << qg_state_qubits(s);
  std::vector<double> re_im(n);
  check(qg_state_amplitudes(s, re_im.data(), re_im.size()));
  json arr = json::array();
  for (size_t i = 0; i < n; i += 2) arr.push_back({re_im[i], re_im[i + 1]});
  return arr;
}

// JSON text with every floating-point number at 17 significant digits.
void write_json(std::ostream& os, const json& j, int indent, int depth = 0) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent, depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case json::value_t::array: {
      os << "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ", ";
        first = false;
        write_json(os, v, indent, depth + 1);
      }
      os << "]";
      return;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string output = "-";
  std::string format = "json";
};

void emit_text(const Globals& g, const std::string& text) {
  if (g.output == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw CliFailure{kExitInput, "cannot write " + g.output};
  out << text << "\n";
}

void emit_report(const Globals& g, const std::string& command, json body) {
  json report = {{"schema_version", kSchemaVersion}, {"command", command}};
  report.update(body);
  std::ostringstream os;
  write_json(os, report, 2);
  emit_text(g, os.str());
}

json complex_json(double re, double im) { return json::array({re, im}); }

int run_classify(const Globals& g, const std::string& file) {
  State s = load_state(file, 3);
  qg_three_qubit_report r{};
  check(qg_classify(s.get(), &r));
  emit_report(g, "classify",
              {{"class", qg_slocc_label_string(r.label)},
               {"tau", r.tau},
               {"ranks", {r.ranks[0], r.ranks[1], r.ranks[2]}},
               {"singular_ratios",
                {r.singular_ratio[0], r.singular_ratio[1], r.singular_ratio[2]}},
               {"det", complex_json(r.det_re, r.det_im)},
               {"on_D", bool(r.on_D)},
               {"on_Q1", bool(r.on_Q[0])},
               {"on_Q2", bool(r.on_Q[1])},
               {"on_Q3", bool(r.on_Q[2])},
               {"on_sym", bool(r.on_sym)},
               {"on_asym", bool(r.on_asym)},
               {"on_T", bool(r.on_T)},
               {"on_H_sym", bool(r.on_H_sym)},
               {"on_H", bool(r.on_H)}});
  return kExitOk;
}

int run_invariants(const Globals& g, const std::string& file) {
  State s = load_state(file);
  const int qubits = qg_state_qubits(s.get());
  json body = {{"qubits", qubits}};
  if (qubits == 1) {
    qg_bloch_report b{};
    check(qg_bloch(s.get(), &b));
    body["bloch"] = {b.x, b.y, b.z};
    body["radius"] = b.radius;
    body["eigenvalues"] = {b.lambda_plus, b.lambda_minus};
  } else if (qubits == 2) {
    qg_two_qubit_report r{};
    check(qg_two_qubit_invariants(s.get(), &r));
    body["concurrence"] = r.concurrence;
    body["quadric_value"] = complex_json(r.quadric_re, r.quadric_im);
    body["on_quadric"] = bool(r.on_quadric);
    body["symmetric"] = bool(r.symmetric);
    body["on_conic"] = bool(r.on_conic);
  } else {
    qg_three_qubit_report r{};
    check(qg_classify(s.get(), &r));
    body["class"] = qg_slocc_label_string(r.label);
    body["tau"] = r.tau;
    body["det"] = complex_json(r.det_re, r.det_im);
    body["quartic_H"] = complex_json(r.quartic_re, r.quartic_im);
    body["q_invariant_abs"] = r.q_invariant_abs;
    body["ranks"] = {r.ranks[0], r.ranks[1], r.ranks[2]};
  }
  emit_report(g, "invariants", body);
  return kExitOk;
}

struct ConstructArgs {
  std::string name;
  double theta = 0.0;
  double phi = 0.0;
  int party = 1;
  int m = 0;
  int qubits = 3;
};

int run_construct(const Globals& g, const ConstructArgs& a) {
  qg_state* raw = nullptr;
  if (a.name == "singlet")
    check(qg_construct_singlet(&raw));
  else if (a.name == "triplet")
    check(qg_construct_triplet(a.theta, a.phi, a.m, &raw));
  else if (a.name == "ghz")
    check(qg_construct_ghz(a.theta, a.phi, &raw));
  else if (a.name == "w")
    check(qg_construct_w(a.theta, a.phi, &raw));
  else if (a.name == "veronese")
    check(qg_construct_veronese(a.qubits, a.theta, a.phi, &raw));
  else if (a.name == "asym-line")
    check(qg_construct_asym_line(a.party, a.theta, a.phi, &raw));
  else
    throw CliFailure{kExitInput, "unknown construction '" + a.name + "'"};
  State s(raw);
  emit_text(g, state_json(s.get()));
  return kExitOk;
}

int run_distance(const Globals& g, const std::string& f1, const std::string& f2) {
  State a = load_state(f1);
  State b = load_state(f2);
  double d = 0.0, p = 0.0;
  int equal = 0;
  check(qg_fs_distance(a.get(), b.get(), &d));
  check(qg_transition_probability(a.get(), b.get(), &p));
  check(qg_projective_equal(a.get(), b.get(), g.tol, &equal));
  emit_report(g, "distance",
              {{"distance", d},
               {"transition_probability", p},
               {"projectively_equal", bool(equal)}});
  return kExitOk;
}

int run_bloch(const Globals& g, const std::string& file) {
  State s = load_state(file, 1);
  qg_bloch_report b{};
  check(qg_bloch(s.get(), &b));
  emit_report(g, "bloch",
              {{"bloch", {b.x, b.y, b.z}},
               {"radius", b.radius},
               {"theta", b.theta},
               {"phi", b.phi},
               {"eigenvalues", {b.lambda_plus, b.lambda_minus}}});
  return kExitOk;
}

int run_factor(const Globals& g, const std::string& file) {
  State s = load_state(file, 2);
  qg_state* f1 = nullptr;
  qg_state* f2 = nullptr;
  check(qg_factor(s.get(), &f1, &f2));
  State a(f1), b(f2);
  emit_report(g, "factor",
              {{"factors",
                {{{"qubits", 1}, {"amplitudes", amplitudes_json(a.get())}},
                 {{"qubits", 1}, {"amplitudes", amplitudes_json(b.get())}}}}});
  return kExitOk;
}

int run_orbit_check(const Globals& g, const std::string& file, int trials) {
  if (trials < 1) throw CliFailure{kExitInput, "--trials must be >= 1"};
  State s = load_state(file, 3);
  qg_orbit_report r{};
  check(qg_orbit_check(s.get(), trials, g.seed, &r));
  emit_report(g, "orbit-check",
              {{"class", qg_slocc_label_string(r.label)},
               {"trials", r.trials},
               {"preserved", r.preserved},
               {"seed", g.seed},
               {"det_reference", r.det_reference},
               {"max_det_drift", r.max_det_drift},
               {"max_tau_transformed", r.max_tau_transformed},
               {"det_invariant", bool(r.det_invariant)},
               {"passed", bool(r.passed)}});
  return r.passed ? kExitOk : kExitViolation;
}

int run_random(const Globals& g, int qubits) {
  qg_state* raw = nullptr;
  check(qg_state_random(qubits, g.seed, &raw));
  State s(raw);
  emit_text(g, state_json(s.get()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry and entanglement invariants of 1-3 qubit pure states"};
  app.footer(kStateFileHelp);
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tol", g.tol, "Projective equality tolerance")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", g.seed, "Seed for random states and operations");
  app.add_option("--output", g.output, "Output path, '-' for stdout");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json"}));

  std::string file, file2;
  ConstructArgs construct;
  int trials = 100;
  int random_qubits = 3;

  auto* classify = app.add_subcommand("classify", "SLOCC class and variety memberships");
  classify->add_option("file", file, "3-qubit state file")->required();

  auto* invariants = app.add_subcommand("invariants", "Invariants of a 1-3 qubit state");
  invariants->add_option("file", file, "State file")->required();

  auto* cons = app.add_subcommand("construct", "Write a canonical state file");
  cons->add_option("name", construct.name,
                   "singlet | triplet | ghz | w | veronese | asym-line")
      ->required();
  cons->add_option("--theta", construct.theta, "Polar angle of the direction");
  cons->add_option("--phi", construct.phi, "Azimuth of the direction");
  cons->add_option("--party", construct.party, "asym-line: party in the given direction");
  cons->add_option("--m", construct.m, "triplet: S_z value (-1, 0, 1)");
  cons->add_option("--qubits", construct.qubits, "veronese: number of qubits");

  auto* distance = app.add_subcommand("distance", "Fubini-Study distance of two states");
  distance->add_option("file1", file, "State file")->required();
  distance->add_option("file2", file2, "State file")->required();

  auto* bloch = app.add_subcommand("bloch", "Bloch vector of a 1-qubit state");
  bloch->add_option("file", file, "1-qubit state file")->required();

  auto* factor = app.add_subcommand("factor", "Factor a 2-qubit product state");
  factor->add_option("file", file, "2-qubit state file")->required();

  auto* orbit = app.add_subcommand("orbit-check", "Check SLOCC invariance on random operations");
  orbit->add_option("file", file, "3-qubit state file")->required();
  orbit->add_option("--trials", trials, "Number of random operations");

  auto* random = app.add_subcommand("random", "Write a random state file");
  random->add_option("--qubits", random_qubits, "Number of qubits (1-3)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*classify) return run_classify(g, file);
    if (*invariants) return run_invariants(g, file);
    if (*cons) return run_construct(g, construct);
    if (*distance) return run_distance(g, file, file2);
    if (*bloch) return run_bloch(g, file);
    if (*factor) return run_factor(g, file);
    if (*orbit) return run_orbit_check(g, file, trials);
    if (*random) return run_random(g, random_qubits);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitInput;
}
