// SPDX-License-Identifier: Apache-2.0
#include "qgeom/state.hpp"

#include <cstdio>

#include "json.hpp"

#include "qgeom/projective.hpp"

namespace qgeom {

namespace {

template <std::size_t Rank>
Spinor<Rank> fill(std::span<const Complex> amps) {
  Spinor<Rank> s;
  for (std::size_t i = 0; i < Spinor<Rank>::kSize; ++i) s[i] = amps[i];
  return s;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int qubit_count(const AnySpinor& s) { return static_cast<int>(s.index()) + 1; }

std::vector<Complex> amplitudes(const AnySpinor& s) {
  return std::visit(
      [](const auto& sp) {
        return std::vector<Complex>(sp.components().begin(), sp.components().end());
      },
      s);
}

AnySpinor make_state(int qubits, std::span<const Complex> amps) {
  if (qubits < 1 || qubits > 3)
    throw Error(ErrorCode::UnsupportedQubits, "qubits must be 1, 2 or 3");
  const std::size_t expected = std::size_t{1} << qubits;
  if (amps.size() != expected)
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(expected) + " amplitudes, got " +
                    std::to_string(amps.size()));
  AnySpinor s;
  switch (qubits) {
    case 1: s = fill<1>(amps); break;
    case 2: s = fill<2>(amps); break;
    default: s = fill<3>(amps); break;
  }
  std::visit(
      [](const auto& sp) {
        if (!sp.is_finite())
          throw Error(ErrorCode::InvalidArgument, "non-finite amplitude");
        if (sp.is_zero())
          throw Error(ErrorCode::ZeroState, "all amplitudes are zero");
      },
      s);
  return s;
}

AnySpinor random_state(int qubits, std::uint64_t seed) {
  switch (qubits) {
    case 1: return random_spinor<1>(seed);
    case 2: return random_spinor<2>(seed);
    case 3: return random_spinor<3>(seed);
    default:
      throw Error(ErrorCode::UnsupportedQubits, "qubits must be 1, 2 or 3");
  }
}

AnySpinor parse_state_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("qubits") || !doc.contains("amplitudes"))
    throw Error(ErrorCode::Parse,
                "state file needs \"qubits\" and \"amplitudes\" fields");
  const auto& q = doc["qubits"];
  if (!q.is_number_integer())
    throw Error(ErrorCode::Parse, "\"qubits\" must be an integer");
  const auto& arr = doc["amplitudes"];
  if (!arr.is_array()) throw Error(ErrorCode::Parse, "\"amplitudes\" must be an array");
  std::vector<Complex> amps;
  amps.reserve(arr.size());
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw Error(ErrorCode::Parse, "each amplitude must be a [re, im] pair");
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  const auto qubits = q.get<std::int64_t>();
  if (qubits < 1 || qubits > 3)
    throw Error(ErrorCode::UnsupportedQubits, "qubits must be 1, 2 or 3");
  return make_state(static_cast<int>(qubits), amps);
}

std::string to_state_json(const AnySpinor& s) {
  std::string out = "{\"qubits\": " + std::to_string(qubit_count(s)) +
                    ", \"amplitudes\": [";
  const auto amps = amplitudes(s);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i) out += ", ";
    out += "[" + format_double(amps[i].real()) + ", " +
           format_double(amps[i].imag()) + "]";
  }
  out += "]}";
  return out;
}

double fs_distance(const AnySpinor& a, const AnySpinor& b) {
  if (a.index() != b.index())
    throw Error(ErrorCode::RankMismatch, "states have different qubit counts");
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return fs_distance(x, std::get<T>(b));
      },
      a);
}

double transition_probability(const AnySpinor& a, const AnySpinor& b) {
  if (a.index() != b.index())
    throw Error(ErrorCode::RankMismatch, "states have different qubit counts");
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return transition_probability(x, std::get<T>(b));
      },
      a);
}

}  // namespace qgeom
