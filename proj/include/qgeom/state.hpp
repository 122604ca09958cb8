// SPDX-License-Identifier: Apache-2.0
//
// Runtime-rank states and the JSON state-file format:
//
//   {"qubits": n, "amplitudes": [[re, im], ...]}
//
// with 2^n amplitudes in big-endian basis order (index 4A + 2B + C for three
// qubits, qubit 1 leftmost).
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgeom/spinor.hpp"

namespace qgeom {

using AnySpinor = std::variant<Spinor1, Spinor2, Spinor3>;

int qubit_count(const AnySpinor& s);
std::vector<Complex> amplitudes(const AnySpinor& s);

// Builds a state from 2^qubits amplitudes. Rejects the zero vector and
// non-finite values.
AnySpinor make_state(int qubits, std::span<const Complex> amps);

// Unit state with i.i.d. complex normal amplitudes; deterministic per seed.
AnySpinor random_state(int qubits, std::uint64_t seed);

AnySpinor parse_state_json(std::string_view text);

// Amplitudes are written with 17 significant digits.
std::string to_state_json(const AnySpinor& s);

double fs_distance(const AnySpinor& a, const AnySpinor& b);
double transition_probability(const AnySpinor& a, const AnySpinor& b);

}  // namespace qgeom
