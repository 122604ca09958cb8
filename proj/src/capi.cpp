// SPDX-License-Identifier: Apache-2.0
#include <cstring>
#include <exception>
#include <string>

#include "qgeom/orbit.hpp"
#include "qgeom/projective.hpp"
#include "qgeom/qgeom.h"
#include "qgeom/qubit_one.hpp"
#include "qgeom/qubit_three.hpp"
#include "qgeom/qubit_two.hpp"
#include "qgeom/state.hpp"

struct qg_state {
  qgeom::AnySpinor value;
};

namespace {

thread_local std::string g_last_error;

qg_status map_code(qgeom::ErrorCode code) {
  using qgeom::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroState: return QG_ERR_ZERO_STATE;
    case ErrorCode::UnsupportedQubits:
    case ErrorCode::RankMismatch: return QG_ERR_QUBIT_COUNT;
    case ErrorCode::Parse: return QG_ERR_PARSE;
    case ErrorCode::NotProduct: return QG_ERR_NOT_PRODUCT;
    case ErrorCode::OffLine: return QG_ERR_OFF_LINE;
    case ErrorCode::DegenerateLine:
    case ErrorCode::LineOnQuadric:
    case ErrorCode::CoincidentPoints: return QG_ERR_DEGENERATE;
    case ErrorCode::SingularOperator: return QG_ERR_SINGULAR;
    case ErrorCode::NumericalBreakdown: return QG_ERR_NUMERICAL;
    case ErrorCode::InvalidArgument:
    case ErrorCode::VarianceMismatch:
    case ErrorCode::NotSymmetric:
    case ErrorCode::HasSymmetricPart: return QG_ERR_INVALID_ARGUMENT;
  }
  return QG_ERR_INTERNAL;
}

qg_status fail(qg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
qg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return QG_OK;
  } catch (const qgeom::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QG_ERR_INTERNAL, e.what());
  }
}

qg_state* wrap(qgeom::AnySpinor s) { return new qg_state{std::move(s)}; }

template <class T>
const T& expect(const qg_state* s, int qubits) {
  if (qgeom::qubit_count(s->value) != qubits)
    throw qgeom::Error(qgeom::ErrorCode::UnsupportedQubits,
                       "expected a " + std::to_string(qubits) + "-qubit state");
  return std::get<T>(s->value);
}

qgeom::Spinor1 direction(double theta, double phi) {
  return qgeom::spinor_from_angles({theta, phi});
}

}  // namespace

#define QG_REQUIRE(ptr)                                          \
  do {                                                           \
    if ((ptr) == nullptr)                                        \
      return fail(QG_ERR_NULL_POINTER, #ptr " must not be null"); \
  } while (0)

extern "C" {

const char* qg_version(void) { return "1.0.0"; }

const char* qg_status_string(qg_status status) {
  switch (status) {
    case QG_OK: return "ok";
    case QG_ERR_NULL_POINTER: return "null pointer";
    case QG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QG_ERR_ZERO_STATE: return "zero state";
    case QG_ERR_QUBIT_COUNT: return "wrong qubit count";
    case QG_ERR_PARSE: return "malformed state file";
    case QG_ERR_NOT_PRODUCT: return "not a product state";
    case QG_ERR_OFF_LINE: return "state off the line";
    case QG_ERR_DEGENERATE: return "degenerate configuration";
    case QG_ERR_SINGULAR: return "singular operator";
    case QG_ERR_NUMERICAL: return "numerical breakdown";
    case QG_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case QG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qg_last_error(void) { return g_last_error.c_str(); }

const char* qg_slocc_label_string(qg_slocc_label label) {
  if (label < QG_SEPARABLE || label > QG_GHZ) return "unknown";
  return qgeom::to_string(static_cast<qgeom::SloccLabel>(label)).data();
}

qg_status qg_state_create(int qubits, const double* re_im, size_t n_doubles,
                          qg_state** out) {
  QG_REQUIRE(re_im);
  QG_REQUIRE(out);
  return guarded([&] {
    if (n_doubles % 2 != 0)
      throw qgeom::Error(qgeom::ErrorCode::InvalidArgument,
                         "amplitude buffer must hold (re, im) pairs");
    std::vector<qgeom::Complex> amps;
    for (size_t i = 0; i < n_doubles; i += 2) amps.emplace_back(re_im[i], re_im[i + 1]);
    *out = wrap(qgeom::make_state(qubits, amps));
  });
}

qg_status qg_state_clone(const qg_state* s, qg_state** out) {
  QG_REQUIRE(s);
  QG_REQUIRE(out);
  return guarded([&] { *out = wrap(s->value); });
}

void qg_state_free(qg_state* s) { delete s; }

int qg_state_qubits(const qg_state* s) {
  return s ? qgeom::qubit_count(s->value) : 0;
}

qg_status qg_state_amplitudes(const qg_state* s, double* re_im, size_t n_doubles) {
  QG_REQUIRE(s);
  QG_REQUIRE(re_im);
  const auto amps = qgeom::amplitudes(s->value);
  if (n_doubles < 2 * amps.size())
    return fail(QG_ERR_BUFFER_TOO_SMALL, "amplitude buffer too small");
  for (size_t i = 0; i < amps.size(); ++i) {
    re_im[2 * i] = amps[i].real();
    re_im[2 * i + 1] = amps[i].imag();
  }
  return QG_OK;
}

qg_status qg_state_random(int qubits, uint64_t seed, qg_state** out) {
  QG_REQUIRE(out);
  return guarded([&] { *out = wrap(qgeom::random_state(qubits, seed)); });
}

qg_status qg_state_from_json(const char* text, qg_state** out) {
  QG_REQUIRE(text);
  QG_REQUIRE(out);
  return guarded([&] { *out = wrap(qgeom::parse_state_json(text)); });
}

qg_status qg_state_to_json(const qg_state* s, char* buf, size_t capacity,
                           size_t* needed) {
  QG_REQUIRE(s);
  const std::string text = qgeom::to_state_json(s->value);
  if (needed) *needed = text.size() + 1;
  if (buf == nullptr || capacity < text.size() + 1)
    return fail(QG_ERR_BUFFER_TOO_SMALL, "JSON buffer too small");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return QG_OK;
}

qg_status qg_construct_singlet(qg_state** out) {
  QG_REQUIRE(out);
  return guarded([&] { *out = wrap(qgeom::singlet()); });
}

qg_status qg_construct_triplet(double theta, double phi, int m, qg_state** out) {
  QG_REQUIRE(out);
  return guarded([&] { *out = wrap(qgeom::triplet(direction(theta, phi), m)); });
}

qg_status qg_construct_ghz(double theta, double phi, qg_state** out) {
  QG_REQUIRE(out);
  return guarded([&] { *out = wrap(qgeom::ghz_state(direction(theta, phi))); });
}

qg_status qg_construct_w(double theta, double phi, qg_state** out) {
  QG_REQUIRE(out);
  return guarded([&] { *out = wrap(qgeom::w_state(direction(theta, phi))); });
}

qg_status qg_construct_veronese(int qubits, double theta, double phi,
                                qg_state** out) {
  QG_REQUIRE(out);
  return guarded([&] {
    const auto d = direction(theta, phi);
    switch (qubits) {
      case 1: *out = wrap(d); break;
      case 2: *out = wrap(qgeom::outer(d, d)); break;
      case 3: *out = wrap(qgeom::veronese3(d)); break;
      default:
        throw qgeom::Error(qgeom::ErrorCode::UnsupportedQubits,
                           "qubits must be 1, 2 or 3");
    }
  });
}

qg_status qg_construct_asym_line(int party, double theta, double phi,
                                 qg_state** out) {
  QG_REQUIRE(out);
  return guarded(
      [&] { *out = wrap(qgeom::singlet_line_point(party, direction(theta, phi))); });
}

qg_status qg_fs_distance(const qg_state* a, const qg_state* b, double* out) {
  QG_REQUIRE(a);
  QG_REQUIRE(b);
  QG_REQUIRE(out);
  return guarded([&] { *out = qgeom::fs_distance(a->value, b->value); });
}

qg_status qg_transition_probability(const qg_state* a, const qg_state* b,
                                    double* out) {
  QG_REQUIRE(a);
  QG_REQUIRE(b);
  QG_REQUIRE(out);
  return guarded([&] { *out = qgeom::transition_probability(a->value, b->value); });
}

qg_status qg_projective_equal(const qg_state* a, const qg_state* b, double tol,
                              int* out) {
  QG_REQUIRE(a);
  QG_REQUIRE(b);
  QG_REQUIRE(out);
  return guarded([&] {
    if (!(tol >= 0.0 && tol < 1.0))
      throw qgeom::Error(qgeom::ErrorCode::InvalidArgument,
                         "tolerance must lie in [0, 1)");
    // Only overlap matters: 1 - tol <= P.
    *out = qgeom::transition_probability(a->value, b->value) >= 1.0 - tol;
  });
}

qg_status qg_bloch(const qg_state* s, qg_bloch_report* out) {
  QG_REQUIRE(s);
  QG_REQUIRE(out);
  return guarded([&] {
    const auto& sp = expect<qgeom::Spinor1>(s, 1);
    const auto d = qgeom::bloch_from_spinor(sp);
    const auto angles = qgeom::angles_from_spinor(sp);
    const auto [hi, lo] = qgeom::density_eigenvalues(d);
    *out = {d.x, d.y, d.z, d.radius(), angles.theta, angles.phi, hi, lo};
  });
}

qg_status qg_two_qubit_invariants(const qg_state* s, qg_two_qubit_report* out) {
  QG_REQUIRE(s);
  QG_REQUIRE(out);
  return guarded([&] {
    const auto& sp = expect<qgeom::Spinor2>(s, 2);
    const qgeom::Complex q = qgeom::quadric_value(sp);
    const double c = qgeom::concurrence(sp);
    out->concurrence = c;
    out->quadric_re = q.real();
    out->quadric_im = q.imag();
    out->symmetric = qgeom::antisymmetric_part(sp).norm_squared() <
                     qgeom::kConicTol * qgeom::kConicTol * sp.norm_squared();
    out->on_quadric = c < qgeom::kFactorTol;
    out->on_conic = qgeom::on_conic(sp);
  });
}

qg_status qg_classify(const qg_state* s, qg_three_qubit_report* out) {
  QG_REQUIRE(s);
  QG_REQUIRE(out);
  return guarded([&] {
    const auto& sp = expect<qgeom::Spinor3>(s, 3);
    const auto cls = qgeom::slocc_classify(sp);
    const auto lr = qgeom::local_ranks(sp);
    const auto det = qgeom::hyperdeterminant(sp.normalized());
    const auto quartic = qgeom::quartic_H_value(sp.normalized());
    qg_three_qubit_report r{};
    r.label = static_cast<qg_slocc_label>(cls.label);
    for (int i = 0; i < 3; ++i) {
      r.ranks[i] = lr.ranks[i];
      r.singular_ratio[i] = lr.singular_ratio[i];
      r.on_Q[i] = lr.ranks[i] == 1;
    }
    r.tau = cls.tau;
    r.det_re = det.real();
    r.det_im = det.imag();
    r.quartic_re = quartic.real();
    r.quartic_im = quartic.imag();
    r.q_invariant_abs = std::abs(qgeom::q_invariant(qgeom::q_tensor(sp.normalized())));
    r.on_D = cls.label == qgeom::SloccLabel::Separable;
    r.on_sym = qgeom::is_symmetric(sp);
    r.on_asym = qgeom::is_asymmetric(sp);
    r.on_T = qgeom::on_twisted_cubic(sp);
    r.on_H_sym = qgeom::on_tangent_developable_sym(sp);
    r.on_H = cls.tau <= qgeom::kTangleTol;
    *out = r;
  });
}

qg_status qg_factor(const qg_state* s, qg_state** first, qg_state** second) {
  QG_REQUIRE(s);
  QG_REQUIRE(first);
  QG_REQUIRE(second);
  return guarded([&] {
    const auto& sp = expect<qgeom::Spinor2>(s, 2);
    const auto pair = qgeom::segre_factor(sp);
    auto* a = wrap(pair.first.normalized());
    auto* b = wrap(pair.second.normalized());
    *first = a;
    *second = b;
  });
}

qg_status qg_orbit_check(const qg_state* s, int trials, uint64_t seed,
                         qg_orbit_report* out) {
  QG_REQUIRE(s);
  QG_REQUIRE(out);
  return guarded([&] {
    const auto& sp = expect<qgeom::Spinor3>(s, 3);
    const auto r = qgeom::orbit_check(sp, trials, seed);
    *out = {static_cast<qg_slocc_label>(r.label),
            r.trials,
            r.preserved,
            r.det_reference,
            r.max_det_drift,
            r.max_tau_transformed,
            r.det_invariant,
            r.passed()};
  });
}

}  // extern "C"
