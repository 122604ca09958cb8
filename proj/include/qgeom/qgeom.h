/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the qgeom library.
 *
 * States are opaque handles owned by the caller and released with
 * qg_state_free. Every fallible call returns a qg_status; on failure a
 * human-readable message for the calling thread is available from
 * qg_last_error().
 *
 * Amplitude buffers hold interleaved (re, im) doubles in big-endian basis
 * order: for three qubits, amplitude index 4A + 2B + C with qubit 1 leftmost.
 */
#ifndef QGEOM_QGEOM_H
#define QGEOM_QGEOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QGEOM_BUILDING_SHARED)
#    define QG_API __declspec(dllexport)
#  else
#    define QG_API __declspec(dllimport)
#  endif
#else
#  define QG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qg_status {
  QG_OK = 0,
  QG_ERR_NULL_POINTER = 1,
  QG_ERR_INVALID_ARGUMENT = 2,
  QG_ERR_ZERO_STATE = 3,
  QG_ERR_QUBIT_COUNT = 4,
  QG_ERR_PARSE = 5,
  QG_ERR_NOT_PRODUCT = 6,
  QG_ERR_OFF_LINE = 7,
  QG_ERR_DEGENERATE = 8,
  QG_ERR_SINGULAR = 9,
  QG_ERR_NUMERICAL = 10,
  QG_ERR_BUFFER_TOO_SMALL = 11,
  QG_ERR_INTERNAL = 12
} qg_status;

typedef enum qg_slocc_label {
  QG_SEPARABLE = 0,
  QG_BISEP_A = 1,
  QG_BISEP_B = 2,
  QG_BISEP_C = 3,
  QG_W = 4,
  QG_GHZ = 5
} qg_slocc_label;

typedef struct qg_state qg_state;

typedef struct qg_bloch_report {
  double x, y, z;
  double radius;
  double theta, phi;
  double lambda_plus, lambda_minus;
} qg_bloch_report;

typedef struct qg_two_qubit_report {
  double concurrence;
  double quadric_re, quadric_im;
  int symmetric;  /* antisymmetric part negligible */
  int on_quadric; /* product state */
  int on_conic;   /* symmetric product state */
} qg_two_qubit_report;

typedef struct qg_three_qubit_report {
  qg_slocc_label label;
  int ranks[3];
  double singular_ratio[3];
  double tau;
  double det_re, det_im;
  double quartic_re, quartic_im;
  double q_invariant_abs;
  int on_D;     /* fully disentangled */
  int on_Q[3];  /* party i disentangled from the other two */
  int on_sym;   /* totally symmetric */
  int on_asym;  /* orthogonal to every symmetric state */
  int on_T;     /* twisted cubic */
  int on_H_sym; /* tangent developable of the twisted cubic */
  int on_H;     /* Cayley quartic: Det = 0 */
} qg_three_qubit_report;

typedef struct qg_orbit_report {
  qg_slocc_label label;
  int trials;
  int preserved;
  double det_reference;
  double max_det_drift;
  double max_tau_transformed;
  int det_invariant;
  int passed;
} qg_orbit_report;

QG_API const char* qg_version(void);
QG_API const char* qg_status_string(qg_status status);
QG_API const char* qg_last_error(void);
QG_API const char* qg_slocc_label_string(qg_slocc_label label);

/* Construction and access. */
QG_API qg_status qg_state_create(int qubits, const double* re_im, size_t n_doubles,
                                 qg_state** out);
QG_API qg_status qg_state_clone(const qg_state* s, qg_state** out);
QG_API void qg_state_free(qg_state* s);
QG_API int qg_state_qubits(const qg_state* s);
QG_API qg_status qg_state_amplitudes(const qg_state* s, double* re_im, size_t n_doubles);
QG_API qg_status qg_state_random(int qubits, uint64_t seed, qg_state** out);

/* State files. qg_state_to_json writes a NUL-terminated document; *needed
 * receives the required capacity including the terminator. */
QG_API qg_status qg_state_from_json(const char* text, qg_state** out);
QG_API qg_status qg_state_to_json(const qg_state* s, char* buf, size_t capacity,
                                  size_t* needed);

/* Canonical states. Directions are spherical angles theta in [0, pi],
 * phi in [0, 2 pi). */
QG_API qg_status qg_construct_singlet(qg_state** out);
QG_API qg_status qg_construct_triplet(double theta, double phi, int m, qg_state** out);
QG_API qg_status qg_construct_ghz(double theta, double phi, qg_state** out);
QG_API qg_status qg_construct_w(double theta, double phi, qg_state** out);
QG_API qg_status qg_construct_veronese(int qubits, double theta, double phi,
                                       qg_state** out);
QG_API qg_status qg_construct_asym_line(int party, double theta, double phi,
                                        qg_state** out);

/* Geometry. */
QG_API qg_status qg_fs_distance(const qg_state* a, const qg_state* b, double* out);
QG_API qg_status qg_transition_probability(const qg_state* a, const qg_state* b,
                                           double* out);
QG_API qg_status qg_projective_equal(const qg_state* a, const qg_state* b, double tol,
                                     int* out);

/* Invariants and reports. */
QG_API qg_status qg_bloch(const qg_state* s, qg_bloch_report* out);
QG_API qg_status qg_two_qubit_invariants(const qg_state* s, qg_two_qubit_report* out);
QG_API qg_status qg_classify(const qg_state* s, qg_three_qubit_report* out);

/* Factors a two-qubit product state; QG_ERR_NOT_PRODUCT for entangled input. */
QG_API qg_status qg_factor(const qg_state* s, qg_state** first, qg_state** second);

QG_API qg_status qg_orbit_check(const qg_state* s, int trials, uint64_t seed,
                                qg_orbit_report* out);

#ifdef __cplusplus
}
#endif

#endif /* QGEOM_QGEOM_H */
