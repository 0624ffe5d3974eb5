#pragma once

#include <vector>

#include <Eigen/Dense>

#include "walks/area_distribution.hpp"
#include "walks/flux.hpp"
#include "walks/lattice.hpp"

// Matrix route: q-dimensional clock/shift representation of the magnetic
// translations, the square-lattice (Hofstadter) Hamiltonian, the 2q-dimensional
// honeycomb hopping operators, and area distributions recovered from
// normalized traces at roots of unity.
namespace walks::spectral {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kAlgebraTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kRoundingTolerance = 1e-6;

/// Quasimomenta; the Casimirs are u^q = exp(i q ky), v^q = exp(i q kx).
struct QuasiMomenta {
  double kx = 0.0;
  double ky = 0.0;
};

struct ClockShift {
  ComplexMatrix u;  // exp(i ky) diag(Q, Q^2, ..., Q^q)
  ComplexMatrix v;  // exp(i kx) times the cyclic shift, v(j, j+1) = 1
};

ClockShift clock_shift(const FluxRational& flux, QuasiMomenta k = {});

/// u + u^-1 + v + v^-1.
ComplexMatrix hofstadter(const FluxRational& flux, QuasiMomenta k = {});

struct HoneycombOperators {
  ComplexMatrix U;
  ComplexMatrix V;
  ComplexMatrix W;
};

/// Block anti-diagonal 2q x 2q hopping operators with U^2 = V^2 = W^2 = 1
/// and (UVW)^2 = Q. Q^(1/2) is the principal root exp(i pi p/q).
HoneycombOperators honeycomb_operators(const FluxRational& flux, QuasiMomenta k = {});

/// The q x q block A = u + v + Q^(1/2) v u^-1 of H_2q = [[0, A], [A^+, 0]].
ComplexMatrix honeycomb_block(const FluxRational& flux, QuasiMomenta k = {});

/// H_2q = U + V + W.
ComplexMatrix honeycomb_hamiltonian(const FluxRational& flux, QuasiMomenta k = {});

/// H_q = A A^+, whose spectrum is the square of the honeycomb spectrum.
ComplexMatrix honeycomb_reduced(const FluxRational& flux, QuasiMomenta k = {});

/// Quasimomentum ky that removes the corner entries of A (and of H_q):
/// exp(-i ky) = -Q^(1/2).
double tridiagonalizing_ky(const FluxRational& flux);

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tolerance = kAlgebraTolerance);

/// (1/normalizer) tr(H^n) by repeated multiplication. Throws
/// non_hermitian_input for non-Hermitian H and invalid_argument for n < 1 or
/// a raw trace whose imaginary part exceeds kTraceTolerance (relative to
/// max(1, |tr|)).
double trace_power(const ComplexMatrix& h, int n, int normalizer);

/// Sorted eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Coefficients a_k of det(1 - zH) = sum_k a_k z^k for Hermitian H, from its
/// eigenvalues. `magnitudes`, when given, receives e_k(|lambda|), the scale
/// each coefficient should be compared at.
std::vector<double> secular_coefficients(const ComplexMatrix& h, std::vector<double>* magnitudes = nullptr);

/// Normalized trace whose Q-expansion is sum_A C(A) Q^A for walks of the
/// given length: (1/q) tr(H^steps) on the square lattice and
/// (1/q) tr(H_q^(steps/2)) on the honeycomb lattice.
double normalized_trace(LatticeKind kind, const FluxRational& flux, int steps, QuasiMomenta k = {});

/// Matrix power entering normalized_trace; it must stay below q to exclude
/// umklapp terms.
int matrix_power(LatticeKind kind, int steps);

/// Smallest prime q above both the matrix power and 2 * area_bound + 1.
int reconstruction_modulus(LatticeKind kind, int steps);

/// Recovers C(A) from normalized traces at flux p/q, p = 1..floor(q/2),
/// by a least-squares solve of the cosine system in C(0) and C(A) + C(-A).
/// Throws residual_too_large when any unknown is farther than
/// kRoundingTolerance from an integer, or an even-sum unknown is odd.
AreaDistribution reconstruct_area_distribution(LatticeKind kind, int steps);

}  // namespace walks::spectral
