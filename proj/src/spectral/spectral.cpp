#include "walks/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "walks/error.hpp"
#include "walks/numeric.hpp"
#include "walks/parallel.hpp"

namespace walks::spectral {

namespace {

using Complex = std::complex<double>;

ComplexMatrix block_antidiagonal(const ComplexMatrix& upper, const ComplexMatrix& lower) {
  const Eigen::Index q = upper.rows();
  ComplexMatrix m = ComplexMatrix::Zero(2 * q, 2 * q);
  m.topRightCorner(q, q) = upper;
  m.bottomLeftCorner(q, q) = lower;
  return m;
}

}  // namespace

ClockShift clock_shift(const FluxRational& flux, QuasiMomenta k) {
  const int q = flux.q();
  ClockShift cs{ComplexMatrix::Zero(q, q), ComplexMatrix::Zero(q, q)};
  const Complex ey = std::polar(1.0, k.ky);
  const Complex ex = std::polar(1.0, k.kx);
  for (int j = 0; j < q; ++j) {
    cs.u(j, j) = ey * flux.phase_power(j + 1);
    cs.v(j, (j + 1) % q) = ex;
  }
  return cs;
}

ComplexMatrix hofstadter(const FluxRational& flux, QuasiMomenta k) {
  const auto [u, v] = clock_shift(flux, k);
  return u + u.adjoint() + v + v.adjoint();
}

HoneycombOperators honeycomb_operators(const FluxRational& flux, QuasiMomenta k) {
  const auto [u, v] = clock_shift(flux, k);
  const Complex half = flux.half_phase();
  const ComplexMatrix w_upper = half * v * u.adjoint();
  const ComplexMatrix w_lower = std::conj(half) * u * v.adjoint();
  return {block_antidiagonal(u, u.adjoint()), block_antidiagonal(v, v.adjoint()),
          block_antidiagonal(w_upper, w_lower)};
}

ComplexMatrix honeycomb_block(const FluxRational& flux, QuasiMomenta k) {
  const auto [u, v] = clock_shift(flux, k);
  return u + v + flux.half_phase() * v * u.adjoint();
}

ComplexMatrix honeycomb_hamiltonian(const FluxRational& flux, QuasiMomenta k) {
  const ComplexMatrix a = honeycomb_block(flux, k);
  return block_antidiagonal(a, a.adjoint());
}

ComplexMatrix honeycomb_reduced(const FluxRational& flux, QuasiMomenta k) {
  const ComplexMatrix a = honeycomb_block(flux, k);
  return a * a.adjoint();
}

double tridiagonalizing_ky(const FluxRational& flux) {
  // exp(-i ky) = -exp(i pi p/q)  <=>  ky = -pi (1 + p/q)  (mod 2 pi)
  double ky = -std::numbers::pi * (1.0 + static_cast<double>(flux.p()) / flux.q());
  ky = std::fmod(ky, 2.0 * std::numbers::pi);
  if (ky < 0) ky += 2.0 * std::numbers::pi;
  return ky;
}

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::invalid_argument, "matrix shapes differ");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && max_abs_deviation(m, m.adjoint()) <= tolerance;
}

double trace_power(const ComplexMatrix& h, int n, int normalizer) {
  if (n < 1 || normalizer < 1) throw Error(Errc::invalid_argument, "trace_power needs n >= 1 and normalizer >= 1");
  // Scale the Hermiticity check with the entries so large spectra are not rejected.
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (!is_hermitian(h, kAlgebraTolerance * scale)) {
    throw Error(Errc::non_hermitian_input, "trace_power expects a Hermitian matrix");
  }
  ComplexMatrix power = h;
  for (int i = 1; i < n; ++i) power = power * h;
  const Complex tr = power.trace();
  if (std::abs(tr.imag()) > kTraceTolerance * std::max(1.0, std::abs(tr.real()))) {
    throw Error(Errc::invalid_argument, "trace of a Hermitian power has imaginary part " + std::to_string(tr.imag()));
  }
  return tr.real() / normalizer;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(Errc::invalid_argument, "eigenvalue solver failed");
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> secular_coefficients(const ComplexMatrix& h, std::vector<double>* magnitudes) {
  const std::vector<double> ev = hermitian_eigenvalues(h);
  std::vector<double> c(ev.size() + 1, 0.0);
  std::vector<double> m(ev.size() + 1, 0.0);
  c[0] = m[0] = 1.0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t k = i + 1; k > 0; --k) {
      c[k] -= ev[i] * c[k - 1];
      m[k] += std::abs(ev[i]) * m[k - 1];
    }
  }
  if (magnitudes != nullptr) *magnitudes = std::move(m);
  return c;
}

int matrix_power(LatticeKind kind, int steps) {
  require_closed_length(steps);
  return kind == LatticeKind::square ? steps : steps / 2;
}

double normalized_trace(LatticeKind kind, const FluxRational& flux, int steps, QuasiMomenta k) {
  const int power = matrix_power(kind, steps);
  const ComplexMatrix h = kind == LatticeKind::square ? hofstadter(flux, k) : honeycomb_reduced(flux, k);
  return trace_power(h, power, flux.q());
}

int reconstruction_modulus(LatticeKind kind, int steps) {
  // p runs over 1..q/2 only, so q must strictly exceed 2 A_max + 1 to give one row per unknown
  return next_prime_above(std::max(matrix_power(kind, steps), 2 * area_bound(kind, steps) + 1));
}

AreaDistribution reconstruct_area_distribution(LatticeKind kind, int steps) {
  const int q = reconstruction_modulus(kind, steps);
  const int a_max = area_bound(kind, steps);
  const int rows = q / 2;
  const int unknowns = a_max + 1;

  // sum_A C(A) Q^A = C(0) + sum_{A>0} (C(A) + C(-A)) cos(2 pi A p/q)
  Eigen::VectorXd rhs(rows);
  parallel_for(static_cast<std::size_t>(rows), [&](std::size_t i) {
    rhs(static_cast<Eigen::Index>(i)) = normalized_trace(kind, FluxRational(static_cast<int>(i) + 1, q), steps);
  });
  Eigen::MatrixXd system(rows, unknowns);
  for (int r = 0; r < rows; ++r) {
    for (int a = 0; a < unknowns; ++a) {
      system(r, a) = std::cos(2.0 * std::numbers::pi * a * (r + 1) / q);
    }
  }
  const Eigen::VectorXd x = system.colPivHouseholderQr().solve(rhs);

  AreaDistribution::Counts counts;
  for (int a = 0; a < unknowns; ++a) {
    const double rounded = std::round(x(a));
    const double residual = std::abs(x(a) - rounded);
    if (residual > kRoundingTolerance || rounded < 0) {
      throw Error(Errc::residual_too_large, "unknown for |A| = " + std::to_string(a) + " is " +
                                                std::to_string(x(a)) + " (q = " + std::to_string(q) + ")");
    }
    BigInt value(rounded);
    if (a == 0) {
      counts[0] = value;
      continue;
    }
    if (mpz_odd_p(value.get_mpz_t())) {
      throw Error(Errc::residual_too_large, "C(A) + C(-A) is odd for |A| = " + std::to_string(a));
    }
    BigInt half = value / 2;
    counts[a] = half;
    counts[-a] = half;
  }
  return AreaDistribution(steps, std::move(counts));
}

}  // namespace walks::spectral
