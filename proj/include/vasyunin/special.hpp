#pragma once

#include "vasyunin/quadrature.hpp"

namespace vasyunin {

// Mathematical constants, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLogTwoPi = 1.8378770664093454836;
// C = (log 2pi - gamma)/2, the constant of both Vasyunin-type formulas.
inline constexpr double kConstantC = 0.63033070075390631148;

/// A positive rational m/n together with its lowest-terms witness:
/// r = gcd(m, n), m = r*p, n = r*q, gcd(p, q) = 1.
struct ReducedRational {
  long m = 1;
  long n = 1;
  long r = 1;
  long p = 1;
  long q = 1;

  static ReducedRational reduce(long m, long n);
};

enum class KernelRegime { series_near_zero, direct, asymptotic_tail };

struct KernelValue {
  double value = 0.0;
  KernelRegime regime = KernelRegime::direct;
};

/// E_n(t) = 1/(nt) - 1/(e^{nt} - 1), relative error <= 1e-14 across
/// regimes.  Throws std::domain_error for n < 1 or t <= 0.
KernelValue eval_kernel(long n, double t);

/// Scalar kernel K(x) = 1/x - 1/(e^x - 1) = E_1(x).
double kernel(double x);

/// 1/2 - K(x), evaluated without cancellation near x = 0.
double half_minus_kernel(double x);

/// E[{Z}] for Z ~ Exp(alpha): 1/alpha - 1/(e^alpha - 1).
double frac_exp_mean(double alpha);

struct Constants {
  double euler_gamma = kEulerGamma;
  double log_two_pi = kLogTwoPi;
  double C_closed = kConstantC;
  IntegralEstimate C_integral;
};

/// The constant C both ways: closed form (log 2pi - gamma)/2 and
/// quadrature of 1 - int_0^1 (1/(t(e^t-1)) - 1/t^2 + 1/(2t)) dt
///              - int_1^inf dt/(t(e^t-1)).
Constants constant_C(double tol = 1e-12);

/// <chi, rho_n> = int_0^1 {1/(nt)} dt = (1 - gamma + log n)/n.
double chi_inner_rho(long n);

/// <chi, R_n> = int_0^1 E_n(t) dt = log(n/(1 - e^{-n}))/n.
double chi_inner_R(long n);

namespace detail {

// Branch thresholds for the scalar kernel, in x = n*t.
inline constexpr double kKernelSeriesCut = 1e-2;
inline constexpr double kKernelTailCut = 30.0;

double kernel_series(double x);
double kernel_direct(double x);
double kernel_tail(double x);

}  // namespace detail

}  // namespace vasyunin
