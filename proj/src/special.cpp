#include "vasyunin/special.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vasyunin {

ReducedRational ReducedRational::reduce(long m, long n) {
  if (m < 1 || n < 1) throw std::domain_error("ReducedRational: m, n must be >= 1");
  const long r = std::gcd(m, n);
  return ReducedRational{m, n, r, m / r, n / r};
}

namespace detail {

double kernel_series(double x) {
  // 1/(e^x-1) = 1/x - 1/2 + x/12 - x^3/720 + ..., so
  // K(x) = 1/2 - x/12 + x^3/720 (next term x^5/30240, < 4e-16 rel at cut).
  return 0.5 - x / 12.0 + x * x * x / 720.0;
}

double kernel_direct(double x) { return 1.0 / x - 1.0 / std::expm1(x); }

double kernel_tail(double x) {
  const double e = std::exp(-x);
  return 1.0 / x - e / (1.0 - e);
}

}  // namespace detail

double kernel(double x) {
  using namespace detail;
  if (x < kKernelSeriesCut) return kernel_series(x);
  if (x > kKernelTailCut) return kernel_tail(x);
  return kernel_direct(x);
}

double half_minus_kernel(double x) {
  if (x < detail::kKernelSeriesCut) {
    const double x2 = x * x;
    return x / 12.0 - x * x2 / 720.0 + x * x2 * x2 / 30240.0;
  }
  return 0.5 - kernel(x);
}

KernelValue eval_kernel(long n, double t) {
  if (n < 1) throw std::domain_error("eval_kernel: n must be >= 1");
  if (!(t > 0.0)) throw std::domain_error("eval_kernel: t must be > 0");
  using namespace detail;
  const double x = static_cast<double>(n) * t;
  if (x < kKernelSeriesCut) return {kernel_series(x), KernelRegime::series_near_zero};
  if (x > kKernelTailCut) return {kernel_tail(x), KernelRegime::asymptotic_tail};
  return {kernel_direct(x), KernelRegime::direct};
}

double frac_exp_mean(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("frac_exp_mean: alpha must be > 0");
  return eval_kernel(1, alpha).value;
}

Constants constant_C(double tol) {
  if (!(tol > 0.0)) throw std::domain_error("constant_C: tol must be > 0");
  Constants c;
  c.C_closed = (c.log_two_pi - c.euler_gamma) / 2.0;

  // int_0^1 (1/(t(e^t-1)) - 1/t^2 + 1/(2t)) dt; the integrand equals
  // (1/2 - K(t))/t, which extends continuously to 1/12 at 0.
  const auto near = integrate_adaptive(
      [](double t) { return half_minus_kernel(t) / t; }, 0.0, 1.0, tol / 2.0);
  // int_1^inf dt/(t(e^t-1))
  const auto far = integrate_semiinf_from(
      [](double t) {
        const double e = std::exp(-t);
        return e / (t * (1.0 - e));
      },
      1.0, tol / 2.0);

  c.C_integral.value = 1.0 - near.value - far.value;
  c.C_integral.abs_error = near.abs_error + far.abs_error;
  c.C_integral.evaluations = near.evaluations + far.evaluations;
  c.C_integral.converged = near.converged && far.converged;
  return c;
}

double chi_inner_rho(long n) {
  if (n < 1) throw std::domain_error("chi_inner_rho: n must be >= 1");
  return (1.0 - kEulerGamma + std::log(static_cast<double>(n))) / static_cast<double>(n);
}

double chi_inner_R(long n) {
  if (n < 1) throw std::domain_error("chi_inner_R: n must be >= 1");
  const double nd = static_cast<double>(n);
  // log(n/(1-e^{-n}))/n, antiderivative of E_1 evaluated at n.
  return (std::log(nd) - std::log1p(-std::exp(-nd))) / nd;
}

}  // namespace vasyunin
