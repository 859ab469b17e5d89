#pragma once

#include <functional>
#include <vector>

namespace vasyunin {

/// Result of a numerical integration.  `converged` means the engine
/// believes `abs_error` is below the requested tolerance; a false flag
/// still carries the best estimate obtained before the panel budget
/// ran out.
struct IntegralEstimate {
  double value = 0.0;
  double abs_error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Integration layout for piecewise-smooth integrands on (0, cutoff]
/// with a bounded tail beyond the cutoff.  Breakpoints are strictly
/// increasing and all below `cutoff`; `tail_bound` is a rigorous bound
/// on the neglected contribution of (cutoff, inf) and is folded into
/// the reported absolute error.
struct BreakpointPlan {
  std::vector<double> breakpoints;
  double cutoff = 0.0;
  double tail_bound = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 15(7) on a finite interval [a, b].
IntegralEstimate integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol, int max_panels = 4096);

/// Integral of f over [a, inf), a > 0, via the substitution t -> a/u
/// mapping onto (0, 1].  Requires f = O(t^-2) at infinity.
IntegralEstimate integrate_semiinf_from(const Integrand& f, double a,
                                        double tol, int max_panels = 4096);

/// Integral over (0, inf) of a smooth integrand with a finite limit at
/// 0+ and O(t^-2) decay: adaptive on (0, 1], mapped adaptive on [1, inf).
IntegralEstimate integrate_smooth_semiinf(const Integrand& f, double tol);

/// Sum of adaptive integrals over [0, b_1], [b_1, b_2], ..., [b_k, cutoff].
/// f is only evaluated strictly inside each interval (Gauss-Kronrod
/// nodes are interior), so jump discontinuities at the breakpoints are
/// harmless.  plan.tail_bound is added to the reported error.
IntegralEstimate integrate_piecewise(const Integrand& f,
                                     const BreakpointPlan& plan, double tol);

/// Quadrature of int_0^inf E_m(t) E_n(t) dt (no m*n prefactor).
IntegralEstimate oracle_exp_inner(long m, long n, double tol);

/// Quadrature of int_0^inf {1/(nt)}{1/(mt)} dt (no m*n prefactor),
/// computed as int_0^inf {u/n}{u/m} u^-2 du with breakpoints at all
/// multiples of m and n below the cutoff U, U chosen so the crude tail
/// bound 1/U is at most tol/2.
IntegralEstimate oracle_det_inner(long m, long n, double tol);

}  // namespace vasyunin
