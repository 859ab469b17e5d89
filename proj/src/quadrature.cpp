#include "vasyunin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "vasyunin/special.hpp"

namespace vasyunin {
namespace {

// Gauss-Kronrod 15(7) abscissae and weights on [-1, 1].
// Even entries of kNodes are the embedded Gauss-7 points.
constexpr double kNodes[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWeightsK[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWeightsG[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct PanelResult {
  double integral = 0.0;
  double error = 0.0;
};

// One GK15 panel on [a, b] with the QUADPACK-style error estimate.
template <typename F>
PanelResult gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fv[15];
  fv[7] = f(c);
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kNodes[i]);
    fv[14 - i] = f(c + h * kNodes[i]);
  }

  double resk = kWeightsK[7] * fv[7];
  double resabs = std::abs(resk);
  for (int i = 0; i < 7; ++i) {
    resk += kWeightsK[i] * (fv[i] + fv[14 - i]);
    resabs += kWeightsK[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
  }
  double resg = kWeightsG[3] * fv[7];
  for (int i = 0; i < 3; ++i) resg += kWeightsG[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

  const double mean = 0.5 * resk;
  double resasc = kWeightsK[7] * std::abs(fv[7] - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kWeightsK[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

  resabs *= h;
  resasc *= h;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

  return {resk * h, err};
}

struct Panel {
  double a, b, integral, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

IntegralEstimate adapt(const Integrand& f, double a, double b, double tol,
                       int max_panels) {
  IntegralEstimate est;
  if (!(tol > 0.0)) throw std::domain_error("integrate: tol must be > 0");
  if (a == b) {
    est.converged = true;
    return est;
  }

  std::priority_queue<Panel> heap;
  auto first = gk15(f, a, b);
  est.evaluations = 15;
  heap.push({a, b, first.integral, first.error});
  double total_err = first.error;
  int panels = 1;

  const double min_width = std::abs(b - a) * std::numeric_limits<double>::epsilon();
  while (total_err > tol && panels < max_panels) {
    Panel worst = heap.top();
    if (std::abs(worst.b - worst.a) <= min_width) break;
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = gk15(f, worst.a, mid);
    auto right = gk15(f, mid, worst.b);
    est.evaluations += 30;
    total_err += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.integral, left.error});
    heap.push({mid, worst.b, right.integral, right.error});
    ++panels;
  }

  // Recompute value and error from the final partition; the incremental
  // error tally drifts after many updates.
  double value = 0.0, err = 0.0;
  while (!heap.empty()) {
    value += heap.top().integral;
    err += heap.top().error;
    heap.pop();
  }
  est.value = value;
  est.abs_error = err;
  est.converged = err <= tol;
  return est;
}

}  // namespace

IntegralEstimate integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol, int max_panels) {
  return adapt(f, a, b, tol, max_panels);
}

IntegralEstimate integrate_semiinf_from(const Integrand& f, double a,
                                        double tol, int max_panels) {
  if (!(a > 0.0)) throw std::domain_error("integrate_semiinf_from: a must be > 0");
  // t = a/u maps [a, inf) onto (0, 1]; dt = a/u^2 du.
  auto mapped = [&f, a](double u) { return f(a / u) * a / (u * u); };
  return adapt(mapped, 0.0, 1.0, tol, max_panels);
}

IntegralEstimate integrate_smooth_semiinf(const Integrand& f, double tol) {
  const auto head = integrate_adaptive(f, 0.0, 1.0, tol / 2.0);
  const auto tail = integrate_semiinf_from(f, 1.0, tol / 2.0);
  IntegralEstimate est;
  est.value = head.value + tail.value;
  est.abs_error = head.abs_error + tail.abs_error;
  est.evaluations = head.evaluations + tail.evaluations;
  est.converged = head.converged && tail.converged;
  return est;
}

IntegralEstimate integrate_piecewise(const Integrand& f,
                                     const BreakpointPlan& plan, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("integrate_piecewise: tol must be > 0");
  if (!(plan.cutoff > 0.0))
    throw std::domain_error("integrate_piecewise: cutoff must be > 0");
  for (size_t i = 0; i < plan.breakpoints.size(); ++i) {
    const double b = plan.breakpoints[i];
    if (!(b > 0.0) || b >= plan.cutoff ||
        (i > 0 && b <= plan.breakpoints[i - 1]))
      throw std::domain_error("integrate_piecewise: malformed breakpoint plan");
  }

  const size_t pieces = plan.breakpoints.size() + 1;
  const double budget = std::max(tol - plan.tail_bound, 0.5 * tol);
  const double piece_tol = budget / static_cast<double>(pieces);
  IntegralEstimate est;
  double lo = 0.0;
  for (size_t i = 0; i <= plan.breakpoints.size(); ++i) {
    const double hi = i < plan.breakpoints.size() ? plan.breakpoints[i] : plan.cutoff;
    const auto part = adapt(f, lo, hi, piece_tol, 64);
    est.value += part.value;
    est.abs_error += part.abs_error;
    est.evaluations += part.evaluations;
    lo = hi;
  }
  est.abs_error += plan.tail_bound;
  est.converged = est.abs_error <= tol;
  return est;
}

IntegralEstimate oracle_exp_inner(long m, long n, double tol) {
  if (m < 1 || n < 1) throw std::domain_error("oracle_exp_inner: m, n must be >= 1");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  return integrate_smooth_semiinf(
      [md, nd](double t) { return kernel(md * t) * kernel(nd * t); }, tol);
}

IntegralEstimate oracle_det_inner(long m, long n, double tol) {
  if (m < 1 || n < 1) throw std::domain_error("oracle_det_inner: m, n must be >= 1");
  if (!(tol > 0.0)) throw std::domain_error("oracle_det_inner: tol must be > 0");

  // After t -> 1/u the integral is int_0^inf {u/n}{u/m} u^-2 du with the
  // integrand smooth between consecutive multiples of n and m.  Cutoff U
  // with |tail| <= int_U^inf u^-2 du = 1/U <= tol/2.
  const double cutoff = 2.0 / tol;
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);

  IntegralEstimate est;
  double sum = 0.0, comp = 0.0;  // Neumaier accumulation of panel integrals
  double err = 0.0;
  double lo = 0.0;
  long jn = 0, jm = 0;  // floor(u/n), floor(u/m) on the current interval
  double next_n = nd, next_m = md;
  while (lo < cutoff) {
    const double hi = std::min(cutoff, std::min(next_n, next_m));
    // Floors are constant on (lo, hi); evaluate the branch exactly.
    const double fn = static_cast<double>(jn);
    const double fm = static_cast<double>(jm);
    auto piece = gk15(
        [nd, md, fn, fm](double u) {
          return (u / nd - fn) * (u / md - fm) / (u * u);
        },
        lo, hi);
    const double t = sum + piece.integral;
    comp += std::abs(sum) >= std::abs(piece.integral)
                ? (sum - t) + piece.integral
                : (piece.integral - t) + sum;
    sum = t;
    err += piece.error;
    est.evaluations += 15;
    if (hi == next_n) {
      ++jn;
      next_n = static_cast<double>(jn + 1) * nd;
    }
    if (hi == next_m) {
      ++jm;
      next_m = static_cast<double>(jm + 1) * md;
    }
    lo = hi;
  }
  est.value = sum + comp;
  est.abs_error = err + 1.0 / cutoff;
  est.converged = est.abs_error <= tol;
  return est;
}

}  // namespace vasyunin
