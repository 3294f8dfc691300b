// Copyright (c) 2026 the lvdw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvdw {

/// Thrown when an adaptive integral exhausts its evaluation budget before
/// meeting its tolerance. Truncated results are never returned silently.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Tolerances and budgets for every semi-infinite integral in the library.
struct QuadratureSpec {
  double rel_tol = 1e-6;     ///< relative tolerance per integral
  double abs_tol = 1e-12;    ///< pressure floor in Pa for the force integrals
  int max_evals = 200000;    ///< integrand-evaluation budget per integral
  double zeta_max = 1e4;     ///< eV cap on the outer imaginary-frequency cutoff
  double y_span = 60.0;      ///< inner-integral window in y = 2*k3*d beyond its lower edge
  double kappa_window = 100.0;  ///< outer cutoff kappa_max = kappa_window / (2 d)
};

/// FNV-1a over the spec fields, for curve metadata.
std::string quadrature_spec_hash(const QuadratureSpec& spec);

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  ///< accumulated error estimate (plus any tail bound)
  int evals = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1]. All nodes are interior,
// so the rule never evaluates an endpoint.
inline constexpr double gk_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double gk_weights_k15[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// Gauss-7 weights, nonzero only on the shared nodes (odd indices plus center).
inline constexpr double gk_weights_g7[8] = {
    0.0, 0.129484966168870, 0.0, 0.279705391489277,
    0.0, 0.381830050505119, 0.0, 0.417959183673469};

template <class F>
void gk15(F&& f, double a, double b, double& value, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double k15 = gk_weights_k15[7] * f(mid);
  double g7 = gk_weights_g7[7] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * gk_nodes[i];
    const double pair = f(mid + dx) + f(mid - dx);
    k15 += gk_weights_k15[i] * pair;
    g7 += gk_weights_g7[i] * pair;
  }
  value = half * k15;
  err = std::fabs(half * (k15 - g7));
}

struct Segment {
  double a, b, value, err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite intervals defined
/// by consecutive entries of `edges` (so edges must be sorted and have at
/// least two entries). Open rule: no endpoint is ever evaluated, which makes
/// integrable endpoint singularities safe. Converges when the accumulated
/// error estimate drops below max(rel_tol*|value|, abs_tol); throws
/// ConvergenceError once max_evals is spent without reaching that.
template <class F>
QuadResult integrate_adaptive(F&& f, const std::vector<double>& edges,
                              double rel_tol, double abs_tol, int max_evals,
                              const char* context = "integral") {
  if (edges.size() < 2) throw std::invalid_argument("integrate_adaptive: need at least one interval");
  QuadResult res;
  std::priority_queue<detail::Segment> queue;
  double total = 0.0, total_err = 0.0;
  // Error mass on segments too narrow to split further; kept out of the queue.
  double floor_err = 0.0;

  auto push = [&](double a, double b) {
    detail::Segment s{a, b, 0.0, 0.0};
    detail::gk15(f, a, b, s.value, s.err);
    res.evals += 15;
    total += s.value;
    total_err += s.err;
    queue.push(s);
  };

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1]))
      throw std::invalid_argument("integrate_adaptive: edges must be strictly increasing");
    push(edges[i], edges[i + 1]);
  }

  auto done = [&] { return total_err - floor_err <= std::max(rel_tol * std::fabs(total), abs_tol); };

  while (!done()) {
    if (queue.empty()) break;  // everything left is at the roundoff floor
    if (res.evals + 30 > max_evals) {
      char diag[96];
      std::snprintf(diag, sizeof(diag), " (err=%.3e, value=%.6e, evals=%d)", total_err, total,
                    res.evals);
      throw ConvergenceError(std::string(context) +
                             ": evaluation budget exhausted before tolerance" + diag);
    }
    const detail::Segment worst = queue.top();
    queue.pop();
    total -= worst.value;
    total_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    const double width_floor = 1e-14 * (std::fabs(worst.a) + std::fabs(worst.b));
    if (mid - worst.a <= width_floor || worst.b - mid <= width_floor) {
      // cannot split further in double precision; account for it and move on
      total += worst.value;
      total_err += worst.err;
      floor_err += worst.err;
      continue;
    }
    push(worst.a, mid);
    push(mid, worst.b);
  }

  res.value = total;
  res.abs_error = total_err;
  res.converged = true;
  return res;
}

template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                              double abs_tol, int max_evals,
                              const char* context = "integral") {
  return integrate_adaptive(std::forward<F>(f), std::vector<double>{a, b},
                            rel_tol, abs_tol, max_evals, context);
}

/// Integrate f over [a, infinity). The finite part [a, tail_start] is split
/// at the given interior breakpoints; the tail [tail_start, infinity) is
/// mapped with u = 1/x onto (0, 1/tail_start], which the open rule handles
/// without touching u = 0. Requires f to decay at least as x^-2.
template <class F>
QuadResult integrate_semi_infinite(F&& f, double a,
                                   std::vector<double> breakpoints,
                                   double tail_start, double rel_tol,
                                   double abs_tol, int max_evals,
                                   const char* context = "semi-infinite integral") {
  if (!(tail_start > a) || !(a >= 0.0))
    throw std::invalid_argument("integrate_semi_infinite: need 0 <= a < tail_start");
  std::vector<double> edges{a};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double b : breakpoints)
    if (b > edges.back() && b < tail_start) edges.push_back(b);
  edges.push_back(tail_start);

  auto tail_f = [&f](double u) { return f(1.0 / u) / (u * u); };

  // The finite pieces fix the overall scale; the mapped tail then runs with
  // an absolute floor tied to that scale so a negligible tail converges fast.
  QuadResult head = integrate_adaptive(f, edges, rel_tol, abs_tol * 0.5,
                                       max_evals, context);
  QuadResult tail = integrate_adaptive(
      tail_f, 0.0, 1.0 / tail_start, rel_tol,
      std::max(abs_tol * 0.5, 0.1 * rel_tol * std::fabs(head.value)),
      max_evals - head.evals, context);

  QuadResult res;
  res.value = head.value + tail.value;
  res.abs_error = head.abs_error + tail.abs_error;
  res.evals = head.evals + tail.evals;
  res.converged = head.converged && tail.converged;
  return res;
}

/// n logarithmically spaced points over [lo, hi], endpoints exact.
std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace lvdw
