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

#include "lvdw/quadrature.hpp"

#include <cstdio>
#include <cstring>

namespace lvdw {

std::string quadrature_spec_hash(const QuadratureSpec& spec) {
  const double doubles[5] = {spec.rel_tol, spec.abs_tol, spec.zeta_max,
                             spec.y_span, spec.kappa_window};
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  mix(doubles, sizeof(doubles));
  mix(&spec.max_evals, sizeof(spec.max_evals));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_spaced: need 0 < lo < hi");
  if (n < 2) throw std::invalid_argument("log_spaced: need n >= 2");
  std::vector<double> pts(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    pts[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

}  // namespace lvdw
