// Copyright 2026 The noisyhg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regimes.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace nhg {

namespace {

constexpr double kBoundaryTol = 1e-6;

// Bisects the predicate fn(p) >= zeta on [a,b], where the predicate holds at
// exactly one end; returns the crossing within kBoundaryTol, biased toward
// the holding side.
double bisect_boundary(const std::function<double(double)>& fn, double zeta, double a, double b,
                       bool holds_at_a) {
  while (b - a > kBoundaryTol) {
    double mid = 0.5 * (a + b);
    if ((fn(mid) >= zeta) == holds_at_a) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return holds_at_a ? a : b;
}

}  // namespace

Region1D superlevel_region_1d(const std::function<double(double)>& fn, double zeta,
                              int resolution) {
  require(resolution >= 1000, ErrorCode::invalid_argument, "resolution must be at least 1000");
  const std::size_t points = static_cast<std::size_t>(resolution) + 1;
  std::vector<char> in(points);
  parallel_for(points, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      double p = static_cast<double>(k) / resolution;
      in[k] = fn(p) >= zeta ? 1 : 0;
    }
  });

  Region1D region;
  region.resolution = resolution;
  std::size_t k = 0;
  while (k < points) {
    if (!in[k]) {
      ++k;
      continue;
    }
    std::size_t j = k;
    while (j + 1 < points && in[j + 1]) ++j;
    double lo = static_cast<double>(k) / resolution;
    double hi = static_cast<double>(j) / resolution;
    if (k > 0) lo = bisect_boundary(fn, zeta, static_cast<double>(k - 1) / resolution, lo, false);
    if (j + 1 < points) {
      hi = bisect_boundary(fn, zeta, hi, static_cast<double>(j + 1) / resolution, true);
    }
    region.intervals.emplace_back(lo, hi);
    k = j + 1;
  }
  return region;
}

Region1D intersect_regions(const std::vector<Region1D>& regions) {
  require(!regions.empty(), ErrorCode::invalid_argument, "nothing to intersect");
  for (const Region1D& r : regions) {
    require(r.resolution == regions.front().resolution, ErrorCode::invalid_argument,
            "regions must share one resolution");
  }
  Region1D acc = regions.front();
  for (std::size_t i = 1; i < regions.size(); ++i) {
    std::vector<std::pair<double, double>> next;
    for (const auto& [alo, ahi] : acc.intervals) {
      for (const auto& [blo, bhi] : regions[i].intervals) {
        double lo = std::max(alo, blo);
        double hi = std::min(ahi, bhi);
        if (lo <= hi) next.emplace_back(lo, hi);
      }
    }
    std::sort(next.begin(), next.end());
    acc.intervals = std::move(next);
  }
  return acc;
}

namespace {

// Golden-section minimization on [a,b]; unimodality is supplied by the
// per-basin bracketing of the caller.
SafetyValue golden_min(const std::function<double(double)>& fn, double a, double b) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  while (b - a > 1e-9) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  double p = 0.5 * (a + b);
  return {p, fn(p)};
}

}  // namespace

SafetyValue safety_value_1d(const std::function<double(double)>& fn, int resolution) {
  require(resolution >= 1000, ErrorCode::invalid_argument, "resolution must be at least 1000");
  const std::size_t points = static_cast<std::size_t>(resolution) + 1;
  std::vector<double> vals(points);
  parallel_for(points, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      vals[k] = fn(static_cast<double>(k) / resolution);
    }
  });

  SafetyValue best{0.0, vals[0]};
  auto consider = [&](const SafetyValue& cand) {
    if (cand.value < best.value) best = cand;
  };
  consider({1.0, vals[points - 1]});
  for (std::size_t k = 0; k < points; ++k) {
    bool left_ok = k == 0 || vals[k] <= vals[k - 1];
    bool right_ok = k + 1 == points || vals[k] <= vals[k + 1];
    if (!(left_ok && right_ok)) continue;
    double a = k == 0 ? 0.0 : static_cast<double>(k - 1) / resolution;
    double b = k + 1 == points ? 1.0 : static_cast<double>(k + 1) / resolution;
    consider(golden_min(fn, a, b));
  }
  return best;
}

Region2D superlevel_region_2d(const std::function<double(double, double)>& fn, double zeta,
                              int resolution) {
  require(resolution >= 2, ErrorCode::invalid_argument, "resolution must be at least 2");
  Region2D region;
  region.resolution = resolution;
  const std::size_t total = static_cast<std::size_t>(resolution) * resolution;
  std::vector<char> marked(total, 0);
  parallel_for(total, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      int i = static_cast<int>(idx % resolution);
      int j = static_cast<int>(idx / resolution);
      double p1 = (i + 0.5) / resolution;
      double p2 = (j + 0.5) / resolution;
      if (p1 + p2 > 1.0) continue;  // outside the simplex
      marked[idx] = fn(p1, p2) >= zeta ? 1 : 0;
    }
  });
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (marked[idx]) {
      region.cells.emplace_back(static_cast<int>(idx % resolution),
                                static_cast<int>(idx / resolution));
    }
  }
  return region;
}

SafetyValue2D simplex_grid_min(const std::function<double(double, double)>& fn, int resolution) {
  require(resolution >= 2, ErrorCode::invalid_argument, "resolution must be at least 2");
  SafetyValue2D best{0.0, 0.0, fn(0.0, 0.0)};
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; i + j <= resolution; ++j) {
      double p1 = static_cast<double>(i) / resolution;
      double p2 = static_cast<double>(j) / resolution;
      double v = fn(p1, p2);
      if (v < best.value) best = {p1, p2, v};
    }
  }
  return best;
}

std::array<double, 2> Hessian2D::eigenvalues() const {
  double tr = fxx + fyy;
  double disc = std::sqrt(std::max(0.0, (fxx - fyy) * (fxx - fyy) + 4.0 * fxy * fxy));
  return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

Hessian2D hessian_2d(const std::function<double(double, double)>& fn, double p1, double p2,
                     double step) {
  require(step > 0.0 && step <= 1e-4, ErrorCode::invalid_argument,
          "step must lie in (0, 1e-4]");
  bool interior = p1 >= step && p2 >= step && (p1 + step) + (p2 + step) <= 1.0;
  require(interior, ErrorCode::boundary_point,
          "point is not interior to the simplex at this step size");
  Hessian2D h;
  double f0 = fn(p1, p2);
  h.fxx = (fn(p1 + step, p2) - 2.0 * f0 + fn(p1 - step, p2)) / (step * step);
  h.fyy = (fn(p1, p2 + step) - 2.0 * f0 + fn(p1, p2 - step)) / (step * step);
  h.fxy = (fn(p1 + step, p2 + step) - fn(p1 + step, p2 - step) - fn(p1 - step, p2 + step) +
           fn(p1 - step, p2 - step)) /
          (4.0 * step * step);
  return h;
}

}  // namespace nhg
