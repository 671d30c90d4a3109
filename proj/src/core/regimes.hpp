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

#ifndef NHG_CORE_REGIMES_HPP
#define NHG_CORE_REGIMES_HPP

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace nhg {

inline constexpr int kDefaultResolution1D = 10000;
inline constexpr int kDefaultResolution2D = 400;

/// Union of disjoint closed intervals within [0,1], plus the grid resolution
/// that produced it.
struct Region1D {
  std::vector<std::pair<double, double>> intervals;
  int resolution = 0;

  bool contains(double p) const {
    for (const auto& [lo, hi] : intervals) {
      if (p >= lo && p <= hi) return true;
    }
    return false;
  }
  bool empty() const { return intervals.empty(); }
};

/// Superlevel set {p in [0,1] : fn(p) >= zeta}. Grid scan at the given
/// resolution with bisection refinement of each boundary to 1e-6.
Region1D superlevel_region_1d(const std::function<double(double)>& fn, double zeta,
                              int resolution = kDefaultResolution1D);

/// Interval intersection; all inputs must share one resolution.
Region1D intersect_regions(const std::vector<Region1D>& regions);

struct SafetyValue {
  double p_star = 0.0;
  double value = 0.0;
};

/// Global minimum over [0,1]: dense grid, then golden-section refinement of
/// every local basin; argmin and value to 1e-6.
SafetyValue safety_value_1d(const std::function<double(double)>& fn,
                            int resolution = kDefaultResolution1D);

/// Cells of the probability simplex {p1,p2 >= 0, p1+p2 <= 1} whose center
/// value clears zeta. Cell (i,j) covers [i/res,(i+1)/res) x [j/res,(j+1)/res).
struct Region2D {
  int resolution = 0;
  std::vector<std::pair<int, int>> cells;
};

Region2D superlevel_region_2d(const std::function<double(double, double)>& fn, double zeta,
                              int resolution = kDefaultResolution2D);

/// Grid minimum over the simplex; coarse counterpart of safety_value_1d used
/// for the two-dimensional diagnostics.
struct SafetyValue2D {
  double p1 = 0.0, p2 = 0.0, value = 0.0;
};
SafetyValue2D simplex_grid_min(const std::function<double(double, double)>& fn,
                               int resolution = kDefaultResolution2D);

struct Hessian2D {
  double fxx = 0.0, fxy = 0.0, fyy = 0.0;

  double det() const { return fxx * fyy - fxy * fxy; }
  std::array<double, 2> eigenvalues() const;
};

/// Central finite-difference Hessian at a simplex-interior point.
Hessian2D hessian_2d(const std::function<double(double, double)>& fn, double p1, double p2,
                     double step = 1e-4);

}  // namespace nhg

#endif  // NHG_CORE_REGIMES_HPP
