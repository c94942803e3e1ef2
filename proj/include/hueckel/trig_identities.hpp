// Copyright 2026 The Hueckel Authors
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

#pragma once

#include <cmath>

namespace hueckel {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct TrigSumQuery {
  int terms = 0;  // N'
  double theta = 0.0;
};

/// -(1/(N+1)) sum_{k=1}^N sin(rkw) sin(skw)/cos(kw), w = pi/(N+1); N even.
double direct_green_sum(int n, int r, int s);

/// sum_{n=0}^{N'} cos(n theta) = cos(N' theta/2) sin((N'+1) theta/2) / sin(theta/2)
double sum_cos(int nprime, double theta);
inline double sum_cos(const TrigSumQuery& q) { return sum_cos(q.terms, q.theta); }

/// sum_{n=0}^{N'} sin(n theta) = sin(N' theta/2) sin((N'+1) theta/2) / sin(theta/2)
double sum_sin(int nprime, double theta);
inline double sum_sin(const TrigSumQuery& q) { return sum_sin(q.terms, q.theta); }

/// sin(pi N k/(N+1)) / sin(pi k/(N+1)) = -(-1)^k for even N. Returns the
/// sign and throws IdentityViolation if the float ratio disagrees by > 1e-9.
int sine_ratio_sign(int n, int k);

/// sum_{k=1}^N cos(2qkw)/cos(kw) accumulated pairwise (k with N+1-k); the
/// pairs cancel, so the result is the residual of an exact zero.
double parity_zero_sum(int n, int q);

}  // namespace hueckel
