// Copyright 2026 The oneext Authors
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

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oneext/graph.hpp"
#include "oneext/mis.hpp"

namespace oneext {

using Rational = boost::multiprecision::cpp_rational;

/// Accepts "20", "-3", "5/2" and "2.75".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" for integers.
std::string rational_string(const Rational& r);

/// Fixed-point rendering with `digits` fractional digits, rounding half away from zero.
std::string decimal_string(const Rational& r, unsigned digits);

/// Steady-state channel share under saturation:
///   p_v = theta * Z_{G - N[v]}(theta) / Z_G(theta),  Z_H(theta) = sum_S theta^|S|
/// over independent sets of H, the empty set included.
struct ThroughputVector {
  Rational theta;
  std::vector<Rational> p;
};

ThroughputVector throughput(const Graph& g, const Rational& theta, const SolverOptions& opts = {});
std::vector<ThroughputVector> throughput_many(const Graph& g, const std::vector<Rational>& thetas,
                                              const SolverOptions& opts = {});

/// lim p_v as theta grows: (#MIS containing v) / (#MIS).
std::vector<Rational> throughput_limit(const Graph& g, const SolverOptions& opts = {});

/// Header "theta,p_0,...,p_{n-1}", one row per theta.
std::string theta_sweep_csv(const Graph& g, const std::vector<Rational>& thetas, unsigned digits = 6,
                            const SolverOptions& opts = {});

/// Vertices whose limit share is zero, i.e. those in no maximum independent set.
std::vector<Vertex> starvation_report(const Graph& g, const SolverOptions& opts = {});

Rational evaluate(const IndependencePolynomial& poly, const Rational& x);

}  // namespace oneext
