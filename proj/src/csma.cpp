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

#include "oneext/csma.hpp"

#include <sstream>

#include "oneext/errors.hpp"
#include "oneext/extendability.hpp"

namespace oneext {

using boost::multiprecision::cpp_int;

Rational parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    const cpp_int d{std::string(den)};
    if (d == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    value = Rational(cpp_int(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((!whole.empty() && !digits_only(whole)) || !digits_only(frac) || (whole.empty() && frac.empty()))
      throw ParseError(0, "malformed number '" + std::string(text) + "'");
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(cpp_int(std::string(whole.empty() ? "0" : whole)) * scale + cpp_int(std::string(frac)), scale);
  } else {
    if (!digits_only(body)) throw ParseError(0, "malformed number '" + std::string(text) + "'");
    value = Rational(cpp_int(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

std::string rational_string(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& r, unsigned digits) {
  cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  cpp_int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const cpp_int scaled = (2 * num * scale + den) / (2 * den);
  const cpp_int whole = scaled / scale, frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits) {
    std::string f = frac.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Rational evaluate(const IndependencePolynomial& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::vector<ThroughputVector> throughput_many(const Graph& g, const std::vector<Rational>& thetas,
                                              const SolverOptions& opts) {
  for (const auto& t : thetas)
    if (t <= 0) throw InvalidArgument("theta must be positive, got " + rational_string(t));
  const auto polys = neighborhood_polynomials(g, opts);
  std::vector<ThroughputVector> out;
  for (const auto& t : thetas) {
    ThroughputVector tv;
    tv.theta = t;
    const Rational z = evaluate(polys.whole, t);
    for (const auto& pv : polys.without_closed_neighborhood) tv.p.push_back(t * evaluate(pv, t) / z);
    out.push_back(std::move(tv));
  }
  return out;
}

ThroughputVector throughput(const Graph& g, const Rational& theta, const SolverOptions& opts) {
  return std::move(throughput_many(g, {theta}, opts).front());
}

std::vector<Rational> throughput_limit(const Graph& g, const SolverOptions& opts) {
  const auto counts = mis_counts_all(g, opts);
  std::vector<Rational> out;
  for (const auto& c : counts.containing) out.push_back(Rational(c, counts.total));
  return out;
}

std::string theta_sweep_csv(const Graph& g, const std::vector<Rational>& thetas, unsigned digits,
                            const SolverOptions& opts) {
  std::ostringstream out;
  out << "theta";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << ",p_" << v;
  out << '\n';
  for (const auto& row : throughput_many(g, thetas, opts)) {
    out << rational_string(row.theta);
    for (const auto& p : row.p) out << ',' << decimal_string(p, digits);
    out << '\n';
  }
  return out.str();
}

std::vector<Vertex> starvation_report(const Graph& g, const SolverOptions& opts) {
  return is_one_extendable(g, opts).uncovered();
}

}  // namespace oneext
