// Copyright 2026 The Snipforge Authors
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

#include "snipforge/rational.h"

#include <numeric>

namespace snipforge {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) {
    num_ = 0;
    return;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::ToDouble() const {
  return den_ == 0 ? 0.0
                   : static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToFraction() const {
  if (den_ == 0) return "undefined";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToDecimal(int places) const {
  if (den_ == 0) return "undefined";
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const std::int64_t scaled = num_ * scale;
  const auto rounded =
      static_cast<std::int64_t>((scaled * 2 + den_) / (2 * den_));
  std::string whole = std::to_string(rounded / scale);
  if (places == 0) return whole;
  std::string frac = std::to_string(rounded % scale);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return whole + "." + frac;
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <
         b.num_ * a.den_;
}

}  // namespace snipforge
