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

#ifndef SNIPFORGE_RATIONAL_H_
#define SNIPFORGE_RATIONAL_H_

#include <cstdint>
#include <string>

namespace snipforge {

// Non-negative exact fraction. A zero denominator marks an undefined ratio.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool defined() const { return den_ != 0; }

  double ToDouble() const;
  // "num/den" in lowest terms; "undefined" for x/0.
  std::string ToFraction() const;
  // Rounded half-up to `places` decimals using integer arithmetic.
  std::string ToDecimal(int places = 2) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // Requires both operands defined.
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 0;
};

}  // namespace snipforge

#endif  // SNIPFORGE_RATIONAL_H_
