// Copyright 2026 The faultex Authors
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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "faultex/error.hpp"

namespace faultex {

using BigInt = boost::multiprecision::cpp_int;

// Canonical rational number (gcd(num, den) = 1, den > 0). There is no
// constructor from floating point.
class ExactRatio {
 public:
  ExactRatio() : value_(0) {}
  ExactRatio(std::int64_t num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  ExactRatio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::kInvalidScenario, "zero denominator");
    value_ = den < 0 ? Rational(-num, -den) : Rational(num, den);
  }
  ExactRatio(std::int64_t num, std::int64_t den) : ExactRatio(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  std::string num_str() const { return numerator().str(); }
  std::string den_str() const { return denominator().str(); }

  // "a/b", or "a" when the denominator is 1.
  std::string str() const {
    const auto d = denominator();
    return d == 1 ? num_str() : num_str() + "/" + d.str();
  }

  // Annotation only; never feeds back into comparisons.
  double approx() const { return value_.convert_to<double>(); }

  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(a.value_ + b.value_); }
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(a.value_ - b.value_); }
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(a.value_ * b.value_); }
  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (b.value_ == 0) throw Error(ErrorKind::kInvalidScenario, "division by zero");
    return ExactRatio(a.value_ / b.value_);
  }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRatio& r) { return os << r.str(); }

 private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit ExactRatio(Rational v) : value_(std::move(v)) {}

  Rational value_;
};

inline ExactRatio max(const ExactRatio& a, const ExactRatio& b) { return a < b ? b : a; }
inline ExactRatio min(const ExactRatio& a, const ExactRatio& b) { return b < a ? b : a; }

// Parses "a/b" or "a".
inline ExactRatio parse_ratio(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return ExactRatio(BigInt(text), BigInt(1));
    return ExactRatio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, "bad rational '" + text + "'");
  }
}

}  // namespace faultex
