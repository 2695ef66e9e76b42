// Copyright 2026 The matpart Authors
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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "matpart/errors.hpp"

namespace matpart {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. All solver arithmetic and comparisons go through
/// this type; no floating point is involved anywhere.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidArgumentError("rational with zero denominator");
    normalize();
  }

  static Rational from_int(const BigInt& v) { return Rational(v, 1); }

  /// Parses "p", "-p", or "p/q". Returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view text) {
    auto parse_int = [](std::string_view s, BigInt* out) -> bool {
      if (s.empty()) return false;
      std::size_t pos = 0;
      bool neg = false;
      if (s[pos] == '-' || s[pos] == '+') {
        neg = s[pos] == '-';
        ++pos;
      }
      if (pos == s.size()) return false;
      BigInt v = 0;
      for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') return false;
        v = v * 10 + (s[pos] - '0');
      }
      *out = neg ? -v : v;
      return true;
    };
    const std::size_t slash = text.find('/');
    BigInt num, den = 1;
    if (!parse_int(text.substr(0, slash), &num)) return std::nullopt;
    if (slash != std::string_view::npos) {
      if (!parse_int(text.substr(slash + 1), &den) || den == 0) return std::nullopt;
    }
    return Rational(std::move(num), std::move(den));
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  /// Lowest-terms text form: "p" when integral, else "p/q".
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgumentError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

/// A rational extended with +infinity. +infinity only arises from taking a
/// minimum over an empty part under the allow-empty conventions.
class ExtendedValue {
 public:
  ExtendedValue() : finite_(0) {}
  ExtendedValue(Rational v) : finite_(std::move(v)) {}  // NOLINT
  ExtendedValue(long long v) : finite_(v) {}            // NOLINT

  static ExtendedValue infinity() {
    ExtendedValue v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& finite() const {
    if (infinite_) throw InvalidArgumentError("infinite value has no finite part");
    return finite_;
  }

  std::string str() const { return infinite_ ? "inf" : finite_.str(); }

  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedValue(a.finite_ + b.finite_);
  }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.finite_ == b.finite_;
  }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.finite_ < b.finite_;
  }
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return a == b || a < b; }
  friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return b < a; }
  friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return b <= a; }

  friend ExtendedValue min(const ExtendedValue& a, const ExtendedValue& b) { return a < b ? a : b; }
  friend ExtendedValue max(const ExtendedValue& a, const ExtendedValue& b) { return a < b ? b : a; }

 private:
  bool infinite_ = false;
  Rational finite_;
};

}  // namespace matpart
