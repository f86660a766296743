// Copyright 2026 The zxv Authors
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

#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zxv {

/// A spider phase stored as an exact rational multiple of pi, normalized
/// into [0, 2pi). Phase(1, 2) is pi/2.
class Phase {
 public:
  constexpr Phase() = default;
  Phase(std::int64_t numerator, std::int64_t denominator = 1) {
    if (denominator == 0) throw std::invalid_argument("phase denominator is zero");
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    if (g > 1) {
      numerator /= g;
      denominator /= g;
    }
    // bring numerator/denominator into [0, 2)
    const std::int64_t period = 2 * denominator;
    numerator %= period;
    if (numerator < 0) numerator += period;
    num_ = numerator;
    den_ = denominator;
  }

  static Phase zero() { return {}; }
  static Phase pi() { return Phase(1); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_pi() const { return num_ == 1 && den_ == 1; }
  /// 0 or pi.
  bool is_pauli() const { return den_ == 1; }

  double radians() const {
    return static_cast<double>(num_) / static_cast<double>(den_) * std::numbers::pi;
  }

  Phase operator-() const { return Phase(-num_, den_); }
  friend Phase operator+(const Phase& a, const Phase& b) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return Phase(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
  }
  friend Phase operator-(const Phase& a, const Phase& b) { return a + (-b); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase& a, const Phase& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// "0", "1", "1/2", "3/2": units of pi, as used by the .zxg format.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Human-facing form: "0", "π", "π/2", "3π/2".
  std::string pretty() const {
    if (num_ == 0) return "0";
    std::string s = num_ == 1 ? "π" : std::to_string(num_) + "π";
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "<int>" or "<int>/<int>". Throws std::invalid_argument.
  static Phase parse(std::string_view text) {
    auto to_int = [&](std::string_view part) {
      if (part.empty()) throw std::invalid_argument("malformed phase '" + std::string(text) + "'");
      std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (i == part.size()) throw std::invalid_argument("malformed phase '" + std::string(text) + "'");
      std::int64_t v = 0;
      for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9')
          throw std::invalid_argument("malformed phase '" + std::string(text) + "'");
        v = v * 10 + (part[i] - '0');
        if (v > (std::int64_t{1} << 40))
          throw std::invalid_argument("phase out of range '" + std::string(text) + "'");
      }
      return part[0] == '-' ? -v : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Phase(to_int(text));
    const std::int64_t den = to_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("phase denominator must be positive");
    return Phase(to_int(text.substr(0, slash)), den);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace zxv
