// Copyright 2026 The chm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chm/phase.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "chm/error.hpp"

namespace chm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAchievable: return "NotAchievable";
    case ErrorCode::ExactModeUnavailable: return "ExactModeUnavailable";
    case ErrorCode::AmbiguousClassification: return "AmbiguousClassification";
    case ErrorCode::NotAChm: return "NotACHM";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::InfeasibleSweep: return "InfeasibleSweep";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NonPrimeOdd: return "NonPrimeOdd";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

const char* to_string(EntryClass c) noexcept {
  switch (c) {
    case EntryClass::Real: return "real";
    case EntryClass::PurelyImaginary: return "purely-imaginary";
    case EntryClass::OtherNonReal: return "other-non-real";
  }
  return "unknown";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::InvalidArgument, "phase denominator overflow");
  return r;
}

}  // namespace

Phase Phase::turn(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0)
    throw Error(ErrorCode::InvalidArgument,
                "turn denominator must be positive");
  std::int64_t num = numerator % denominator;
  if (num < 0) num += denominator;
  const std::int64_t g = std::gcd(num, denominator);
  Phase p;
  p.num_ = num / g;
  p.den_ = denominator / g;
  return p;
}

Phase Phase::radians(double angle) {
  if (!std::isfinite(angle))
    throw Error(ErrorCode::InvalidArgument, "radian phase must be finite");
  Phase p;
  p.rational_ = false;
  p.num_ = 0;
  p.den_ = 1;
  p.angle_ = angle;
  return p;
}

double Phase::angle() const noexcept {
  if (rational_)
    return kTwoPi * static_cast<double>(num_) / static_cast<double>(den_);
  return angle_;
}

std::complex<double> Phase::to_complex() const noexcept {
  if (rational_) {
    // Exact values on the axes so that 1, -1, i, -i carry no rounding.
    if (num_ == 0) return {1.0, 0.0};
    if (den_ == 2) return {-1.0, 0.0};
    if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0}
                                    : std::complex<double>{0.0, -1.0};
  }
  const double a = angle();
  return {std::cos(a), std::sin(a)};
}

Phase Phase::conj() const {
  if (rational_) return turn(den_ - num_, den_);
  return radians(-angle_);
}

Phase operator*(const Phase& a, const Phase& b) {
  if (a.rational_ && b.rational_) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    const std::int64_t num =
        checked_mul(a.num_, l / a.den_) + checked_mul(b.num_, l / b.den_);
    return Phase::turn(num, l);
  }
  return Phase::radians(a.angle() + b.angle());
}

bool same_value(const Phase& a, const Phase& b, double tol) {
  if (a.is_rational() && b.is_rational()) return a == b;
  const double d = std::remainder(a.angle() - b.angle(), kTwoPi);
  return std::abs(d) <= tol;
}

bool phase_less(const Phase& a, const Phase& b) noexcept {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (!a.is_rational()) return a.angle() < b.angle();
  __extension__ typedef __int128 wide;
  return static_cast<wide>(a.numerator()) * b.denominator() <
         static_cast<wide>(b.numerator()) * a.denominator();
}

EntryClass classify(const Phase& p, double eps) {
  if (p.is_rational()) {
    if (p.numerator() == 0 || p.denominator() == 2) return EntryClass::Real;
    if (p.denominator() == 4) return EntryClass::PurelyImaginary;
    return EntryClass::OtherNonReal;
  }
  const double s = std::abs(std::sin(p.angle()));
  const double c = std::abs(std::cos(p.angle()));
  const bool real = s < eps;
  const bool imag = c < eps;
  if (real && imag)
    throw Error(ErrorCode::AmbiguousClassification,
                "phase " + to_string(p) + " is near two class boundaries");
  if (real) return EntryClass::Real;
  if (imag) return EntryClass::PurelyImaginary;
  return EntryClass::OtherNonReal;
}

namespace {

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Decimal literal: [+-]? digits [. digits]? ([eE] [+-]? digits)?
bool is_decimal_literal(std::string_view s) {
  std::size_t k = 0;
  auto digits = [&] {
    const std::size_t start = k;
    while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
    return k > start;
  };
  if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
  if (!digits()) return false;
  if (k < s.size() && s[k] == '.') {
    ++k;
    if (!digits()) return false;
  }
  if (k < s.size() && (s[k] == 'e' || s[k] == 'E')) {
    ++k;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
    if (!digits()) return false;
  }
  return k == s.size();
}

[[noreturn]] void bad_token(std::string_view token) {
  throw ParseError(1, 1, "invalid phase token '" + std::string(token) + "'");
}

}  // namespace

Phase parse_phase(std::string_view token) {
  if (token == "1") return Phase::one();
  if (token == "-1") return Phase::minus_one();
  if (token == "i") return Phase::i();
  if (token == "-i") return Phase::minus_i();
  if (token == "w") return Phase::omega();
  if (token == "w2") return Phase::turn(2, 3);
  if (token.size() >= 4 && token.back() == ')' && token[1] == '(') {
    const std::string_view body = token.substr(2, token.size() - 3);
    if (token[0] == 't') {
      const auto slash = body.find('/');
      if (slash == std::string_view::npos) bad_token(token);
      std::int64_t p = 0, q = 0;
      if (!parse_int(body.substr(0, slash), p) ||
          !parse_int(body.substr(slash + 1), q) || q <= 0)
        bad_token(token);
      return Phase::turn(p, q);
    }
    if (token[0] == 'r') {
      if (!is_decimal_literal(body)) bad_token(token);
      std::string_view digits = body;
      if (digits.front() == '+') digits.remove_prefix(1);
      double x = 0.0;
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), x);
      if (ec != std::errc{} || ptr != digits.data() + digits.size())
        bad_token(token);
      return Phase::radians(x);
    }
  }
  bad_token(token);
}

std::string to_string(const Phase& p) {
  if (!p.is_rational()) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p.angle());
    std::string body(buf, ptr);
    // Keep the token inside the decimal-literal grammar (to_chars may emit
    // "1e+20"; that is accepted, but bare "inf"/"nan" cannot occur).
    return "r(" + body + ")";
  }
  const auto n = p.numerator();
  const auto d = p.denominator();
  if (n == 0) return "1";
  if (d == 2) return "-1";
  if (d == 4) return n == 1 ? "i" : "-i";
  if (d == 3) return n == 1 ? "w" : "w2";
  return "t(" + std::to_string(n) + "/" + std::to_string(d) + ")";
}

}  // namespace chm
