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

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace chm {

/// Tolerance used to classify radian-valued phases and for numeric
/// orthogonality checks.
inline constexpr double kClassTolerance = 1e-9;

/// Tolerance on angles when comparing radian-valued phases for equality.
inline constexpr double kAngleTolerance = 1e-12;

enum class EntryClass { Real, PurelyImaginary, OtherNonReal };

const char* to_string(EntryClass c) noexcept;

/// A unit-modulus complex number.
///
/// Either an exact rational number of turns p/q (meaning e^{2 pi i p/q}),
/// always reduced and normalized into [0, 1), or an angle in radians.
/// Products of two rational phases stay rational; anything touching a
/// radian phase becomes radian.
class Phase {
 public:
  /// The phase 1.
  Phase() = default;

  static Phase turn(std::int64_t numerator, std::int64_t denominator);
  static Phase radians(double angle);

  static Phase one() { return {}; }
  static Phase minus_one() { return turn(1, 2); }
  static Phase i() { return turn(1, 4); }
  static Phase minus_i() { return turn(3, 4); }
  static Phase omega() { return turn(1, 3); }
  static Phase eighth() { return turn(1, 8); }

  bool is_rational() const noexcept { return rational_; }
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// Angle in radians. Exact phases are converted; radian phases are
  /// returned as stored (not reduced mod 2 pi).
  double angle() const noexcept;

  std::complex<double> to_complex() const noexcept;

  Phase conj() const;

  friend Phase operator*(const Phase& a, const Phase& b);
  Phase& operator*=(const Phase& other) { return *this = *this * other; }

  // Structural equality: representation and fields must match.
  friend bool operator==(const Phase& a, const Phase& b) noexcept {
    if (a.rational_ != b.rational_) return false;
    if (a.rational_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.angle_ == b.angle_;
  }

 private:
  bool rational_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double angle_ = 0.0;
};

/// Value equality: exact for two rational phases, otherwise angles are
/// compared modulo 2 pi within `tol`.
bool same_value(const Phase& a, const Phase& b, double tol = kAngleTolerance);

/// Exact for rational phases. For radian phases: |sin| < eps is Real,
/// |cos| < eps is PurelyImaginary. Throws AmbiguousClassification if both
/// hold.
/// Total order: exact phases by turn value, then radian phases by angle.
bool phase_less(const Phase& a, const Phase& b) noexcept;

EntryClass classify(const Phase& p, double eps = kClassTolerance);

inline bool is_real(const Phase& p) { return classify(p) == EntryClass::Real; }

/// Parses one token of the phase grammar:
///   1  -1  i  -i  w  w2  t(p/q)  r(x)
Phase parse_phase(std::string_view token);

/// Canonical token (`1`, `-1`, `i`, `-i`, `w`, `w2`, `t(p/q)`, `r(x)`).
std::string to_string(const Phase& p);

}  // namespace chm
