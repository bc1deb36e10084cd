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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chm/error.hpp"
#include "chm/phase.hpp"

namespace chm {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Phase, TurnsAreReduced) {
  const Phase p = Phase::turn(6, 8);
  EXPECT_EQ(p.numerator(), 3);
  EXPECT_EQ(p.denominator(), 4);
  EXPECT_EQ(Phase::turn(-1, 8), Phase::turn(7, 8));
  EXPECT_EQ(Phase::turn(9, 8), Phase::turn(1, 8));
  EXPECT_EQ(Phase::turn(5, 5), Phase::one());
  EXPECT_THROW(Phase::turn(1, 0), Error);
}

TEST(Phase, Multiplication) {
  EXPECT_EQ(Phase::turn(1, 4) * Phase::turn(1, 4), Phase::turn(1, 2));
  EXPECT_EQ(Phase::turn(1, 3) * Phase::turn(1, 2), Phase::turn(5, 6));
  const Phase mixed = Phase::radians(1.0) * Phase::turn(1, 2);
  EXPECT_FALSE(mixed.is_rational());
  EXPECT_NEAR(mixed.angle(), 1.0 + kPi, 1e-12);
}

TEST(Phase, Conjugation) {
  EXPECT_EQ(Phase::one().conj(), Phase::one());
  EXPECT_EQ(Phase::turn(1, 4).conj(), Phase::turn(3, 4));
  EXPECT_EQ(Phase::turn(1, 3).conj(), Phase::turn(2, 3));
  const Phase r = Phase::radians(2.5).conj();
  EXPECT_FALSE(r.is_rational());
  EXPECT_DOUBLE_EQ(r.angle(), -2.5);
}

TEST(Phase, Classification) {
  EXPECT_EQ(classify(Phase::one()), EntryClass::Real);
  EXPECT_EQ(classify(Phase::minus_one()), EntryClass::Real);
  EXPECT_EQ(classify(Phase::i()), EntryClass::PurelyImaginary);
  EXPECT_EQ(classify(Phase::minus_i()), EntryClass::PurelyImaginary);
  EXPECT_EQ(classify(Phase::omega()), EntryClass::OtherNonReal);
  EXPECT_EQ(classify(Phase::eighth()), EntryClass::OtherNonReal);
  EXPECT_EQ(classify(Phase::radians(kPi)), EntryClass::Real);
  EXPECT_EQ(classify(Phase::radians(kPi / 2)), EntryClass::PurelyImaginary);
  EXPECT_EQ(classify(Phase::radians(1.0)), EntryClass::OtherNonReal);
  EXPECT_EQ(classify(Phase::radians(2 * kPi + 1e-12)), EntryClass::Real);
}

TEST(Phase, ToComplex) {
  auto z = Phase::one().to_complex();
  EXPECT_EQ(z.real(), 1.0);
  EXPECT_EQ(z.imag(), 0.0);
  z = Phase::minus_one().to_complex();
  EXPECT_EQ(z.real(), -1.0);
  EXPECT_EQ(z.imag(), 0.0);
  z = Phase::i().to_complex();
  EXPECT_EQ(z.real(), 0.0);
  EXPECT_EQ(z.imag(), 1.0);
  z = Phase::omega().to_complex();
  EXPECT_NEAR(z.real(), -0.5, 1e-15);
  EXPECT_NEAR(z.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Phase, ParseGrammar) {
  EXPECT_EQ(parse_phase("1"), Phase::one());
  EXPECT_EQ(parse_phase("-1"), Phase::minus_one());
  EXPECT_EQ(parse_phase("i"), Phase::i());
  EXPECT_EQ(parse_phase("-i"), Phase::minus_i());
  EXPECT_EQ(parse_phase("w"), Phase::turn(1, 3));
  EXPECT_EQ(parse_phase("w2"), Phase::turn(2, 3));
  EXPECT_EQ(parse_phase("t(3/8)"), Phase::turn(3, 8));
  EXPECT_EQ(parse_phase("t(2/4)"), Phase::minus_one());
  const Phase r = parse_phase("r(0.25)");
  EXPECT_FALSE(r.is_rational());
  EXPECT_DOUBLE_EQ(r.angle(), 0.25);
  for (const char* bad : {"", "x", "t(1/0)", "t(1/", "t(a/b)", "r()", "r(abc)", "1 ", "ii",
                          "w3", "t(1/2))"})
    EXPECT_THROW(parse_phase(bad), Error) << "token '" << bad << "'";
}

TEST(Phase, CanonicalTokensRoundTrip) {
  EXPECT_EQ(to_string(Phase::one()), "1");
  EXPECT_EQ(to_string(Phase::minus_one()), "-1");
  EXPECT_EQ(to_string(Phase::i()), "i");
  EXPECT_EQ(to_string(Phase::minus_i()), "-i");
  EXPECT_EQ(to_string(Phase::turn(1, 3)), "w");
  EXPECT_EQ(to_string(Phase::turn(2, 3)), "w2");
  EXPECT_EQ(to_string(Phase::turn(5, 12)), "t(5/12)");
  for (int q = 1; q <= 30; ++q)
    for (int p = 0; p < q; ++p) {
      const Phase x = Phase::turn(p, q);
      EXPECT_EQ(parse_phase(to_string(x)), x);
    }
  for (double a : {1.0, -2.5, 0.1, 3.141592653589793, 1e-7}) {
    const Phase x = Phase::radians(a);
    EXPECT_EQ(parse_phase(to_string(x)), x);
  }
}

TEST(Phase, PhaseLessIsValueOrder) {
  EXPECT_TRUE(phase_less(Phase::one(), Phase::turn(1, 12)));
  EXPECT_TRUE(phase_less(Phase::turn(1, 12), Phase::turn(1, 6)));
  EXPECT_FALSE(phase_less(Phase::turn(1, 2), Phase::turn(1, 3)));
  EXPECT_TRUE(phase_less(Phase::turn(5, 6), Phase::radians(0.0)));
}

TEST(PhaseProperty, SelfConjugateProductIsOne) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 360);
    const Phase a = Phase::turn(static_cast<std::int64_t>(rng() % 1000), q);
    const Phase prod = a * a.conj();
    EXPECT_EQ(prod, Phase::one());
    EXPECT_EQ(classify(prod), EntryClass::Real);
    EXPECT_EQ(classify(a), classify(a.conj()));
  }
}

TEST(PhaseProperty, AssociativeAndCommutative) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  auto rational = [&] {
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 240);
    return Phase::turn(static_cast<std::int64_t>(rng() % 240), q);
  };
  for (int k = 0; k < 10000; ++k) {
    const Phase a = rational(), b = rational(), c = rational();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    const Phase x = Phase::radians(angle(rng)), y = rational(), z = Phase::radians(angle(rng));
    EXPECT_TRUE(same_value((x * y) * z, x * (y * z), 1e-12));
    EXPECT_TRUE(same_value(x * y, y * x, 1e-12));
  }
}

}  // namespace
}  // namespace chm
