// Copyright 2026 The mcknot Authors.
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


#include <catch_amalgamated.hpp>

#include "mcknot/laurent.hpp"

using mcknot::BigInt;
using mcknot::LaurentPoly;

namespace {

LaurentPoly mono(long c, int e) { return LaurentPoly::monomial(BigInt(c), e); }

}  // namespace

TEST_CASE("zero and constants", "[laurent]") {
  LaurentPoly z;
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
  CHECK_THROWS(z.span());
  CHECK(LaurentPoly(BigInt(0)).is_zero());
  CHECK(LaurentPoly(BigInt(3)).to_string() == "3");
  CHECK(mono(0, 7).is_zero());
}

TEST_CASE("arithmetic", "[laurent]") {
  const auto p = mono(1, 2) + mono(-1, -2);
  const auto q = mono(1, 2) - mono(-1, -2);
  CHECK(p * q == mono(1, 4) - mono(1, -4));
  CHECK((p - p).is_zero());
  CHECK(-p == mono(-1, 2) + mono(1, -2));
  CHECK(p.shifted(3) == mono(1, 5) + mono(-1, 1));
  auto r = p;
  r *= p;
  CHECK(r == mono(1, 4) - mono(2, 0) + mono(1, -4));
}

TEST_CASE("delta powers", "[laurent]") {
  CHECK(mcknot::delta() == mono(-1, 2) + mono(-1, -2));
  CHECK(mcknot::delta_power(0) == LaurentPoly(BigInt(1)));
  CHECK(mcknot::delta_power(2) == mono(1, 4) + mono(2, 0) + mono(1, -4));
  CHECK(mcknot::delta_power(5).span() == 20);
  CHECK_THROWS_AS(mcknot::delta_power(-1), std::domain_error);
}

TEST_CASE("span, mirror, coefficients", "[laurent]") {
  const auto p = LaurentPoly::parse("-A^5 - A^-3 + A^-7");
  CHECK(p.high() == 5);
  CHECK(p.low() == -7);
  CHECK(p.span() == 12);
  CHECK(p.coeff(-3) == -1);
  CHECK(p.coeff(0) == 0);
  CHECK(p.mirror().to_string() == "A^7 - A^3 - A^-5");
  CHECK(p.mirror().mirror() == p);
}

TEST_CASE("parse inverts to_string", "[laurent]") {
  for (const std::string text : {"A^-4 + A^-12 - A^-16", "A^8 - A^4 + 1 - A^-4 + A^-8", "-2A + 3", "A", "-A^-1", "7"})
    CHECK(LaurentPoly::parse(text).to_string() == text);
  CHECK_THROWS(LaurentPoly::parse("A^"));
  CHECK_THROWS(LaurentPoly::parse("x + 1"));
}

TEST_CASE("machine form", "[laurent]") {
  const auto p = LaurentPoly::parse("A^3 - 2A^-1");
  const LaurentPoly::MachineForm expect{{3, BigInt(1)}, {-1, BigInt(-2)}};
  CHECK(p.machine_form() == expect);
  CHECK(mcknot::machine_less(p.mirror().machine_form(), p.machine_form()));
}

TEST_CASE("coefficients beyond 64 bits stay exact", "[laurent]") {
  auto big = mcknot::delta_power(1);
  for (int i = 0; i < 7; ++i) big *= big;  // delta^128
  const BigInt middle = big.coeff(0);
  CHECK_FALSE(mcknot::fits_int64(middle));
  CHECK(LaurentPoly::parse(big.to_string()) == big);
  // Central binomial coefficient C(128, 64).
  CHECK(mcknot::bigint_to_string(middle) == "23951146041928082866135587776380551750");
}

TEST_CASE("int64 and BigInt variants agree", "[laurent]") {
  using Small = mcknot::BasicLaurent<std::int64_t>;
  const auto s = Small::from_terms({{2, 3}, {-1, -4}, {2, 1}});
  CHECK(s.coeff(2) == 4);
  const auto b = s.convert<BigInt>();
  CHECK(b == mono(4, 2) + mono(-4, -1));
}
