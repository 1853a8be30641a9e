#include <doctest.h>

#include "monohull/core.hpp"
#include "monohull/random.hpp"

using namespace monohull;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("+7") == 7);
  CHECK(parse_rational(" 2.5 ") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("0.10") == Rational(1, 10));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("3.") == 3);

  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-6, 8)) == "-3/4");
  CHECK(to_string(Rational(14, 7)) == "2");
  CHECK(to_string(Rational(0)) == "0");

  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("rational round trip through strings") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(rng, -50, 50, 9);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("exact arithmetic laws on random triples") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng, -20, 20, 7);
    const Rational b = random_rational(rng, -20, 20, 7);
    const Rational c = random_rational(rng, -20, 20, 7);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("instance validation") {
  CHECK_NOTHROW(Instance(2, 1, {Rational(2), Rational(3)}));
  CHECK_THROWS_AS(Instance(1, 0, {Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, 0, {Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, 0, {Rational(2), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, 0, {Rational(-1), Rational(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, -1, {Rational(2), Rational(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Instance(2, 3, {Rational(2), Rational(3)}),
                  std::invalid_argument);  // a_n = b_n
  CHECK_THROWS_AS(Instance(2, 4, {Rational(2), Rational(3)}),
                  std::invalid_argument);

  const Instance degenerate(3, 0, {Rational(1), Rational(1), Rational(2)});
  CHECK(degenerate.degenerate());
  const Instance regular(3, Rational(1, 2),
                         {Rational(1), Rational(1), Rational(2)});
  CHECK_FALSE(regular.degenerate());
  CHECK(regular.pi() == 1);
  CHECK(regular.b_at(3) == 2);
  CHECK_THROWS_AS(regular.b_at(0), std::invalid_argument);
  CHECK_THROWS_AS(regular.b_at(4), std::invalid_argument);
}

TEST_CASE("pi_product") {
  const Instance inst(3, 1, {Rational(2), Rational(3), Rational(5)});
  CHECK(pi_product(inst, {3}) == 6);
  CHECK(pi_product(inst, {1, 2, 3}) == 1);
  CHECK(pi_product(inst, {}) == 30);
  CHECK(pi_product(inst, {2}) == 10);
  CHECK(inst.pi() == 6);
  CHECK_THROWS_AS(pi_product(inst, {0}), std::invalid_argument);
  CHECK_THROWS_AS(pi_product(inst, {4}), std::invalid_argument);
}

TEST_CASE("pi_product drops exactly one factor at a time") {
  Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance inst = random_instance(rng, 2 + trial % 6);
    const Rational full = pi_product(inst, {});
    for (int i = 1; i <= inst.n(); ++i)
      CHECK(pi_product(inst, {i}) * inst.b_at(i) == full);
  }
}
