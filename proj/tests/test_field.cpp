#include <doctest.h>

#include "gf/field.hpp"

using namespace pfol;

TEST_CASE("prime field basics") {
  auto F5 = Field::prime(5);
  CHECK(Fq(F5, 2).inv() == Fq(F5, 3));  // 2*3 = 6 = 1 mod 5
  auto F7 = Field::prime(7);
  CHECK(Fq(F7, 3).pow(6) == Fq(F7, 1));  // order divides 6
  CHECK(Fq(F7, 3).pow(-1) * Fq(F7, 3) == Fq(F7, 1));
  CHECK_THROWS_AS(Fq(F5, 0).inv(), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Field::prime(2), Error);
}

TEST_CASE("field spec mixing is rejected") {
  auto F5 = Field::prime(5);
  auto F7 = Field::prime(7);
  CHECK_THROWS_AS(Fq(F5, 1) + Fq(F7, 1), Error);
}

TEST_CASE("extension arithmetic with modulus t^2+1 over F_3") {
  auto F9 = Field::extension(3, {1, 0, 1});
  Fq t = Fq::gen(F9);
  CHECK(t * t == Fq(F9, 2));  // t^2 = -1 = 2
  CHECK((t + Fq(F9, 1)) * (t + Fq(F9, 2)) == t * t + t * Fq(F9, 3) + Fq(F9, 2));
  Fq inv = t.inv();
  CHECK(inv * t == Fq(F9, 1));
}

TEST_CASE("reducible modulus is rejected") {
  // t^2 - 1 = (t-1)(t+1)
  CHECK_THROWS_AS(Field::extension(5, {4, 0, 1}), Error);
}

TEST_CASE("frobenius") {
  auto F5 = Field::prime(5);
  CHECK(Fq(F5, 3).frobenius() == Fq(F5, 3));
  auto F9 = Field::extension(3, {1, 0, 1});
  Fq t = Fq::gen(F9);
  // oracle: t^3 computed by repeated squaring; t^3 = t*t^2 = -t = 2t
  CHECK(t.frobenius() == t.pow(3));
  CHECK(t.frobenius() == t * Fq(F9, 2));
  auto F49 = Field::extension_auto(7, 2, 11);
  for (uint64_t i = 0; i < 49; ++i) {
    Fq a = Fq::from_index(F49, i);
    CHECK(a.frobenius().frobenius() == a);  // order divides k = 2
  }
}

TEST_CASE("in_prime_field") {
  auto F25 = Field::extension_auto(5, 2, 3);
  CHECK(Fq(F25, 4).in_prime_field());
  CHECK(Fq(F25, 0).in_prime_field());
  auto F9 = Field::extension(3, {1, 0, 1});
  CHECK(!Fq::gen(F9).in_prime_field());  // t^3 = -t != t
}

TEST_CASE("prime-field membership matches the embedded image exhaustively") {
  for (uint64_t p : {3ULL, 5ULL, 7ULL}) {
    auto F = Field::extension_auto(p, 2, p);
    size_t in_field = 0;
    for (uint64_t i = 0; i < p * p; ++i) {
      Fq a = Fq::from_index(F, i);
      bool embedded = true;
      for (unsigned c = 1; c < 2; ++c)
        if (a.coord(c) != 0) embedded = false;
      CHECK(a.in_prime_field() == embedded);
      if (embedded) ++in_field;
    }
    CHECK(in_field == p);
  }
}

TEST_CASE("frobenius is a ring homomorphism (randomized)") {
  auto F = Field::extension_auto(5, 3, 17);
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Fq a = Fq::random(F, rng), b = Fq::random(F, rng);
    CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
  }
}

TEST_CASE("inverse property (randomized)") {
  auto F = Field::extension_auto(7, 2, 5);
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    Fq a = Fq::random(F, rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inv() == Fq(F, 1));
  }
}

TEST_CASE("element printing") {
  auto F9 = Field::extension(3, {1, 0, 1});
  Fq t = Fq::gen(F9);
  CHECK((t * Fq(F9, 2) + Fq(F9, 1)).str() == "2*t+1");
  CHECK(Fq(F9, 0).str() == "0");
  auto F5 = Field::prime(5);
  CHECK(Fq(F5, 3).str() == "3");
}
