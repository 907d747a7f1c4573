#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rcover/rational.hpp"

using namespace rcover;

TEST_SUITE_BEGIN("rational");

TEST_CASE("string round trips") {
  CHECK(rat_from_string("12") == Rat(12));
  CHECK(rat_from_string("-3.25") == Rat(-13, 4));
  CHECK(rat_from_string("7/4") == Rat(7, 4));
  CHECK(rat_from_string("0.125") == Rat(1, 8));
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(Rat(7, 4)) == "7/4");
  CHECK(rat_to_string(Rat(-13, 4)) == "-13/4");
  CHECK(rat_from_string(rat_to_string(Rat(22, 7))) == Rat(22, 7));
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(4)) == 4);
  CHECK(rat_ceil(Rat(4)) == 4);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rat(0));
  CHECK(harmonic(1) == Rat(1));
  CHECK(harmonic(3) == Rat(11, 6));
  CHECK(harmonic(5) == Rat(137, 60));
}

TEST_CASE("powers") {
  CHECK(rat_pow(Rat(3, 2), 0) == Rat(1));
  CHECK(rat_pow(Rat(3, 2), 3) == Rat(27, 8));
  CHECK(rat_pow(Rat(2), 10) == Rat(1024));
}

TEST_CASE("ln_upper dominates the logarithm and stays close") {
  for (double x : {1.0, 2.0, 2.718281828, 10.0, 1000.0, 123456.0}) {
    Rat q(x);
    Rat u = ln_upper(q);
    double lu = rat_to_double(u);
    double truth = std::log(x);
    CHECK(lu >= truth - 1e-15);
    CHECK(lu - truth <= 1e-9 * std::max(1.0, truth));
  }
  CHECK(ln_upper(Rat(1)) >= 0);
}

TEST_CASE("sqrt_upper squares above its argument") {
  for (int num : {0, 1, 2, 5, 17, 1000}) {
    Rat q(num, 3);
    Rat u = sqrt_upper(q);
    CHECK(u * u >= q);
    double truth = std::sqrt(rat_to_double(q));
    CHECK(rat_to_double(u) - truth <= 1e-12 * std::max(1.0, truth));
  }
  CHECK(sqrt_upper(Rat(4)) >= 2);
  CHECK(sqrt_upper(Rat(4)) - 2 <= Rat(1, 1000000));
}

TEST_CASE("certified constants bracket their targets") {
  double e = std::exp(1.0);
  Rat tee = ten_e_over_e_minus_one_upper();
  CHECK(rat_to_double(tee) >= 10 * e / (e - 1) - 1e-12);
  CHECK(rat_to_double(tee) <= 10 * e / (e - 1) + 1e-6);
  Rat ome = one_minus_inv_e_lower();
  CHECK(rat_to_double(ome) <= 1 - 1 / e + 1e-15);
  CHECK(rat_to_double(ome) >= 1 - 1 / e - 1e-9);
}

TEST_CASE("common denominator scales to integers") {
  CHECK(common_denominator({}) == 1);
  CHECK(common_denominator({Rat(3), Rat(7)}) == 1);
  CHECK(common_denominator({Rat(1, 2), Rat(1, 3)}) == 6);
  std::vector<Rat> vals = {Rat(3, 4), Rat(5, 6), Rat(7)};
  Int d = common_denominator(vals);
  for (const Rat& v : vals) {
    Rat scaled = v * Rat(d);
    CHECK(scaled.get_den() == 1);
  }
}

TEST_SUITE_END();
