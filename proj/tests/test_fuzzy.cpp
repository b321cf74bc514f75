#include <cmath>
#include <random>

#include "afsa/errors.hpp"
#include "afsa/fuzzy.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace afsa;
using doctest::Approx;

TEST_CASE("residual implications of the three families") {
  Algebra g = algebra_for(Family::godel);
  Algebra l = algebra_for(Family::lukasiewicz);
  Algebra p = algebra_for(Family::product);

  CHECK(implication_value(g, 0.4, 0.4) == 1.0);
  CHECK(implication_value(g, 0.7, 0.4) == Approx(0.4).epsilon(1e-12));
  CHECK(implication_value(l, 0.2, 0.9) == 1.0);
  CHECK(implication_value(l, 0.3, 0.2) == Approx(0.9).epsilon(1e-12));
  CHECK(implication_value(p, 0.8, 0.2) == Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(implication_value(g, -0.1, 0.5), DomainError);
}

TEST_CASE("eval_fuzzy worked examples") {
  Formula imp = Formula::imp(Formula::var("x"), Formula::var("y"));
  CHECK(eval_fuzzy(imp, {{"x", 0.3}, {"y", 0.2}}, algebra_for(Family::lukasiewicz)) ==
        Approx(0.9).epsilon(1e-12));
  CHECK(eval_fuzzy(imp, {{"x", 0.8}, {"y", 0.2}}, algebra_for(Family::product)) ==
        Approx(0.25).epsilon(1e-12));

  Formula conj = Formula::conj({Formula::var("a"), Formula::var("b")});
  CHECK(eval_fuzzy(conj, {{"a", 0.5}, {"b", 0.7}},
                   algebra_for(Family::lukasiewicz)) ==
        Approx(0.2).epsilon(1e-12));
}

TEST_CASE("eval_fuzzy errors") {
  CHECK_THROWS_AS(eval_fuzzy(Formula::var("x"), {}, algebra_for(Family::godel)),
                  UnboundVariable);
  CHECK_THROWS_AS(
      eval_fuzzy(Formula::var("x"), {{"x", 1.5}}, algebra_for(Family::godel)),
      DomainError);
}

TEST_CASE("luk_nary_closed_form") {
  std::vector<double> v1{0.5, 0.7};
  CHECK(luk_nary_closed_form(v1) == Approx(0.2).epsilon(1e-12));
  std::vector<double> v2{1.0, 1.0, 1.0};
  CHECK(luk_nary_closed_form(v2) == 1.0);
  std::vector<double> v3{0.9, 0.9, 0.9};
  CHECK(luk_nary_closed_form(v3) == Approx(0.7).epsilon(1e-12));
  CHECK_THROWS_AS(luk_nary_closed_form(std::vector<double>{}), DomainError);
}

TEST_CASE("luk_nary_closed_form equals the binary fold") {
  std::mt19937_64 rng(31);
  Algebra luk = algebra_for(Family::lukasiewicz);
  for (int round = 0; round < 10000; ++round) {
    int n = 1 + testsupport::pick(rng, 10);
    std::vector<double> xs(n);
    for (double& x : xs) x = testsupport::uniform01(rng);
    double fold = xs[0];
    for (int i = 1; i < n; ++i) fold = luk.tnorm(fold, xs[i]);
    CHECK(std::abs(luk_nary_closed_form(xs) - fold) <= 1e-12);
  }
}

TEST_CASE("residuum law on the 0.05 grid") {
  for (Family family : {Family::godel, Family::lukasiewicz, Family::product}) {
    Algebra alg = algebra_for(family);
    for (int xi = 0; xi <= 20; ++xi)
      for (int zi = 0; zi <= 20; ++zi)
        for (int yi = 0; yi <= 20; ++yi) {
          double x = xi / 20.0, z = zi / 20.0, y = yi / 20.0;
          bool lhs = alg.tnorm(x, z) <= y + 1e-9;
          bool rhs = z <= alg.implication(x, y) + 1e-9;
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("Remark 1: both implications are 1 exactly on equal values") {
  for (Family family : {Family::godel, Family::lukasiewicz, Family::product}) {
    Algebra alg = algebra_for(family);
    for (int xi = 0; xi <= 20; ++xi)
      for (int yi = 0; yi <= 20; ++yi) {
        double x = xi / 20.0, y = yi / 20.0;
        bool both_one =
            alg.implication(x, y) == 1.0 && alg.implication(y, x) == 1.0;
        CHECK(both_one == (xi == yi));
      }
  }
}

TEST_CASE("Remark 2 lifted: iff evaluates to 1 exactly on equal values") {
  Formula iff = Formula::iff(Formula::var("x"), Formula::var("y"));
  for (Family family : {Family::godel, Family::lukasiewicz, Family::product}) {
    Algebra alg = algebra_for(family);
    for (int xi = 0; xi <= 20; ++xi)
      for (int yi = 0; yi <= 20; ++yi) {
        AssignmentR a{{"x", xi / 20.0}, {"y", yi / 20.0}};
        CHECK((eval_fuzzy(iff, a, alg) == 1.0) == (xi == yi));
      }
  }
}

TEST_CASE("disjunction uses the dual conorm") {
  Formula disj = Formula::disj({Formula::var("x"), Formula::var("y")});
  AssignmentR a{{"x", 0.5}, {"y", 0.7}};
  CHECK(eval_fuzzy(disj, a, algebra_for(Family::godel)) ==
        Approx(0.7).epsilon(1e-12));
  CHECK(eval_fuzzy(disj, a, algebra_for(Family::lukasiewicz)) == 1.0);
  CHECK(eval_fuzzy(disj, a, algebra_for(Family::product)) ==
        Approx(0.85).epsilon(1e-12));
}
