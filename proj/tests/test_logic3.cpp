#include <random>

#include "afsa/errors.hpp"
#include "afsa/formula.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace afsa;

namespace {

const Tri kVals[3] = {Tri::zero, Tri::half, Tri::one};

// Truth degree tables of => and <=> (rows x, columns y over 0, 1/2, 1).
const Tri kImpTable[3][3] = {
    {Tri::one, Tri::one, Tri::one},
    {Tri::half, Tri::one, Tri::one},
    {Tri::zero, Tri::half, Tri::one},
};
const Tri kIffTable[3][3] = {
    {Tri::one, Tri::half, Tri::zero},
    {Tri::half, Tri::one, Tri::half},
    {Tri::zero, Tri::half, Tri::one},
};

Formula random_formula(std::mt19937_64& rng, int depth,
                       const std::vector<std::string>& vars) {
  using testsupport::pick;
  if (depth == 0 || pick(rng, 4) == 0) {
    if (pick(rng, 4) == 0) return Formula::constant(kVals[pick(rng, 3)]);
    return Formula::var(vars[pick(rng, static_cast<int>(vars.size()))]);
  }
  switch (pick(rng, 5)) {
    case 0:
      return Formula::neg(random_formula(rng, depth - 1, vars));
    case 1:
    case 2: {
      std::vector<Formula> kids;
      int n = 1 + pick(rng, 3);
      for (int i = 0; i < n; ++i)
        kids.push_back(random_formula(rng, depth - 1, vars));
      return pick(rng, 2) == 0 ? Formula::conj(std::move(kids))
                               : Formula::disj(std::move(kids));
    }
    case 3:
      return Formula::imp(random_formula(rng, depth - 1, vars),
                          random_formula(rng, depth - 1, vars));
    default:
      return Formula::iff(random_formula(rng, depth - 1, vars),
                          random_formula(rng, depth - 1, vars));
  }
}

}  // namespace

TEST_CASE("implication and bi-implication match the truth degree tables") {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Assignment3 a{{"x", kVals[i]}, {"y", kVals[j]}};
      CHECK(eval3(Formula::imp(Formula::var("x"), Formula::var("y")), a) ==
            kImpTable[i][j]);
      CHECK(eval3(Formula::iff(Formula::var("x"), Formula::var("y")), a) ==
            kIffTable[i][j]);
    }
  }
}

TEST_CASE("eval3 worked examples") {
  Assignment3 a{{"a", Tri::one}, {"b", Tri::half}};
  CHECK(eval3(Formula::imp(Formula::var("a"), Formula::var("b")), a) == Tri::half);
  Assignment3 b{{"a", Tri::zero}, {"b", Tri::half}};
  CHECK(eval3(Formula::iff(Formula::var("a"), Formula::var("b")), b) == Tri::half);
  Assignment3 c{{"a", Tri::half}, {"b", Tri::half}};
  CHECK(eval3(Formula::iff(Formula::var("a"), Formula::var("b")), c) == Tri::one);
}

TEST_CASE("eval3 connective clauses") {
  Assignment3 a{{"x", Tri::half}, {"y", Tri::one}};
  CHECK(eval3(Formula::neg(Formula::var("x")), a) == Tri::half);
  CHECK(eval3(Formula::neg(Formula::var("y")), a) == Tri::zero);
  CHECK(eval3(Formula::conj({Formula::var("x"), Formula::var("y")}), a) ==
        Tri::half);
  CHECK(eval3(Formula::disj({Formula::var("x"), Formula::var("y")}), a) ==
        Tri::one);
}

TEST_CASE("unbound variable is an error") {
  CHECK_THROWS_AS(eval3(Formula::var("z"), Assignment3{}), UnboundVariable);
}

TEST_CASE("is_model3") {
  Formula f = Formula::iff(Formula::var("a"), Formula::neg(Formula::var("a")));
  CHECK(is_model3(f, {{"a", Tri::half}}));
  CHECK_FALSE(is_model3(f, {{"a", Tri::one}}));
  CHECK(is_model3(Formula::constant(Tri::one), {}));
}

TEST_CASE("enumerate_models3 worked examples") {
  Formula fix = Formula::iff(Formula::var("a"), Formula::neg(Formula::var("a")));
  auto models = enumerate_models3(fix, 100);
  REQUIRE(models.size() == 1);
  CHECK(models[0].at("a") == Tri::half);

  auto single = enumerate_models3(Formula::var("a"), 100);
  REQUIRE(single.size() == 1);
  CHECK(single[0].at("a") == Tri::one);

  Formula contra = Formula::conj({Formula::var("a"), Formula::neg(Formula::var("a"))});
  CHECK(enumerate_models3(contra, 100).empty());
}

TEST_CASE("enumerate_models3 honors the cap") {
  Formula f = Formula::conj({Formula::var("a"), Formula::var("b"), Formula::var("c")});
  CHECK_THROWS_AS(enumerate_models3(f, 26), CapExceeded);
  try {
    enumerate_models3(f, 26);
  } catch (const CapExceeded& e) {
    CHECK(e.required() == 27);
  }
}

TEST_CASE("enumeration order is lexicographic with 0 < 1/2 < 1") {
  // 'a || !a' has value 1 except when a = 1/2
  Formula f = Formula::disj({Formula::var("a"), Formula::neg(Formula::var("a"))});
  auto models = enumerate_models3(f, 100);
  REQUIRE(models.size() == 2);
  CHECK(models[0].at("a") == Tri::zero);
  CHECK(models[1].at("a") == Tri::one);
}

TEST_CASE("double negation is the identity on all values") {
  for (Tri v : kVals) {
    Assignment3 a{{"x", v}};
    CHECK(eval3(Formula::neg(Formula::neg(Formula::var("x"))), a) == v);
  }
}

TEST_CASE("iff contract: value 1 exactly on equal operands") {
  for (Tri x : kVals)
    for (Tri y : kVals) {
      Assignment3 a{{"x", x}, {"y", y}};
      bool model = eval3(Formula::iff(Formula::var("x"), Formula::var("y")), a) ==
                   Tri::one;
      CHECK(model == (x == y));
    }
}

TEST_CASE("enumerate_models3 agrees with filtering is_model3") {
  std::mt19937_64 rng(7);
  std::vector<std::string> vars{"p", "q", "r", "s"};
  for (int round = 0; round < 200; ++round) {
    Formula f = random_formula(rng, 4, vars);
    auto models = testsupport::labelling_set(enumerate_models3(f, 100000));

    std::set<Assignment3> expected;
    std::vector<std::string> fv = f.variables();
    const int n = static_cast<int>(fv.size());
    std::vector<int> v(n, 0);
    for (;;) {
      Assignment3 a;
      for (int i = 0; i < n; ++i) a[fv[i]] = tri_from_halves(v[i]);
      if (is_model3(f, a)) expected.insert(a);
      int i = n - 1;
      while (i >= 0 && v[i] == 2) v[i--] = 0;
      if (i < 0) break;
      ++v[i];
    }
    CHECK(models == expected);
  }
}

TEST_CASE("pretty printer") {
  Formula f = Formula::iff(
      Formula::var("b"),
      Formula::neg(Formula::conj({Formula::var("a"), Formula::var("r1")})));
  CHECK(f.pretty() == "(b <-> (!(a & r1)))");
  CHECK(Formula::constant(Tri::half).pretty() == "1/2");
  CHECK(Formula::imp(Formula::var("x"), Formula::constant(Tri::zero)).pretty() ==
        "(x -> 0)");
  CHECK(Formula::disj({Formula::var("x"), Formula::var("y")}).pretty() ==
        "(x | y)");
}
