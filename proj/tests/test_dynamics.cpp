#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ks/dynamics/bohr.hpp"
#include "ks/dynamics/classify.hpp"
#include "ks/dynamics/entropy.hpp"
#include "ks/dynamics/invariants.hpp"
#include "ks/errors.hpp"

using namespace ks;
using namespace ks::dynamics;
using exactalg::IntPolynomial;
using exactalg::Param;

namespace {

IntPolynomial poly(std::vector<long> c) { return IntPolynomial::normalize(c); }

const std::vector<std::vector<long>> kCorpus = {
    {-2, 1}, {-3, 1}, {-1, -1, 1}, {-1, -2, 1}, {-1, 2}};

std::vector<Rat> angles(std::initializer_list<Rat> v) { return {v}; }

}  // namespace

TEST_CASE("fixed_count worked examples") {
  CHECK(fixed_count(poly({-2, 1}), 3) == 7);   // m^q - 1
  CHECK(fixed_count(poly({-1, 2}), 3) == 7);   // reciprocal gives the same
  CHECK(fixed_count(poly({-1, -1, 1}), 3) == 4);
  CHECK_THROWS_AS(fixed_count(poly({-2, 1}), 0), ValidationError);
}

TEST_CASE("Baumslag-Solitar counts m^q - 1") {
  for (long m : {2L, 3L}) {
    auto Q = poly({-m, 1});
    for (int q = 1; q <= 12; ++q)
      CHECK(fixed_count(Q, q) == int_pow(Int(m), static_cast<unsigned long>(q)) - 1);
  }
}

TEST_CASE("least_period_count examples and Moebius consistency") {
  auto two = poly({-2, 1});
  CHECK(least_period_count(two, 2) == 2);  // c_2 - c_1 = 3 - 1
  CHECK(least_period_count(two, 1) == 1);  // the trivial character
  CHECK(least_period_count(poly({-1, -1, 1}), 2) == 0);

  for (const auto& c : kCorpus) {
    auto Q = poly(c);
    for (int q = 1; q <= 12; ++q) {
      Int sum = 0;
      for (int e = 1; e <= q; ++e)
        if (q % e == 0) sum += least_period_count(Q, e);
      CHECK(sum == fixed_count(Q, q));
    }
  }
}

TEST_CASE("reciprocal invariance of c_q") {
  for (const auto& c : kCorpus) {
    auto Q = poly(c);
    auto R = Q.reciprocal();
    for (int q = 1; q <= 12; ++q) CHECK(fixed_count(Q, q) == fixed_count(R, q));
  }
}

TEST_CASE("enumerate_characters worked examples") {
  auto two = poly({-2, 1});

  auto only_trivial = enumerate_characters(two, 1);
  REQUIRE(only_trivial.size() == 1);
  CHECK(only_trivial[0].angles[0] == 0);

  auto chars2 = enumerate_characters(two, 2);
  REQUIRE(chars2.size() == 3);
  std::set<std::vector<Rat>> got;
  for (const auto& chi : chars2) got.insert(chi.angles);
  std::set<std::vector<Rat>> want{angles({Rat(0), Rat(0)}),
                                  angles({make_rat(1, 3), make_rat(2, 3)}),
                                  angles({make_rat(2, 3), make_rat(1, 3)})};
  CHECK(got == want);
}

TEST_CASE("enumeration count, recursion, and shift closure") {
  for (const auto& c : kCorpus) {
    auto Q = poly(c);
    for (int q = 1; q <= 8; ++q) {
      auto chars = enumerate_characters(Q, q);
      CHECK(Int(static_cast<long>(chars.size())) == fixed_count(Q, q));
      std::set<std::vector<Rat>> all;
      for (const auto& chi : chars) {
        CHECK(satisfies_recursion(Q, chi));
        all.insert(chi.angles);
      }
      CHECK(all.size() == chars.size());  // distinct
      for (const auto& chi : chars)        // closed under the shift
        CHECK(all.count(shift_character(chi).angles) == 1);
    }
  }
}

TEST_CASE("least periods from enumeration agree with Moebius inversion") {
  for (const auto& c : kCorpus) {
    auto Q = poly(c);
    for (int q = 1; q <= 8; ++q) {
      auto chars = enumerate_characters(Q, q);
      long with_least_q =
          std::count_if(chars.begin(), chars.end(), [&](const Character& chi) {
            return chi.least_period == q;
          });
      CHECK(Int(with_least_q) == least_period_count(Q, q));
    }
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_characters(poly({-2, 1}), 8, 100), GuardExceeded);
}

TEST_CASE("entropy known values") {
  for (long m = 2; m <= 5; ++m) {
    auto rep = entropy(poly({-m, 1}), 1e-12);
    CHECK(std::abs(rep.value - std::log(static_cast<double>(m))) < 1e-9);
  }
  // q_d contributes: a = 1/2
  auto half = entropy(poly({-1, 2}), 1e-12);
  CHECK(std::abs(half.value - std::log(2.0)) < 1e-9);

  // golden ratio, oracle = quadratic formula
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  auto gold = entropy(poly({-1, -1, 1}), 1e-12);
  CHECK(std::abs(gold.value - std::log(phi)) < 1e-9);
  CHECK(gold.roots.size() == 2);

  // silver ratio 1 + sqrt(2)
  auto silver = entropy(poly({-1, -2, 1}), 1e-12);
  CHECK(std::abs(silver.value - std::log(1.0 + std::sqrt(2.0))) < 1e-9);

  auto inf = entropy(Param::transcendental(), 1e-12);
  CHECK(inf.transcendental);
  CHECK(std::isinf(inf.value));
}

TEST_CASE("entropy growth table") {
  auto rows = entropy_growth_check(poly({-2, 1}), 20);
  CHECK(rows[9].q == 10);
  CHECK(rows[9].c == 1023);
  CHECK(rows[9].log_c_over_q == doctest::Approx(std::log(1023.0) / 10).epsilon(1e-12));
  CHECK(std::abs(rows[19].log_c_over_q - std::log(2.0)) < 1e-6);

  auto gold = entropy_growth_check(poly({-1, -1, 1}), 4);
  CHECK(gold[0].c == 1);
  CHECK(gold[0].log_c_over_q == 0.0);
}

TEST_CASE("bohr embedding frozen values and invariant") {
  auto two = poly({-2, 1});

  auto zero_orbit = bohr_embed(two, {Rat(0)}, -3, 3);
  for (const auto& [k, z] : zero_orbit) CHECK(z[0] == 0);

  auto orbit = bohr_embed(two, {make_rat(1, 3)}, -2, 2);
  CHECK(orbit[0][0] == make_rat(1, 3));
  CHECK(orbit[1][0] == make_rat(2, 3));
  CHECK(orbit[2][0] == make_rat(1, 3));
  CHECK(orbit[-1][0] == make_rat(1, 6));
  CHECK(orbit[-2][0] == make_rat(1, 12));

  // q_d z_{k+1} = A z_k (mod Z) on the window, for a two-dimensional case too
  auto gold = poly({-1, -1, 1});
  auto A = exactalg::companion_matrix(gold);
  auto orb2 = bohr_embed(gold, {make_rat(1, 5), make_rat(2, 7)}, -4, 4);
  for (long k = -4; k < 4; ++k) {
    for (int i = 0; i < 2; ++i) {
      Rat rhs = 0;
      for (int j = 0; j < 2; ++j) rhs += Rat(A.at(i, j)) * orb2[k][static_cast<size_t>(j)];
      Rat lhs = Rat(gold.leading()) * orb2[k + 1][static_cast<size_t>(i)];
      CHECK(mod1(lhs - rhs) == 0);
    }
  }
}

TEST_CASE("bohr window periodicity") {
  auto two = poly({-2, 1});
  // rational phi with odd denominator: genuinely periodic orbit
  auto per = bohr_embed(two, {make_rat(1, 7)}, 0, 12);
  auto p = bohr_window_period(per, 12);
  REQUIRE(p.has_value());
  CHECK(*p == 3);  // 2^3 = 8 = 1 mod 7

  // irrational phi (as a double, an exact dyadic): no small period on the window
  auto aper = bohr_embed(two, {Rat(std::sqrt(2.0) - 1.0)}, -6, 6);
  CHECK_FALSE(bohr_window_period(aper, 12).has_value());
}

TEST_CASE("classification verdicts") {
  auto two = Param::algebraic(poly({-2, 1}));
  auto three = Param::algebraic(poly({-3, 1}));
  auto half = Param::algebraic(poly({-1, 2}));
  auto tr = Param::transcendental();

  auto rec = classify(two, half, 12, 1e-9);
  CHECK_FALSE(rec.distinguished());
  CHECK(rec.up_to == 12);
  CHECK(rec.reciprocal_pair);

  auto dist = classify(two, three, 12, 1e-9);
  CHECK(dist.distinguished());
  CHECK(dist.witness_q == 1);  // c_1 = 1 vs 2

  auto gap = classify(two, tr, 12, 1e-9);
  CHECK(gap.distinguished());
  CHECK(gap.entropy_gap);

  auto both = classify(tr, Param::transcendental(), 12, 1e-9);
  CHECK_FALSE(both.distinguished());
  CHECK_FALSE(both.up_to.has_value());

  // same counts up to 12 never happens for these two, but entropy also splits
  auto gold = Param::algebraic(poly({-1, -1, 1}));
  auto silver = Param::algebraic(poly({-1, -2, 1}));
  CHECK(classify(gold, silver, 12, 1e-9).distinguished());
}

TEST_CASE("k-groups") {
  auto k13 = k_groups(1, 3);
  CHECK(k13.k0_display == "Z");
  CHECK(k13.k1_display == "Z + Z_2");
  CHECK(k13.torsion == 2);

  CHECK(k_groups(2, 3).k1_display == "Z");  // torsion order 1 is trivial
  CHECK(k_groups(2, 1).k1_display == "Z");
  CHECK(k_groups(2, 1).torsion == 1);

  CHECK_THROWS_AS(k_groups(2, 2), ValidationError);
  CHECK_THROWS_AS(k_groups(2, 4), ValidationError);
  CHECK_THROWS_AS(k_groups(0, 1), ValidationError);
}
