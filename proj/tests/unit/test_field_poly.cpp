#include <doctest.h>

#include <random>
#include <vector>

#include "algraph/errors.hpp"
#include "algraph/field.hpp"
#include "algraph/poly.hpp"

using namespace algraph;

namespace {

FieldPoly poly_of(const PrimeField& f, std::initializer_list<u64> cs) {
  std::vector<FieldElement> v;
  for (u64 c : cs) v.push_back(f.from_u64(c));
  return FieldPoly(v);
}

FieldPoly random_poly(const PrimeField& f, std::mt19937_64& rng, int deg) {
  std::vector<FieldElement> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = f.from_u64(rng());
  return FieldPoly(c);
}

}  // namespace

TEST_CASE("field inverse examples") {
  PrimeField f7(7);
  CHECK(f7.inv(FieldElement{2}).value == 4);
  CHECK(f7.inv(FieldElement{1}).value == 1);
  CHECK_THROWS_AS(f7.inv(FieldElement{0}), ZeroInverse);

  PrimeField big;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    FieldElement a = big.from_u64(rng());
    if (a.is_zero()) continue;
    CHECK(big.mul(a, big.inv(a)) == big.one());
  }
}

TEST_CASE("non-prime moduli are rejected") {
  CHECK_THROWS(PrimeField(100));
  CHECK(is_prime_u64(PrimeField::kMersenne61));
  CHECK_FALSE(is_prime_u64(561));
}

TEST_CASE("field axioms on random triples") {
  for (u64 p : {PrimeField::kMersenne61, u64{1000000007}, u64{101}}) {
    PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 10000; ++i) {
      FieldElement a = f.from_u64(rng()), b = f.from_u64(rng()), c = f.from_u64(rng());
      REQUIRE(a.value < p);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.sub(f.add(a, b), b) == a);
      if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("signed embedding round-trips") {
  PrimeField f;
  for (i64 v : {i64{-5}, i64{0}, i64{17}, i64{-1}}) CHECK(f.to_signed(f.from_int(v)) == v);
}

TEST_CASE("poly_eval examples") {
  PrimeField f7(7);
  CHECK(poly_eval(f7, poly_of(f7, {1, 1, 1}), FieldElement{2}).value == 0);
  CHECK(poly_eval(f7, FieldPoly{}, FieldElement{3}).is_zero());

  PrimeField f;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    FieldPoly q = random_poly(f, rng, trial % 12);
    FieldElement y = f.from_u64(rng());
    FieldElement naive = f.zero(), power = f.one();
    for (FieldElement c : q.coeffs) {
      naive = f.add(naive, f.mul(c, power));
      power = f.mul(power, y);
    }
    CHECK(poly_eval(f, q, y) == naive);
  }
}

TEST_CASE("degree bookkeeping") {
  PrimeField f;
  FieldPoly zero(std::vector<FieldElement>{f.zero(), f.zero()});
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK_FALSE(zero.lowest_degree().has_value());
  FieldPoly q = FieldPoly::monomial(f.from_u64(3), 4);
  CHECK(q.degree() == 4);
  CHECK(q.lowest_degree() == 4);
  CHECK(q.coeff(4).value == 3);
  CHECK(q.coeff(9).is_zero());
}

TEST_CASE("lagrange interpolation examples") {
  PrimeField f101(101);
  std::vector<FieldElement> xs{FieldElement{0}, FieldElement{1}, FieldElement{2}};
  std::vector<FieldElement> ys{FieldElement{1}, FieldElement{3}, FieldElement{7}};
  CHECK(lagrange_interpolate(f101, xs, ys) == poly_of(f101, {1, 1, 1}));

  std::vector<FieldElement> x1{FieldElement{5}}, y1{FieldElement{9}};
  CHECK(lagrange_interpolate(f101, x1, y1) == poly_of(f101, {9}));

  std::vector<FieldElement> dup{FieldElement{1}, FieldElement{1}};
  CHECK_THROWS_AS(lagrange_interpolate(f101, dup, dup), DuplicateNode);
}

TEST_CASE("interpolation round-trips and is unique") {
  PrimeField f;
  std::mt19937_64 rng(5);
  for (int d = 0; d <= 30; ++d) {
    FieldPoly q = random_poly(f, rng, d);
    q.normalize();
    std::vector<FieldElement> xs, ys;
    for (int k = 0; k <= d; ++k) {
      xs.push_back(f.from_u64(rng()));
      ys.push_back(poly_eval(f, q, xs.back()));
    }
    FieldPoly a = lagrange_interpolate(f, xs, ys);
    FieldPoly b = lagrange_interpolate(f, xs, ys);
    CHECK(a == q);
    CHECK(a == b);
    for (std::size_t k = 0; k < xs.size(); ++k) CHECK(poly_eval(f, a, xs[k]) == ys[k]);
  }
}

TEST_CASE("lagrange basis rows reproduce interpolation") {
  PrimeField f;
  std::vector<FieldElement> xs;
  for (u64 k = 1; k <= 6; ++k) xs.push_back(FieldElement{k});
  LagrangeBasis basis(f, xs);
  std::mt19937_64 rng(9);
  std::vector<FieldElement> ys;
  for (std::size_t k = 0; k < xs.size(); ++k) ys.push_back(f.from_u64(rng()));
  FieldPoly q = lagrange_interpolate(f, xs, ys);
  for (std::size_t d = 0; d < xs.size(); ++d) {
    FieldElement c = f.zero(), pre = f.zero();
    for (std::size_t k = 0; k < xs.size(); ++k) {
      c = f.add(c, f.mul(basis.coeff(k, d), ys[k]));
      pre = f.add(pre, f.mul(basis.prefix(k, d), ys[k]));
    }
    CHECK(c == q.coeff(static_cast<int>(d)));
    CHECK(pre == prefix_sum_coeff(f, q, static_cast<int>(d)));
  }
}

TEST_CASE("prefix_sum_coeff examples and schoolbook property") {
  PrimeField f;
  CHECK(prefix_sum_coeff(f, poly_of(f, {0, 0, 0, 1}), 2).is_zero());
  CHECK(prefix_sum_coeff(f, poly_of(f, {1, 0, 1}), 5).value == 2);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    FieldPoly q = random_poly(f, rng, static_cast<int>(rng() % 51));
    int c = static_cast<int>(rng() % 60);
    FieldPoly ones(std::vector<FieldElement>(static_cast<std::size_t>(c) + 1, f.one()));
    CHECK(prefix_sum_coeff(f, q, c) == poly_mul(f, q, ones).coeff(c));
  }
}

TEST_CASE("poly_add and poly_mul agree with evaluation") {
  PrimeField f;
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    FieldPoly a = random_poly(f, rng, trial % 7), b = random_poly(f, rng, trial % 5);
    FieldElement y = f.from_u64(rng());
    CHECK(poly_eval(f, poly_add(f, a, b), y) == f.add(poly_eval(f, a, y), poly_eval(f, b, y)));
    CHECK(poly_eval(f, poly_mul(f, a, b), y) == f.mul(poly_eval(f, a, y), poly_eval(f, b, y)));
  }
}
