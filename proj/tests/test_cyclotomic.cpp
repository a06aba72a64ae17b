#include <doctest.h>

#include "quiverq/cyclotomic.hpp"
#include "quiverq/errors.hpp"

using namespace quiverq;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(5) == IntPoly{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == IntPoly{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("nilpotency order e") {
  CHECK(nilpotency_order(5) == 5);
  CHECK(nilpotency_order(6) == 3);
  CHECK(nilpotency_order(7) == 7);
  CHECK(nilpotency_order(8) == 4);
}

TEST_CASE("exact field arithmetic") {
  CyclotomicField f(6);
  const auto q = f.q();
  CHECK(f.equal(f.add(q, f.q_power(-1)), f.one()));
  CHECK(f.equal(f.pow(q, 6), f.one()));
  CHECK(!f.equal(f.pow(q, 3), f.one()));
  CHECK(f.equal(f.pow(q, 3), f.from_int(-1)));
  CHECK(f.equal(f.mul(q, f.inv(q)), f.one()));

  CyclotomicField g(5);
  auto sum = g.zero();
  for (int k = 0; k < 5; ++k) sum = g.add(sum, g.q_power(k));
  CHECK(g.is_zero(sum));
  auto x = g.add(g.q(), g.from_int(3));
  CHECK(g.equal(g.mul(x, g.inv(x)), g.one()));
  CHECK(g.equal(g.from_rational(mpq_class(1, 2)), g.inv(g.from_int(2))));
  CHECK(g.equal(g.q_power(-7), g.q_power(3)));
}

TEST_CASE("modular field") {
  PrimeField f(6);
  CHECK(f.prime() == 1073741827ull);
  CHECK(f.q() == 536854530ull);
  CHECK(f.equal(f.add(f.q(), f.q_power(-1)), f.one()));
  CHECK(f.pow(f.q(), 3) == f.from_int(-1));

  PrimeField g(5);
  CHECK((g.prime() - 1) % 5 == 0);
  CHECK(g.prime() > (1ull << 30));
  CHECK(g.pow(g.q(), 5) == 1);
  CHECK(g.q() != 1);
  CHECK(g.mul(g.from_int(7), g.inv(g.from_int(7))) == 1);

  CHECK_THROWS_AS(PrimeField(5, 4294967295ull), PrimeUnavailable);
  CHECK_THROWS_AS(PrimeField(5, 1073741827ull, 2), PrimeUnavailable);
}

TEST_CASE("specialization is a ring map") {
  CyclotomicField f(7);
  PrimeField p(7);
  const auto a = f.add(f.q_power(2), f.from_int(5));
  const auto b = f.sub(f.q_power(4), f.from_rational(mpq_class(3, 4)));
  CHECK(specialize(f.mul(a, b), p) == p.mul(specialize(a, p), specialize(b, p)));
  CHECK(specialize(f.add(a, b), p) == p.add(specialize(a, p), specialize(b, p)));
  CHECK(specialize(f.q(), p) == p.q());
}
