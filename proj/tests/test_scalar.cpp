#include <random>

#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/scalar.hpp"

using namespace pdq;

namespace {

Scalar hbar() { return Scalar::param("hbar"); }
Scalar lam() { return Scalar::param("lambda"); }

Scalar random_poly(std::mt19937& rng, const Scalar& u, const Scalar& v) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Scalar r;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      int c = coef(rng);
      if (c) r += Scalar(c) * u.pow(i) * v.pow(j);
    }
  return r;
}

Scalar random_scalar(std::mt19937& rng) {
  Scalar u = hbar(), v = lam();
  Scalar num = random_poly(rng, u, v);
  Scalar den = random_poly(rng, u, v);
  if (den.is_zero()) den = Scalar(1);
  return num / den;
}

}  // namespace

TEST_CASE("inverse law and cyclotomic reduction") {
  Scalar s = Scalar(2) + lam() * hbar();
  CHECK((s * s.inv()).is_one());
  CHECK(Scalar::zeta(4) * Scalar::zeta(4) == Scalar(-1));
  Scalar one_plus = Scalar(1) + hbar();
  CHECK((Scalar(1) - hbar()) / one_plus + Scalar(2) * hbar() / one_plus == Scalar(1));
}

TEST_CASE("equality by cross multiplication") {
  Scalar h = hbar();
  CHECK((Scalar(1) - h * h) / (Scalar(1) + h) == Scalar(1) - h);
  CHECK(h != Scalar(0));
  Scalar a = Scalar(1) / (Scalar(2) - h);
  CHECK(a * a == Scalar(1) / (Scalar(4) - Scalar(4) * h + h * h));
}

TEST_CASE("specialization") {
  Scalar h = hbar();
  Bindings one{{"hbar", Scalar(1)}};
  CHECK(specialize((Scalar(1) - h) / (Scalar(1) + h), one).is_zero());
  Bindings minus{{"hbar", Scalar(-1)}};
  CHECK_THROWS_AS(specialize(Scalar(1) / (Scalar(1) + h), minus), Error);
  try {
    specialize(Scalar(1) / (Scalar(1) + h), minus);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtSpecialization);
  }
  Bindings two{{"hbar", Scalar(1)}, {"lambda", Scalar(2)}};
  CHECK(specialize(Scalar(2) * h / (Scalar(2) + lam() * h), two) == Scalar::rational(1, 2));
  // Removable singularity: (1-h)/(1-h^2) at h=1 is 1/2.
  Scalar r = (Scalar(1) - h) / (Scalar(1) - h * h);
  CHECK(specialize(r, one) == Scalar::rational(1, 2));
}

TEST_CASE("roots of unity") {
  for (int m : {1, 2, 3, 4, 6, 8, 12}) {
    Scalar z = Scalar::zeta(m);
    CHECK(z.pow(m) == Scalar(1));
    for (int k = 1; k < m; ++k) CHECK(z.pow(k) != Scalar(1));
  }
  Scalar z3 = Scalar::zeta(3), z4 = Scalar::zeta(4), z6 = Scalar::zeta(6), z8 = Scalar::zeta(8), z12 = Scalar::zeta(12);
  CHECK(z3 * z3 + z3 + Scalar(1) == Scalar(0));
  CHECK(z4 * z4 + Scalar(1) == Scalar(0));
  CHECK(z6 * z6 - z6 + Scalar(1) == Scalar(0));
  CHECK(z8.pow(4) + Scalar(1) == Scalar(0));
  CHECK(z12.pow(4) - z12.pow(2) + Scalar(1) == Scalar(0));
  CHECK(Scalar::sqrt3() * Scalar::sqrt3() == Scalar(3));
  // Mixed orders meet in the common order.
  CHECK(z4 * z3 == z12.pow(7));
  CHECK_THROWS_AS(z8 * z3, Error);
  CHECK_THROWS_AS(Scalar::zeta(5), Error);
  CHECK_THROWS_AS(Scalar(0).inv(), Error);
  CHECK((Scalar(1) + z3).inv() * (Scalar(1) + z3) == Scalar(1));
  Scalar w = Scalar(2) + hbar() * z12 - z12.pow(3);
  CHECK(w * w.inv() == Scalar(1));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    Scalar u = random_scalar(rng), v = random_scalar(rng), w = random_scalar(rng);
    CHECK((u + v) + w == u + (v + w));
    CHECK(u * (v + w) == u * v + u * w);
    CHECK(u * v == v * u);
    if (!u.is_zero()) CHECK(u * u.inv() == Scalar(1));
    CHECK(u - u == Scalar(0));
  }
}

TEST_CASE("specialize commutes with products") {
  std::mt19937 rng(7);
  Bindings b{{"hbar", Scalar::rational(3, 5)}, {"lambda", Scalar(-2)}};
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Scalar u = random_scalar(rng), v = random_scalar(rng);
    try {
      Scalar su = specialize(u, b), sv = specialize(v, b);
      CHECK(specialize(u * v, b) == su * sv);
      CHECK(specialize(u + v, b) == su + sv);
      CHECK(su.is_rational());
      ++checked;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleAtSpecialization);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("printing is deterministic") {
  Scalar h = hbar();
  CHECK((Scalar(1) - h).to_string() == "-hbar + 1");
  CHECK((Scalar(2) * h / (Scalar(2) + lam() * h)).to_string() == "2*hbar/(hbar*lambda + 2)");
  CHECK(Scalar::rational(-3, 4).to_string() == "-3/4");
  CHECK(Scalar::zeta(3).to_string() == "zeta{3}");
}
