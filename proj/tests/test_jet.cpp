#include <catch_amalgamated.hpp>

#include <random>

#include "smoothroots/error.hpp"
#include "smoothroots/jet.hpp"

using namespace smoothroots;

namespace {

Jet jet_of(std::initializer_list<long> c, int order) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return Jet::polynomial(v, order);
}

// Independent Cauchy product over raw mpq vectors.
std::vector<mpq_class> convolve(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, int order) {
  std::vector<mpq_class> c(static_cast<std::size_t>(order) + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (static_cast<int>(i + j) <= order) c[i + j] += a[i] * b[j];
  return c;
}

Jet random_jet(std::mt19937& rng, int order) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Scalar> c;
  for (int i = 0; i <= order; ++i) c.push_back(Scalar::rational(num(rng), den(rng)));
  return Jet(c);
}

}  // namespace

TEST_CASE("jet arithmetic examples", "[jet]") {
  const Jet a = jet_of({1, 1}, 4), b = jet_of({1, -1}, 4);
  CHECK(a * b == jet_of({1, 0, -1}, 4));
  CHECK((a * b).is_polynomial());

  const Jet f = jet_of({3, 0, 2}, 5);
  const Jet z = Jet::zero(5);
  CHECK(z.exact_zero());
  CHECK(f + z == f);
  CHECK((z + z).exact_zero());
  CHECK((f * z).exact_zero());

  // (1+2t+t^2)(1-t) at order 2, against a brute-force convolution.
  const Jet p = jet_of({1, 2, 1}, 2) * jet_of({1, -1}, 2);
  const auto oracle = convolve({1, 2, 1}, {1, -1}, 2);
  for (int i = 0; i <= 2; ++i) CHECK(p[i] == Scalar(oracle[static_cast<std::size_t>(i)]));
  CHECK(p == jet_of({1, 1, -1}, 2));
}

TEST_CASE("result order is the minimum of operand orders", "[jet]") {
  const Jet a = jet_of({1, 1}, 3), b = jet_of({2}, 7);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK((a - b).order() == 3);
  CHECK_THROWS_AS(Jet(std::vector<Scalar>{1, 1}).extended(5), Error);
  CHECK(a.extended(6).order() == 6);
}

TEST_CASE("multiplicity", "[jet]") {
  CHECK(jet_of({0, 0, 1, 1}, 6).multiplicity() == Multiplicity::finite(2));
  CHECK(Jet::zero(8).multiplicity() == Multiplicity::flat_to_order(8));
  CHECK(jet_of({0, 0, 0, 0, 3, -1}, 6).multiplicity() == Multiplicity::finite(4));
  CHECK(Multiplicity::flat_to_order(8).at_least(9));
  CHECK_FALSE(Multiplicity::flat_to_order(8).at_least(10));
}

TEST_CASE("shift_out", "[jet]") {
  const Jet f = jet_of({0, 0, 1, 1}, 8);
  const Jet g = f.shift_out(2);
  CHECK(g.order() == 6);
  CHECK(g == jet_of({1, 1}, 6));
  const Jet z = Jet::zero(8).shift_out(3);
  CHECK(z.order() == 5);
  CHECK(z.exact_zero());
  CHECK(jet_of({0, 0, 0, 2, -1}, 8).shift_out(3) == jet_of({2, -1}, 5));
  CHECK_THROWS_MATCHES(jet_of({0, 1}, 4).shift_out(2), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::MultiplicityTooLow;
                       }));
}

TEST_CASE("jet_sqrt examples", "[jet]") {
  CHECK(jet_of({0, 0, 1}, 8).sqrt() == jet_of({0, 1}, 7));
  const Jet r = jet_of({4, 4, 1}, 8).sqrt();
  CHECK(r == jet_of({2, 1}, 8));
  CHECK(r.is_polynomial());
  CHECK(r * r == jet_of({4, 4, 1}, 8));

  // t^4 (1+t): t^2 times the binomial series of sqrt(1+t).
  const int order = 12;
  const Jet x = jet_of({0, 0, 0, 0, 1, 1}, order).sqrt();
  CHECK(x.order() == order - 2);
  mpq_class binom = 1;
  for (int k = 0; k + 2 <= x.order(); ++k) {
    CHECK(x[k + 2] == Scalar(binom));
    binom *= mpq_class(1, 2) - k;
    binom /= k + 1;
  }
  CHECK(x[0].is_zero());
  CHECK(x[1].is_zero());
  CHECK(x[2] == Scalar(1));
  CHECK(x[3] == Scalar::rational(1, 2));
  CHECK(x[4] == Scalar::rational(-1, 8));
  CHECK((x * x).equals_to_order(jet_of({0, 0, 0, 0, 1, 1}, order), x.order()));
}

TEST_CASE("jet_sqrt errors", "[jet]") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InputError;
  };
  CHECK(code_of([] { jet_of({0, 0, 0, 1}, 6).sqrt(); }) == Errc::OddMultiplicity);
  CHECK(code_of([] { jet_of({0, 0, -1}, 6).sqrt(); }) == Errc::NegativeLeading);
  CHECK(code_of([] { Jet(6).sqrt(); }) == Errc::Flat);
  const Jet c = jet_of({0, 0, -1}, 6).sqrt(Mode::Complex);
  CHECK(c[1] == Scalar::i());
  CHECK(Jet::zero(6).sqrt().exact_zero());
}

TEST_CASE("jet_recip examples", "[jet]") {
  const Jet g = jet_of({1, 1}, 6).recip();
  for (int k = 0; k <= 6; ++k) CHECK(g[k] == Scalar(k % 2 == 0 ? 1 : -1));
  CHECK(jet_of({2}, 3).recip() == Jet::constant(Scalar::rational(1, 2), 3));
  CHECK(jet_of({1, 0, -1}, 5).recip() == jet_of({1, 0, 1, 0, 1}, 5));
  CHECK_THROWS_AS(jet_of({0, 1}, 3).recip(), Error);
}

TEST_CASE("jet ring axioms on random rational jets", "[jet][property]") {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> ord(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = ord(rng);
    const Jet a = random_jet(rng, n), b = random_jet(rng, n), c = random_jet(rng, n);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("sqrt squares back for even-multiplicity jets", "[jet][property]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> half(0, 4), ord(8, 14);
  std::uniform_int_distribution<long> num(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = ord(rng);
    Jet g = random_jet(rng, order);
    g = g - Jet::constant(g[0], order) + Jet::constant(Scalar::rational(num(rng), num(rng)), order);
    const int m = half(rng);
    const Jet f = g.truncated(order - 2 * m).shift_in(2 * m);
    const Jet x = f.sqrt();
    CHECK(x.order() == order - m);
    CHECK((x * x).equals_to_order(f, x.order()));
    CHECK(x[m].re().sign() > 0);
  }
}

TEST_CASE("shift and reciprocal identities", "[jet][property]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = 10;
    Jet g = random_jet(rng, order);
    const int k = trial % 5;
    CHECK(g.shift_in(k).shift_out(k) == g);
    if (!g[0].is_zero()) {
      const Jet one = g * g.recip();
      CHECK(one == Jet::constant(Scalar(1), order));
    }
  }
}
