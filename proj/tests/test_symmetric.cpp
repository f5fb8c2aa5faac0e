#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "smoothroots/symmetric.hpp"

using namespace smoothroots;

namespace {

PolyCoeffs coeffs(std::initializer_list<long> a) {
  std::vector<Scalar> v;
  for (long x : a) v.emplace_back(x);
  return PolyCoeffs(v);
}

// Sum over k-subsets of the squared Vandermonde product, straight from roots.
mpq_class vandermonde_sum(const std::vector<mpq_class>& x, int k) {
  const int n = static_cast<int>(x.size());
  mpq_class total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    mpq_class prod = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) prod *= (x[i] - x[j]) * (x[i] - x[j]);
    total += prod;
  }
  return total;
}

}  // namespace

TEST_CASE("newton sums", "[symmetric]") {
  const auto s = newton_from_elementary(coeffs({0, -1}), 6);
  const std::vector<long> expect{2, 0, 2, 0, 2, 0, 2};
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(s[i] == Scalar(expect[i]));

  const auto zero = newton_from_elementary(coeffs({0, 0, 0}), 5);
  CHECK(zero[0] == Scalar(3));
  for (int k = 1; k <= 5; ++k) CHECK(zero[static_cast<std::size_t>(k)].is_exact_zero());

  // Symbolic n = 2 check: s_2 = sigma_1^2 - 2 sigma_2.
  const auto s2 = newton_from_elementary(coeffs({5, 7}), 2);
  CHECK(s2[1] == Scalar(5));
  CHECK(s2[2] == Scalar(25 - 14));
}

TEST_CASE("elementary from newton", "[symmetric]") {
  CHECK(elementary_from_newton({2, 0, 2}, 2).a == coeffs({0, -1}).a);
  CHECK(elementary_from_newton({4, 0, 0, 0, 0}, 4).a == coeffs({0, 0, 0, 0}).a);
  // s = (3,3,5,9) is the power-sum vector of the roots {0, 1, 2}.
  const PolyCoeffs p = elementary_from_newton({3, 3, 5, 9}, 3);
  CHECK(p.a == coeffs({3, 2, 0}).a);
}

TEST_CASE("bezoutiant and minors", "[symmetric]") {
  const auto b = bezoutiant(coeffs({0, -1}));
  CHECK(b[0][0] == Scalar(2));
  CHECK(b[0][1] == Scalar(0));
  CHECK(b[1][1] == Scalar(2));
  CHECK(bezoutiant(coeffs({0, 1}))[1][1] == Scalar(-2));
  const auto b3 = bezoutiant(coeffs({0, 0, 0}));
  CHECK(b3[0][0] == Scalar(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j > 0) CHECK(b3[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_exact_zero());

  auto d = delta_minors(coeffs({0, -1}));
  CHECK(d[0] == Scalar(2));
  CHECK(d[1] == Scalar(4));
  CHECK(Scalar(vandermonde_sum({1, -1}, 2)) == d[1]);
  d = delta_minors(coeffs({0, 1}));
  CHECK(d[1] == Scalar(-4));
  d = delta_minors(coeffs({0, 0, 0, 0}));
  CHECK(d[0] == Scalar(4));
  for (int k = 1; k < 4; ++k) CHECK(d[static_cast<std::size_t>(k)].is_exact_zero());
}

TEST_CASE("certificates", "[symmetric]") {
  auto c = certify_real_rooted(coeffs({0, -1}));
  CHECK(c.all_real);
  CHECK(c.rank == 2);
  CHECK(c.signature == 2);
  c = certify_real_rooted(coeffs({0, 1}));
  CHECK_FALSE(c.all_real);
  CHECK(c.rank == 2);
  CHECK(c.signature == 0);
  c = certify_real_rooted(coeffs({0, -3, -2}));  // (x-1)^2 (x+2)
  CHECK(c.all_real);
  CHECK(c.rank == 2);
  CHECK(c.signature == 2);
}

TEST_CASE("newton round trip on random coefficients", "[symmetric][property]") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = deg(rng);
    std::vector<Scalar> a;
    for (int k = 0; k < n; ++k) a.push_back(Scalar::rational(num(rng), den(rng)));
    const PolyCoeffs p(a);
    const PolyCoeffs back = elementary_from_newton(newton_from_elementary(p, n), n);
    REQUIRE(back.a.size() == a.size());
    for (int k = 0; k < n; ++k) CHECK((back.a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(k)]).is_exact_zero());
  }
}

TEST_CASE("minors match the squared Vandermonde oracle", "[symmetric][property]") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> root(-4, 4);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = deg(rng);
    std::vector<mpq_class> x;
    std::vector<Scalar> xs;
    for (int i = 0; i < n; ++i) {
      x.emplace_back(root(rng));
      xs.emplace_back(x.back());
    }
    const auto d = delta_minors(PolyCoeffs::from_roots(xs));
    for (int k = 1; k <= n; ++k) CHECK(d[static_cast<std::size_t>(k - 1)] == Scalar(vandermonde_sum(x, k)));
  }
}

TEST_CASE("certificate matches construction", "[symmetric][property]") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> v(-3, 3);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = deg(rng);
    std::vector<Scalar> roots;
    std::set<std::pair<long, long>> distinct;
    std::set<long> distinct_real;
    while (static_cast<int>(roots.size()) < n) {
      const long re = v(rng), im = v(rng);
      if (im != 0 && static_cast<int>(roots.size()) + 2 <= n) {
        roots.emplace_back(Real(re), Real(im));
        roots.emplace_back(Real(re), Real(-im));
        distinct.insert({re, im});
        distinct.insert({re, -im});
      } else {
        roots.emplace_back(re);
        distinct.insert({re, 0});
        distinct_real.insert(re);
      }
    }
    const Certificate c = certify_real_rooted(PolyCoeffs::from_roots(roots));
    CHECK(c.all_real == (distinct_real.size() == distinct.size()));
    CHECK(c.rank == static_cast<int>(distinct.size()));
    CHECK(c.signature == static_cast<int>(distinct_real.size()));
  }
}

TEST_CASE("second minor of a centered polynomial is -2n a_2", "[symmetric][property]") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-9, 9);
  for (int n = 2; n <= 7; ++n) {
    std::vector<Scalar> a{0};
    for (int k = 2; k <= n; ++k) a.emplace_back(num(rng));
    const auto d = delta_minors(PolyCoeffs(a));
    CHECK(d[1] == Scalar(-2 * n) * a[1]);
  }
}
