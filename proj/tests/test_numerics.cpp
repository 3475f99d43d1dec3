#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

#include "coulho/numerics/linalg.hpp"
#include "coulho/numerics/log_gamma.hpp"
#include "coulho/numerics/poly_roots.hpp"
#include "coulho/numerics/rational_poly.hpp"
#include "coulho/variational.hpp"

using namespace coulho;

namespace {

RationalPoly poly(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long v : ascending) c.emplace_back(v);
  return RationalPoly(c);
}

double rel_err(double got, double want) {
  return want == 0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("log_gamma matches high-precision reference values") {
  // 40-digit values from mpmath.loggamma.
  const std::pair<const char*, const char*> table[] = {
      {"0.5", "0.5723649429247000870717137"},    {"1", "0"},
      {"1.5", "-0.1207822376352452223455184"},   {"2.5", "0.2846828704729191596324947"},
      {"3.7", "1.428072326665387921872381"},     {"10", "12.80182748008146961120772"},
      {"50.5", "146.5192554907206272218913"},    {"123.25", "468.6144829505166442280587"},
      {"500", "2605.115850361733892658674"},     {"0.75", "0.203280951431295371481433"},
      {"7.125", "6.814541238336995709334617"},
  };
  for (const auto& [xs, ref] : table) {
    CAPTURE(xs);
    const double x = std::stod(xs);
    const double want = std::stod(ref);
    if (want == 0)
      CHECK(std::abs(log_gamma(x)) <= 1e-15);
    else
      CHECK(rel_err(log_gamma(x), want) <= 1e-13);
    const ext_real hi = log_gamma(ext_real(xs));
    CHECK(abs(hi - ext_real(ref)) <= ext_real("1e-24") * (1 + abs(ext_real(ref))));
  }
}

TEST_CASE("log_gamma rejects its pole and non-finite input") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(log_gamma(ext_real(0)), std::domain_error);
}

TEST_CASE("log_gamma satisfies the functional equation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 80.0);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng);
    CHECK(std::abs(log_gamma(x + 1) - log_gamma(x) - std::log(x)) <= 1e-12 * (1 + std::abs(log_gamma(x + 1))));
  }
}

TEST_CASE("cholesky on small examples") {
  const auto s = SymMatrix<double>::from_rows({{4, 2}, {2, 3}});
  const auto l = cholesky(s);
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(l(0, 1) == 0.0);

  const auto bad = SymMatrix<double>::from_rows({{1, 2}, {2, 1}});
  try {
    cholesky(bad);
    FAIL("expected NotPositiveDefinite");
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.pivot_index() == 1);
  }
}

TEST_CASE("overlap matrix at N=12 is positive definite in extended precision") {
  // Exact leading minors over Q[sqrt(pi)] show the Gram matrix is positive
  // definite, so a Cholesky failure would be a precision bug.
  const int n = 12;
  std::vector<std::vector<RationalPoly>> exact(n, std::vector<RationalPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) exact[i][j] = oracle::half_gamma_half_integer(i + j + 2);
  const auto minors = oracle::leading_minors(exact);
  const auto [lo, hi] = oracle::sqrt_pi_bounds();
  for (const auto& m : minors) {
    const auto [mn, mx] = oracle::interval_eval(m, lo, hi);
    REQUIRE(mn > 0);
  }

  const auto s = overlap_matrix<ext_real>({0.0, n});
  const auto l = cholesky(s);
  // det S from the factor against the exact determinant.
  ext_real det = 1;
  for (int i = 0; i < n; ++i) det *= l(i, i) * l(i, i);
  const auto [dlo, dhi] = oracle::interval_eval(minors.back(), lo, hi);
  const ext_real exact_det = static_cast<ext_real>(dlo);
  CHECK(abs(det / exact_det - 1) <= ext_real("1e-20"));
}

TEST_CASE("sym_eigen on small examples") {
  const auto a = SymMatrix<double>::from_rows({{2, 1}, {1, 2}});
  const auto e = sym_eigen(a);
  CHECK(e.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::abs(std::abs(e.eigenvectors(0, 0)) - std::sqrt(0.5)) <= 1e-14);

  const auto diag = SymMatrix<double>::from_rows({{5, 0, 0}, {0, -1, 0}, {0, 0, 2}});
  const auto d = sym_eigen(diag);
  CHECK(d.eigenvalues == std::vector<double>{-1, 2, 5});
  CHECK(d.sweeps == 0);
}

TEST_CASE("sym_eigen recovers a randomly rotated spectrum") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {3u, 6u, 10u}) {
    std::vector<double> lambda;
    for (std::size_t i = 0; i < n; ++i) lambda.push_back(-3.0 + 1.25 * static_cast<double>(i) + 0.01 * i * i);
    const auto q = oracle::random_orthogonal(n, rng);
    SymMatrix<double> a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        double v = 0;
        for (std::size_t k = 0; k < n; ++k) v += q[k][i] * lambda[k] * q[k][j];
        a.set(i, j, v);
      }
    const auto e = sym_eigen(a);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(e.eigenvalues[i] - lambda[i]) <= 1e-12);
    double tr = 0;
    for (double x : e.eigenvalues) tr += x;
    CHECK(std::abs(tr - a.trace()) <= 1e-12);
    // Eigenvectors are orthonormal and satisfy A v = lambda v.
    for (std::size_t col = 0; col < n; ++col) {
      const auto v = e.eigenvectors.column(col);
      const auto av = a.apply(v);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(av[i] - e.eigenvalues[col] * v[i]) <= 1e-12);
    }
  }
}

TEST_CASE("eigenvalue product equals the determinant") {
  const auto a = SymMatrix<double>::from_rows({{6, 2, 1}, {2, 5, 2}, {1, 2, 4}});
  const auto e = sym_eigen(a);
  const auto l = cholesky(a);
  double det = 1, prod = 1;
  for (int i = 0; i < 3; ++i) {
    det *= l(i, i) * l(i, i);
    prod *= e.eigenvalues[i];
  }
  CHECK(prod == doctest::Approx(det).epsilon(1e-13));
}

TEST_CASE("generalized_eigen reduces to the ordinary problem") {
  const auto h = SymMatrix<double>::from_rows({{1, 0.5, 0}, {0.5, 2, 0.25}, {0, 0.25, 3}});
  const auto plain = sym_eigen(h);
  const auto gen = generalized_eigen(h, SymMatrix<double>::identity(3));
  for (int i = 0; i < 3; ++i) CHECK(gen.eigenvalues[i] == doctest::Approx(plain.eigenvalues[i]).epsilon(1e-13));

  const auto s = SymMatrix<double>::from_rows({{2, 0.3, 0.1}, {0.3, 1.5, 0.2}, {0.1, 0.2, 1}});
  SymMatrix<double> two_s(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) two_s.set(i, j, 2 * s(i, j));
  const auto g2 = generalized_eigen(two_s, s);
  for (double w : g2.eigenvalues) CHECK(w == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("generalized_eigen on the oscillator basis") {
  // gamma = 0, a = 0, N = 6: the exact levels 2, 6, 10 lie in the span.
  const BasisSpec basis{0.0, 6};
  const auto h = hamiltonian_matrix<ext_real>(basis, 0.0);
  const auto s = overlap_matrix<ext_real>(basis);
  const auto e = generalized_eigen<ext_real, double>(h, s);
  CHECK(abs(e.eigenvalues[0] - 2) <= ext_real("1e-25"));
  CHECK(abs(e.eigenvalues[1] - 6) <= ext_real("1e-25"));
  CHECK(abs(e.eigenvalues[2] - 10) <= ext_real("1e-25"));
  for (std::size_t col = 0; col < 6; ++col) {
    const auto c = e.eigenvectors.column(col);
    CHECK(abs(s.bilinear(c, c) - 1) <= ext_real("1e-28"));
  }
}

TEST_CASE("symmetrize refuses a clearly asymmetric matrix") {
  Matrix<double> m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 0) = 1.1;
  m(1, 1) = 1;
  CHECK_THROWS_AS(SymMatrix<double>::symmetrize(m, 1e-10), std::logic_error);
  m(1, 0) = 1 + 1e-14;
  const auto s = SymMatrix<double>::symmetrize(m, 1e-10);
  CHECK(s(0, 1) == s(1, 0));
}

TEST_CASE("rational polynomial arithmetic") {
  const auto p = poly({-2, 0, 1});  // a^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 7);
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(p.reflected() == p);
  const auto [q, r] = poly({-1, 0, 0, 1}).divmod(poly({-1, 1}));  // (a^3-1)/(a-1)
  CHECK(q == poly({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  CHECK(RationalPoly().degree() == -1);
}

TEST_CASE("square-free decomposition") {
  // (a-1)^2 (a+2)
  const auto p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  const auto f = square_free_decomposition(p);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == poly({2, 1}));
  CHECK(f[1] == poly({-1, 1}));
}

TEST_CASE("as_small_rational recovers simple fractions only") {
  CHECK(as_small_rational(0.5).value() == Rational(1, 2));
  CHECK(as_small_rational(1.0 / 3.0).value() == Rational(1, 3));
  CHECK(as_small_rational(2.0).value() == 2);
  CHECK_FALSE(as_small_rational(std::sqrt(2.0)).has_value());
  CHECK(exact_rational(0.1) != Rational(1, 10));
}

TEST_CASE("poly_real_roots examples") {
  const auto r = poly_real_roots(poly({-2, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r.roots[0] + std::sqrt(2.0)) <= 1e-13);
  CHECK(std::abs(r.roots[1] - std::sqrt(2.0)) <= 1e-13);
  // Refinement continues to the nearest double.
  CHECK(r.roots[1] == std::sqrt(2.0));

  const auto none = poly_real_roots(poly({1, 0, 1}));
  CHECK(none.size() == 0);

  const auto exact = poly_real_roots(poly({0, -12, 0, 1}));  // a^3 - 12 a
  REQUIRE(exact.size() == 3);
  CHECK(exact.roots[1] == 0.0);
  CHECK(exact.brackets[1].lo == exact.brackets[1].hi);

  const auto mult = poly_real_roots(poly({-1, 1}) * poly({-1, 1}) * poly({2, 1}));
  REQUIRE(mult.size() == 2);
  CHECK(mult.roots[0] == -2.0);
  CHECK(mult.multiplicities[0] == 1);
  CHECK(mult.roots[1] == 1.0);
  CHECK(mult.multiplicities[1] == 2);

  CHECK_THROWS_AS(poly_real_roots(RationalPoly()), std::domain_error);
  CHECK_THROWS_AS(poly_real_roots(poly({1, 1}), 0.0), std::domain_error);
}

TEST_CASE("root brackets are certified by exact sign changes") {
  // a^4 - 40 a^2 + 108
  const auto p = poly({108, 0, -40, 0, 1});
  const auto r = poly_real_roots(p, 1e-14);
  REQUIRE(r.size() == 4);
  const auto sturm = sturm_sequence(p);
  CHECK(sturm_count_all(sturm) == 4);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& b = r.brackets[i];
    CHECK(b.lo < b.hi);
    CHECK(p.sign_at(b.lo) * p.sign_at(b.hi) < 0);
    CHECK(static_cast<double>(b.hi - b.lo) <= 1e-14);
    CHECK(sturm_count(sturm, b.lo, b.hi) == 1);
  }
  // Even polynomial: roots come in +- pairs.
  CHECK(r.roots[0] == doctest::Approx(-r.roots[3]).epsilon(1e-15));
  CHECK(r.roots[1] == doctest::Approx(-r.roots[2]).epsilon(1e-15));
  CHECK(std::abs(r.roots[3] - 6.089992404809308) <= 1e-13);
  CHECK(std::abs(r.roots[2] - 1.706456125824786) <= 1e-13);
}

TEST_CASE("bisection root finder agrees with the exact path") {
  const auto p = poly({108, 0, -40, 0, 1});
  std::vector<ext_real> c;
  for (const auto& x : p.coefficients()) c.push_back(static_cast<ext_real>(x));
  const auto exact = poly_real_roots(p);
  const auto approx = poly_real_roots_bisection(c);
  REQUIRE(approx.size() == exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) CHECK(std::abs(approx.roots[i] - exact.roots[i]) <= 1e-13);

  // a^3 - 12 a has the exact root 0.
  const auto z = poly_real_roots_bisection({ext_real(0), ext_real(-12), ext_real(0), ext_real(1)});
  REQUIRE(z.size() == 3);
  CHECK(z.roots[1] == 0.0);
}
