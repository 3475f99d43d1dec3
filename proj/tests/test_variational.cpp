#include <cmath>
#include <random>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "doctest.h"
#include "oracles.hpp"

#include "coulho/variational.hpp"

using namespace coulho;

namespace {

const double kSqrt2 = std::sqrt(2.0);

double quad(const std::function<double(double)>& f) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace

TEST_CASE("gaussian moments") {
  const auto m = gaussian_moments(0.0, 4);
  CHECK(abs(m[0] - ext_real(oracle::kSqrtPi) / 2) <= ext_real("1e-45"));
  CHECK(abs(m[1] - ext_real(0.5)) <= ext_real("1e-45"));
  CHECK(abs(m[2] - ext_real(oracle::kSqrtPi) / 4) <= ext_real("1e-45"));
  CHECK(abs(m[3] - ext_real(0.5)) <= ext_real("1e-45"));
}

TEST_CASE("overlap entries match quadrature") {
  for (double g : {0.0, 0.5, 1.3}) {
    const auto s = overlap_matrix<double>({g, 4});
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double want = quad([&](double x) {
          if (x == 0 || x > 40) return 0.0;
          return std::pow(x, 2 * g + i + j + 1) * std::exp(-x * x);
        });
        CHECK(s(i, j) == doctest::Approx(want).epsilon(1e-12));
      }
  }
}

TEST_CASE("hamiltonian entries match the weak form") {
  for (double g : {1.5, 2.25}) {
    const double a = 0.7;
    const auto h = hamiltonian_matrix<double>({g, 4}, a);
    auto u = [&](int j, double x) { return std::pow(x, g + j) * std::exp(-x * x / 2); };
    auto du = [&](int j, double x) { return ((g + j) / x - x) * u(j, x); };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double want = quad([&](double x) {
          // The integrand vanishes like x^(2g+1) at the origin.
          if (x < 1e-30 || x > 40) return 0.0;
          return (du(i, x) * du(j, x) + (g * g / (x * x) - a / x + x * x) * u(i, x) * u(j, x)) * x;
        });
        CAPTURE(g);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(h(i, j) == doctest::Approx(want).epsilon(1e-10));
      }
  }
}

TEST_CASE("overlap has Hankel structure") {
  const auto s = overlap_matrix<ext_real>({0.5, 8});
  for (int i = 0; i + 1 < 8; ++i)
    for (int j = 1; j < 8; ++j) CHECK(s(i + 1, j - 1) == s(i, j));
}

TEST_CASE("oscillator limit at a = 0") {
  for (double g : {0.0, 0.5, 1.0, 2.7}) {
    const auto r = spectrum({g, 0.0}, 20);
    for (int v = 0; v <= 5; ++v) CHECK(std::abs(r.eigenvalue(v) - (4.0 * v + 2 * g + 2)) <= 1e-8);
  }
}

TEST_CASE("exact states are captured") {
  const auto r = spectrum({0.0, -kSqrt2}, 25);
  CHECK(std::abs(r.eigenvalue(0) - 4.0) <= 1e-8);
  const auto r2 = spectrum({0.0, kSqrt2}, 25);
  CHECK(std::abs(r2.eigenvalue(1) - 4.0) <= 1e-8);
  const auto r3 = spectrum({1.0, std::sqrt(6.0)}, 25);
  CHECK(std::abs(r3.eigenvalue(1) - 6.0) <= 1e-8);
  const auto r4 = spectrum({0.0, -std::sqrt(12.0)}, 25);
  CHECK(std::abs(r4.eigenvalue(0) - 6.0) <= 1e-8);
  // A two-function basis already spans (1 + sqrt2 xi) exp(-xi^2/2).
  const auto tiny = spectrum({0.0, kSqrt2}, 2);
  const bool captured = std::abs(tiny.eigenvalue(0) - 4.0) <= 1e-12 || std::abs(tiny.eigenvalue(1) - 4.0) <= 1e-12;
  CHECK(captured);
}

TEST_CASE("spectra against an independent 60-digit computation") {
  const auto r0 = spectrum({0.0, kSqrt2}, 30);
  const double want0[] = {-1.4595871344898979763, 4.0, 8.3443494265387745954, 12.53290130292882447};
  for (int v = 0; v < 4; ++v) CHECK(std::abs(r0.eigenvalue(v) - want0[v]) <= 1e-12);

  const auto r1 = spectrum({0.5, 3.0}, 30);
  const double want1[] = {-1.3414348332281016639, 3.9213859178613731803, 8.3587618244457283219, 12.615442600824264749};
  for (int v = 0; v < 4; ++v) CHECK(std::abs(r1.eigenvalue(v) - want1[v]) <= 1e-12);
}

TEST_CASE("eigenvectors are S-normalized and eigenvalues ascend") {
  const auto r = spectrum({0.5, -2.0}, 30);
  const auto s = overlap_matrix<ext_real>(r.usable_basis());
  for (const auto& c : r.eigenvectors) CHECK(abs(s.bilinear(c, c) - 1) <= ext_real("1e-15"));
  for (std::size_t v = 1; v < r.eigenvalues.size(); ++v) CHECK(r.eigenvalues[v] > r.eigenvalues[v - 1]);
  CHECK(r.convergence_estimate[0] <= 1e-10);
  CHECK(std::isinf(r.convergence_estimate.back()));
}

TEST_CASE("levels decrease with N and with a") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> gd(0, 2), ad(-5, 5);
  for (int t = 0; t < 4; ++t) {
    const double g = gd(rng), a = ad(rng);
    SpectrumOptions opts;
    opts.estimate_convergence = false;
    auto prev = spectrum({g, a}, 5, opts);
    for (int n = 6; n <= 14; ++n) {
      const auto next = spectrum({g, a}, n, opts);
      for (int v = 0; v <= 3; ++v) CHECK(next.eigenvalue(v) <= prev.eigenvalue(v) + 1e-10);
      prev = next;
    }
  }
  const auto lo = spectrum({0.5, 1.0}, 20), hi = spectrum({0.5, 1.5}, 20);
  for (int v = 0; v < 5; ++v) CHECK(hi.eigenvalue(v) < lo.eigenvalue(v));
}

TEST_CASE("expectation of 1/xi") {
  const auto r = spectrum({0.0, 0.0}, 20);
  CHECK(std::abs(expectation_inv_xi(r, 0) - 1.7724538509055160273) <= 1e-12);
  const auto r2 = spectrum({0.0, -kSqrt2}, 25);
  CHECK(std::abs(expectation_inv_xi(r2, 0) - 1.1573933283129229762) <= 1e-9);
}

TEST_CASE("Hellmann-Feynman check") {
  const auto rep = hellmann_feynman_check({0.0, 0.0}, 0);
  CHECK(rep.fd_slope == doctest::Approx(-1.77245).epsilon(1e-5));
  CHECK(rep.residual <= 1e-6);
  CHECK_FALSE(rep.crossing_suspected);
  const auto rep2 = hellmann_feynman_check({0.0, -kSqrt2}, 0);
  CHECK(rep2.fd_slope == doctest::Approx(-1.15740).epsilon(1e-5));
  CHECK(rep2.residual <= 1e-5);
  CHECK_THROWS_AS(hellmann_feynman_check({0.0, 0.0}, 0, 20, 0.0), std::invalid_argument);
}

TEST_CASE("truncation points sit on variational levels") {
  const auto m = truncation_point_locator(6, 1.0, 30);
  REQUIRE(m.size() == 7);
  for (const auto& p : m) {
    CHECK(p.matched_level == p.k - 1);
    CHECK(p.mismatch <= 1e-7);
    CHECK(p.W_truncation == 16.0);
  }
  CHECK_THROWS_AS(truncation_point_locator(6, 1.0, 8), std::invalid_argument);
}

TEST_CASE("basis shortfall and argument errors") {
  SpectrumOptions opts;
  opts.min_levels = 5;
  CHECK_THROWS_AS(spectrum({0.0, 0.0}, 3, opts), BasisShortfall);
  CHECK_THROWS_AS(spectrum({0.0, 0.0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(spectrum({std::nan(""), 0.0}, 5), std::invalid_argument);
}
