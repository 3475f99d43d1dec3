#include <cmath>
#include <sstream>

#include "doctest.h"

#include "coulho/report.hpp"
#include "coulho/sweep.hpp"

using namespace coulho;

namespace {

SweepConfig small_config(double gamma) {
  SweepConfig c;
  c.gamma = gamma;
  c.a_min = -8;
  c.a_max = 8;
  c.steps = 33;
  c.levels = 4;
  c.n_max = 4;
  c.basis_size = 24;
  return c;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("format_number keeps 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(4.0) == "4");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("sweep grid") {
  auto c = small_config(0);
  const auto g = sweep_grid(c);
  REQUIRE(g.size() == 33);
  CHECK(g.front() == -8.0);
  CHECK(g.back() == 8.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  c.steps = 1;
  CHECK_THROWS(c.validate());
  c.steps = 5;
  c.a_max = c.a_min;
  CHECK_THROWS(c.validate());
}

TEST_CASE("sweep table invariants") {
  for (double gamma : {0.0, 0.5}) {
    const auto t = compute_sweep(small_config(gamma));
    REQUIRE(t.rows.size() == 33);
    for (int v = 0; v < 4; ++v)
      for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].W[v] < t.rows[i - 1].W[v]);
    for (const auto& r : t.rows) CHECK(r.status == "ok");
    // Every truncation root inside the window shows up.
    std::size_t expected = 0;
    for (int n = 0; n <= 4; ++n)
      for (double r : truncation_spectrum(n, gamma).roots.roots)
        if (r >= -8 && r <= 8) ++expected;
    CHECK(t.points.size() == expected);
    for (const auto& p : t.points) {
      CHECK(p.mismatch <= 1e-6);
      CHECK(p.W == 2.0 * p.n + 2 * gamma + 2);
    }
  }
}

TEST_CASE("sweep output is byte-identical across runs and thread counts") {
  auto c = small_config(1.0);
  c.threads = 1;
  const auto a = compute_sweep(c);
  c.threads = 4;
  const auto b = compute_sweep(c);
  CHECK(sweep_curves_csv(a) == sweep_curves_csv(b));
  CHECK(sweep_points_csv(a) == sweep_points_csv(b));
  CHECK(sweep_json(a).dump() == sweep_json(b).dump());
  CHECK(sweep_svg(a) == sweep_svg(b));
}

TEST_CASE("sweep CSV and SVG layout") {
  auto c = small_config(0);
  c.steps = 2;
  const auto t = compute_sweep(c);
  const auto curves = sweep_curves_csv(t);
  std::istringstream in(curves);
  std::string header;
  std::getline(in, header);
  CHECK(header == "a,W0,W1,W2,W3,status");
  CHECK(count(curves, "\n") == 3);
  CHECK(sweep_points_csv(t).rfind("n,k,a_root,W,matched_level,mismatch\n", 0) == 0);

  const auto svg = sweep_svg(t);
  CHECK(count(svg, "<polyline") == 4);
  CHECK(count(svg, "<circle") == t.points.size());
}

TEST_CASE("rows that cannot resolve the levels are flagged, not dropped") {
  auto c = small_config(0);
  c.levels = 6;
  c.basis_size = 7;
  c.steps = 3;
  c.n_max = 1;
  const auto t = compute_sweep(c);
  REQUIRE(t.rows.size() == 3);
  for (const auto& r : t.rows) CHECK(r.status.find("unconverged") != std::string::npos);
}
