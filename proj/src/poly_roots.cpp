#include "coulho/numerics/poly_roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace coulho {
namespace {

using boost::multiprecision::cpp_int;

struct Bracketed {
  IsolatingInterval interval;
  int multiplicity;
};

Rational rational_from_ext(const ext_real& x) {
  if (x == 0) return Rational(0);
  int exp = 0;
  const ext_real mant = boost::multiprecision::frexp(x, &exp);
  constexpr int bits = std::numeric_limits<ext_real>::digits;
  const cpp_int scaled = static_cast<cpp_int>(boost::multiprecision::ldexp(mant, bits));
  const int shift = exp - bits;
  cpp_int pow2 = 1;
  pow2 <<= std::abs(shift);
  return shift >= 0 ? Rational(scaled * pow2) : Rational(scaled, pow2);
}

double midpoint_double(const IsolatingInterval& iv) { return static_cast<double>((iv.lo + iv.hi) / 2); }

/// Smallest power of two strictly above the Cauchy bound 1 + max|c_k / c_n|.
Rational root_bound(const RationalPoly& p) {
  Rational m(0);
  const Rational& lc = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coefficient(static_cast<std::size_t>(k)) / lc;
    if (r < 0) r = -r;
    m = std::max(m, r);
  }
  m += 1;
  Rational b(1);
  while (b <= m) b *= 2;
  return b;
}

int variations_at(const std::vector<RationalPoly>& sturm, const Rational& x) {
  int last = 0, count = 0;
  for (const auto& q : sturm) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at_infinity(const std::vector<RationalPoly>& sturm, bool positive) {
  int last = 0, count = 0;
  for (const auto& q : sturm) {
    const int s = q.sign_at_infinity(positive);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Shrinks an interval holding one simple root of f (sign change between
/// the endpoints) until hi - lo <= width, and further until the width is
/// below 2^-60 of the root's magnitude so the midpoint rounds to the nearest
/// double. Collapses to a point on an exact hit.
void refine(const RationalPoly& f, IsolatingInterval& iv, const Rational& width) {
  if (iv.lo == iv.hi) return;
  int slo = f.sign_at(iv.lo);
  if (slo == 0) {
    iv.hi = iv.lo;
    return;
  }
  if (f.sign_at(iv.hi) == 0) {
    iv.lo = iv.hi;
    return;
  }
  const Rational floor_width(1, boost::multiprecision::cpp_int(1) << 200);
  auto target = [&] {
    Rational mag = std::max(abs(iv.lo), abs(iv.hi));
    Rational rel = mag / Rational(boost::multiprecision::cpp_int(1) << 60);
    return std::min(width, std::max(rel, floor_width));
  };
  while (iv.hi - iv.lo > target()) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int sm = f.sign_at(mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
}

/// Isolating intervals for the real roots of a square-free polynomial.
std::vector<IsolatingInterval> isolate_square_free(RationalPoly f, const Rational& width) {
  std::vector<IsolatingInterval> found;
  const RationalPoly x_poly = RationalPoly::monomial(Rational(1), 1);

  bool restart = true;
  while (restart && f.degree() > 0) {
    restart = false;
    if (f.coefficient(0) == 0) {
      found.push_back({Rational(0), Rational(0)});
      f = f.divmod(x_poly).first;
      restart = true;
      continue;
    }
    const auto sturm = sturm_sequence(f);
    const Rational bound = root_bound(f);

    // Work list of half-open intervals (lo, hi] with their root counts.
    std::vector<std::pair<IsolatingInterval, int>> work;
    const int total = variations_at(sturm, -bound) - variations_at(sturm, bound);
    if (total > 0) work.push_back({{-bound, bound}, total});
    std::vector<IsolatingInterval> isolated;
    while (!work.empty() && !restart) {
      auto [iv, count] = work.back();
      work.pop_back();
      if (count == 1) {
        isolated.push_back(iv);
        continue;
      }
      const Rational mid = (iv.lo + iv.hi) / 2;
      if (f.sign_at(mid) == 0) {
        // Exact rational root: deflate and start over on the quotient.
        found.push_back({mid, mid});
        f = f.divmod(RationalPoly({-mid, Rational(1)})).first;
        restart = true;
        break;
      }
      const int vlo = variations_at(sturm, iv.lo);
      const int vmid = variations_at(sturm, mid);
      const int vhi = variations_at(sturm, iv.hi);
      if (vlo - vmid > 0) work.push_back({{iv.lo, mid}, vlo - vmid});
      if (vmid - vhi > 0) work.push_back({{mid, iv.hi}, vmid - vhi});
    }
    if (restart) continue;
    for (auto& iv : isolated) {
      refine(f, iv, width);
      found.push_back(iv);
    }
  }
  return found;
}

RootSet assemble(std::vector<Bracketed> items, double tol) {
  std::sort(items.begin(), items.end(),
            [](const Bracketed& a, const Bracketed& b) { return a.interval.lo + a.interval.hi < b.interval.lo + b.interval.hi; });
  RootSet out;
  out.certified_tolerance = tol;
  for (auto& it : items) {
    out.roots.push_back(midpoint_double(it.interval));
    out.multiplicities.push_back(it.multiplicity);
    out.brackets.push_back(std::move(it.interval));
  }
  return out;
}

// ---- extended-precision path ----------------------------------------------

ext_real horner(const std::vector<ext_real>& c, const ext_real& x) {
  ext_real acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ext_real horner_abs(const std::vector<ext_real>& c, const ext_real& x) {
  ext_real acc(0);
  const ext_real ax = abs(x);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + abs(*it);
  return acc;
}

int sign_of(const ext_real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct ExtRoot {
  ext_real lo, hi;
  int multiplicity;
};

/// Roots of c (trailing zeros already removed), each bracketed to <= width.
std::vector<ExtRoot> ext_roots(const std::vector<ext_real>& c, const ext_real& width) {
  const int degree = static_cast<int>(c.size()) - 1;
  std::vector<ExtRoot> out;
  if (degree <= 0) return out;
  if (degree == 1) {
    const ext_real r = -c[0] / c[1];
    out.push_back({r, r, 1});
    return out;
  }
  std::vector<ext_real> dc(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) dc[k - 1] = c[k] * static_cast<int>(k);
  const std::vector<ExtRoot> critical = ext_roots(dc, width);

  ext_real bound(0);
  for (int k = 0; k < degree; ++k) bound = std::max(bound, ext_real(abs(c[static_cast<std::size_t>(k)] / c.back())));
  bound += 1;

  std::vector<ext_real> points{-bound};
  for (const auto& cr : critical) points.push_back((cr.lo + cr.hi) / 2);
  points.push_back(bound);

  const ext_real eps = std::numeric_limits<ext_real>::epsilon();
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    ext_real lo = points[i], hi = points[i + 1];
    if (!(hi > lo)) continue;
    // A critical point where p vanishes to working precision is a repeated root.
    if (i > 0) {
      const ext_real v = horner(c, lo);
      if (abs(v) <= 64 * eps * horner_abs(c, lo)) {
        out.push_back({lo, lo, 2});
        continue;
      }
    }
    int slo = sign_of(horner(c, lo));
    const int shi = sign_of(horner(c, hi));
    if (slo == 0 || shi == 0 || slo == shi) continue;
    for (int iter = 0; iter < 1000 && hi - lo > width; ++iter) {
      const ext_real mid = (lo + hi) / 2;
      if (mid <= lo || mid >= hi) break;
      const int sm = sign_of(horner(c, mid));
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == slo)
        lo = mid;
      else
        hi = mid;
    }
    out.push_back({lo, hi, 1});
  }
  return out;
}

}  // namespace

std::vector<RationalPoly> sturm_sequence(const RationalPoly& square_free) {
  std::vector<RationalPoly> seq{square_free, square_free.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RationalPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

std::size_t sturm_count(const std::vector<RationalPoly>& sturm, const Rational& lo, const Rational& hi) {
  return static_cast<std::size_t>(variations_at(sturm, lo) - variations_at(sturm, hi));
}

std::size_t sturm_count_all(const std::vector<RationalPoly>& sturm) {
  return static_cast<std::size_t>(variations_at_infinity(sturm, false) - variations_at_infinity(sturm, true));
}

RootSet poly_real_roots(const RationalPoly& p, double tol) {
  if (p.is_zero()) throw std::domain_error("poly_real_roots: zero polynomial");
  if (!(tol > 0)) throw std::domain_error("poly_real_roots: tolerance must be positive");
  const Rational width = exact_rational(tol);

  std::vector<Bracketed> items;
  const auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    for (auto& iv : isolate_square_free(factors[i], width)) items.push_back({std::move(iv), static_cast<int>(i + 1)});
  }
  return assemble(std::move(items), tol);
}

RootSet poly_real_roots_bisection(const std::vector<ext_real>& coefficients, double tol) {
  if (!(tol > 0)) throw std::domain_error("poly_real_roots_bisection: tolerance must be positive");
  std::vector<ext_real> c = coefficients;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw std::domain_error("poly_real_roots_bisection: zero polynomial");

  // Factor out the root at zero exactly; it is common for odd polynomials.
  int zero_mult = 0;
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  // Bracket far tighter than requested so critical points are placed accurately.
  const ext_real width = std::min(ext_real(tol), ext_real("1e-35"));
  std::vector<Bracketed> items;
  if (zero_mult > 0) items.push_back({{Rational(0), Rational(0)}, zero_mult});
  for (const auto& r : ext_roots(c, width))
    items.push_back({{rational_from_ext(r.lo), rational_from_ext(r.hi)}, r.multiplicity});
  return assemble(std::move(items), tol);
}

}  // namespace coulho
