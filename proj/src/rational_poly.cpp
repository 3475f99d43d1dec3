#include "coulho/numerics/rational_poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace coulho {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("RationalPoly::leading: zero polynomial");
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

int RationalPoly::sign_at(const Rational& x) const {
  const Rational v = (*this)(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int RationalPoly::sign_at_infinity(bool positive) const {
  if (coeffs_.empty()) return 0;
  int s = coeffs_.back() > 0 ? 1 : -1;
  if (!positive && degree() % 2 == 1) s = -s;
  return s;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::reflected() const {
  std::vector<Rational> r = coeffs_;
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::monic() const {
  if (coeffs_.empty()) return {};
  const Rational lc = coeffs_.back();
  std::vector<Rational> r = coeffs_;
  for (auto& c : r) c /= lc;
  return RationalPoly(std::move(r));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("RationalPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RationalPoly{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational& lc = divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= factor * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::vector<double> RationalPoly::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(static_cast<double>(c));
  return out;
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag;
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RationalPoly operator+(const RationalPoly& p, const RationalPoly& q) {
  std::vector<Rational> r(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) r[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) r[k] += q.coeffs_[k];
  return RationalPoly(std::move(r));
}

RationalPoly operator-(const RationalPoly& p) {
  std::vector<Rational> r = p.coeffs_;
  for (auto& c : r) c = -c;
  return RationalPoly(std::move(r));
}

RationalPoly operator-(const RationalPoly& p, const RationalPoly& q) { return p + (-q); }

RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> r(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return RationalPoly(std::move(r));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> r = p.coeffs_;
  for (auto& x : r) x *= c;
  return RationalPoly(std::move(r));
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<RationalPoly> square_free_decomposition(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("square_free_decomposition: zero polynomial");
  std::vector<RationalPoly> factors;
  if (p.degree() == 0) return factors;
  const RationalPoly dp = p.derivative();
  RationalPoly a = gcd(p, dp);
  RationalPoly b = p.divmod(a).first;
  RationalPoly c = dp.divmod(a).first;
  RationalPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RationalPoly f = gcd(b, d);
    factors.push_back(f.monic());
    b = b.divmod(f).first;
    c = d.divmod(f).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("exact_rational: non-finite input");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(scaled);
  const int shift = exp - 53;
  boost::multiprecision::cpp_int pow2 = 1;
  pow2 <<= std::abs(shift);
  if (shift >= 0)
    r *= Rational(pow2);
  else
    r /= Rational(pow2);
  return r;
}

std::optional<Rational> as_small_rational(double x, long long max_denominator) {
  if (!std::isfinite(x)) return std::nullopt;
  using boost::multiprecision::cpp_int;
  const cpp_int limit = cpp_int(1) << 53;
  Rational rest = exact_rational(x);
  // Convergents h/k of the continued fraction of x.
  cpp_int h_prev = 0, h = 1, k_prev = 1, k = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const cpp_int num = boost::multiprecision::numerator(rest);
    const cpp_int den = boost::multiprecision::denominator(rest);
    cpp_int q = num / den;
    if (num < 0 && q * den != num) q -= 1;  // floor
    const cpp_int h_next = q * h + h_prev;
    const cpp_int k_next = q * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    if (k > max_denominator) break;
    if (abs(h) < limit && static_cast<double>(h) / static_cast<double>(k) == x) return Rational(h, k);
    const Rational frac = rest - Rational(q);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return std::nullopt;
}

}  // namespace coulho
