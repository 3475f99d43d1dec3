#include "coulho/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coulho/frobenius.hpp"

namespace coulho {
namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void DisclinationParams::validate(bool check_field) const {
  require(std::isfinite(m_star) && std::isfinite(q) && std::isfinite(alpha) && std::isfinite(kappa) &&
              std::isfinite(epsilon) && std::isfinite(hbar) && std::isfinite(c) && std::isfinite(k),
          "DisclinationParams: parameters must be finite");
  if (check_field) require(std::isfinite(B) && B > 0, "DisclinationParams: B must be positive");
  require(alpha > 0, "DisclinationParams: alpha must be positive");
  require(epsilon > 0, "DisclinationParams: epsilon must be positive");
  require(m_star > 0, "DisclinationParams: m* must be positive");
  require(hbar > 0 && c > 0, "DisclinationParams: hbar and c must be positive");
  require(q != 0, "DisclinationParams: q must be nonzero");
}

double coulomb_strength_coefficient(const DisclinationParams& p) {
  p.validate(false);
  const double aq = std::abs(p.q);
  return p.m_star * p.q * p.q * p.kappa / (std::numbers::pi * p.epsilon * p.hbar * p.hbar) *
         std::sqrt(p.c * p.alpha * p.hbar / (2.0 * aq));
}

DimensionlessImage to_dimensionless(const DisclinationParams& p) {
  p.validate();
  const double aq = std::abs(p.q);
  DimensionlessImage img;
  img.length_unit = std::sqrt(2.0 * p.c * p.alpha * p.hbar / (aq * p.B));
  img.gamma = std::abs(static_cast<double>(p.l)) / p.alpha;
  img.a = coulomb_strength_coefficient(p) / std::sqrt(p.B);
  img.w_scale = 4.0 * p.m_star * p.c * p.alpha / (p.hbar * aq * p.B);
  img.w_offset = -p.k * p.k + 2.0 * p.q * static_cast<double>(p.l) / (p.alpha * aq);
  return img;
}

double W_from_energy(const DisclinationParams& p, double E) {
  const auto img = to_dimensionless(p);
  return img.w_scale * E + img.w_offset;
}

double energy_from_W(const DisclinationParams& p, double W) {
  const auto img = to_dimensionless(p);
  return (W - img.w_offset) / img.w_scale;
}

double field_for_strength(const DisclinationParams& p, double a) {
  const double coef = coulomb_strength_coefficient(p);
  if (a == 0.0 || coef == 0.0 || (a > 0) != (coef > 0))
    throw std::domain_error("field_for_strength: a must be nonzero with the sign of kappa");
  const double ratio = coef / a;
  return ratio * ratio;
}

AllowedFieldReport allowed_field_strengths(const DisclinationParams& p, int n) {
  p.validate(false);
  AllowedFieldReport rep;
  rep.n = n;
  rep.l = p.l;
  rep.gamma = std::abs(static_cast<double>(p.l)) / p.alpha;
  if (p.kappa == 0.0) return rep;
  const TruncationSolution sol = truncation_spectrum(n, rep.gamma);
  for (std::size_t i = 0; i < sol.roots.size(); ++i) {
    const double root = sol.roots.roots[i];
    if (root == 0.0 || (root > 0) != (p.kappa > 0)) {
      rep.unphysical_roots.push_back(root);
      continue;
    }
    rep.fields.push_back({static_cast<int>(i) + 1, root, field_for_strength(p, root)});
  }
  return rep;
}

}  // namespace coulho
