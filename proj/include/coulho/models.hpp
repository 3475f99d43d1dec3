#pragma once

// Disclination model: a charge q of effective mass m* in a magnetic field B
// along the axis of a conical defect (parameter alpha), with a 1/rho
// self-interaction of strength q^2 kappa / (4 pi epsilon). Inputs are in one
// coherent unit system chosen by the caller; nothing assumes hbar = c = 1.
//
// Length unit L = sqrt(2 c alpha hbar / (|q| B)); the radial equation in
// xi = rho / L has gamma = |l| / alpha and
//   a = (m* q^2 kappa / (pi epsilon hbar^2)) sqrt(c alpha hbar / (2 |q| B)),
//   W = 4 m* c alpha E / (hbar |q| B) - k^2 + 2 q l / (alpha |q|),
// where k is the axial wavenumber in units of 1/L.

#include <vector>

namespace coulho {

struct DisclinationParams {
  double m_star = 1.0;
  double q = 1.0;
  double B = 1.0;
  double alpha = 1.0;
  double kappa = 0.0;
  double epsilon = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  int l = 0;
  double k = 0.0;

  /// Throws std::invalid_argument on nonpositive B, alpha, epsilon, m*,
  /// hbar or c, zero q, or non-finite values. B is skipped when check_field
  /// is false (for the field-strength inversion).
  void validate(bool check_field = true) const;
};

struct DimensionlessImage {
  double length_unit = 0.0;
  double gamma = 0.0;
  double a = 0.0;
  /// W = w_scale * E + w_offset
  double w_scale = 0.0;
  double w_offset = 0.0;
};

DimensionlessImage to_dimensionless(const DisclinationParams& p);

double W_from_energy(const DisclinationParams& p, double E);
double energy_from_W(const DisclinationParams& p, double W);

/// a * sqrt(B): the B-independent part of the mapping.
double coulomb_strength_coefficient(const DisclinationParams& p);

/// Field strength at which the dimensionless strength equals `a`.
/// Requires sign(a) == sign(kappa) and a != 0.
double field_for_strength(const DisclinationParams& p, double a);

struct AllowedField {
  int k = 0;  // 1-based root index among all roots of the truncation polynomial
  double a_root = 0.0;
  double B = 0.0;
};

struct AllowedFieldReport {
  int n = 0;
  int l = 0;
  double gamma = 0.0;
  std::vector<AllowedField> fields;
  /// Roots whose sign cannot be produced by this model (sign(a) = sign(kappa)),
  /// plus a = 0 which needs B -> infinity.
  std::vector<double> unphysical_roots;
};

/// The field strengths singled out by the order-n truncation for angular
/// number l (p.B is ignored). Empty when kappa == 0.
AllowedFieldReport allowed_field_strengths(const DisclinationParams& p, int n);

}  // namespace coulho
