#pragma once

// Text renderings shared by the CLI and the Python module. CSV numbers use
// 17 significant digits and fixed column order so identical inputs give
// byte-identical output.

#include <string>

#include "json.hpp"

#include "coulho/frobenius.hpp"
#include "coulho/models.hpp"
#include "coulho/sweep.hpp"
#include "coulho/variational.hpp"

namespace coulho {

std::string format_number(double x);

nlohmann::json to_json(const TruncationSolution& sol);
std::string to_csv(const TruncationSolution& sol);

/// Only the first `levels` eigenvalues are rendered.
nlohmann::json to_json(const SpectrumResult& res, int levels);
std::string to_csv(const SpectrumResult& res, int levels);

nlohmann::json to_json(const HFReport& rep);
std::string to_csv(const HFReport& rep);

nlohmann::json to_json(const DimensionlessImage& img);
nlohmann::json to_json(const AllowedFieldReport& rep);

/// Columns: a,W0,...,W{levels-1},status
std::string sweep_curves_csv(const SweepTable& table);
/// Columns: n,k,a_root,W,matched_level,mismatch
std::string sweep_points_csv(const SweepTable& table);
nlohmann::json sweep_json(const SweepTable& table);
/// Static line plot: one polyline per level, one circle per truncation point.
std::string sweep_svg(const SweepTable& table);

}  // namespace coulho
