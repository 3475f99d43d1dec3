#include "coulho/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace coulho {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

nlohmann::json finite_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

nlohmann::json to_json(const TruncationSolution& sol) {
  nlohmann::json j;
  j["n"] = sol.n;
  j["gamma"] = sol.gamma;
  j["W"] = sol.W;
  j["exact"] = sol.exact();
  j["poly_coefficients"] = sol.poly_coefficients();
  if (const auto* p = std::get_if<RationalPoly>(&sol.poly)) {
    std::vector<std::string> exact;
    for (const auto& c : p->coefficients()) exact.push_back(c.str());
    j["poly_exact"] = exact;
    j["poly"] = p->to_string("a");
  }
  j["roots"] = sol.roots.roots;
  j["multiplicities"] = sol.roots.multiplicities;
  j["root_tolerance"] = sol.roots.certified_tolerance;
  j["termination_residual"] = sol.termination_residual;
  return j;
}

std::string to_csv(const TruncationSolution& sol) {
  std::ostringstream os;
  os << "n,gamma,W,k,a_root,multiplicity\n";
  for (std::size_t i = 0; i < sol.roots.size(); ++i)
    os << sol.n << ',' << format_number(sol.gamma) << ',' << format_number(sol.W) << ',' << i + 1 << ','
       << format_number(sol.roots.roots[i]) << ',' << sol.roots.multiplicities[i] << '\n';
  return os.str();
}

nlohmann::json to_json(const SpectrumResult& res, int levels) {
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(levels, 0)), res.eigenvalues.size());
  nlohmann::json j;
  j["gamma"] = res.spec.gamma;
  j["a"] = res.spec.a;
  j["requested_N"] = res.basis.size;
  j["usable_N"] = res.usable_N;
  j["shrunk"] = res.shrunk;
  nlohmann::json lv = nlohmann::json::array();
  for (std::size_t v = 0; v < count; ++v)
    lv.push_back({{"level", v}, {"W", res.eigenvalues[v]}, {"convergence", finite_or_null(res.convergence_estimate[v])}});
  j["levels"] = lv;
  return j;
}

std::string to_csv(const SpectrumResult& res, int levels) {
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(levels, 0)), res.eigenvalues.size());
  std::ostringstream os;
  os << "level,W,convergence,usable_N\n";
  for (std::size_t v = 0; v < count; ++v)
    os << v << ',' << format_number(res.eigenvalues[v]) << ',' << format_number(res.convergence_estimate[v]) << ','
       << res.usable_N << '\n';
  return os.str();
}

nlohmann::json to_json(const HFReport& rep) {
  return {{"gamma", rep.gamma},
          {"a", rep.a},
          {"level", rep.level},
          {"h", rep.h},
          {"fd_slope", rep.fd_slope},
          {"expectation_inv_xi", rep.expectation_inv_xi},
          {"residual", rep.residual},
          {"min_overlap", rep.min_overlap},
          {"crossing_suspected", rep.crossing_suspected}};
}

std::string to_csv(const HFReport& rep) {
  std::ostringstream os;
  os << "gamma,a,level,h,fd_slope,expectation_inv_xi,residual,min_overlap,crossing_suspected\n";
  os << format_number(rep.gamma) << ',' << format_number(rep.a) << ',' << rep.level << ',' << format_number(rep.h) << ','
     << format_number(rep.fd_slope) << ',' << format_number(rep.expectation_inv_xi) << ',' << format_number(rep.residual)
     << ',' << format_number(rep.min_overlap) << ',' << (rep.crossing_suspected ? 1 : 0) << '\n';
  return os.str();
}

nlohmann::json to_json(const DimensionlessImage& img) {
  return {{"length_unit", img.length_unit},
          {"gamma", img.gamma},
          {"a", img.a},
          {"w_scale", img.w_scale},
          {"w_offset", img.w_offset}};
}

nlohmann::json to_json(const AllowedFieldReport& rep) {
  nlohmann::json fields = nlohmann::json::array();
  for (const auto& f : rep.fields) fields.push_back({{"k", f.k}, {"a_root", f.a_root}, {"B", f.B}});
  return {{"n", rep.n}, {"l", rep.l}, {"gamma", rep.gamma}, {"fields", fields}, {"unphysical_roots", rep.unphysical_roots}};
}

std::string sweep_curves_csv(const SweepTable& table) {
  std::ostringstream os;
  os << 'a';
  for (int v = 0; v < table.config.levels; ++v) os << ",W" << v;
  os << ",status\n";
  for (const auto& row : table.rows) {
    os << format_number(row.a);
    for (double w : row.W) os << ',' << format_number(w);
    os << ',' << row.status << '\n';
  }
  return os.str();
}

std::string sweep_points_csv(const SweepTable& table) {
  std::ostringstream os;
  os << "n,k,a_root,W,matched_level,mismatch\n";
  for (const auto& p : table.points)
    os << p.n << ',' << p.k << ',' << format_number(p.a_root) << ',' << format_number(p.W) << ',' << p.matched_level << ','
       << format_number(p.mismatch) << '\n';
  return os.str();
}

nlohmann::json sweep_json(const SweepTable& table) {
  const auto& c = table.config;
  nlohmann::json j;
  j["config"] = {{"gamma", c.gamma},   {"a_min", c.a_min}, {"a_max", c.a_max},          {"steps", c.steps},
                 {"levels", c.levels}, {"n_max", c.n_max}, {"basis_size", c.basis_size}};
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json w = nlohmann::json::array();
    for (double x : row.W) w.push_back(finite_or_null(x));
    curves.push_back({{"a", row.a},
                      {"W", w},
                      {"usable_N", row.usable_N},
                      {"max_convergence", finite_or_null(row.max_convergence)},
                      {"status", row.status}});
  }
  j["curves"] = curves;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : table.points)
    points.push_back({{"n", p.n},
                      {"k", p.k},
                      {"a_root", p.a_root},
                      {"W", p.W},
                      {"matched_level", p.matched_level},
                      {"W_variational", p.W_variational},
                      {"mismatch", p.mismatch}});
  j["points"] = points;
  return j;
}

std::string sweep_svg(const SweepTable& table) {
  constexpr double width = 640, height = 480, margin = 50;
  const auto& c = table.config;
  double w_min = std::numeric_limits<double>::infinity(), w_max = -w_min;
  for (const auto& row : table.rows)
    for (double w : row.W)
      if (std::isfinite(w)) {
        w_min = std::min(w_min, w);
        w_max = std::max(w_max, w);
      }
  for (const auto& p : table.points) {
    w_min = std::min(w_min, p.W);
    w_max = std::max(w_max, p.W);
  }
  if (!std::isfinite(w_min)) {
    w_min = 0;
    w_max = 1;
  }
  if (w_max == w_min) w_max = w_min + 1;

  auto px = [&](double a) { return margin + (a - c.a_min) / (c.a_max - c.a_min) * (width - 2 * margin); };
  auto py = [&](double w) { return height - margin - (w - w_min) / (w_max - w_min) * (height - 2 * margin); };
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return std::string(buf);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
     << width << ' ' << height << "\">\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin << "\" height=\""
     << height - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">a</text>\n";
  os << "<text x=\"14\" y=\"" << height / 2 << "\" text-anchor=\"middle\">W</text>\n";
  os << "<text x=\"" << margin << "\" y=\"" << height - margin + 16 << "\" text-anchor=\"middle\">" << num(c.a_min)
     << "</text>\n";
  os << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 16 << "\" text-anchor=\"middle\">"
     << num(c.a_max) << "</text>\n";
  os << "<text x=\"" << margin - 4 << "\" y=\"" << py(w_min) << "\" text-anchor=\"end\">" << num(w_min) << "</text>\n";
  os << "<text x=\"" << margin - 4 << "\" y=\"" << py(w_max) << "\" text-anchor=\"end\">" << num(w_max) << "</text>\n";
  os << "<title>gamma = " << num(c.gamma) << "</title>\n";
  for (int v = 0; v < c.levels; ++v) {
    os << "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : table.rows) {
      const double w = row.W[static_cast<std::size_t>(v)];
      if (!std::isfinite(w)) continue;
      if (!first) os << ' ';
      first = false;
      os << num(px(row.a)) << ',' << num(py(w));
    }
    os << "\"/>\n";
  }
  for (const auto& p : table.points)
    os << "<circle cx=\"" << num(px(p.a_root)) << "\" cy=\"" << num(py(p.W)) << "\" r=\"4\" fill=\"none\" stroke=\"red\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace coulho
