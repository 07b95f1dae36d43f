#pragma once

#include "qlattice/cyclic.hpp"
#include "qlattice/distributions.hpp"
#include "qlattice/intpoly.hpp"
#include "qlattice/paths.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qlattice::render {

using Json = nlohmann::ordered_json;

inline Json decimal_array(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

/// {"modulus", "counts", "total", "uniform"}; product distributions add "first_residue".
inline Json distribution_json(const ResidueDistribution& d) {
  Json j;
  j["modulus"] = d.modulus;
  if (d.first_residue != 0) j["first_residue"] = d.first_residue;
  j["counts"] = decimal_array(d.counts);
  j["total"] = d.total.str();
  j["uniform"] = d.uniform();
  return j;
}

inline std::string distribution_csv(const ResidueDistribution& d) {
  std::string out = "residue,count\n";
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    out += std::to_string(d.residue(i)) + "," + d.counts[i].str() + "\n";
  }
  return out;
}

inline std::string distribution_table(const ResidueDistribution& d) {
  std::ostringstream os;
  os << "residue (mod " << d.modulus << ")  count\n";
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    std::string r = std::to_string(d.residue(i));
    os << r << std::string(r.size() < 20 ? 20 - r.size() : 1, ' ') << d.counts[i].str() << "\n";
  }
  os << "total: " << d.total.str() << "\n";
  const auto share = d.uniform_count();
  os << "uniform: " << (share ? "yes (" + share->str() + " per class)" : std::string("no")) << "\n";
  return os.str();
}

inline std::string join(const std::vector<BigInt>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVG: unit grid, shaded enclosed cells, path stroke. 24 px cells.

inline constexpr int kCell = 24;
inline constexpr int kMargin = 24;
inline constexpr int kGap = 48;
inline constexpr int kLabelHeight = 32;

struct SvgPanel {
  LatticePath path;
  std::string label;
};

inline std::string svg_strip(const std::vector<SvgPanel>& panels) {
  std::size_t max_h = 0;
  int width = kMargin;
  for (const auto& p : panels) {
    max_h = std::max(max_h, p.path.height());
    width += static_cast<int>(p.path.width()) * kCell + kGap;
  }
  width = std::max(width - kGap + kMargin, 2 * kMargin);
  const int height = 2 * kMargin + static_cast<int>(max_h) * kCell + kLabelHeight;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  int x0 = kMargin;
  for (const auto& panel : panels) {
    const int w = static_cast<int>(panel.path.width());
    const int h = static_cast<int>(panel.path.height());
    const int y0 = kMargin + static_cast<int>(max_h - panel.path.height()) * kCell;
    os << "<g transform=\"translate(" << x0 << "," << y0 << ")\">\n";

    // Cells below the path; column i holds column_partition()[i] of them.
    const auto columns = column_partition(panel.path);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == 0) continue;
      const int c = static_cast<int>(columns[i]);
      os << "<rect x=\"" << static_cast<int>(i) * kCell << "\" y=\"" << (h - c) * kCell << "\" width=\"" << kCell
         << "\" height=\"" << c * kCell << "\" fill=\"#8fa34f\" fill-opacity=\"0.35\"/>\n";
    }

    os << "<path d=\"";
    for (int i = 0; i <= w; ++i) os << "M" << i * kCell << " 0V" << h * kCell;
    for (int j = 0; j <= h; ++j) os << "M0 " << j * kCell << "H" << w * kCell;
    os << "\" stroke=\"#999999\" stroke-width=\"1\" fill=\"none\"/>\n";

    os << "<polyline points=\"0," << h * kCell;
    int x = 0, y = 0;
    for (Step s : panel.path.steps()) {
      (s == Step::East ? x : y) += 1;
      os << " " << x * kCell << "," << (h - y) * kCell;
    }
    os << "\" stroke=\"#d62728\" stroke-width=\"4\" stroke-linejoin=\"round\" fill=\"none\"/>\n";

    os << "<text x=\"" << w * kCell / 2 << "\" y=\"" << h * kCell + kLabelHeight - 8
       << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">" << panel.label << "</text>\n";
    os << "</g>\n";
    x0 += w * kCell + kGap;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qlattice::render
