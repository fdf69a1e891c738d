#include "cutchoose/analysis.hpp"
#include "cutchoose/election.hpp"

#include <cstdio>
#include <sstream>

namespace cutchoose {

namespace {

// Fixed-precision decimal so identical reports give identical bytes.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string num(const Ratio& r) { return num(r.to_double()); }

const char* fill_for(DistrictStatus s) {
  switch (s) {
    case DistrictStatus::ChooserWin: return "#3c6eb4";
    case DistrictStatus::CutterWin: return "#c0392b";
    case DistrictStatus::Randomized: return "#ffffff";
  }
  return "#000000";
}

std::string render_svg(const AnalysisReport& r, const DiagramOptions& options) {
  const Ratio m = options.threshold.value_or(r.best_response.representative());
  const auto D = static_cast<std::int64_t>(r.district_count);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.pixels << "\" height=\""
      << options.pixels << "\" viewBox=\"0 0 1 1\">\n";
  out << "<title>districting function, D=" << D << ", v_B=" << r.district_mean_share.str()
      << ", m=" << m.str() << "</title>\n";
  // y axis points up: (x, y) in model coordinates is drawn at (x, 1 - y).
  out << "<g transform=\"matrix(1 0 0 -1 0 1)\">\n";

  // District strips, largest chooser share at the bottom, shaded by outcome at m.
  out << "<g id=\"regions\" fill-opacity=\"0.35\" stroke=\"none\">\n";
  for (std::int64_t j = 0; j < D; ++j) {
    const auto& share = r.shares[static_cast<std::size_t>(j)];
    const auto status = classify_share(share, m);
    out << "<rect x=\"0\" y=\"" << num(Ratio(j, D)) << "\" width=\"1\" height=\"" << num(Ratio(1, D))
        << "\" fill=\"" << fill_for(status) << "\" data-status=\"" << to_string(status) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.004\"/>\n";

  // Threshold guides at m and 1 - m, and the v_B level.
  const Ratio reflected = Ratio(1) - m;
  out << "<g id=\"guides\" stroke=\"#555555\" stroke-width=\"0.003\" stroke-dasharray=\"0.015 0.01\">\n";
  out << "<line id=\"threshold\" x1=\"" << num(m) << "\" y1=\"0\" x2=\"" << num(m) << "\" y2=\"1\"/>\n";
  out << "<line id=\"threshold-reflected\" x1=\"" << num(reflected) << "\" y1=\"0\" x2=\"" << num(reflected)
      << "\" y2=\"1\"/>\n";
  out << "<line id=\"vb-level\" x1=\"0\" y1=\"" << num(r.district_mean_share) << "\" x2=\"1\" y2=\""
      << num(r.district_mean_share) << "\"/>\n";
  out << "</g>\n";

  // Staircase: horizontal runs at each level, vertical drops at each breakpoint.
  std::vector<std::pair<Ratio, Ratio>> pts;
  auto push = [&pts](const Ratio& x, const Ratio& y) {
    if (pts.empty() || pts.back().first != x || pts.back().second != y) pts.emplace_back(x, y);
  };
  push(Ratio(0), r.levels.front());
  for (std::size_t i = 0; i < r.breakpoints.size(); ++i) {
    push(r.breakpoints[i], r.levels[i]);
    push(r.breakpoints[i], r.levels[i + 1]);
  }
  push(Ratio(1), r.levels.back());

  out << "<polyline id=\"staircase\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.008\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i ? " " : "") << num(pts[i].first) << "," << num(pts[i].second);
  }
  out << "\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string emit_diagram(const AnalysisReport& report, DiagramFormat format, const DiagramOptions& options) {
  if (format == DiagramFormat::Json) {
    return report_to_json(report);
  }
  return render_svg(report, options);
}

}  // namespace cutchoose
