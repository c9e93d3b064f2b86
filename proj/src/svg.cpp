#include "jinsig/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace jinsig::svg {
namespace {

struct Range {
  double lo;
  double hi;
};

Range padded_range(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = std::max(std::abs(lo), 1.0) * 0.5;
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

std::string num(double v, const char* fmt = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string signature_plot(const Signature<double>& sig, const std::string& title, const PlotStyle& style) {
  double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  if (!sig.points.empty()) {
    xlo = xhi = sig.points.front().kappa;
    ylo = yhi = sig.points.front().kappa_s;
    for (const auto& p : sig.points) {
      xlo = std::min(xlo, p.kappa);
      xhi = std::max(xhi, p.kappa);
      ylo = std::min(ylo, p.kappa_s);
      yhi = std::max(yhi, p.kappa_s);
    }
  }
  const Range xr = padded_range(xlo, xhi);
  const Range yr = padded_range(ylo, yhi);
  const double w = style.width - 2.0 * style.margin;
  const double h = style.height - 2.0 * style.margin;
  auto sx = [&](double x) { return style.margin + (x - xr.lo) / (xr.hi - xr.lo) * w; };
  auto sy = [&](double y) { return style.margin + h - (y - yr.lo) / (yr.hi - yr.lo) * h; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << " " << style.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << style.width / 2 << "\" y=\"" << style.margin / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";
  const double left = style.margin, right = style.margin + w, top = style.margin, bottom = style.margin + h;
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right) << "\" y2=\""
      << num(bottom) << "\"/>\n";
  out << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left) << "\" y2=\""
      << num(bottom) << "\"/>\n";
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int k = 0; k <= style.ticks; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / style.ticks;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / style.ticks;
    out << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(sx(fx)) << "\" y2=\""
        << num(bottom + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(bottom + 18) << "\" text-anchor=\"middle\">"
        << num(fx, "%.4g") << "</text>\n";
    out << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(fy)) << "\" x2=\"" << num(left) << "\" y2=\""
        << num(sy(fy)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(fy) + 3) << "\" text-anchor=\"end\">"
        << num(fy, "%.4g") << "</text>\n";
  }
  out << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(bottom + 40)
      << "\" text-anchor=\"middle\">kappa</text>\n";
  out << "<text x=\"" << num(left - 45) << "\" y=\"" << num((top + bottom) / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 " << num(left - 45) << " " << num((top + bottom) / 2) << ")\">kappa_s</text>\n";
  out << "</g>\n";
  out << "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < sig.points.size(); ++k) {
    if (k) out << " ";
    out << num(sx(sig.points[k].kappa)) << "," << num(sy(sig.points[k].kappa_s));
  }
  out << "\"/>\n";
  for (const auto& p : sig.points) {
    out << "<circle cx=\"" << num(sx(p.kappa)) << "\" cy=\"" << num(sy(p.kappa_s)) << "\" r=\"2\" fill=\"#1f5fa8\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace jinsig::svg
