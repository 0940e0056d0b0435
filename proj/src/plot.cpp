#include "coneseries/plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coneseries/error.hpp"

namespace coneseries {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 20.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Frame {
  double half;  // real half-width of the window
  double px(double x) const { return kMargin + (x + half) / (2 * half) * kSize; }
  double py(double y) const { return kMargin + (half - y) / (2 * half) * kSize; }
};

// Segment of {u : omega . u = level} inside the square [-h, h]^2.
std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> clip_line(
    const RationalVector& omega, const Rational& level, double h) {
  const double a = omega[0].get_d(), b = omega[1].get_d(), c = level.get_d();
  std::vector<std::pair<double, double>> hits;
  auto keep = [&](double x, double y) {
    const double eps = 1e-9 * (1 + h);
    if (x < -h - eps || x > h + eps || y < -h - eps || y > h + eps) return;
    for (const auto& p : hits)
      if (std::abs(p.first - x) < eps && std::abs(p.second - y) < eps) return;
    hits.emplace_back(x, y);
  };
  if (b != 0) {
    keep(-h, (c + a * h) / b);
    keep(h, (c - a * h) / b);
  }
  if (a != 0) {
    keep((c + b * h) / a, -h);
    keep((c - b * h) / a, h);
  }
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(hits[0], hits[1]);
}

}  // namespace

SupportPlot render_support_plot(const SupportSpec& s, const RationalVector& omega, const Integer& window,
                                std::size_t cap) {
  const std::size_t n = s.ambient();
  if (omega.size() != n) throw Error("DimensionMismatch", "omega of wrong dimension");
  if (window < 0) throw Error("BadArgument", "window must be nonnegative");
  SupportPlot plot;
  plot.points = materialize_window(s, window, cap);
  plot.tau = tau_classify(s, omega);
  const Rational k(s.ramification());

  // Coordinates are exact; only the SVG uses decimals.
  std::ostringstream csv;
  for (std::size_t i = 0; i < n; ++i) csv << (i ? "," : "") << "x" << i + 1;
  csv << ",level\n";
  for (const auto& p : plot.points) {
    Rational level = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational x = Rational(p[i]) / k;
      x.canonicalize();
      level += omega[i] * x;
      csv << to_string(x) << ",";
    }
    csv << to_string(level) << "\n";
  }
  plot.csv = csv.str();
  if (n != 2) return plot;

  Frame f{std::max(1.0, Rational(Rational(window) / k).get_d())};
  std::ostringstream svg;
  const double full = kSize + 2 * kMargin;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(full) << "\" height=\"" << fmt(full)
      << "\" viewBox=\"0 0 " << fmt(full) << " " << fmt(full) << "\">\n";
  svg << "<!-- decimal rendering, not authoritative; see the CSV for exact coordinates -->\n";
  svg << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(kSize)
      << "\" height=\"" << fmt(kSize) << "\" fill=\"white\" stroke=\"#999\"/>\n";
  svg << "<line x1=\"" << fmt(f.px(-f.half)) << "\" y1=\"" << fmt(f.py(0)) << "\" x2=\"" << fmt(f.px(f.half))
      << "\" y2=\"" << fmt(f.py(0)) << "\" stroke=\"#ccc\"/>\n";
  svg << "<line x1=\"" << fmt(f.px(0)) << "\" y1=\"" << fmt(f.py(-f.half)) << "\" x2=\"" << fmt(f.px(0))
      << "\" y2=\"" << fmt(f.py(f.half)) << "\" stroke=\"#ccc\"/>\n";
  if (plot.tau.kind == TauClass::Kind::Boundary) {
    if (auto seg = clip_line(omega, plot.tau.lambda0, f.half)) {
      svg << "<line class=\"boundary\" x1=\"" << fmt(f.px(seg->first.first)) << "\" y1=\""
          << fmt(f.py(seg->first.second)) << "\" x2=\"" << fmt(f.px(seg->second.first)) << "\" y2=\""
          << fmt(f.py(seg->second.second)) << "\" stroke=\"#c33\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const auto& p : plot.points) {
    const double x = Rational(Rational(p[0]) / k).get_d();
    const double y = Rational(Rational(p[1]) / k).get_d();
    svg << "<circle cx=\"" << fmt(f.px(x)) << "\" cy=\"" << fmt(f.py(y)) << "\" r=\"2.5\" fill=\"#236\"/>\n";
  }
  svg << "</svg>\n";
  plot.svg = svg.str();
  return plot;
}

std::vector<std::string> emit_support_plot(const SupportSpec& s, const RationalVector& omega,
                                           const Integer& window, const std::string& out, std::size_t cap) {
  SupportPlot plot = render_support_plot(s, omega, window, cap);
  std::vector<std::string> written;
  auto put = [&](const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!(f << body)) throw Error("IoError", "cannot write " + path, Error::Kind::Usage);
    written.push_back(path);
  };
  put(out + ".csv", plot.csv);
  if (plot.svg) put(out + ".svg", *plot.svg);
  return written;
}

}  // namespace coneseries
