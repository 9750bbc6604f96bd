#include "edgepart/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edgepart {

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, const ReportOptions& opts) {
  out << "threshold,active_edges,abf,mean_nvs,mrt_ms,best_overall,feasible_rate\n";
  for (const auto& r : rows) {
    out << format_number(r.threshold) << ',' << r.active_edges << ',' << format_number(r.abf) << ','
        << format_number(r.mean_nvs) << ',' << format_number(opts.timing ? r.mrt_ms : 0.0) << ','
        << format_number(r.best_overall) << ',' << format_number(r.feasible_rate) << '\n';
  }
}

namespace {

std::string fixed(double x, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Label text for a tick value; short and stable.
std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label, std::span<const double> xs,
                              std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("chart series lengths differ");
  constexpr double width = 640, height = 400;
  constexpr double left = 80, right = 20, top = 40, bottom = 60;
  constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
  constexpr int ticks = 5;

  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  if (!xs.empty()) {
    auto [xlo, xhi] = std::minmax_element(xs.begin(), xs.end());
    auto [ylo, yhi] = std::minmax_element(ys.begin(), ys.end());
    x_min = *xlo, x_max = *xhi, y_min = *ylo, y_max = *yhi;
  }
  if (x_max == x_min) x_min -= 0.5, x_max += 0.5;
  if (y_max == y_min) y_min -= 0.5, y_max += 0.5;
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << escape_xml(title) << "</text>\n";

  svg << "<g stroke=\"#ddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= ticks; ++i) {
    const double gx = left + plot_w * i / ticks;
    const double gy = top + plot_h * i / ticks;
    svg << "<line x1=\"" << fixed(gx) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(gx) << "\" y2=\""
        << fixed(top + plot_h) << "\"/>\n";
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(gy) << "\" x2=\"" << fixed(left + plot_w)
        << "\" y2=\"" << fixed(gy) << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(plot_w)
      << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= ticks; ++i) {
    const double xv = x_min + (x_max - x_min) * i / ticks;
    const double yv = y_min + (y_max - y_min) * i / ticks;
    svg << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << fixed(top + plot_h + 16)
        << "\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
    svg << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(py(yv) + 4) << "\" text-anchor=\"end\">"
        << tick_label(yv) << "</text>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(height - 16)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape_xml(x_label)
      << "</text>\n";
  svg << "<text x=\"18\" y=\"" << fixed(top + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " << fixed(top + plot_h / 2)
      << ")\">" << escape_xml(y_label) << "</text>\n";

  if (!xs.empty()) {
    svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      svg << (i ? " " : "") << fixed(px(xs[i])) << ',' << fixed(py(ys[i]));
    }
    svg << "\"/>\n<g fill=\"#1f77b4\">\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      svg << "<circle cx=\"" << fixed(px(xs[i])) << "\" cy=\"" << fixed(py(ys[i])) << "\" r=\"3\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> emit_report(std::span<const SweepRow> rows,
                                               const std::filesystem::path& out_dir,
                                               const ReportOptions& opts) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& name, const std::string& content) {
    const auto path = out_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
    written.push_back(path);
  };

  std::ostringstream csv;
  write_sweep_csv(csv, rows, opts);
  write("sweep.csv", csv.str());
  if (rows.empty()) return written;

  std::vector<double> t, abf, nvs, mrt;
  for (const auto& r : rows) {
    t.push_back(r.threshold);
    abf.push_back(r.abf);
    nvs.push_back(r.mean_nvs);
    mrt.push_back(r.mrt_ms);
  }
  write("abf.svg", render_line_chart("Average best fitness", "threshold", "ABF", t, abf));
  write("nvs.svg", render_line_chart("Visited solutions to best", "threshold", "mean NVS", t, nvs));
  if (opts.timing) write("mrt.svg", render_line_chart("Mean run time", "threshold", "MRT (ms)", t, mrt));
  return written;
}

}  // namespace edgepart
