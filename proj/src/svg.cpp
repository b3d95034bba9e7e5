#include "permutent/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace permutent::svg {

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
};

double nice_step(double span, int target_ticks) {
    const double raw = span / std::max(1, target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    const double step = norm < 1.5 ? 1.0 : norm < 3.0 ? 2.0 : norm < 7.0 ? 5.0 : 10.0;
    return step * mag;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

const std::string& palette(std::size_t index) {
    static const std::array<std::string, 8> colors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                      "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return colors[index % colors.size()];
}

std::string render(const std::vector<Series>& series, const PlotOptions& opt) {
    Range xr, yr;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            xr.lo = std::min(xr.lo, x);
            xr.hi = std::max(xr.hi, x);
            yr.lo = std::min(yr.lo, y);
            yr.hi = std::max(yr.hi, y);
        }
    if (!(xr.lo <= xr.hi)) xr = {0.0, 1.0};
    if (!(yr.lo <= yr.hi)) yr = {0.0, 1.0};
    if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;
    if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;

    const double xstep = nice_step(xr.hi - xr.lo, 8);
    const double ystep = nice_step(yr.hi - yr.lo, 6);
    xr.lo = std::floor(xr.lo / xstep) * xstep;
    xr.hi = std::ceil(xr.hi / xstep) * xstep;
    yr.lo = std::floor(yr.lo / ystep) * ystep;
    yr.hi = std::ceil(yr.hi / ystep) * ystep;

    const double left = 70, right = 20, top = 40, bottom = 55;
    const double pw = opt.width - left - right;
    const double ph = opt.height - top - bottom;
    auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return top + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::string out;
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        opt.width, opt.height, opt.width, opt.height);
    out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", opt.width, opt.height);
    out += fmt::format("<text x=\"{:.2f}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       left + pw / 2, escape(opt.title));

    // Axes and ticks.
    out += fmt::format("<g stroke=\"#444\" fill=\"none\"><rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\"/></g>\n",
                       left, top, pw, ph);
    out += "<g fill=\"#222\">\n";
    for (int i = 0; xr.lo + i * xstep <= xr.hi + 1e-9 * xstep; ++i) {
        const double x = xr.lo + i * xstep;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#444\"/>"
                           "<text x=\"{0:.2f}\" y=\"{3:.2f}\" text-anchor=\"middle\">{4:g}</text>\n",
                           px(x), top + ph, top + ph + 5, top + ph + 18, x);
    }
    for (int i = 0; yr.lo + i * ystep <= yr.hi + 1e-9 * ystep; ++i) {
        const double y = yr.lo + i * ystep;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#444\"/>"
                           "<text x=\"{3:.2f}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:g}</text>\n",
                           left - 5, py(y), left, left - 8, py(y) + 4, y);
    }
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", left + pw / 2,
                       static_cast<double>(opt.height) - 12, escape(opt.x_label));
    out += fmt::format("<text x=\"16\" y=\"{0:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0:.2f})\">{1}</text>\n",
                       top + ph / 2, escape(opt.y_label));
    out += "</g>\n";

    for (const auto& s : series) {
        if (s.style == Series::Style::Line) {
            std::string path;
            bool pen_down = false;
            for (const auto& [x, y] : s.points) {
                if (!std::isfinite(x) || !std::isfinite(y)) {
                    pen_down = false;
                    continue;
                }
                path += fmt::format("{}{:.2f},{:.2f} ", pen_down ? "L" : "M", px(x), py(y));
                pen_down = true;
            }
            out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n", path, s.color);
        } else {
            out += fmt::format("<g fill=\"{}\">", s.color);
            for (const auto& [x, y] : s.points) {
                if (!std::isfinite(x) || !std::isfinite(y)) continue;
                out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\"/>", px(x), py(y));
            }
            out += "</g>\n";
        }
    }

    // Legend, top-left inside the frame.
    double ly = top + 16;
    for (const auto& s : series) {
        if (s.label.empty()) continue;
        const double lx = left + 12;
        if (s.style == Series::Style::Line)
            out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"1.5\"/>",
                               lx, ly - 4, lx + 18, ly - 4, s.color);
        else
            out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>", lx + 9, ly - 4, s.color);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", lx + 24, ly, escape(s.label));
        ly += 16;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace permutent::svg
