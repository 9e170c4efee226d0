#include "fluxring/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fluxring::io {

namespace {

constexpr double width = 800, height = 480;
constexpr double ml = 70, mr = 20, mt = 20, mb = 50;  // margins
constexpr double strip_h = 70;                        // dot strip height

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Scale {
    double lo, hi, a, b;  // screen = a * value + b
    Scale(double lo_, double hi_, double s0, double s1)
    {
        lo = lo_;
        hi = hi_;
        if (hi <= lo) hi = lo + 1.0;  // degenerate range
        a = (s1 - s0) / (hi - lo);
        b = s0 - a * lo;
    }
    double operator()(double v) const { return a * v + b; }
};

void axes(std::string& svg, const Scale& sx, const Scale& sy, double plot_bottom,
          const std::string& x_label, const std::string& y_label)
{
    svg += "<rect x='" + num(ml) + "' y='" + num(mt) + "' width='" + num(width - ml - mr) +
           "' height='" + num(plot_bottom - mt) +
           "' fill='none' stroke='black' stroke-width='1'/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = sx.lo + (sx.hi - sx.lo) * i / 4.0;
        const double px = sx(fx);
        svg += "<line x1='" + num(px) + "' y1='" + num(plot_bottom) + "' x2='" + num(px) +
               "' y2='" + num(plot_bottom + 5) + "' stroke='black'/>\n";
        svg += "<text x='" + num(px) + "' y='" + num(plot_bottom + 18) +
               "' font-size='11' text-anchor='middle'>" + num(fx) + "</text>\n";
        const double fy = sy.lo + (sy.hi - sy.lo) * i / 4.0;
        const double py = sy(fy);
        svg += "<line x1='" + num(ml - 5) + "' y1='" + num(py) + "' x2='" + num(ml) +
               "' y2='" + num(py) + "' stroke='black'/>\n";
        svg += "<text x='" + num(ml - 8) + "' y='" + num(py + 4) +
               "' font-size='11' text-anchor='end'>" + num(fy) + "</text>\n";
    }
    svg += "<text x='" + num((ml + width - mr) / 2) + "' y='" + num(plot_bottom + 36) +
           "' font-size='13' text-anchor='middle'>" + x_label + "</text>\n";
    svg += "<text x='14' y='" + num((mt + plot_bottom) / 2) +
           "' font-size='13' text-anchor='middle' transform='rotate(-90 14 " +
           num((mt + plot_bottom) / 2) + ")'>" + y_label + "</text>\n";
}

std::string polyline(const std::vector<double>& x, const std::vector<double>& y,
                     const Scale& sx, const Scale& sy)
{
    std::string pts;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) pts += ' ';
        pts += num(sx(x[i])) + "," + num(sy(y[i]));
    }
    return "<polyline points='" + pts + "' fill='none' stroke='#1f6fb2' stroke-width='1.5'/>\n";
}

std::string plot(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>* dots, const std::string& x_label,
                 const std::string& y_label)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("svg plot needs >= 2 points");

    const double plot_bottom = dots ? height - mb - strip_h : height - mb;
    const auto [xlo, xhi] = std::minmax_element(x.begin(), x.end());
    const auto [ylo, yhi] = std::minmax_element(y.begin(), y.end());
    const Scale sx(*xlo, *xhi, ml, width - mr);
    const Scale sy(*ylo, *yhi, plot_bottom, mt);

    std::string svg = "<svg xmlns='http://www.w3.org/2000/svg' width='" + num(width) +
                      "' height='" + num(height) + "' viewBox='0 0 " + num(width) + " " +
                      num(height) + "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    axes(svg, sx, sy, plot_bottom, x_label, y_label);
    svg += polyline(x, y, sx, sy);

    if (dots) {
        const double top = plot_bottom + 26, bot = height - mb - 4;
        svg += "<rect x='" + num(ml) + "' y='" + num(top) + "' width='" +
               num(width - ml - mr) + "' height='" + num(bot - top) +
               "' fill='none' stroke='#888'/>\n";
        // golden-ratio vertical placement keeps the strip deterministic
        double frac = 0.0;
        for (double d : *dots) {
            frac += 0.6180339887498949;
            frac -= std::floor(frac);
            const double px = sx(std::clamp(d, sx.lo, sx.hi));
            const double py = top + 2 + (bot - top - 4) * frac;
            svg += "<circle cx='" + num(px) + "' cy='" + num(py) +
                   "' r='1' fill='black'/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace

std::string svg_line_plot(const std::vector<double>& x, const std::vector<double>& y,
                          const std::string& x_label, const std::string& y_label)
{
    return plot(x, y, nullptr, x_label, y_label);
}

std::string svg_curve_with_dots(const std::vector<double>& x, const std::vector<double>& y,
                                const std::vector<double>& dots, const std::string& x_label,
                                const std::string& y_label)
{
    return plot(x, y, &dots, x_label, y_label);
}

}  // namespace fluxring::io
