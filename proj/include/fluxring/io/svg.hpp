#pragma once

#include <string>
#include <vector>

// Minimal hand-rolled SVG plots. CSV is the contract; these are a convenience.

namespace fluxring::io {

std::string svg_line_plot(const std::vector<double>& x, const std::vector<double>& y,
                          const std::string& x_label, const std::string& y_label);

// intensity curve with a strip of detection dots underneath
std::string svg_curve_with_dots(const std::vector<double>& x, const std::vector<double>& y,
                                const std::vector<double>& dots, const std::string& x_label,
                                const std::string& y_label);

}  // namespace fluxring::io
