#ifndef PATMINE_SVGPLOT_HPP
#define PATMINE_SVGPLOT_HPP

#include <optional>
#include <span>
#include <string>

namespace patmine {

struct TrendLine {
    double slope = 0.0;
    double intercept = 0.0;
};

// Minimal deterministic scatter plot: fixed 640x480 canvas, points in
// input order, optional dashed trend line. Presentation only.
std::string scatter_svg(std::span<const double> x, std::span<const double> y,
                        const std::string& x_label, const std::string& y_label,
                        std::optional<TrendLine> trend = std::nullopt);

} // namespace patmine

#endif
