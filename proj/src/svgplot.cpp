#include "patmine/svgplot.hpp"

#include "patmine/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace patmine {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kMargin = 60;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string scatter_svg(std::span<const double> x, std::span<const double> y,
                        const std::string& x_label, const std::string& y_label,
                        std::optional<TrendLine> trend) {
    if (x.size() != y.size() || x.empty())
        throw ValidationError("scatter plot needs equal non-empty x and y");

    double xmin = *std::min_element(x.begin(), x.end());
    double xmax = *std::max_element(x.begin(), x.end());
    double ymin = *std::min_element(y.begin(), y.end());
    double ymax = *std::max_element(y.begin(), y.end());
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double xpad = 0.05 * (xmax - xmin);
    const double ypad = 0.05 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    const auto px = [&](double v) {
        return kMargin + (v - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
    };
    const auto py = [&](double v) {
        return kHeight - kMargin - (v - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) + "\" width=\"" +
           fmt(kWidth - 2 * kMargin) + "\" height=\"" + fmt(kHeight - 2 * kMargin) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    if (trend) {
        // Clip the trend line to the data x-range.
        const double x0 = xmin + xpad, x1 = xmax - xpad;
        const double y0 = trend->slope * x0 + trend->intercept;
        const double y1 = trend->slope * x1 + trend->intercept;
        svg += "<line x1=\"" + fmt(px(x0)) + "\" y1=\"" + fmt(py(y0)) + "\" x2=\"" +
               fmt(px(x1)) + "\" y2=\"" + fmt(py(y1)) +
               "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
    }

    for (size_t i = 0; i < x.size(); ++i) {
        svg += "<circle cx=\"" + fmt(px(x[i])) + "\" cy=\"" + fmt(py(y[i])) +
               "\" r=\"4\" fill=\"steelblue\"/>\n";
    }

    svg += "<text x=\"" + fmt(kWidth / 2.0) + "\" y=\"" + fmt(kHeight - 15.0) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + x_label + "</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt(kHeight / 2.0) +
           "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 " +
           fmt(kHeight / 2.0) + ")\">" + y_label + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace patmine
