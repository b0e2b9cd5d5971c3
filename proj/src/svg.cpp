#include "linespect/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace linespect::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Ticks {
    std::vector<double> values;
};

// 1-2-5 tick spacing aiming at about six intervals.
Ticks nice_ticks(double lo, double hi) {
    Ticks t;
    const double range = hi - lo;
    if (!(range > 0.0))
        return t;
    double step = std::pow(10.0, std::floor(std::log10(range / 6.0)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (range / (step * m) <= 7.0) {
            step *= m;
            break;
        }
    }
    double v = std::ceil(lo / step) * step;
    for (; v <= hi + 0.5 * step; v += step)
        t.values.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return t;
}

} // namespace

const std::string& palette_color(std::size_t i) {
    static const std::array<std::string, 8> colors = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
        "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return colors[i % colors.size()];
}

std::string Plot::render() const {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const Series& s : series_)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmin <= xmax)) { xmin = 0.0; xmax = 1.0; }
    if (!(ymin <= ymax)) { ymin = 0.0; ymax = 1.0; }
    if (xmin == xmax) { xmin -= 1.0; xmax += 1.0; }
    if (ymin == ymax) { ymin -= 1.0; ymax += 1.0; }
    const double xpad = 0.05 * (xmax - xmin);
    const double ypad = 0.05 * (ymax - ymin);
    xmin -= xpad; xmax += xpad;
    ymin -= ypad; ymax += ypad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return kTop + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

    // Grid and tick labels.
    for (double v : nice_ticks(xmin, xmax).values) {
        const double x = sx(v);
        out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(x) +
               "\" y2=\"" + fmt(kTop + ph) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kTop + ph + 18.0) +
               "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">" +
               fmt(v, "%.6g") + "</text>\n";
    }
    for (double v : nice_ticks(ymin, ymax).values) {
        const double y = sy(v);
        out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(kLeft + pw) + "\" y2=\"" + fmt(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + fmt(kLeft - 8.0) + "\" y=\"" + fmt(y + 4.0) +
               "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333333\">" + fmt(v, "%.6g") +
               "</text>\n";
    }

    // Axes frame.
    out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(pw) +
           "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    for (const Series& s : series_) {
        if (s.line && s.points.size() > 1) {
            std::string pts;
            for (const auto& [x, y] : s.points)
                pts += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
            out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + s.color +
                   "\" stroke-width=\"1.5\"/>\n";
        }
        if (s.markers)
            for (const auto& [x, y] : s.points)
                out += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
                       "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
    }

    // Legend, top-right inside the frame.
    double ly = kTop + 16.0;
    for (const Series& s : series_) {
        if (s.label.empty())
            continue;
        const double lx = kLeft + pw - 150.0;
        out += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly - 4.0) + "\" x2=\"" +
               fmt(lx + 22.0) + "\" y2=\"" + fmt(ly - 4.0) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt(lx + 28.0) + "\" y=\"" + fmt(ly) +
               "\" font-size=\"12\" fill=\"#333333\">" + escape(s.label) + "</text>\n";
        ly += 16.0;
    }

    out += "<text x=\"" + fmt(kLeft + pw / 2.0) + "\" y=\"22\" font-size=\"15\" "
           "text-anchor=\"middle\" fill=\"#111111\">" + escape(title_) + "</text>\n";
    out += "<text x=\"" + fmt(kLeft + pw / 2.0) + "\" y=\"" + fmt(kHeight - 12.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\">" + escape(x_label_) +
           "</text>\n";
    out += "<text x=\"18\" y=\"" + fmt(kTop + ph / 2.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\" transform=\"rotate(-90 18 " +
           fmt(kTop + ph / 2.0) + ")\">" + escape(y_label_) + "</text>\n";
    out += "</svg>\n";
    return out;
}

} // namespace linespect::svg
