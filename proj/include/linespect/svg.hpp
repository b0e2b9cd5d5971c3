#ifndef LINESPECT_SVG_HPP
#define LINESPECT_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace linespect::svg {

struct Series {
    std::string label;
    std::string color;   // any CSS color
    bool line = true;
    bool markers = false;
    std::vector<std::pair<double, double>> points;
};

/// Minimal static SVG line/marker plot on a fixed 800x500 canvas: axes
/// with nice ticks, polylines, circle markers, a legend and text labels.
/// Output is deterministic for identical input.
class Plot {
public:
    Plot(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void add_series(Series s) { series_.push_back(std::move(s)); }

    std::string render() const;

private:
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    std::vector<Series> series_;
};

/// Cycling palette used by the CLI plots.
const std::string& palette_color(std::size_t i);

} // namespace linespect::svg

#endif
