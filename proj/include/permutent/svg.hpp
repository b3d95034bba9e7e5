#pragma once

#include <string>
#include <utility>
#include <vector>

namespace permutent::svg {

struct Series {
    enum class Style { Points, Line };

    std::string label;
    Style style = Style::Line;
    std::string color = "#1f77b4";
    std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
    std::string title;
    std::string x_label = "n";
    std::string y_label = "S (bits)";
    int width = 720;
    int height = 480;
};

/// Static line/scatter plot with axes, ticks and a legend. Output depends only
/// on the inputs, byte for byte.
std::string render(const std::vector<Series>& series, const PlotOptions& options);

/// Fixed qualitative palette, cycled by index.
const std::string& palette(std::size_t index);

}  // namespace permutent::svg
