#include "ulam/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ulam {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string histogram_svg(const Histogram& h, int width, int height) {
    if (width < 100 || height < 80)
        throw std::invalid_argument("plot area too small");

    const int mleft = 46, mright = 12, mtop = 16, mbottom = 28;
    const double plot_w = width - mleft - mright;
    const double plot_h = height - mtop - mbottom;

    u64 peak = 1;
    for (u64 c : h.bins) peak = std::max(peak, c);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double bw = plot_w / double(h.bins.size());
    for (std::size_t i = 0; i < h.bins.size(); ++i) {
        double bh = plot_h * double(h.bins[i]) / double(peak);
        svg += "<rect x=\"" + num(mleft + bw * double(i)) + "\" y=\"" +
               num(mtop + plot_h - bh) + "\" width=\"" + num(std::max(bw - 0.5, 0.5)) +
               "\" height=\"" + num(bh) + "\" fill=\"#4472a8\"/>\n";
    }

    // residue axis with the third boundaries marked
    for (int third = 1; third <= 2; ++third) {
        double x = mleft + plot_w * double(third) / 3.0;
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(mtop) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(mtop + plot_h) +
               "\" stroke=\"#c0392b\" stroke-dasharray=\"4 3\"/>\n";
    }
    svg += "<line x1=\"" + num(mleft) + "\" y1=\"" + num(mtop + plot_h) +
           "\" x2=\"" + num(mleft + plot_w) + "\" y2=\"" + num(mtop + plot_h) +
           "\" stroke=\"black\"/>\n";

    svg += "<text x=\"" + num(mleft) + "\" y=\"" + num(height - 8) +
           "\" font-size=\"12\" font-family=\"sans-serif\">0</text>\n";
    svg += "<text x=\"" + num(mleft + plot_w - 60) + "\" y=\"" +
           num(height - 8) + "\" font-size=\"12\" font-family=\"sans-serif\">" +
           num(h.lambda) + "</text>\n";
    svg += "<text x=\"6\" y=\"" + num(mtop + 10) +
           "\" font-size=\"12\" font-family=\"sans-serif\">" +
           std::to_string(peak) + "</text>\n";
    svg += "<text x=\"" + num(mleft + plot_w / 2 - 80) + "\" y=\"" + num(12) +
           "\" font-size=\"12\" font-family=\"sans-serif\">middle third mass " +
           num(h.middle_third_mass) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

std::string scatter_svg(const std::vector<Vec2>& points, int norm_bound,
                        int width) {
    if (width < 100) throw std::invalid_argument("plot area too small");
    if (norm_bound < 1) throw std::invalid_argument("empty norm ball");

    const int margin = 24;
    const double plot = width - 2 * margin;
    const double cell = plot / double(norm_bound + 1);
    const double r = std::max(cell * 0.35, 0.75);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(width) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(width) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes along x = 0 and y = 0 in plot coordinates (origin bottom left)
    svg += "<line x1=\"" + num(margin) + "\" y1=\"" + num(margin) + "\" x2=\"" +
           num(margin) + "\" y2=\"" + num(width - margin) +
           "\" stroke=\"#999\"/>\n";
    svg += "<line x1=\"" + num(margin) + "\" y1=\"" + num(width - margin) +
           "\" x2=\"" + num(width - margin) + "\" y2=\"" + num(width - margin) +
           "\" stroke=\"#999\"/>\n";

    for (Vec2 p : points) {
        double cx = margin + cell * (double(p.x) + 0.5);
        double cy = width - margin - cell * (double(p.y) + 0.5);
        svg += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
               num(r) + "\" fill=\"#1b3a5c\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace ulam
