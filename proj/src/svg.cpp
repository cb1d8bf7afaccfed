#include "text_format.hpp"
#include "tsdecomp/errors.hpp"
#include "tsdecomp/io.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace tsdecomp {

namespace {

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 12.0;
constexpr double kMarginBottom = 28.0;
constexpr double kPanelGap = 18.0;

struct Panel {
    std::string_view id;
    std::string_view title;
    std::vector<std::optional<double>> values;
};

std::string px(double v) {
    return detail::fixed(v, 2);
}

} // namespace

std::string render_decomposition_svg(const Decomposition& d, int width_px, int height_px) {
    if (width_px < 100 || height_px < 100) {
        throw ContractError(fmt::format("chart must be at least 100x100 px, got {}x{}", width_px, height_px));
    }
    const std::size_t n = d.source.size();
    std::vector<Panel> panels = {
        {"observed", "Observed", {d.source.values().begin(), d.source.values().end()}},
        {"trend", "Trend", {d.trend.values().begin(), d.trend.values().end()}},
        {"seasonal", "Seasonal", {d.seasonal.values().begin(), d.seasonal.values().end()}},
        {"random", "Random", {d.random.values().begin(), d.random.values().end()}},
    };

    const double width = width_px;
    const double height = height_px;
    const double plot_left = kMarginLeft;
    const double plot_right = width - kMarginRight;
    const double panel_h =
        (height - kMarginTop - kMarginBottom - kPanelGap * static_cast<double>(panels.size() - 1)) /
        static_cast<double>(panels.size());
    auto x_of = [&](std::size_t i) {
        return n < 2 ? (plot_left + plot_right) / 2
                     : plot_left + (plot_right - plot_left) * static_cast<double>(i) / static_cast<double>(n - 1);
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
                       "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"10\">\n",
                       width_px, height_px);

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        const double top = kMarginTop + static_cast<double>(p) * (panel_h + kPanelGap);
        const double bottom = top + panel_h;

        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& v : panel.values) {
            if (v) {
                lo = std::min(lo, *v);
                hi = std::max(hi, *v);
            }
        }
        if (lo > hi) {
            lo = hi = 0.0;
        }
        auto y_of = [&](double v) {
            // flat data sits mid-panel
            return hi == lo ? (top + bottom) / 2 : bottom - (v - lo) / (hi - lo) * (bottom - top);
        };

        out += fmt::format("  <g class=\"panel\" id=\"{}\">\n", panel.id);
        out += fmt::format("    <text x=\"{}\" y=\"{}\" font-weight=\"bold\">{}</text>\n", px(plot_left + 4),
                           px(top + 10), panel.title);
        out += fmt::format("    <line class=\"axis\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#444\"/>\n",
                           px(plot_left), px(top), px(bottom));
        out += fmt::format("    <line class=\"axis\" x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"#444\"/>\n",
                           px(plot_left), px(plot_right), px(bottom));
        out += fmt::format("    <text class=\"ylabel\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
                           px(plot_left - 4), px(top + 8), detail::fixed(hi, 0));
        out += fmt::format("    <text class=\"ylabel\" x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
                           px(plot_left - 4), px(bottom), detail::fixed(lo, 0));

        for (std::size_t i = 0; i < n; ++i) {
            const auto stamp = d.source.stamp_at(i);
            if (stamp.month() != 1 && i != 0) {
                continue;
            }
            out += fmt::format("    <line class=\"tick\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#444\"/>\n",
                               px(x_of(i)), px(bottom), px(bottom + 4));
            if (p + 1 == panels.size()) {
                out += fmt::format("    <text class=\"year\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                                   px(x_of(i)), px(bottom + 16), stamp.year());
            }
        }

        // one polyline per run of defined values
        std::string points;
        auto flush = [&] {
            if (!points.empty()) {
                out += fmt::format("    <polyline fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1.2\" points=\"{}\"/>\n",
                                   points);
                points.clear();
            }
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (!panel.values[i]) {
                flush();
                continue;
            }
            if (!points.empty()) {
                points += ' ';
            }
            points += px(x_of(i)) + "," + px(y_of(*panel.values[i]));
        }
        flush();
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace tsdecomp
