#include "itrisk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "itrisk/errors.hpp"

namespace itrisk::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 56.0;
constexpr double kRight = 16.0;
constexpr double kTop = 22.0;
constexpr double kBottom = 40.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string render_profile_svg(const std::vector<ProfileSeries>& series) {
    if (series.empty()) throw ArgumentError("render_profile_svg: no profiles");

    int max_tick = 1;
    double max_risk = 0.0;
    for (const auto& s : series) {
        if (!s.profile.samples.empty())
            max_tick = std::max(max_tick, s.profile.samples.back().tick);
        max_risk = std::max(max_risk, s.profile.max_risk());
    }
    const double y_top = std::max(1.0, std::ceil(max_risk));

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto x_of = [&](double tick) { return kLeft + plot_w * (tick / max_tick); };
    auto y_of = [&](double risk) { return kTop + plot_h * (1.0 - risk / y_top); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\" "
          "font-family=\"monospace\" font-size=\"11\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";

    // Gridlines and axis labels: integer ticks on x, integer risk on y.
    const int x_step = max_tick <= 40 ? 1 : (max_tick + 39) / 40;
    for (int t = 0; t <= max_tick; t += x_step) {
        const double x = x_of(t);
        os << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(x)
           << "\" y2=\"" << num(kTop + plot_h) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + plot_h + 14)
           << "\" text-anchor=\"middle\">" << t << "</text>\n";
    }
    const int y_step = y_top <= 20 ? 1 : static_cast<int>(std::ceil(y_top / 20.0));
    for (int r = 0; r <= static_cast<int>(y_top); r += y_step) {
        const double y = y_of(r);
        os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\""
           << num(kLeft + plot_w) << "\" y2=\"" << num(y)
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y + 4)
           << "\" text-anchor=\"end\">" << r << "</text>\n";
    }
    os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w)
       << "\" height=\"" << num(plot_h)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 6)
       << "\" text-anchor=\"middle\">tick</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];

        // Step polyline: value of tick t spans x in [t-1, t].
        std::ostringstream points;
        double prev = 0.0;
        points << num(x_of(0)) << "," << num(y_of(0.0));
        for (const auto& sample : s.profile.samples) {
            points << " " << num(x_of(sample.tick - 1)) << "," << num(y_of(prev));
            points << " " << num(x_of(sample.tick - 1)) << "," << num(y_of(sample.risk));
            points << " " << num(x_of(sample.tick)) << "," << num(y_of(sample.risk));
            prev = sample.risk;
        }
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2\" points=\"" << points.str() << "\"/>\n";

        os << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y_of(s.average_risk))
           << "\" x2=\"" << num(kLeft + plot_w) << "\" y2=\"" << num(y_of(s.average_risk))
           << "\" stroke=\"" << color
           << "\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";

        const double legend_y = kTop + 14.0 * (i + 1);
        os << "<line x1=\"" << num(kLeft + plot_w - 150) << "\" y1=\"" << num(legend_y - 4)
           << "\" x2=\"" << num(kLeft + plot_w - 130) << "\" y2=\"" << num(legend_y - 4)
           << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        char avg[32];
        std::snprintf(avg, sizeof(avg), "%.3f", s.average_risk);
        os << "<text x=\"" << num(kLeft + plot_w - 124) << "\" y=\"" << num(legend_y) << "\">"
           << s.label << " (avg " << avg << ")</text>\n";
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace itrisk::svg
