#include <algorithm>
#include <cmath>
#include <sstream>

#include "triwalk/cli.hpp"

namespace triwalk::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

void header(std::ostringstream& os, const std::string& title) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(title) << "</text>\n";
}

}  // namespace

std::string render_line_plot(const LinePlot& plot) {
    std::ostringstream os;
    header(os, plot.title);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    const auto ty = [&](double y) { return plot.log_y ? std::log10(std::max(y, 1e-300)) : y; };
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const auto& [x, y] : plot.points) {
        if (plot.log_y && !(y > 0.0)) continue;
        const double v = ty(y);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = v;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
    }
    if (plot.reference_y) {
        ymin = std::min(ymin, ty(*plot.reference_y));
        ymax = std::max(ymax, ty(*plot.reference_y));
    }
    if (!plot.log_y) ymin = std::min(ymin, 0.0);
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    const auto py = [&](double v) { return kTop + plot_h - (v - ymin) / (ymax - ymin) * plot_h; };

    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
       << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fv = ymin + (ymax - ymin) * i / 4.0;
        os << "<text x=\"" << px(fx) << "\" y=\"" << kTop + plot_h + 16
           << "\" text-anchor=\"middle\">" << fmt(fx) << "</text>\n";
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(fv) + 4 << "\" text-anchor=\"end\">"
           << (plot.log_y ? "1e" + fmt(fv) : fmt(fv)) << "</text>\n";
    }
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
       << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
    os << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << kTop + plot_h / 2 << ")\">" << escape(plot.y_label) << "</text>\n";

    if (plot.reference_y) {
        const double y = py(ty(*plot.reference_y));
        os << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kLeft + plot_w
           << "\" y2=\"" << y << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    }

    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& [x, y] : plot.points) {
        if (plot.log_y && !(y > 0.0)) continue;
        os << px(x) << ',' << py(ty(y)) << ' ';
    }
    os << "\"/>\n";
    if (plot.markers) {
        for (const auto& [x, y] : plot.points) {
            if (plot.log_y && !(y > 0.0)) continue;
            os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(ty(y)) << "\" r=\"2.5\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_heatmap(const Heatmap& map) {
    std::ostringstream os;
    header(os, map.title);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    double vmax = 0.0;
    for (const double v : map.values) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;

    const double cw = plot_w / static_cast<double>(std::max<std::size_t>(map.columns, 1));
    const double ch = plot_h / static_cast<double>(std::max<std::size_t>(map.rows, 1));
    for (std::size_t r = 0; r < map.rows; ++r) {
        for (std::size_t c = 0; c < map.columns; ++c) {
            const double v = map.values[r * map.columns + c];
            if (v <= 0.0) continue;
            // Square-root scale so the ballistic fronts stay visible next to the origin peak.
            const int shade = 255 - static_cast<int>(std::lround(255.0 * std::sqrt(v / vmax)));
            if (shade >= 255) continue;
            // Time runs upward.
            os << "<rect x=\"" << kLeft + c * cw << "\" y=\"" << kTop + plot_h - (r + 1) * ch
               << "\" width=\"" << cw + 0.05 << "\" height=\"" << ch + 0.05 << "\" fill=\"rgb("
               << shade << ',' << shade << ',' << shade << ")\"/>\n";
        }
    }
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
       << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kLeft << "\" y=\"" << kTop + plot_h + 16 << "\" text-anchor=\"middle\">"
       << fmt(map.x_min) << "</text>\n";
    os << "<text x=\"" << kLeft + plot_w << "\" y=\"" << kTop + plot_h + 16
       << "\" text-anchor=\"middle\">" << fmt(map.x_max) << "</text>\n";
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
       << "\" text-anchor=\"middle\">n</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">"
       << fmt(map.y_max) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + plot_h << "\" text-anchor=\"end\">0</text>\n";
    os << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << kTop + plot_h / 2 << ")\">t</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace triwalk::cli
