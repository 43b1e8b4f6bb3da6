#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "ritz/study.hpp"

namespace ritz {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[40];
    if (std::abs(v - std::round(v)) < 1e-9) {
        std::snprintf(buf, sizeof(buf), "%.0f", v);
    } else {
        std::snprintf(buf, sizeof(buf), "%.1f", v);
    }
    return buf;
}

const char* series_color(std::size_t i) {
    static const char* colors[] = {"#c62828", "#2e7d32", "#1565c0", "#6a1b9a", "#ef6c00"};
    return colors[i % 5];
}

struct PanelSeries {
    const ConvergenceRecord* record;
    std::size_t color_index;
};

struct Extent {
    double lo = 0, hi = 1;
    void include(double v) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    void init(double v) {
        lo = hi = v;
    }
    void pad() {
        if (hi - lo < 1e-12) {
            lo -= 1;
            hi += 1;
        } else {
            const double m = (hi - lo) * 0.06;
            lo -= m;
            hi += m;
        }
    }
};

void draw_marker(std::ostream& os, std::size_t kind, double x, double y, const char* color) {
    switch (kind % 3) {
        case 0: // open square
            os << "<rect x=\"" << fmt(x - 3) << "\" y=\"" << fmt(y - 3)
               << "\" width=\"6\" height=\"6\" fill=\"none\" stroke=\"" << color << "\"/>\n";
            break;
        case 1: // filled square
            os << "<rect x=\"" << fmt(x - 3) << "\" y=\"" << fmt(y - 3)
               << "\" width=\"6\" height=\"6\" fill=\"" << color << "\"/>\n";
            break;
        default: // open circle
            os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
               << "\" r=\"3.2\" fill=\"none\" stroke=\"" << color << "\"/>\n";
            break;
    }
}

} // namespace

void emit_svg(const std::vector<ConvergenceRecord>& records, std::ostream& os) {
    if (records.empty()) throw ConfigError("no records to plot");
    for (const auto& r : records) {
        if (r.rows.empty()) throw ConfigError("record without rows");
    }

    // One panel per state, series grouped by label in input order.
    std::map<int, std::vector<PanelSeries>> panels;
    std::map<std::string, std::size_t> color_of;
    for (const auto& r : records) {
        if (color_of.find(r.label) == color_of.end()) {
            const std::size_t next = color_of.size();
            color_of[r.label] = next;
        }
        panels[r.state].push_back(PanelSeries{&r, color_of[r.label]});
    }

    const int cols = panels.size() > 1 ? 2 : 1;
    const int rows = static_cast<int>((panels.size() + cols - 1) / cols);
    const double panel_w = 380, panel_h = 300;
    const double margin_l = 58, margin_r = 16, margin_t = 34, margin_b = 44;
    const double width = cols * panel_w;
    const double height = rows * panel_h;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
       << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    int index = 0;
    for (const auto& [state, series] : panels) {
        const double ox = (index % cols) * panel_w + margin_l;
        const double oy = (index / cols) * panel_h + margin_t;
        const double plot_w = panel_w - margin_l - margin_r;
        const double plot_h = panel_h - margin_t - margin_b;
        ++index;

        Extent xr, yr;
        bool first = true;
        for (const auto& s : series) {
            for (const auto& row : s.record->rows) {
                const double xv = row.n;
                const double yv = row.log10_error.to_double();
                if (first) {
                    xr.init(xv);
                    yr.init(yv);
                    first = false;
                } else {
                    xr.include(xv);
                    yr.include(yv);
                }
            }
        }
        xr.pad();
        yr.pad();
        const auto map_x = [&](double v) { return ox + (v - xr.lo) / (xr.hi - xr.lo) * plot_w; };
        const auto map_y = [&](double v) { return oy + plot_h - (v - yr.lo) / (yr.hi - yr.lo) * plot_h; };

        os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
        os << "<text x=\"" << fmt(ox + plot_w / 2) << "\" y=\"" << fmt(oy - 14)
           << "\" text-anchor=\"middle\" font-size=\"13\">state " << state << "</text>\n";
        os << "<rect x=\"" << fmt(ox) << "\" y=\"" << fmt(oy) << "\" width=\"" << fmt(plot_w)
           << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"#444\"/>\n";

        for (int t = 0; t <= 4; ++t) {
            const double xv = xr.lo + (xr.hi - xr.lo) * t / 4;
            const double yv = yr.lo + (yr.hi - yr.lo) * t / 4;
            const double px = map_x(xv);
            const double py = map_y(yv);
            os << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(oy + plot_h) << "\" x2=\""
               << fmt(px) << "\" y2=\"" << fmt(oy + plot_h + 4) << "\" stroke=\"#444\"/>\n";
            os << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(oy + plot_h + 16)
               << "\" text-anchor=\"middle\">" << fmt_tick(xv) << "</text>\n";
            os << "<line x1=\"" << fmt(ox - 4) << "\" y1=\"" << fmt(py) << "\" x2=\"" << fmt(ox)
               << "\" y2=\"" << fmt(py) << "\" stroke=\"#444\"/>\n";
            os << "<text x=\"" << fmt(ox - 7) << "\" y=\"" << fmt(py + 4)
               << "\" text-anchor=\"end\">" << fmt_tick(yv) << "</text>\n";
        }
        os << "<text x=\"" << fmt(ox + plot_w / 2) << "\" y=\"" << fmt(oy + plot_h + 32)
           << "\" text-anchor=\"middle\">N</text>\n";
        os << "<text x=\"" << fmt(ox - 44) << "\" y=\"" << fmt(oy + plot_h / 2)
           << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << fmt(ox - 44) << " "
           << fmt(oy + plot_h / 2) << ")\">log10 error</text>\n";

        for (const auto& s : series) {
            const char* color = series_color(s.color_index);
            os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
            for (const auto& row : s.record->rows) {
                os << fmt(map_x(row.n)) << "," << fmt(map_y(row.log10_error.to_double())) << " ";
            }
            os << "\"/>\n";
            for (const auto& row : s.record->rows) {
                draw_marker(os, s.color_index, map_x(row.n),
                            map_y(row.log10_error.to_double()), color);
            }
        }

        double ly = oy + 12;
        for (const auto& s : series) {
            const char* color = series_color(s.color_index);
            const double lx = ox + plot_w - 74;
            draw_marker(os, s.color_index, lx, ly - 4, color);
            os << "<text x=\"" << fmt(lx + 8) << "\" y=\"" << fmt(ly) << "\" fill=\"" << color
               << "\">" << s.record->label << "</text>\n";
            ly += 14;
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
}

} // namespace ritz
