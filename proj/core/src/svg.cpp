#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/report.hpp"
#include "report_detail.hpp"

namespace casimir::report {

namespace {

std::vector<std::string> split_list(std::string_view csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string token(csv.substr(start, comma - start));
        // trim spaces
        const auto a = token.find_first_not_of(' ');
        const auto b = token.find_last_not_of(' ');
        if (a != std::string::npos) out.push_back(token.substr(a, b - a + 1));
        start = comma + 1;
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr const char* dashes[] = {"", "8 4", "2 3", "8 3 2 3", "12 3", "4 4"};

} // namespace

void emit_svg(const SweepTable& table, std::string_view quantities,
              const std::filesystem::path& destination) {
    if (table.rows.empty()) {
        throw DomainError("emit_svg: empty table");
    }
    const std::vector<std::string> tokens = split_list(quantities);
    if (tokens.empty()) {
        throw DomainError("emit_svg: no quantities requested");
    }
    std::vector<const detail::Column*> cols;
    for (const auto& t : tokens) {
        const detail::Column* c = detail::find_column(t);
        if (c == nullptr) {
            throw DomainError("emit_svg: unknown quantity '" + t + "'");
        }
        cols.push_back(c);
    }

    // Unique material names in row order (rows are sorted by material).
    std::vector<std::string> materials;
    for (const auto& row : table.rows) {
        if (materials.empty() || materials.back() != row.material) {
            materials.push_back(row.material);
        }
    }

    struct Series {
        std::string label;
        std::vector<std::pair<double, double>> pts; // (log10 L_um, value)
        int color_index;
        int dash_index;
    };
    std::vector<Series> series;
    double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
    for (std::size_t q = 0; q < cols.size(); ++q) {
        for (std::size_t m = 0; m < materials.size(); ++m) {
            Series s;
            s.label = materials[m] + " " + tokens[q];
            s.color_index = static_cast<int>(m % (sizeof(palette) / sizeof(palette[0])));
            s.dash_index = static_cast<int>(q % (sizeof(dashes) / sizeof(dashes[0])));
            for (const auto& row : table.rows) {
                if (row.material != materials[m]) continue;
                const double x = std::log10(row.rep.L * 1e6);
                const double y = cols[q]->get(row.rep);
                if (!std::isfinite(y)) {
                    throw DomainError("emit_svg: quantity '" + tokens[q] +
                                      "' has non-finite values");
                }
                s.pts.emplace_back(x, y);
                x_min = std::min(x_min, x);
                x_max = std::max(x_max, x);
                y_min = std::min(y_min, y);
                y_max = std::max(y_max, y);
            }
            series.push_back(std::move(s));
        }
    }
    if (y_min == y_max) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const double W = 860, H = 520;
    const double left = 70, right = W - 190, top = 30, bottom = H - 50;
    auto X = [&](double x) { return left + (x - x_min) / (x_max - x_min) * (right - left); };
    auto Y = [&](double y) { return bottom - (y - y_min) / (y_max - y_min) * (bottom - top); };

    std::string svg;
    svg.reserve(64 * 1024);
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
                  "viewBox=\"0 0 %g %g\" font-family=\"sans-serif\" font-size=\"12\">\n",
                  W, H, W, H);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Frame.
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" fill=\"none\" "
                  "stroke=\"black\"/>\n",
                  num(left).c_str(), num(top).c_str(), num(right - left).c_str(),
                  num(bottom - top).c_str());
    svg += buf;

    // Log-x ticks at decades and at 2x/5x subdivisions.
    const int d_lo = static_cast<int>(std::floor(x_min - 1e-9));
    const int d_hi = static_cast<int>(std::ceil(x_max + 1e-9));
    for (int d = d_lo; d <= d_hi; ++d) {
        for (double mult : {1.0, 2.0, 5.0}) {
            const double x = d + std::log10(mult);
            if (x < x_min - 1e-9 || x > x_max + 1e-9) continue;
            const bool major = mult == 1.0;
            std::snprintf(buf, sizeof(buf),
                          "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"%s\"/>\n",
                          num(X(x)).c_str(), num(bottom).c_str(), num(X(x)).c_str(),
                          num(bottom + (major ? 6.0 : 3.0)).c_str(),
                          major ? "black" : "#888888");
            svg += buf;
            if (major) {
                std::snprintf(buf, sizeof(buf),
                              "<text x=\"%s\" y=\"%s\" text-anchor=\"middle\">%s</text>\n",
                              num(X(x)).c_str(), num(bottom + 20).c_str(),
                              tick_label(std::pow(10.0, d)).c_str());
                svg += buf;
            }
        }
    }
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%s\" y=\"%s\" text-anchor=\"middle\">L [um]</text>\n",
                  num(0.5 * (left + right)).c_str(), num(H - 10).c_str());
    svg += buf;

    // Linear y ticks.
    for (int i = 0; i <= 5; ++i) {
        const double y = y_min + (y_max - y_min) * i / 5.0;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"black\"/>\n",
                      num(left - 6).c_str(), num(Y(y)).c_str(), num(left).c_str(),
                      num(Y(y)).c_str());
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%s\" y=\"%s\" text-anchor=\"end\">%s</text>\n",
                      num(left - 9).c_str(), num(Y(y) + 4).c_str(), tick_label(y).c_str());
        svg += buf;
    }

    // Data.
    for (const auto& s : series) {
        std::string pts;
        pts.reserve(s.pts.size() * 16);
        for (const auto& [x, y] : s.pts) {
            pts += num(X(x));
            pts += ',';
            pts += num(Y(y));
            pts += ' ';
        }
        if (!pts.empty()) pts.pop_back();
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += palette[s.color_index];
        svg += "\" stroke-width=\"1.5\"";
        if (dashes[s.dash_index][0] != '\0') {
            svg += " stroke-dasharray=\"";
            svg += dashes[s.dash_index];
            svg += "\"";
        }
        svg += " points=\"" + pts + "\"/>\n";
    }

    // Legend.
    double ly = top + 10;
    for (const auto& s : series) {
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"%s\" "
                      "stroke-width=\"1.5\"%s%s%s/>\n",
                      num(right + 10).c_str(), num(ly).c_str(), num(right + 40).c_str(),
                      num(ly).c_str(), palette[s.color_index],
                      dashes[s.dash_index][0] != '\0' ? " stroke-dasharray=\"" : "",
                      dashes[s.dash_index][0] != '\0' ? dashes[s.dash_index] : "",
                      dashes[s.dash_index][0] != '\0' ? "\"" : "");
        svg += buf;
        std::snprintf(buf, sizeof(buf), "<text x=\"%s\" y=\"%s\">%s</text>\n",
                      num(right + 46).c_str(), num(ly + 4).c_str(), s.label.c_str());
        svg += buf;
        ly += 18;
    }

    svg += "</svg>\n";
    detail::atomic_write(destination, svg);
}

} // namespace casimir::report
