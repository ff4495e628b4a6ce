#include "mompoly/report_io.hpp"

#include "mompoly/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mompoly {

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string seq_kind_name(MomentSequence::Kind kind) {
    switch (kind) {
        case MomentSequence::Kind::Factorial: return "factorial";
        case MomentSequence::Kind::GammaPower: return "gammapower";
        case MomentSequence::Kind::QFactorial: return "qfactorial";
        case MomentSequence::Kind::Custom: return "custom";
    }
    return "";
}

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "family,seq_kind,param,n,x,y_generalized,y_classical,abs_diff\n";
    std::string family = family_name(result.family);
    std::string kind = seq_kind_name(result.kind);
    for (const SweepRow& row : result.rows) {
        std::string param = format_float(row.param.convert_to<double>());
        for (const SweepPoint& pt : row.points) {
            out << family << ',' << kind << ',' << param << ',' << result.n << ','
                << format_float(pt.x) << ',' << format_float(pt.y_generalized) << ','
                << format_float(pt.y_classical) << ','
                << format_float(std::fabs(pt.y_generalized - pt.y_classical)) << '\n';
        }
    }
    return out.str();
}

nlohmann::json sweep_to_json(const SweepResult& result, const nlohmann::json& config) {
    nlohmann::json j;
    j["config"] = config;
    j["normalization"] = result.normalization;
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : result.rows) {
        nlohmann::json r;
        r["param"] = Scalar(row.param).str();
        r["sup_distance"] = row.sup_distance;
        nlohmann::json points = nlohmann::json::array();
        for (const SweepPoint& pt : row.points)
            points.push_back({{"x", pt.x},
                              {"y_generalized", pt.y_generalized},
                              {"y_classical", pt.y_classical}});
        r["points"] = std::move(points);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

namespace {

const char* kPalette[] = {"#d62728", "#9467bd", "#1f77b4", "#2ca02c", "#ff7f0e", "#8c564b"};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

} // namespace

std::string sweep_to_svg(const SweepResult& result) {
    const double width = 800.0, height = 500.0;
    const double left = 60.0, right = 20.0, top = 20.0, bottom = 45.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_lo = result.grid.lo, x_hi = result.grid.hi;
    double y_lo = 0.0, y_hi = 0.0;
    bool first = true;
    for (const SweepRow& row : result.rows) {
        for (const SweepPoint& pt : row.points) {
            for (double v : {pt.y_generalized, pt.y_classical}) {
                if (first || v < y_lo) y_lo = v;
                if (first || v > y_hi) y_hi = v;
                first = false;
            }
        }
    }
    double pad = 0.05 * std::max(y_hi - y_lo, 1e-12);
    y_lo -= pad;
    y_hi += pad;

    auto map_x = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto map_y = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * plot_h; };

    auto polyline = [&](const std::vector<SweepPoint>& pts, bool classical) {
        std::string d;
        for (const SweepPoint& pt : pts) {
            d += px(map_x(pt.x));
            d += ',';
            d += px(map_y(classical ? pt.y_classical : pt.y_generalized));
            d += ' ';
        }
        if (!d.empty()) d.pop_back();
        return d;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"500\" viewBox=\"0 0 800 500\">\n";
    svg << "<rect x=\"" << px(left) << "\" y=\"" << px(top) << "\" width=\"" << px(plot_w)
        << "\" height=\"" << px(plot_h) << "\" fill=\"white\" stroke=\"#333333\"/>\n";

    // axis extremes
    svg << "<text x=\"" << px(left) << "\" y=\"" << px(height - 15.0)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << tick(x_lo) << "</text>\n";
    svg << "<text x=\"" << px(width - right - 40.0) << "\" y=\"" << px(height - 15.0)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << tick(x_hi) << "</text>\n";
    svg << "<text x=\"8\" y=\"" << px(map_y(y_lo)) << "\" font-family=\"sans-serif\" "
           "font-size=\"13\">" << tick(y_lo) << "</text>\n";
    svg << "<text x=\"8\" y=\"" << px(map_y(y_hi) + 10.0) << "\" font-family=\"sans-serif\" "
           "font-size=\"13\">" << tick(y_hi) << "</text>\n";

    if (!result.rows.empty()) {
        svg << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2.5\" points=\""
            << polyline(result.rows.front().points, true) << "\"/>\n";
    }
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
            << polyline(result.rows[i].points, false) << "\"/>\n";
    }

    std::string param_label =
        result.kind == MomentSequence::Kind::GammaPower ? "mu" : "q";
    double legend_x = width - right - 150.0;
    double legend_y = top + 18.0;
    svg << "<text x=\"" << px(legend_x) << "\" y=\"" << px(legend_y)
        << "\" font-family=\"sans-serif\" font-size=\"13\">classical "
        << family_name(result.family) << " n=" << result.n << "</text>\n";
    svg << "<line x1=\"" << px(legend_x - 40.0) << "\" y1=\"" << px(legend_y - 4.0) << "\" x2=\""
        << px(legend_x - 8.0) << "\" y2=\"" << px(legend_y - 4.0)
        << "\" stroke=\"#000000\" stroke-width=\"2.5\"/>\n";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        double y = legend_y + 18.0 * (i + 1);
        svg << "<line x1=\"" << px(legend_x - 40.0) << "\" y1=\"" << px(y - 4.0) << "\" x2=\""
            << px(legend_x - 8.0) << "\" y2=\"" << px(y - 4.0) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << px(legend_x) << "\" y=\"" << px(y)
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << param_label << "="
            << format_float(result.rows[i].param.convert_to<double>()) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

nlohmann::json bound_to_json(const BoundReport& report, const nlohmann::json& config) {
    auto roots_json = [](const RootSet& set) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& z : set.roots) arr.push_back({z.real(), z.imag()});
        return arr;
    };
    nlohmann::json j;
    j["config"] = config;
    j["roots_f"] = roots_json(report.roots_f);
    j["roots_g"] = roots_json(report.roots_g);
    j["matched_distance"] = report.matched;
    j["bound"] = report.bound;
    j["gamma"] = report.gamma;
    j["coeff_diffs"] = report.coeff_diffs;
    return j;
}

} // namespace mompoly
