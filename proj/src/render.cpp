#include "subsum/render.hpp"

#include "subsum/error.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace subsum {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

constexpr double kSize = 1000.0;
constexpr double kMargin = 70.0;
constexpr double kPlot = kSize - 2 * kMargin;

double px(double a) { return kMargin + a * kPlot; }
double py(double b) { return kSize - kMargin - b * kPlot; }

SweepCell classify_cell(const Rational& alpha, const Rational& beta, const SweepOptions& opts) {
    SweepCell cell;
    cell.alpha = alpha;
    cell.beta = beta;
    cell.lambda = (1 - alpha) * (1 - beta);
    cell.feasible = bigeometric_feasible(alpha, beta);
    try {
        ClassifyOptions co;
        co.cap = opts.cap;
        co.max_digit_base = opts.max_digit_base;
        co.horizon = 8;
        const Verdict v = classify(bigeometric(alpha, beta), co);
        cell.verdict = v.kind;
        cell.certificate = v.certificate;
        cell.components = v.exact_count;
    } catch (const Error& e) {
        cell.error = e.what();
    }
    return cell;
}

}  // namespace

std::string bar_chart(const IntervalUnion& u, unsigned width_px, unsigned height_px) {
    const ClosedInterval h = hull(u);
    const Rational span = h.length();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\"" << height_px
        << "\" viewBox=\"0 0 " << width_px << ' ' << height_px << "\">\n";
    out << "<rect width=\"" << width_px << "\" height=\"" << height_px << "\" fill=\"#ffffff\"/>\n";
    for (const auto& c : u.intervals()) {
        double x = 0;
        double w = width_px;
        if (span > 0) {
            x = to_double((c.left - h.left) / span) * width_px;
            w = to_double(c.length() / span) * width_px;
        }
        // Points still get a visible hairline.
        if (w < 0.5) w = 0.5;
        out << "<rect x=\"" << fmt(x) << "\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << height_px
            << "\" fill=\"#1f3b73\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

bool bigeometric_feasible(const Rational& alpha, const Rational& beta) {
    return alpha <= beta / (1 - beta) && beta <= alpha / (1 - alpha);
}

SweepGrid sweep(const SweepOptions& opts) {
    if (opts.alpha_steps < 2 || opts.beta_steps < 2) {
        throw Error(ErrorCode::InvalidSpec, "sweep resolution must be at least 2");
    }
    std::vector<std::pair<Rational, Rational>> points;
    for (std::uint64_t j = 0; j < opts.beta_steps; ++j) {
        for (std::uint64_t i = 0; i < opts.alpha_steps; ++i) {
            const auto a = static_cast<std::int64_t>(opts.alpha_steps);
            const auto b = static_cast<std::int64_t>(opts.beta_steps);
            points.emplace_back(fraction(2 * static_cast<std::int64_t>(i) + 1, 2 * a),
                                fraction(2 * static_cast<std::int64_t>(j) + 1, 2 * b));
        }
    }
    const std::size_t grid_cells = points.size();
    points.insert(points.end(), opts.markers.begin(), opts.markers.end());

    SweepGrid grid;
    grid.alpha_steps = opts.alpha_steps;
    grid.beta_steps = opts.beta_steps;
    grid.cells.resize(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < points.size(); k = next++) {
            grid.cells[k] = classify_cell(points[k].first, points[k].second, opts);
            grid.cells[k].marker = k >= grid_cells;
        }
    };
    unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return grid;
}

std::string sweep_csv(const SweepGrid& grid) {
    std::ostringstream out;
    out << "alpha,beta,lambda,verdict,certificate,feasible\n";
    for (const auto& c : grid.cells) {
        out << to_string(c.alpha) << ',' << to_string(c.beta) << ',' << to_string(c.lambda) << ','
            << (c.error.empty() ? verdict_name(c.verdict) : "Error") << ','
            << (c.error.empty() ? certificate_name(c.certificate) : "") << ',' << (c.feasible ? "true" : "false")
            << '\n';
    }
    return out.str();
}

std::string_view sweep_color(const SweepCell& cell) {
    if (!cell.error.empty()) return "#bab0ac";
    if (!cell.feasible) return "url(#hatch)";
    switch (cell.verdict) {
        case VerdictKind::FiniteUnion: return cell.components == std::optional<std::uint64_t>(1) ? "#4e79a7" : "#76b7b2";
        case VerdictKind::CantorSet: return "#e15759";
        case VerdictKind::SymmetricCantorval: return "#59a14f";
        case VerdictKind::Undetermined: return "#ffffff";
        default: return "#bab0ac";
    }
}

std::string sweep_svg(const SweepGrid& grid) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    out << "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\"><rect width=\"8\" height=\"8\" fill=\"#eeeeee\"/>"
           "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#999999\" stroke-width=\"2\"/></pattern></defs>\n";
    out << "<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";

    const double cw = kPlot / static_cast<double>(grid.alpha_steps);
    const double ch = kPlot / static_cast<double>(grid.beta_steps);
    for (const auto& c : grid.cells) {
        if (c.marker) continue;
        const double a = to_double(c.alpha);
        const double b = to_double(c.beta);
        const std::string_view fill = sweep_color(c);
        out << "<rect x=\"" << fmt(px(a) - cw / 2) << "\" y=\"" << fmt(py(b) - ch / 2) << "\" width=\"" << fmt(cw)
            << "\" height=\"" << fmt(ch) << "\" fill=\"" << fill << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    }

    auto curve = [&](auto f, const char* colour, const char* dash) {
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"" << dash << " points=\"";
        bool first = true;
        for (int k = 0; k <= 400; ++k) {
            const double a = k / 400.0;
            const auto p = f(a);
            if (p.first < 0 || p.first > 1 || p.second < 0 || p.second > 1) continue;
            out << (first ? "" : " ") << fmt(px(p.first)) << ',' << fmt(py(p.second));
            first = false;
        }
        out << "\"/>\n";
    };
    // beta = alpha/(1-alpha) and alpha = beta/(1-beta): monotonicity constraints.
    curve([](double a) { return std::pair{a, a / (1 - a)}; }, "#333333", "");
    curve([](double b) { return std::pair{b / (1 - b), b}; }, "#333333", "");
    // lambda = 1/4.
    curve([](double a) { return std::pair{a, (3 - 4 * a) / (4 - 4 * a)}; }, "#b07aa1", " stroke-dasharray=\"8 4\"");
    curve([](double t) { return std::pair{0.5, t}; }, "#888888", " stroke-dasharray=\"2 4\"");
    curve([](double t) { return std::pair{t, 0.5}; }, "#888888", " stroke-dasharray=\"2 4\"");

    for (const auto& c : grid.cells) {
        if (!c.marker) continue;
        out << "<circle cx=\"" << fmt(px(to_double(c.alpha))) << "\" cy=\"" << fmt(py(to_double(c.beta)))
            << "\" r=\"7\" fill=\"" << sweep_color(c) << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }

    out << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(kPlot)
        << "\" height=\"" << fmt(kPlot) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
    out << "<text x=\"500\" y=\"975\" font-size=\"22\" text-anchor=\"middle\">alpha</text>\n";
    out << "<text x=\"25\" y=\"500\" font-size=\"22\" text-anchor=\"middle\" transform=\"rotate(-90 25 500)\">"
           "beta</text>\n";
    out << "<text x=\"" << fmt(kMargin) << "\" y=\"955\" font-size=\"14\">0</text>\n";
    out << "<text x=\"" << fmt(kSize - kMargin) << "\" y=\"955\" font-size=\"14\" text-anchor=\"end\">1</text>\n";

    const std::pair<const char*, const char*> legend[] = {
        {"#4e79a7", "interval"},   {"#76b7b2", "finite union"}, {"#e15759", "Cantor set"},
        {"#59a14f", "Cantorval"},  {"#ffffff", "undetermined"}, {"url(#hatch)", "not non-increasing"},
    };
    double lx = kMargin;
    for (const auto& [colour, label] : legend) {
        out << "<rect x=\"" << fmt(lx) << "\" y=\"20\" width=\"18\" height=\"18\" fill=\"" << colour
            << "\" stroke=\"#000000\"/>\n";
        out << "<text x=\"" << fmt(lx + 24) << "\" y=\"34\" font-size=\"14\">" << label << "</text>\n";
        lx += 145;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace subsum
