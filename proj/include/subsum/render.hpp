#pragma once

#include "subsum/classifier.hpp"
#include "subsum/interval_set.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace subsum {

/// SVG bar graph: the hull is stretched over the full width and every
/// component becomes a filled bar. Throws EmptyUnion.
std::string bar_chart(const IntervalUnion& u, unsigned width_px, unsigned height_px);

/// Writes text to a file, throwing IoError on failure.
void write_file(const std::string& path, const std::string& contents);

struct SweepCell {
    Rational alpha;
    Rational beta;
    Rational lambda;  // (1 - alpha)(1 - beta)
    VerdictKind verdict = VerdictKind::Undetermined;
    Certificate certificate = Certificate::InfinitelyManyComponents;
    std::optional<std::uint64_t> components;
    bool feasible = false;  // alpha <= beta/(1-beta) and beta <= alpha/(1-alpha)
    bool marker = false;    // an extra named point rather than a grid cell
    std::string error;      // non-empty when classification failed
};

struct SweepOptions {
    std::uint64_t alpha_steps = 21;
    std::uint64_t beta_steps = 21;
    std::size_t cap = std::size_t{1} << 16;
    std::uint64_t max_digit_base = 12;
    unsigned threads = 0;  // 0 picks the hardware concurrency
    /// Extra points classified after the grid, e.g. the ratios (9/20, 6/11).
    std::vector<std::pair<Rational, Rational>> markers{{Rational(9, 20), Rational(6, 11)}};
};

struct SweepGrid {
    std::uint64_t alpha_steps = 0;
    std::uint64_t beta_steps = 0;
    std::vector<SweepCell> cells;  // row-major: beta index outer, alpha index inner; markers last
};

/// Cell (i, j) sits at alpha = (2i+1)/(2 alpha_steps), beta = (2j+1)/(2 beta_steps).
SweepGrid sweep(const SweepOptions& options = {});

bool bigeometric_feasible(const Rational& alpha, const Rational& beta);

/// CSV with header alpha,beta,lambda,verdict,certificate,feasible.
std::string sweep_csv(const SweepGrid& grid);

/// 1000x1000 SVG map of the (alpha, beta) unit square.
std::string sweep_svg(const SweepGrid& grid);

/// Fill colour used for a cell in sweep_svg (also documented in the README).
std::string_view sweep_color(const SweepCell& cell);

}  // namespace subsum
