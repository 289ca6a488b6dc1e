#pragma once

#include <string>
#include <string_view>

#include "urlab/analysis.hpp"
#include "urlab/sweep.hpp"

namespace urlab {

enum class Format { json, md, csv };

/// Throws std::invalid_argument on anything but json, md, csv.
Format parse_format(std::string_view name);

/// Byte-stable renderings; markdown columns are n, key, expected, observed, seeds, pass.
std::string render_report(const SweepReport& report, Format format);
std::string render_report(const AnalysisReport& report, const GAlgebra& alg, Format format);

}  // namespace urlab
