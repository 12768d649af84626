#pragma once

#include <string>
#include <vector>

#include "mopf/algorithms.hpp"
#include "mopf/core.hpp"
#include "mopf/problems.hpp"

namespace mopf {

/// CSV with header x_1..x_n,f_1..f_l; values at 12 significant digits in
/// the archive's deterministic order. Throws on an empty archive.
std::string front_to_csv(const ProblemDef& p, const FrontArchive& a);

/// JSON array of {"x": [...], "f": [...]} objects, same formatting rules.
std::string front_to_json(const ProblemDef& p, const FrontArchive& a);

/// Static SVG scatter. A two-index projection plots f_i vs f_j directly;
/// a three-index projection renders a fixed-angle axonometric view.
/// Indices are 1-based. Output bytes depend only on the archive.
std::string front_to_svg(const FrontArchive& a, const std::vector<int>& projection);

void export_front_csv(const ProblemDef& p, const FrontArchive& a, const std::string& path);
void export_front_json(const ProblemDef& p, const FrontArchive& a, const std::string& path);
void emit_plot_svg(const FrontArchive& a, const std::vector<int>& projection,
                   const std::string& path);

std::string report_to_json(const RunReport& r);
void write_report_json(const RunReport& r, const std::string& path);

}  // namespace mopf
