#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chiforge/decompose.hpp"

namespace chiforge {

// Certificate dump for one colored graph. Carries the graph itself (as
// graph6) so the standalone checker needs nothing else.
std::string certificate_to_json(const Graph& g, const std::string& class_name,
                                const BoundedColoring& bc);

// Parses a dump produced above and re-verifies everything from scratch:
// proper coloring, color count against the recomputed class bound, block
// partition and every block tag. Throws CertificateError / ParseError.
void check_certificate_json(const std::string& json_text);

// Fixed CSV column order:
// source,index,graph6,n,class,member,omega,chi_exact,k_algorithm,bound,verdict,runtime_ms
// Timings are nondeterministic, so runtime_ms is written as 0 unless
// include_timing is set; everything else is byte-stable for fixed inputs.
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r, bool include_timing = false);
std::string bound_report_json(const BoundReport& r, bool include_timing = false);

}  // namespace chiforge
