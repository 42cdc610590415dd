#pragma once

#include <string>
#include <utility>

#include "semispec/pipeline.hpp"

namespace semispec {

// Pair file format: {"a": {"n": 2, "data": [[[re,im],...],...]}, "b": {...}},
// row-major, each entry a two-element [re, im] array. Malformed input
// throws Errc::BadInput with a row/field diagnostic.
std::pair<Mat, Mat> pair_from_json(const std::string& text);
std::string pair_to_json(const Mat& a, const Mat& b);

// Versioned report: top-level "schema": 1.
std::string report_to_json(const SemidistanceReport& rep);

// Plot data tables: "sequence" (n vs log||c_n|| and the n-th root),
// "spectra" (scatter of both spectra), "wset" (active-pair distances).
std::string report_to_csv(const SemidistanceReport& rep, const std::string& table);

} // namespace semispec
