#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crosstalk/spectra.hpp"

namespace crosstalk {

// 9 significant digits, lowercase scientific notation; NaN prints as "nan".
// Shared by the CSV and JSON writers so outputs are byte-stable across runs.
std::string format9(double v);

struct OutputHeader {
    std::string command;
    std::optional<double> scale_A_MHz;  // Einstein A coefficient, ordinary MHz
};

// Flat schema: one row per scan point; stacked results are distinguished by
// the trailing engine column. A `#`-prefixed header block records the fully
// resolved parameters so any row is reproducible from the header alone.
void write_scan_csv(std::ostream& out, const OutputHeader& header,
                    const std::vector<const ScanResult*>& results);

// Same rows as an array of objects plus a `params` object; numbers are
// serialized as decimal strings at 9 significant digits.
void write_scan_json(std::ostream& out, const OutputHeader& header,
                     const std::vector<const ScanResult*>& results);

}  // namespace crosstalk
