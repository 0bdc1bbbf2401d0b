#ifndef GFIT_IO_HPP
#define GFIT_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gfit/bench.hpp"
#include "gfit/fitters.hpp"
#include "gfit/model.hpp"

namespace gfit {

enum class OutputFormat { Csv, Json };

// Two-column numeric CSV (x, y), optional header row detected by a
// non-numeric first field. x must be strictly increasing; violations
// are load errors, never silently sorted.
Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);

std::string write_dataset_csv(const Dataset& data);

// Columns: algorithm,A,mu,sigma,iterations_used,points_used,
// dropped_nonpositive. JSON mirrors the field names.
std::string write_fit(const FitResult& result, OutputFormat format);

// Columns: axis_value, per-algorithm <name>_mean_are_pct and
// <name>_worst_are_pct, theoretical_worst_pct, per-algorithm
// <name>_failures. Floats carry 17 significant digits.
std::string write_sweep(const std::vector<Algorithm>& algorithms,
                        const std::vector<SweepRow>& rows,
                        OutputFormat format);

// Inverse of write_sweep's CSV form; returns the algorithm list decoded
// from the header together with the rows.
std::pair<std::vector<Algorithm>, std::vector<SweepRow>> read_sweep_csv(
    std::istream& in);

// Shortest lossless decimal form (17 significant digits).
std::string format_double(double value);

}  // namespace gfit

#endif  // GFIT_IO_HPP
