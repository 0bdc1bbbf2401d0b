#include "gfit/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace gfit {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

bool parse_number(const std::string& text, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(text, &pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return pos == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

double require_number(const std::string& text, std::size_t row,
                      std::size_t col) {
  double value = 0.0;
  if (!parse_number(text, value)) {
    std::ostringstream msg;
    msg << "row " << row << ", column " << col + 1 << ": not a number: '"
        << text << "'";
    throw ParseError(msg.str());
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Dataset read_dataset(std::istream& in) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 2) {
      std::ostringstream msg;
      msg << "row " << row << ": expected 2 columns, got " << fields.size();
      throw ParseError(msg.str());
    }
    double x = 0.0;
    if (row == 1 && !parse_number(fields[0], x)) {
      continue;  // header row
    }
    xs.push_back(require_number(fields[0], row, 0));
    ys.push_back(require_number(fields[1], row, 1));
  }
  if (xs.size() < 3) {
    throw TooFewPoints("dataset file holds fewer than 3 points");
  }
  return Dataset(std::move(xs), std::move(ys));
}

Dataset read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return read_dataset(in);
}

std::string write_dataset_csv(const Dataset& data) {
  std::ostringstream out;
  out << "x,y\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out << format_double(data.xs()[i]) << ',' << format_double(data.ys()[i])
        << '\n';
  }
  return out.str();
}

std::string write_fit(const FitResult& result, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "algorithm,A,mu,sigma,iterations_used,points_used,"
           "dropped_nonpositive\n";
    out << algorithm_name(result.algorithm) << ','
        << format_double(result.params.amplitude) << ','
        << format_double(result.params.mean) << ','
        << format_double(result.params.sigma) << ',' << result.iterations_used
        << ',' << result.points_used << ',' << result.dropped_nonpositive
        << '\n';
    return out.str();
  }
  nlohmann::json j{{"algorithm", algorithm_name(result.algorithm)},
                   {"A", result.params.amplitude},
                   {"mu", result.params.mean},
                   {"sigma", result.params.sigma},
                   {"iterations_used", result.iterations_used},
                   {"points_used", result.points_used},
                   {"dropped_nonpositive", result.dropped_nonpositive}};
  return j.dump(2) + "\n";
}

std::string write_sweep(const std::vector<Algorithm>& algorithms,
                        const std::vector<SweepRow>& rows,
                        OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "axis_value";
    for (Algorithm a : algorithms) {
      out << ',' << algorithm_name(a) << "_mean_are_pct,"
          << algorithm_name(a) << "_worst_are_pct";
    }
    out << ",theoretical_worst_pct";
    for (Algorithm a : algorithms) {
      out << ',' << algorithm_name(a) << "_failures";
    }
    out << '\n';
    for (const SweepRow& row : rows) {
      out << format_double(row.axis_value);
      for (std::size_t a = 0; a < algorithms.size(); ++a) {
        out << ',' << format_double(row.stats[a].mean_are_pct) << ','
            << format_double(row.stats[a].worst_are_pct);
      }
      out << ',' << format_double(row.theoretical_worst_pct);
      for (std::size_t a = 0; a < algorithms.size(); ++a) {
        out << ',' << row.stats[a].failures;
      }
      out << '\n';
    }
    return out.str();
  }
  nlohmann::json j = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    nlohmann::json jr{{"axis_value", row.axis_value},
                      {"theoretical_worst_pct", row.theoretical_worst_pct}};
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      jr[algorithm_name(algorithms[a])] = {
          {"mean_are_pct", row.stats[a].mean_are_pct},
          {"worst_are_pct", row.stats[a].worst_are_pct},
          {"failures", row.stats[a].failures}};
    }
    j.push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::pair<std::vector<Algorithm>, std::vector<SweepRow>> read_sweep_csv(
    std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty sweep file");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  const std::vector<std::string> header = split_csv_line(line);
  if (header.empty() || header[0] != "axis_value") {
    throw ParseError("sweep header must start with axis_value");
  }

  std::vector<Algorithm> algorithms;
  std::size_t col = 1;
  const std::string mean_suffix = "_mean_are_pct";
  while (col + 1 < header.size() &&
         header[col].size() > mean_suffix.size() &&
         header[col].compare(header[col].size() - mean_suffix.size(),
                             mean_suffix.size(), mean_suffix) == 0) {
    const std::string name =
        header[col].substr(0, header[col].size() - mean_suffix.size());
    const std::optional<Algorithm> algo = parse_algorithm(name);
    if (!algo) {
      throw ParseError("unknown algorithm in header: " + name);
    }
    algorithms.push_back(*algo);
    col += 2;
  }
  const std::size_t expected_cols = 2 + 3 * algorithms.size();
  if (header.size() != expected_cols) {
    throw ParseError("sweep header has unexpected column count");
  }

  std::vector<SweepRow> rows;
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != expected_cols) {
      std::ostringstream msg;
      msg << "row " << row_no << ": expected " << expected_cols
          << " columns, got " << fields.size();
      throw ParseError(msg.str());
    }
    SweepRow row;
    row.axis_value = require_number(fields[0], row_no, 0);
    row.stats.resize(algorithms.size());
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      row.stats[a].mean_are_pct = require_number(fields[1 + 2 * a], row_no, 1 + 2 * a);
      row.stats[a].worst_are_pct =
          require_number(fields[2 + 2 * a], row_no, 2 + 2 * a);
    }
    const std::size_t theo_col = 1 + 2 * algorithms.size();
    row.theoretical_worst_pct = require_number(fields[theo_col], row_no, theo_col);
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      row.stats[a].failures = static_cast<std::int64_t>(
          require_number(fields[theo_col + 1 + a], row_no, theo_col + 1 + a));
    }
    rows.push_back(std::move(row));
  }
  return {std::move(algorithms), std::move(rows)};
}

}  // namespace gfit
