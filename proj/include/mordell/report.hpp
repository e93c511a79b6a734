#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mordell/points.hpp"

namespace mordell {

using Results = std::map<Int, SolutionSet>;

enum class HistogramFilter { all, sixth_power_free };
enum class OutputFormat { json_lines, csv };

struct Histogram {
  std::map<std::size_t, std::size_t> buckets;  // n_k -> number of curves
  std::string range_desc;
  HistogramFilter filter = HistogramFilter::all;
  bool includes_incomplete = false;
};

struct HallRecord {
  Int k;
  Int X;
  long measure_x100;  // round-half-up of 100 * sqrt(X) / |k|

  std::string display() const;  // e.g. "4.26"
};

struct LargeSolution {
  Int k, X, Y;
};

// True iff no prime sixth power divides k; rejects k = 0.
bool sixth_power_free(const Int& k);

// Buckets curves by point count. Throws std::invalid_argument when any
// entry has complete_flag = false, unless allow_incomplete is set (the
// histogram is then marked).
Histogram histogram(const Results& results, HistogramFilter filter,
                    bool allow_incomplete = false);

// All (k, X) keys with X > 0 and sqrt(X)/|k| > threshold, sorted by exact
// measure descending. Display rounding never participates in comparisons.
std::vector<HallRecord> hall_measures(const Results& results,
                                      const Rational& threshold);

// All points with X > x_threshold, sorted by X descending.
std::vector<LargeSolution> large_solutions(const Results& results,
                                           const Int& x_threshold);

// json-lines: one record {"k":..,"n":..,"complete":..,"points":[[X,Y],..]}
// per k in map order. csv: header "k,X,Y,complete" plus one row per point
// (curves without points contribute no csv rows).
void serialize(const Results& results, OutputFormat format, std::ostream& os);
std::string serialize_record(const SolutionSet& s);

// Inverse of serialize. Malformed lines raise std::runtime_error naming the
// line; a declared "n" disagreeing with the point list is malformed.
Results parse_json_lines(std::istream& is);
Results parse_csv(std::istream& is);

struct VerifyIssue {
  Int k;
  std::string message;
};

// Re-checks each record: curve equation at every point, strict (X, Y)
// ordering, and the converse-form certificate (the form (1,0,-X,2Y) with
// solution (1,0) must satisfy the syzygy and map back to (X, +-Y)).
std::vector<VerifyIssue> verify_results(const Results& results);

}  // namespace mordell
