// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_IO_HPP_
#define NSEXACT_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsexact/classifier.hpp"
#include "nsexact/families.hpp"
#include "nsexact/verifier.hpp"

namespace nsexact {

/// A catalog member together with the grid it is sampled on; the grid's
/// domain is the member's domain.
struct RunConfig {
  FlowSolution solution = Constant{};
  GridSpec grid;

  const ConeDomain& domain() const { return grid.domain; }
  friend bool operator==(const RunConfig& a, const RunConfig& b);
};

/// key=value lines, '#' comments. Keys: family, lambda, c1..c5, domain
/// (fullplane | sector), alpha, beta, rmin, rmax, nr, ntheta.
/// Throws ParseError (with line number), ConstraintViolation for quadratic
/// constants, and Inadmissible for a family/domain pair outside the catalog.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Inverse of parse_config; numbers carry 17 significant digits.
std::string render_config(const RunConfig& cfg);

struct ExportSummary {
  std::size_t rows = 0;
  std::size_t nan_rows = 0;
};

inline constexpr const char* kCsvHeader = "x,y,u1,u2,p,w";

/// CSV "x,y,u1,u2,p,w", rows in grid order (r, then theta). Values that
/// cannot be evaluated are written as "nan".
ExportSummary export_grid(const FlowSolution& s, const GridSpec& g, std::ostream& out);
ExportSummary export_grid(const FlowSolution& s, const GridSpec& g, const std::string& path);

struct GridTable {
  std::vector<double> x, y, u1, u2, p, w;
  std::size_t size() const { return x.size(); }
};

/// Throws ParseError on a bad header or row.
GridTable read_grid_csv(std::istream& in);
GridTable read_grid_csv_file(const std::string& path);

inline constexpr double kGridRegularityTol = 1e-9;

/// Rebuilds the tensor polar grid from (x, y). Every point must sit on the
/// reconstructed (r_i, theta_j) lattice within 1e-9, each node exactly once.
/// Pressure is attached only when no p entry is nan.
FieldSamples to_field_samples(const GridTable& t);

/// Full plane when the angles cover the circle evenly, otherwise the
/// sector reaching half a spacing past the outermost angles.
ConeDomain infer_domain(const FieldSamples& fs);

}  // namespace nsexact

#endif  // NSEXACT_IO_HPP_
