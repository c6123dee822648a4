#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rmtlab/stats.hpp"

// Level sequences supplied by the user (zeta-zero ordinates, nuclear levels,
// ...) and their unfolding to unit mean spacing.
//
// File format: UTF-8 text, one decimal real per line; blank lines and lines
// whose first non-blank character is '#' are ignored.
namespace rmtlab::ingest {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectrumFile {
  std::vector<double> levels;  // strictly increasing
  std::string source_label;
  std::vector<std::string> warnings;
};

/// Parses level text. Unsorted input is sorted and exact duplicates are
/// dropped, each with a warning. Throws IngestError naming the line for
/// unparsable tokens, and for fewer than 3 distinct levels.
SpectrumFile parse_levels(std::string_view text, std::string source_label = "<input>");
SpectrumFile read_levels(const std::filesystem::path& path);

/// Shortest round-trip decimal per line; parse_levels(serialize_levels(s))
/// reproduces s.levels exactly.
std::string serialize_levels(const SpectrumFile& spectrum);

struct GlobalMean {};
struct LocalWindow {
  int width = 51;  // odd
};
struct PolynomialStaircase {
  int degree = 3;  // 1..9
};
using UnfoldMethod = std::variant<GlobalMean, LocalWindow, PolynomialStaircase>;

/// "global", "local:<w>", "poly:<p>". Throws IngestError on bad syntax or
/// out-of-range parameters.
UnfoldMethod parse_unfold_method(std::string_view text);
std::string describe(const UnfoldMethod& method);

/// GlobalMean:  spacings / their mean.
/// LocalWindow: each spacing over the mean of the w spacings centred on it,
///              the window truncated at the ends of the spectrum.
/// PolynomialStaircase: least-squares fit of the counting function N(E_i) = i
///              by a degree-p polynomial (levels rescaled to [-1, 1] first);
///              spacings of the fitted values.
/// Every method finishes with an exact unit-mean normalization.
stats::SpacingSample unfold(const SpectrumFile& spectrum, const UnfoldMethod& method);

}  // namespace rmtlab::ingest
