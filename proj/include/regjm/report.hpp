#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regjm/construct.hpp"
#include "regjm/resolution.hpp"

namespace regjm {

/// {"entries": [{"i", "j", "beta"}], "pd", "reg"}
std::string betti_json(const BettiTable& b);
BettiTable betti_from_json(std::string_view text);

/// Rows indexed by j - i, columns by i, "." for zero, with a total row.
std::string betti_ascii(const BettiTable& b);
/// Two tables next to each other under the given titles.
std::string betti_side_by_side(const BettiTable& left, const BettiTable& right, const std::string& left_title,
                               const std::string& right_title);

/// With include_timing = false the output depends only on the inputs.
std::string certificate_json(const JmCertificate& cert, bool include_timing = true);
std::string certificate_ascii(const JmCertificate& cert);

/// Macaulay2 input: ring preamble, the ideal, and a resolution call.
std::string cas_snippet(const RingContext& ring, const std::vector<Polynomial>& gens);

std::string scan_csv(const std::vector<ScanRow>& rows);

/// `# ring n= N= prime=` style header shared by the text formats.
struct RingHeader {
  std::optional<int> n;
  std::optional<int> N;
  std::optional<std::uint32_t> prime;
};
RingHeader parse_ring_header(std::string_view text);
/// Largest x index and y index mentioned in the text (-1 / 0 when absent).
std::pair<int, int> scan_variable_indices(std::string_view text);

/// Generators of J_M together with everything needed to re-verify them.
struct GeneratorFile {
  RingContext ring;
  int k = 0;
  std::optional<int> d;
  std::string module_label;
  /// Presentation of M over the subring R.
  GradedMatrix module;
  std::vector<Polynomial> generators;
};

std::string format_generator_file(const GeneratorFile& f);
GeneratorFile parse_generator_file(std::string_view text, std::optional<std::uint32_t> prime = std::nullopt);

/// A presentation over R in matrix text format, optionally preceded by a
/// ring header; n defaults to the largest x index mentioned (at least 1).
std::pair<RingContext, GradedMatrix> parse_module_file(std::string_view text,
                                                       std::optional<std::uint32_t> prime = std::nullopt);

}  // namespace regjm
