#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bialint/report.hpp"

namespace bialint {

struct VerifyOptions {
  /// Restricts the quantum plane suite to one parameter.
  std::optional<Scalar> q;
  /// Random samples for the convolution property checks.
  std::size_t samples = 50;
};

/// kx, quantum_plane, sixdim, a_times_k, h4, matrix2, group_c2, properties, all.
std::vector<std::string> verify_suite_names();

/// Runs one verification suite with its pinned degrees. Throws
/// MalformedInput for an unknown name.
Report run_verify(std::string_view name, const VerifyOptions& options = {});

}  // namespace bialint
