#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "recip/arith.hpp"

namespace recip::cli {

enum class Format { text, json };

struct RunConfig {
  std::string command;  // enumerate, reciprocity, cm, separate, shell, colon, lift, schlegel, corpus
  std::string input;    // path; unused by corpus
  std::vector<std::size_t> select;
  std::optional<IntVector> grading;
  std::int64_t degree = 8;
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
  std::uint64_t seed = 0;
  Format format = Format::text;
  std::optional<std::size_t> avoid;  // schlegel
  std::optional<RatVector> point;    // shell
};

enum Exit : int { ok = 0, verified_false = 1, input_error = 2 };

const std::vector<std::string>& commands();

/// Runs one subcommand and writes its report to `out`; diagnostics go to
/// `err`. Returns the exit status.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace recip::cli
