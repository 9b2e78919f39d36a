#pragma once

// Instance files in two equivalent shapes: a line-oriented text form
//
//   name: example1
//   n=5
//   I: x1*x2, x3*x4*x5
//   J: x1*x2*x3*x5, x1*x2*x4*x5
//
// and a JSON form {"name": ..., "n": 5, "I": [[1,2],[3,4,5]], "J": [...]}
// with 1-based variable indices.  Parsing yields the raw file contents;
// to_pair performs the ideal-level validation separately so a parse
// error always names a line or generator.

#include <string>
#include <vector>

#include "sqfd/monomial.hpp"

namespace sqfd {

struct InstanceFile {
  std::string name;  // optional, empty when absent
  int n = 0;
  std::vector<std::vector<int>> I;
  std::vector<std::vector<int>> J;

  bool operator==(const InstanceFile&) const = default;
};

/// Parses the text form.  Errors name the offending line.
InstanceFile parse_instance_text(const std::string& content);

/// Parses the JSON form.  Errors name the offending field or generator.
InstanceFile parse_instance_json(const std::string& content);

/// Reads a file and dispatches on its first meaningful character ('{'
/// selects JSON).
InstanceFile load_instance_file(const std::string& path);

/// Renders the text form; parse_instance_text inverts it exactly.
std::string format_instance_text(const InstanceFile& file);

/// Renders the JSON form; parse_instance_json inverts it exactly.
std::string format_instance_json(const InstanceFile& file);

/// Builds and validates the quotient described by the file.
IdealPair to_pair(const InstanceFile& file);

/// The file image of a validated pair (generator indices in the pair's
/// stored order).
InstanceFile from_pair(const IdealPair& pair, const std::string& name = "");

}  // namespace sqfd
