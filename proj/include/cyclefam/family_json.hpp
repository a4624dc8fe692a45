#pragma once

// Family documents on disk:
//   {"format":1,"k":3,"t":2,"points":["x0.0",...],"blocks":[["x0.0","x0.1","x1.0"],...]}
// Keys appear in that order; points and blocks are canonically sorted; "t" is
// null for families that are not a cycle family F(k,t).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclefam/core.hpp"

namespace cyclefam {

inline constexpr int kFormatVersion = 1;

struct FamilyDocument {
  int k = 0;
  std::optional<int> t;
  Family family;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single-line JSON, no trailing newline.
std::string to_json(const FamilyDocument& doc);

/// Parses and validates a document: every block has k points, "points" equals
/// the union of the blocks, and no block repeats. Throws FormatError.
FamilyDocument family_from_json(std::string_view text);

FamilyDocument read_family_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace cyclefam
