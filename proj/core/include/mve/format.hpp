#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mve/errors.hpp"
#include "mve/instance.hpp"

namespace mve {

enum class ParseCode {
  kSyntax,
  kMissingHeader,
  kDuplicateHeader,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kNonPositiveLength,
  kEdgeCountMismatch,
  kMissingTerminal,
  kSameTerminals,
  kBadParameter,
};

std::string_view to_string(ParseCode code);

class ParseError : public InputError {
 public:
  ParseError(ParseCode code, std::size_t line, const std::string& detail);

  [[nodiscard]] ParseCode code() const { return code_; }
  /// 1-based; 0 when the error concerns the file as a whole.
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  ParseCode code_;
  std::size_t line_;
};

/// Text format:
///   p mve <n> <m>
///   s <id>
///   t <id>
///   k <budget>        (optional, default 0)
///   l <target>        (optional, default 1)
///   e <u> <v> <length>
/// Vertex ids are 1-based; '#' starts a comment line. Edge ids follow the
/// order of the e-lines.
Instance parse_instance(std::string_view text);

std::string emit_instance(const Instance& inst);

}  // namespace mve
