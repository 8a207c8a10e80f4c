#pragma once

// Text formats: "sset v1" for finite simplicial sets and "smap v1" for maps.
// Both are line-oriented, whitespace-tokenized, with '#' comments.  Emission
// is deterministic: generators in (degree, index) order, faces in slot order.

#include <stdexcept>
#include <string>

#include "ssk/smap.hpp"

namespace ssk {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

// sset v1
// gen <name> <degree>
// face <name> <i> = <name'> [| <epi values>]
std::string emit_sset(const FiniteSimplicialSet& X);
SsetPtr parse_sset(const std::string& text);

// smap v1
// source <id>
// target <id>
// send <gen> = <gen'> [| <epi values>]
std::string emit_smap(const SimplicialMap& f, const std::string& source_id,
                      const std::string& target_id);

struct SmapHeader {
  std::string source_id;
  std::string target_id;
};
SmapHeader peek_smap_header(const std::string& text);

// The caller resolves the header ids to actual objects.
SimplicialMap parse_smap(const std::string& text, SsetPtr source, SsetPtr target);

}  // namespace ssk
