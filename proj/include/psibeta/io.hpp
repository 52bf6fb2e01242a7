#pragma once

// Text forms of sequences and methods.
//   psi:    geometric:q=0.5 | power:r=1.5 | file:<path>
//   beta:   const:1 | linear:c=0.5 | file:<path>
//   method: {"n":1,"lambda":[1,1],"mu":[0,0]} or a path to such a document
// psi files:  {"values":[...], "tail":{"kind":"zero"|"geometric", "q":..., "scale":...}}
// beta files: {"values":[...], "default": ...}

#include "psibeta/methods.hpp"
#include "psibeta/sequences.hpp"

#include <string>
#include <string_view>

namespace psibeta {

/// All parse failures throw Error(Parse) naming the offending field.
PsiSequence parse_psi(std::string_view text);
BetaSequence parse_beta(std::string_view text);

PsiSequence psi_from_json(std::string_view document);
BetaSequence beta_from_json(std::string_view document);

/// Accepts an inline JSON document or a file path. Validated before return.
TriangularMethod parse_method(std::string_view text);
TriangularMethod method_from_json(std::string_view document);
std::string method_to_json(const TriangularMethod& method);

std::string read_text_file(const std::string& path);

} // namespace psibeta
