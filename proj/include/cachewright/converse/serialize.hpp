#pragma once

#include "cachewright/converse/certificate.hpp"

#include <string>

namespace cachewright::converse {

// Line format:
//   NK <N> <K> CASE <c>
//   D <id> <d_1> ... <d_K>
//   AX <kind> <params...> MUL <u>/<v>
//   TARGET <cM> M + <cR> R >= <c>
// Blank lines and lines starting with '#' are ignored by the parser.
std::string serialize(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

}  // namespace cachewright::converse
