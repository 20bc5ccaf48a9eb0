#pragma once

#include "pasting/scheme.hpp"
#include "pasting/terms.hpp"

#include <string>

namespace pasting {

/// Parses the scheme file format; unknown keys are rejected with ParseError.
RawScheme parseScheme(const std::string &json);
/// Canonical, pretty-printed scheme document.
std::string writeScheme(const RawScheme &raw);

/// Parses a labelling document. A string-valued "scheme" entry is a path
/// resolved against baseDir. A scheme document (no "scheme" key) is accepted
/// as a labelling without 3-cells.
Labelling parseLabelling(const std::string &json, const std::string &baseDir);

std::string readFile(const std::string &path);
RawScheme loadScheme(const std::string &path);
Labelling loadLabelling(const std::string &path);

} // namespace pasting
