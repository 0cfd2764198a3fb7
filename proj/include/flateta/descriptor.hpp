#pragma once

#include <string>
#include <string_view>

#include "flateta/seifert.hpp"

namespace flateta {

/// Parses the textual Seifert descriptor
///
///     descriptor := base ";" [ "b=" integer ";" ] fibers
///     base       := "S2" | "T2"
///     fibers     := "" | pair { pair }
///     pair       := "(" integer "," integer ")"
///
/// Whitespace is ignored anywhere; b defaults to 0; genus follows the base.
/// Throws SyntaxError (with byte offset) or ValidationError.
SeifertData parse_descriptor(std::string_view text);

/// Canonical descriptor text; "b=" is written only when b != 0.
std::string render_descriptor(const SeifertData& s);

}  // namespace flateta
