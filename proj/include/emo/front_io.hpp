#pragma once

#include <string>

#include "emo/indicators.hpp"

namespace emo {

/// Text interchange for fronts: one objective vector per line, whitespace
/// separated, `#` starts a comment. The writer emits a
/// `# objectives <n> senses <min|max>...` header; the reader accepts files
/// without one (all-minimize is assumed, inferring n from the first line).
void write_front(const Front& front, const std::string& path);
std::string format_front(const Front& front);

Front read_front(const std::string& path);
Front parse_front(const std::string& text, const std::string& origin = "<front>");

} // namespace emo
