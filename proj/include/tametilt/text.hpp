#pragma once

#include "tametilt/types.hpp"

#include <string>

namespace tametilt {

// Text forms: "a:2" for quasi-simples; "a:2[3]", "a:2[inf]", "a:2[-inf]"
// and "G" for points.
std::string qs_key(const QuasiSimpleRef& s);
QuasiSimpleRef parse_qs_key(const std::string& text);

std::string point_to_text(const RegPoint& p);
RegPoint parse_point(const std::string& text);

// Per-tube short form used inside filter documents: "2[1]".
std::string point_to_local_text(const RegPoint& p);
RegPoint parse_local_point(const std::string& tube_id, const std::string& text);

} // namespace tametilt
