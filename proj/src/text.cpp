#include "tametilt/text.hpp"

namespace tametilt {

namespace {

int parse_int(const std::string& text, const std::string& context) {
    try {
        size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw DomainError("point/invalid", "bad integer '" + text + "' in " + context);
    }
}

} // namespace

std::string qs_key(const QuasiSimpleRef& s) {
    return s.tube + ":" + std::to_string(s.index);
}

QuasiSimpleRef parse_qs_key(const std::string& text) {
    const auto pos = text.rfind(':');
    if (pos == std::string::npos || pos == 0 || pos + 1 == text.size())
        throw DomainError("point/invalid", "bad quasi-simple key '" + text + "'");
    return QuasiSimpleRef{text.substr(0, pos), parse_int(text.substr(pos + 1), text)};
}

std::string point_to_text(const RegPoint& p) {
    switch (p.kind) {
    case PointKind::Generic: return "G";
    case PointKind::Finite: return qs_key(p.qs) + "[" + std::to_string(p.length) + "]";
    case PointKind::Pruefer: return qs_key(p.qs) + "[inf]";
    case PointKind::Adic: return qs_key(p.qs) + "[-inf]";
    }
    throw DomainError("point/invalid", "unreachable");
}

namespace {

RegPoint parse_bracket(const QuasiSimpleRef& qs, const std::string& inner,
                       const std::string& whole) {
    if (inner == "inf") return RegPoint::pruefer(qs);
    if (inner == "-inf") return RegPoint::adic(qs);
    const int len = parse_int(inner, whole);
    if (len < 1) throw DomainError("point/bad-length", "length must be >= 1 in '" + whole + "'");
    return RegPoint::finite(qs, len);
}

} // namespace

RegPoint parse_point(const std::string& text) {
    if (text == "G") return RegPoint::generic();
    const auto open = text.rfind('[');
    if (open == std::string::npos || text.back() != ']')
        throw DomainError("point/invalid", "bad point '" + text + "'");
    const QuasiSimpleRef qs = parse_qs_key(text.substr(0, open));
    return parse_bracket(qs, text.substr(open + 1, text.size() - open - 2), text);
}

std::string point_to_local_text(const RegPoint& p) {
    if (!p.is_finite())
        throw DomainError("point/invalid", "local text form is for finite points");
    return std::to_string(p.qs.index) + "[" + std::to_string(p.length) + "]";
}

RegPoint parse_local_point(const std::string& tube_id, const std::string& text) {
    const auto open = text.find('[');
    if (open == std::string::npos || open == 0 || text.back() != ']')
        throw DomainError("point/invalid", "bad region entry '" + text + "'");
    const int index = parse_int(text.substr(0, open), text);
    return parse_bracket(QuasiSimpleRef{tube_id, index},
                         text.substr(open + 1, text.size() - open - 2), text);
}

} // namespace tametilt
