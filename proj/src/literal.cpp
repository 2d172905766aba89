#include "addcomb/literal.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace addcomb {

const char* parse_error_name(ParseErrorCode code) {
    switch (code) {
        case ParseErrorCode::Malformed: return "MALFORMED";
        case ParseErrorCode::EmptySet: return "EMPTY_SET";
        case ParseErrorCode::OutOfRange: return "OUT_OF_RANGE";
        case ParseErrorCode::DuplicateIndex: return "DUPLICATE_INDEX";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(ParseErrorCode code, const std::string& msg) {
    throw ParseError(code, std::string(parse_error_name(code)) + ": " + msg);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

GSet parse_set(std::string_view text, const Group& group) {
    std::string_view s = strip(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        fail(ParseErrorCode::Malformed, "expected a brace-delimited literal");
    s = strip(s.substr(1, s.size() - 2));
    if (s.empty()) fail(ParseErrorCode::EmptySet, "set literal has no elements");

    std::vector<std::uint32_t> idx;
    std::size_t pos = 0;
    bool last = false;
    while (!last) {
        std::size_t comma = s.find(',', pos);
        std::string_view tok;
        if (comma == std::string_view::npos) {
            tok = strip(s.substr(pos));
            last = true;
        } else {
            tok = strip(s.substr(pos, comma - pos));
            pos = comma + 1;
        }
        std::uint64_t value = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || end != tok.data() + tok.size() || tok.empty())
            fail(ParseErrorCode::Malformed, "bad element '" + std::string(tok) + "'");
        if (value >= group->order())
            fail(ParseErrorCode::OutOfRange,
                 "element " + std::to_string(value) + " outside [0, " +
                     std::to_string(group->order()) + ")");
        if (!idx.empty()) {
            if (idx.back() == value)
                fail(ParseErrorCode::DuplicateIndex,
                     "element " + std::to_string(value) + " listed twice");
            if (idx.back() > value)
                fail(ParseErrorCode::Malformed, "indices must be strictly increasing");
        }
        idx.push_back(static_cast<std::uint32_t>(value));
    }
    return GSet::from_indices(group, idx);
}

std::string format_set(const GSet& s) { return s.to_string(); }

}  // namespace addcomb
