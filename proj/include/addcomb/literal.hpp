#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "addcomb/gset.hpp"

namespace addcomb {

enum class ParseErrorCode {
    Malformed,
    EmptySet,
    OutOfRange,
    DuplicateIndex,
};

const char* parse_error_name(ParseErrorCode code);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ParseErrorCode code() const noexcept { return code_; }

private:
    ParseErrorCode code_;
};

/// Parses a set literal "{i1,i2,...}" of strictly increasing flat element
/// indices over the given group. Whitespace around tokens is accepted and
/// canonicalized away.
GSet parse_set(std::string_view text, const Group& group);

/// Canonical literal form, ascending indices, no spaces.
std::string format_set(const GSet& s);

}  // namespace addcomb
