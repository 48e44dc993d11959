#pragma once

#include <string>
#include <variant>
#include <vector>

#include "milnor/system.hpp"

namespace milnor {

/// One named link from a file: either a clasp presentation or a general
/// word/triple presentation.
struct LinkRecord {
    std::string name;
    std::variant<CComplexData, SurfaceSystemData> body;

    bool is_ccomplex() const { return std::holds_alternative<CComplexData>(body); }
    const CComplexData& ccomplex() const;
    /// The general system: the body itself, or the forgetful image of the
    /// clasp presentation.
    SurfaceSystemData system() const;

    bool operator==(const LinkRecord&) const = default;
};

/// Line-oriented grammar:
///   link <name>
///   components <n>
///   clasp <id> <compA>:<rankA> <compB>:<rankB> <+|->
///   word <comp> <letters...>
///   triple <i> <j> <k> <signed count>        (i < j < k)
/// '#' starts a comment; blank lines are skipped. A link has exactly one
/// body kind. Throws ParseError with the offending line number.
std::vector<LinkRecord> parse_link_file(const std::string& text);

std::string serialize(const std::vector<LinkRecord>& records);
std::string serialize(const LinkRecord& record);

const LinkRecord* find_link(const std::vector<LinkRecord>& records, const std::string& name);

}  // namespace milnor
