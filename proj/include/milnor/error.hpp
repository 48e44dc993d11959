#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

}  // namespace milnor
