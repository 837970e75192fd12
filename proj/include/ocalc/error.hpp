#pragma once

#include <stdexcept>
#include <string>

namespace ocalc {

enum class Errc {
    EmptyLabel,
    DuplicateLabel,
    MissingLabel,
    LabelClash,
    SameLabel,
    WrongColor,
    DifferentPancake,
    InvalidGenus,
    MalformedTerm,
    PatternMismatch,
    FreshExhausted,
    ShapeMismatch,
    SingularForm,
    Parse,
};

const char* to_string(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI) can tell a domain error from a usage error.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace ocalc
