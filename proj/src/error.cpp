#include "ocalc/error.hpp"

namespace ocalc {

const char* to_string(Errc code) {
    switch (code) {
    case Errc::EmptyLabel: return "empty_label";
    case Errc::DuplicateLabel: return "duplicate_label";
    case Errc::MissingLabel: return "missing_label";
    case Errc::LabelClash: return "label_clash";
    case Errc::SameLabel: return "same_label";
    case Errc::WrongColor: return "wrong_color";
    case Errc::DifferentPancake: return "different_pancake";
    case Errc::InvalidGenus: return "invalid_genus";
    case Errc::MalformedTerm: return "malformed_term";
    case Errc::PatternMismatch: return "pattern_mismatch";
    case Errc::FreshExhausted: return "fresh_exhausted";
    case Errc::ShapeMismatch: return "shape_mismatch";
    case Errc::SingularForm: return "singular_form";
    case Errc::Parse: return "parse";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ocalc
