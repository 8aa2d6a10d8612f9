#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamgame {

enum class Errc {
    InvalidArgument,
    NoSuchEdge,
    AlreadyClaimed,
    VertexOutOfRange,
    NoEligibleVertex,
    BudgetExceeded,
    TooLarge,
    InvalidPath,
    BoardFull,
    IllegalTranscript,
    ParameterDomain,
    InvalidConfig,
    ParseError,
    UnknownSuite,
    UnknownStrategy,
    EngineFault,
    Io,
};

std::string_view to_string(Errc code) noexcept;

/// The single exception type thrown by the library; `code()` identifies the
/// failure class so callers (and tests) can branch on it.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace hamgame
