#ifndef SRDUAL_ERROR_HPP
#define SRDUAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace srdual {

enum class ErrorCode {
    EmptyInput,
    VertexOutOfRange,
    IsolatedVertex,
    NotAFace,
    NotAFacet,
    NotPure,
    DimensionTooSmall,
    DimensionMismatch,
    NotABijection,
    EmptyGraph,
    UnknownNode,
    NotEquigenerated,
    UnsupportedLevel,
    OverlapNotPure,
    OverlapTooSmall,
    OverlapSerreFailure,
    UnknownFamily,
    BadParams,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace srdual

#endif
