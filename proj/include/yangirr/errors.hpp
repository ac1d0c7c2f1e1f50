#pragma once

#include <stdexcept>
#include <string>

namespace yangirr {

enum class ErrorKind {
    InvalidInput,
    EmptyModule,
    IdenticallyZero,
    NotSimultaneouslyDiagonalizable,
    BadIndexSequence,
    PoleAtEqualArguments,
    NotRectangular,
    ShapeNotSpecial,
    NotSingular,
    DegenerateSpectrum,
    DimensionCapExceeded,
    Internal,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace yangirr
