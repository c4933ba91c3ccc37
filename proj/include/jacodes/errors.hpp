#pragma once

#include <stdexcept>
#include <string>

namespace jacodes {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define JACODES_DEFINE_ERROR(name)                                         \
    struct name : Error {                                                  \
        explicit name(const std::string& msg) : Error(#name ": " + msg) {} \
    }

JACODES_DEFINE_ERROR(NotPrime);
JACODES_DEFINE_ERROR(NotIrreducible);
JACODES_DEFINE_ERROR(NotPrimitive);
JACODES_DEFINE_ERROR(DivisionByZero);
JACODES_DEFINE_ERROR(NotSquareOrder);
JACODES_DEFINE_ERROR(IncompatibleCyclotomicOrder);
JACODES_DEFINE_ERROR(DimensionMismatch);
JACODES_DEFINE_ERROR(IndexOutOfRange);
JACODES_DEFINE_ERROR(AlphabetMismatch);
JACODES_DEFINE_ERROR(MissingRule);
JACODES_DEFINE_ERROR(KindMismatch);
JACODES_DEFINE_ERROR(CapExceeded);
JACODES_DEFINE_ERROR(NonIntegerCoefficient);
JACODES_DEFINE_ERROR(CrossCheckMismatch);
JACODES_DEFINE_ERROR(OverflowError);
JACODES_DEFINE_ERROR(ParseError);

#undef JACODES_DEFINE_ERROR

}  // namespace jacodes
