#pragma once

#include <stdexcept>
#include <string>

namespace diagdef {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DIAGDEF_DEFINE_ERROR(Name)                                                                 \
    class Name : public Error {                                                                    \
    public:                                                                                        \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}                       \
    }

// scalar tower
DIAGDEF_DEFINE_ERROR(DivisionByZero);
DIAGDEF_DEFINE_ERROR(PoleAtZero);
DIAGDEF_DEFINE_ERROR(PoleAtPoint);
DIAGDEF_DEFINE_ERROR(ValuationMismatch);
DIAGDEF_DEFINE_ERROR(NonInvertibleLeadingCoefficient);
DIAGDEF_DEFINE_ERROR(ParseError);

// sphere
DIAGDEF_DEFINE_ERROR(NotInB);
DIAGDEF_DEFINE_ERROR(RegularityViolation);
DIAGDEF_DEFINE_ERROR(ZeroMultiplier);
DIAGDEF_DEFINE_ERROR(InvalidParameter);

// weyl
DIAGDEF_DEFINE_ERROR(UnsolvableOrder);
DIAGDEF_DEFINE_ERROR(LeftDivisionUndefined);

// star products
DIAGDEF_DEFINE_ERROR(NonCommutingDerivations);

// diagrams
DIAGDEF_DEFINE_ERROR(InvalidCategory);
DIAGDEF_DEFINE_ERROR(InvalidAlgebra);
DIAGDEF_DEFINE_ERROR(InvalidMorphism);
DIAGDEF_DEFINE_ERROR(ArityMismatch);
DIAGDEF_DEFINE_ERROR(TypeMismatch);

// w1 diagram
DIAGDEF_DEFINE_ERROR(CutoffTooSmall);

#undef DIAGDEF_DEFINE_ERROR

}  // namespace diagdef
