#pragma once

#include <stdexcept>
#include <string>

namespace ffq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define FFQ_DECLARE_ERROR(Name, Base)                                 \
    class Name : public Base {                                        \
    public:                                                           \
        using Base::Base;                                             \
        const char* kind() const noexcept override { return #Name; } \
    }

/// Argument outside the operation's mathematical domain.
FFQ_DECLARE_ERROR(DomainError, Error);
/// Principal branch undefined (point on the cut or at the origin).
FFQ_DECLARE_ERROR(BranchError, DomainError);
/// Function is not an element of the Dirichlet-type space (its norm diverges).
FFQ_DECLARE_ERROR(NotInSpace, DomainError);
FFQ_DECLARE_ERROR(DegenerateMeasure, DomainError);
FFQ_DECLARE_ERROR(IntrinsicError, DomainError);
FFQ_DECLARE_ERROR(FrameError, DomainError);
FFQ_DECLARE_ERROR(DegreeMismatch, DomainError);
FFQ_DECLARE_ERROR(DivisionByZero, DomainError);

/// A numerical target was not met (quadrature cap reached, bound violated).
FFQ_DECLARE_ERROR(ToleranceError, Error);
FFQ_DECLARE_ERROR(NoConvergence, ToleranceError);

#undef FFQ_DECLARE_ERROR

}  // namespace ffq
