#pragma once

#include <stdexcept>
#include <string>

namespace wd4 {

// Coarse error class used by the CLI to pick an exit code:
// domain = invalid mathematical input, data = missing/inconsistent data source.
enum class ErrorClass { domain = 1, data = 2 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const noexcept { return cls_; }

private:
    ErrorClass cls_;
};

#define WD4_DEFINE_ERROR(NAME, CLASS)                                         \
    struct NAME : Error {                                                     \
        explicit NAME(const std::string& w) : Error(ErrorClass::CLASS, w) {}  \
    }

WD4_DEFINE_ERROR(NotADiscriminant, domain);       // n <= 1 or n = 2,3 mod 4
WD4_DEFINE_ERROR(SquareDiscriminant, domain);     // n a perfect square
WD4_DEFINE_ERROR(DomainError, domain);            // triple outside an operation's domain
WD4_DEFINE_ERROR(FormViolation, domain);          // triple fails the required form equation
WD4_DEFINE_ERROR(OutOfDisc, domain);              // parameter outside the open disc
WD4_DEFINE_ERROR(DegenerateDenominator, domain);  // eigenform denominator vanishes
WD4_DEFINE_ERROR(PointOutOfRange, domain);        // plot point outside the drawable disc
WD4_DEFINE_ERROR(EmptyCurve, domain);             // topology requested for an empty curve
WD4_DEFINE_ERROR(BoundaryUndecidable, data);      // no exact data to settle a boundary case
WD4_DEFINE_ERROR(DivisibilityViolation, data);    // solution count not divisible as required
WD4_DEFINE_ERROR(MissingFixture, data);           // no invariant data for a discriminant
WD4_DEFINE_ERROR(FixtureFormat, data);            // malformed invariant CSV
WD4_DEFINE_ERROR(NonIntegralGenus, data);         // identity solves to a non-integer genus
WD4_DEFINE_ERROR(NonIntegralComponentSplit, data);// counts not divisible by component number

#undef WD4_DEFINE_ERROR

}  // namespace wd4
