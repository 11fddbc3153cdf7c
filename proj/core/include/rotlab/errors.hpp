#pragma once

#include <stdexcept>
#include <string>

namespace rotlab {

// Base class for all rotlab-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact-core
struct DistanceMismatch : Error { using Error::Error; };
struct DegeneratePair : Error { using Error::Error; };
struct DuplicatePoint : Error { using Error::Error; };
struct UnitNormViolation : Error { using Error::Error; };

// lift
struct ChartExcluded : Error { using Error::Error; };
struct DegenerateParabola : Error { using Error::Error; };
struct NotIncident : Error { using Error::Error; };
struct SameParabola : Error { using Error::Error; };

// census
struct IntegralityViolation : Error { using Error::Error; };

// surfaces
struct HalfTurnDegenerate : Error { using Error::Error; };

// polymethod
struct CapacityExceeded : Error { using Error::Error; };

// generators
struct ReframeFailed : Error { using Error::Error; };

// io
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

} // namespace rotlab
