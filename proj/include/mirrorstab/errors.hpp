#pragma once

#include <stdexcept>
#include <string>

namespace mirrorstab {

/// Base class for every error raised by the library.  Each concrete error
/// corresponds to a distinct failure mode of the geometry/analysis pipeline
/// so callers (and the CLI exit-code mapping) can dispatch on type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- configuration / input ------------------------------------------------
struct ConfigError : Error { using Error::Error; };

// --- fan / surface validation ---------------------------------------------
struct NonPrimitiveRay : Error { using Error::Error; };
struct NonSmoothFan    : Error { using Error::Error; };
struct DegenerateFan   : Error { using Error::Error; };
struct BasisMismatch   : Error { using Error::Error; };
struct NotKahler       : Error { using Error::Error; };

// --- exponential-Laurent arithmetic -----------------------------------------
struct Overflow            : Error { using Error::Error; };
struct LeadingCancellation : Error { using Error::Error; };

// --- critical point analysis ------------------------------------------------
/// A genuine chamber wall: the candidate exponent data changes under an
/// infinitesimal perturbation of the one scannable Kähler parameter.
struct WallDetected : Error { using Error::Error; };
struct NoSolutions   : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct Degenerate    : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };

// --- residue / stability engine ---------------------------------------------
struct DegeneratePoint       : Error { using Error::Error; };
struct IncompleteCriticalSet : Error { using Error::Error; };
struct PositiveRate          : Error { using Error::Error; };
struct ZeroDenominator       : Error { using Error::Error; };
struct ZeroDenominatorLimit  : Error { using Error::Error; };
struct DivergentRatio        : Error { using Error::Error; };
struct ZeroWeight            : Error { using Error::Error; };

} // namespace mirrorstab
