#pragma once

namespace oddres {

// Bumped when any output-affecting algorithm changes, so cached coefficients
// and CSV provenance lines can be traced to the code that produced them.
inline constexpr const char* ODDRES_VERSION = "1.0.0";
inline constexpr const char* SERIES_ALGORITHM = "rs-scaled-basis-1";
inline constexpr const char* SUMMATION_ALGORITHM = "borel-leroy-pade-z2-1";
inline constexpr const char* SPECTRAL_ALGORITHM = "complex-scaling-qr-rq128-1";

}  // namespace oddres
