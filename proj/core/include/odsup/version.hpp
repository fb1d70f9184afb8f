#pragma once

namespace odsup {

inline constexpr const char* kVersion = "0.1.0";

// Identifier of the multiplier/innovation RNG scheme, echoed in every report
// so that independent implementations can cross-validate draws exactly.
inline constexpr const char* kRngScheme = "philox4x32-10/u53/as241-inverse-cdf";

}  // namespace odsup
