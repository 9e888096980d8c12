#pragma once

// Fixed handedness conventions for generated diagrams.  The relative choices
// are pinned by determinant consistency with the branched double cover; the
// global mirror is pinned so the two-bridge scan reproduces the published
// signature signs.
namespace dbounds::conv {

inline constexpr bool kMirror = true;    // flip every crossing
inline constexpr bool kBand13 = false;     // over13 for a positive band twist
inline constexpr bool kBraid13 = true;    // over13 for a positive braid letter
inline constexpr bool kGLTypeSigma = false;  // correction counts crossings
                                             // whose in-wedge lies off the
                                             // oriented surface colour
inline constexpr int kGLSign = 1;

} // namespace dbounds::conv
