// Embedded reference dataset: the published table of least primes p_n
// admitting a trinomial with exactly n distinct roots (delta = 1), with one
// witness trinomial per row. Used for golden verification and the
// --paper-data figure mode only; never as a substitute for computation.
#pragma once

#include <array>
#include <cstdint>

namespace tnomial {

inline constexpr const char* kReferenceDatasetVersion = "extremal16-v1";

// Figure curve constants bounding the point cloud (n vs ln p).
inline constexpr double kFigureCurveLow = 0.91;
inline constexpr double kFigureCurveHigh = 1.77;

struct ReferenceTrinomial {
  std::uint32_t n;         // distinct-root count
  std::uint64_t p;         // least prime admitting it
  const char* polynomial;  // witness, parseable text
};

inline constexpr std::array<ReferenceTrinomial, 16> kReferenceTrinomials{{
    {1, 3, "1+x-2x^2"},
    {2, 5, "1+x-2x^2"},
    {3, 11, "1-3x+2x^3"},
    {4, 23, "-2+x+x^4"},
    {5, 47, "1+4x-5x^8"},
    {6, 151, "1+24x-25x^33"},
    {7, 173, "-2+x+x^34"},
    {8, 349, "1+23x-24x^21"},
    {9, 619, "-71+70x+x^184"},
    {10, 1201, "1+5x-6x^152"},
    {11, 2753, "-797+796x+x^67"},
    {12, 4801, "-82+81x+x^1318"},
    {13, 10867, "-1226+1225x+x^225"},
    {14, 16633, "-39+38x+x^2264"},
    {15, 71237, "29574-29573x-x^27103"},
    {16, 8581, "-364+363x+x^2729"},
}};

}  // namespace tnomial
