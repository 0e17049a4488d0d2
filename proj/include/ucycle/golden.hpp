#pragma once

// Reference fixtures, verbatim (digit strings, "0" standing for 10).
// Decode with parse_compact.

#include <string_view>

namespace ucycle::golden {

// 3-multisets over [4], begins 1,1,1, ends 4,3.
inline constexpr std::string_view kS = "11144 42223 33121 24343";

// Extension of S to [7] verbatim. S + kTGiven is NOT a ucycle:
// positions 45/46 are transposed ({2,4,7} and {2,5,5} appear twice,
// {2,2,7} and {4,5,5} never).
inline constexpr std::string_view kTGiven =
    "11522 63374 45166 27732 57366 77135 34641 71555 36127 42556 66477 75526 4576";

// kTGiven with T[45], T[46] swapped; S + kT verifies over [7].
inline constexpr std::string_view kT =
    "11522 63374 45166 27732 57366 77135 34641 71555 36127 24556 66477 75526 4576";

// n = 10 step pieces, verbatim. kTPrimeGiven inherits the transposition.
inline constexpr std::string_view kTPrimeGiven =
    "11822 93304 48199 20032 80399 00138 34941 01888 39120 42889 99400 08829 4809";
inline constexpr std::string_view kU10 = "55007 59966 89797 68877 06585 8060";
inline constexpr std::string_view kV10 = "69450 36925 01695 84793 58279 15870 46837 02681 709";

// U's letter pattern, a..f = n-5..n.
inline constexpr std::string_view kUPattern = "aaffcaeebbdececbddccfbadadfbf";

// 3-subsets of [8] and the two doubling stages built from it with anchor
// permutation 1,5,3,7,4,8,2,6.
inline constexpr std::string_view kX =
    "1235783 6782458 3457125 8124672 5671347 2346814 7813561 4568236";
inline constexpr std::string_view kXPrimeGiven =
    "12123235757878383 63676782424545858 3434571712525 81812464672 56567131347 "
    "2723468681414 7813561 4568236";
inline constexpr std::string_view kXDoublePrimeGiven =
    "12123235757878383 63676782424545858 3434571712525 81812464672 56567131347 "
    "2723468681414 7813561 4568236 111555333777444888222666";
inline constexpr int kXAnchor[] = {1, 5, 3, 7, 4, 8, 2, 6};

// 2-subsets of [5] and its letter-doubled 2-multiset cycle.
inline constexpr std::string_view kPairs5 = "1234513524";
inline constexpr std::string_view kPairsDoubled5 = "112233445513524";

}  // namespace ucycle::golden
