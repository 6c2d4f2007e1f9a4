#ifndef PALSTAR_REFERENCE_DATA_HPP
#define PALSTAR_REFERENCE_DATA_HPP

// Published values the library is checked against.

#include <array>
#include <string_view>

namespace palstar::reference {

/// Palstars of length 2n for n = 0..10, rows k = 2, 3, 4.
inline constexpr std::array<int, 3> kTableAlphabets = {2, 3, 4};
inline constexpr std::array<std::array<std::string_view, 11>, 3> kPalstarTable =
    {{{"1", "2", "6", "20", "66", "220", "732", "2440", "8134", "27124",
       "90452"},
      {"1", "3", "15", "81", "435", "2349", "12681", "68499", "370023",
       "1998945", "10798821"},
      {"1", "4", "28", "208", "1540", "11440", "84976", "631360", "4690972",
       "34854352", "258971536"}}};

inline constexpr std::string_view kRho2 =
    "0.29983821359352690506155111814579603919303182364781730366339199333065202";
inline constexpr std::string_view kAlpha2 =
    "3.3351319300335793676678962610376244842363270634405611577104447308511860";
inline constexpr std::string_view kC2 =
    "6.278652437421018217684895562492005276088368718322063642652328654828673";

struct Fraction {
  long numerator;
  long denominator;
};

/// 1/alpha_k = sum_i a_i k^-(i+1) + O(k^-10).
inline constexpr std::array<Fraction, 9> kAlphaInverseSeries = {{
    {1, 2}, {1, 8}, {3, 32}, {1, 16}, {27, 512}, {93, 2048}, {83, 2048},
    {155, 4096}, {4735, 131072}}};

/// alpha_k = sum_i b_i k^(1-i) + O(k^-8).
inline constexpr std::array<Fraction, 9> kAlphaSeries = {{
    {2, 1}, {-1, 2}, {-1, 4}, {-3, 32}, {-5, 64}, {-31, 512}, {-25, 512},
    {-23, 512}, {-683, 16384}}};

}  // namespace palstar::reference

#endif  // PALSTAR_REFERENCE_DATA_HPP
