#pragma once

#include <array>

// Values frozen from the first brute-force enumeration run. A change here
// means the enumerator or the nucleus search changed behaviour.
namespace nucpre::regression {

// Cumulative catalog sizes for n_max = 1..4.
inline constexpr std::array<int, 4> pomonoids{1, 5, 42, 591};
inline constexpr std::array<int, 4> sl_monoids{1, 3, 14, 87};
inline constexpr std::array<int, 4> commutative_pomonoids{1, 5, 32, 333};
inline constexpr std::array<int, 4> posemigroups{1, 12, 185, 4938};

// Nuclei per member of the n_max = 3 pomonoid catalog, in catalog order.
inline constexpr std::array<int, 42> nuclei_per_pomonoid{
    1, 1, 1, 2, 2, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1,
    1, 1, 1, 1, 1, 4, 3, 2, 2, 2, 4, 3, 3, 3, 3, 3, 2, 2, 3, 3, 4};

// Simple quasi-inequalities at depth 2 over 3 variables.
inline constexpr int simple_stream_plain = 17068;
inline constexpr int simple_stream_join = 34392;

}  // namespace nucpre::regression
