#pragma once

// Hand-transcribed reference data for the worked 28-state example: the
// unextendible set with Schmidt number 4 in C^6 (x) C^7 built from the top
// 4 x 7 block with sign rows (+,+,+,+), (+,-,+,-), (+,+,-,-), (+,-,-,+).
// Each state is 1/2 times the sum of sign * |row, col> over its four kets.

#include <array>

namespace golden {

struct Ket {
  int row;
  int col;
  int sign;
};

using State = std::array<Ket, 4>;

inline constexpr std::array<State, 28> kExample28 = {{
    {{{0, 0, +1}, {1, 1, +1}, {2, 2, +1}, {3, 3, +1}}},
    {{{0, 1, +1}, {1, 2, +1}, {2, 3, +1}, {3, 4, +1}}},
    {{{0, 2, +1}, {1, 3, +1}, {2, 4, +1}, {3, 5, +1}}},
    {{{0, 3, +1}, {1, 4, +1}, {2, 5, +1}, {3, 6, +1}}},
    {{{0, 4, +1}, {1, 5, +1}, {2, 6, +1}, {3, 0, +1}}},
    {{{0, 5, +1}, {1, 6, +1}, {2, 0, +1}, {3, 1, +1}}},
    {{{0, 6, +1}, {1, 0, +1}, {2, 1, +1}, {3, 2, +1}}},
    {{{0, 0, +1}, {1, 1, -1}, {2, 2, +1}, {3, 3, -1}}},
    {{{0, 1, +1}, {1, 2, -1}, {2, 3, +1}, {3, 4, -1}}},
    {{{0, 2, +1}, {1, 3, -1}, {2, 4, +1}, {3, 5, -1}}},
    {{{0, 3, +1}, {1, 4, -1}, {2, 5, +1}, {3, 6, -1}}},
    {{{0, 4, +1}, {1, 5, -1}, {2, 6, +1}, {3, 0, -1}}},
    {{{0, 5, +1}, {1, 6, -1}, {2, 0, +1}, {3, 1, -1}}},
    {{{0, 6, +1}, {1, 0, -1}, {2, 1, +1}, {3, 2, -1}}},
    {{{0, 0, +1}, {1, 1, +1}, {2, 2, -1}, {3, 3, -1}}},
    {{{0, 1, +1}, {1, 2, +1}, {2, 3, -1}, {3, 4, -1}}},
    {{{0, 2, +1}, {1, 3, +1}, {2, 4, -1}, {3, 5, -1}}},
    {{{0, 3, +1}, {1, 4, +1}, {2, 5, -1}, {3, 6, -1}}},
    {{{0, 4, +1}, {1, 5, +1}, {2, 6, -1}, {3, 0, -1}}},
    {{{0, 5, +1}, {1, 6, +1}, {2, 0, -1}, {3, 1, -1}}},
    {{{0, 6, +1}, {1, 0, +1}, {2, 1, -1}, {3, 2, -1}}},
    {{{0, 0, +1}, {1, 1, -1}, {2, 2, -1}, {3, 3, +1}}},
    {{{0, 1, +1}, {1, 2, -1}, {2, 3, -1}, {3, 4, +1}}},
    {{{0, 2, +1}, {1, 3, -1}, {2, 4, -1}, {3, 5, +1}}},
    {{{0, 3, +1}, {1, 4, -1}, {2, 5, -1}, {3, 6, +1}}},
    {{{0, 4, +1}, {1, 5, -1}, {2, 6, -1}, {3, 0, +1}}},
    {{{0, 5, +1}, {1, 6, -1}, {2, 0, -1}, {3, 1, +1}}},
    {{{0, 6, +1}, {1, 0, -1}, {2, 1, -1}, {3, 2, +1}}},
}};

}  // namespace golden
