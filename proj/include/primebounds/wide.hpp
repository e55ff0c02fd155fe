// 128-bit integer helpers. GCC/Clang builtin __int128 is used for exact
// prime prefix sums and cleared-denominator inequality comparisons.

#pragma once
#include <cstdint>
#include <string>

namespace primebounds {

using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(u128 v);
std::string to_string(i128 v);

} // namespace primebounds
