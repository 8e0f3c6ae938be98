#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace matgirth {

// Sizes that may be infinite (no cycle, no cocycle, unreachable, ...).
// kInf leaves headroom so that sums of finite sizes never overflow into it.
using Size = long long;
inline constexpr Size kInf = std::numeric_limits<Size>::max() / 4;

inline bool is_inf(Size s) { return s >= kInf; }
inline Size add_size(Size a, Size b) { return is_inf(a) || is_inf(b) ? kInf : a + b; }
std::string size_to_string(Size s);  // decimal, or "inf"

// Element of GF(2)^t packed as a bitmask; bit i (from bit 0) is coordinate i.
// The dimension t is carried by the surrounding context, never by the value.
using ParityVec = std::uint32_t;

std::string parity_to_string(ParityVec p, int t);  // e.g. t=3, p=0b110 -> "011"
bool parity_parse(const std::string& s, ParityVec* out);

// Compares (size, sorted witness ids) pairs; used everywhere results from
// independent runs or branches are merged so ties break deterministically.
bool better_result(Size a_size, const std::vector<int>& a_witness,
                   Size b_size, const std::vector<int>& b_witness);

}  // namespace matgirth
