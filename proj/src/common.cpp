#include "matgirth/common.hpp"

#include <algorithm>

namespace matgirth {

std::string size_to_string(Size s) {
  if (is_inf(s)) return "inf";
  return std::to_string(s);
}

std::string parity_to_string(ParityVec p, int t) {
  std::string out(static_cast<size_t>(t), '0');
  for (int i = 0; i < t; ++i)
    if (p >> i & 1u) out[static_cast<size_t>(i)] = '1';
  return out;
}

bool parity_parse(const std::string& s, ParityVec* out) {
  if (s.empty() || s.size() > 32) return false;
  ParityVec p = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      p |= ParityVec{1} << i;
    else if (s[i] != '0')
      return false;
  }
  *out = p;
  return true;
}

bool better_result(Size a_size, const std::vector<int>& a_witness,
                   Size b_size, const std::vector<int>& b_witness) {
  if (a_size != b_size) return a_size < b_size;
  return std::lexicographical_compare(a_witness.begin(), a_witness.end(),
                                      b_witness.begin(), b_witness.end());
}

}  // namespace matgirth
