#include "matgirth/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace matgirth::ring {

namespace {

void check_t(int t) {
  if (t < 0 || t > 20) throw std::invalid_argument("ring dimension out of range");
}

}  // namespace

GroupRingPoly::GroupRingPoly(int t) : t_(t) {
  check_t(t);
  c_.resize(size_t{1} << t);
}

GroupRingPoly GroupRingPoly::unit(int t) { return monomial(t, 0, 0, 1); }

GroupRingPoly GroupRingPoly::monomial(int t, ParityVec beta, int zdeg,
                                      Int coeff) {
  check_t(t);
  if (beta >= (ParityVec{1} << t))
    throw std::invalid_argument("y-class out of range");
  if (zdeg < 0) throw std::invalid_argument("negative z-degree");
  GroupRingPoly p(t);
  if (coeff != 0) {
    auto& row = p.c_[beta];
    row.resize(static_cast<size_t>(zdeg) + 1);
    row[static_cast<size_t>(zdeg)] = std::move(coeff);
  }
  return p;
}

bool GroupRingPoly::is_zero() const {
  for (const auto& row : c_)
    if (!row.empty()) return false;
  return true;
}

Int GroupRingPoly::coeff(ParityVec beta, int zdeg) const {
  if (beta >= c_.size() || zdeg < 0) return 0;
  const auto& row = c_[beta];
  if (static_cast<size_t>(zdeg) >= row.size()) return 0;
  return row[static_cast<size_t>(zdeg)];
}

int GroupRingPoly::num_terms() const {
  int n = 0;
  for (const auto& row : c_)
    for (const auto& x : row)
      if (x != 0) ++n;
  return n;
}

int GroupRingPoly::max_zdeg() const {
  int best = -1;
  for (const auto& row : c_)
    best = std::max(best, static_cast<int>(row.size()) - 1);
  return best;
}

Int GroupRingPoly::max_abs_coeff() const {
  Int best = 0;
  for (const auto& row : c_)
    for (const auto& x : row)
      if (abs(x) > best) best = abs(x);
  return best;
}

const std::vector<Int>& GroupRingPoly::z_poly(ParityVec beta) const {
  if (beta >= c_.size()) throw std::invalid_argument("y-class out of range");
  return c_[beta];
}

Size GroupRingPoly::mindeg_z(ParityVec beta) const {
  if (beta >= c_.size()) throw std::invalid_argument("y-class out of range");
  const auto& row = c_[beta];
  for (size_t d = 0; d < row.size(); ++d)
    if (row[d] != 0) return static_cast<Size>(d);
  return kInf;
}

GroupRingPoly GroupRingPoly::operator-() const {
  GroupRingPoly out(*this);
  for (auto& row : out.c_)
    for (auto& x : row) x = -x;
  return out;
}

bool GroupRingPoly::operator==(const GroupRingPoly& o) const {
  return t_ == o.t_ && c_ == o.c_;
}

std::string GroupRingPoly::to_string() const {
  std::string out;
  for (ParityVec beta = 0; beta < c_.size(); ++beta) {
    const auto& row = c_[beta];
    for (size_t d = 0; d < row.size(); ++d) {
      if (row[d] == 0) continue;
      if (!out.empty()) out += " + ";
      out += row[d].str();
      if (beta != 0) out += " y^" + parity_to_string(beta, t_);
      if (d > 0) out += " z^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

void GroupRingPoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
}

GroupRingPoly ring_add(const GroupRingPoly& a, const GroupRingPoly& b) {
  if (a.t_ != b.t_) throw std::invalid_argument("ring dimension mismatch");
  GroupRingPoly out(a);
  for (size_t beta = 0; beta < b.c_.size(); ++beta) {
    const auto& src = b.c_[beta];
    auto& dst = out.c_[beta];
    if (dst.size() < src.size()) dst.resize(src.size());
    for (size_t d = 0; d < src.size(); ++d) dst[d] += src[d];
  }
  out.trim();
  return out;
}

GroupRingPoly ring_sub(const GroupRingPoly& a, const GroupRingPoly& b) {
  return ring_add(a, -b);
}

GroupRingPoly ring_mul(const GroupRingPoly& a, const GroupRingPoly& b) {
  return ring_mul_trunc(a, b, -1);
}

GroupRingPoly ring_mul_trunc(const GroupRingPoly& a, const GroupRingPoly& b,
                             int max_zdeg) {
  if (a.t_ != b.t_) throw std::invalid_argument("ring dimension mismatch");
  GroupRingPoly out(a.t_);
  for (size_t ba = 0; ba < a.c_.size(); ++ba) {
    const auto& ra = a.c_[ba];
    if (ra.empty()) continue;
    for (size_t bb = 0; bb < b.c_.size(); ++bb) {
      const auto& rb = b.c_[bb];
      if (rb.empty()) continue;
      size_t full = ra.size() + rb.size() - 1;
      size_t keep = max_zdeg < 0
                        ? full
                        : std::min(full, static_cast<size_t>(max_zdeg) + 1);
      auto& dst = out.c_[ba ^ bb];
      if (dst.size() < keep) dst.resize(keep);
      for (size_t i = 0; i < ra.size() && i < keep; ++i) {
        if (ra[i] == 0) continue;
        size_t jend = std::min(rb.size(), keep - i);
        for (size_t j = 0; j < jend; ++j)
          if (rb[j] != 0) dst[i + j] += ra[i] * rb[j];
      }
    }
  }
  out.trim();
  return out;
}

SkewRingMatrix::SkewRingMatrix(int n, int t) : n_(n), t_(t) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
  check_t(t);
  e_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), GroupRingPoly(t));
}

const GroupRingPoly& SkewRingMatrix::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw std::invalid_argument("matrix index out of range");
  return e_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
            static_cast<size_t>(j - 1)];
}

void SkewRingMatrix::set_upper(int i, int j, const GroupRingPoly& value) {
  if (i < 1 || j <= i || j > n_)
    throw std::invalid_argument("set_upper needs 1 <= i < j <= n");
  if (value.t() != t_) throw std::invalid_argument("ring dimension mismatch");
  e_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
     static_cast<size_t>(j - 1)] = value;
  e_[static_cast<size_t>(j - 1) * static_cast<size_t>(n_) +
     static_cast<size_t>(i - 1)] = -value;
}

void validate_skew(const SkewRingMatrix& m) {
  for (int i = 1; i <= m.n(); ++i) {
    if (!m.at(i, i).is_zero())
      throw std::invalid_argument("diagonal entry is non-zero");
    for (int j = i + 1; j <= m.n(); ++j)
      if (m.at(j, i) != -m.at(i, j))
        throw std::invalid_argument("matrix is not skew-symmetric");
  }
}

}  // namespace matgirth::ring
