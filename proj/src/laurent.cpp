#include "fockcb/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace fockcb {

void Laurent::normalize() {
  std::size_t begin = 0, end = coeffs_.size();
  while (begin < end && coeffs_[begin] == 0) ++begin;
  while (end > begin && coeffs_[end - 1] == 0) --end;
  if (begin == end) {
    lo_ = 0;
    coeffs_.clear();
    return;
  }
  lo_ += static_cast<int>(begin);
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(end), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(begin));
}

Laurent Laurent::monomial(Int coeff, int exp) {
  Laurent out;
  if (coeff != 0) {
    out.lo_ = exp;
    out.coeffs_.push_back(std::move(coeff));
  }
  return out;
}

Laurent::Int Laurent::coeff(int exp) const {
  if (is_zero() || exp < lo_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - lo_)];
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  int lo = std::min(lo_, other.lo_);
  int hi = std::max(max_exp(), other.max_exp());
  std::vector<Int> sum(static_cast<std::size_t>(hi - lo + 1));
  for (int k = lo_; k <= max_exp(); ++k)
    sum[static_cast<std::size_t>(k - lo)] = coeffs_[static_cast<std::size_t>(k - lo_)];
  for (int k = other.lo_; k <= other.max_exp(); ++k)
    sum[static_cast<std::size_t>(k - lo)] += other.coeffs_[static_cast<std::size_t>(k - other.lo_)];
  lo_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent out;
  out.lo_ = a.lo_ + b.lo_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Laurent::Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  out.normalize();
  return out;
}

Laurent& Laurent::operator*=(const Laurent& other) { return *this = *this * other; }

Laurent Laurent::bar() const {
  if (is_zero()) return {};
  Laurent out;
  out.lo_ = -max_exp();
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return out;
}

bool Laurent::in_qZq() const { return is_zero() || lo_ >= 1; }

Laurent Laurent::bar_symmetric_completion() const {
  if (is_zero() || lo_ > 0) return {};
  int width = -lo_;
  Laurent out;
  out.lo_ = lo_;
  out.coeffs_.assign(static_cast<std::size_t>(2 * width + 1), Int(0));
  for (int k = lo_; k <= 0; ++k) {
    out.coeffs_[static_cast<std::size_t>(k - lo_)] = coeff(k);
    if (k < 0) out.coeffs_[static_cast<std::size_t>(-k - lo_)] = coeff(k);
  }
  out.normalize();
  return out;
}

Laurent::Int Laurent::eval_at_one() const {
  Int total = 0;
  for (const Int& c : coeffs_) total += c;
  return total;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = max_exp(); k >= min_exp(); --k) {
    Int c = coeff(k);
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << 'q';
      if (k != 1) os << '^' << k;
    }
  }
  return os.str();
}

Laurent Laurent::q_int(int k) {
  if (k < 1) throw precondition_error("quantum integer requires a positive argument");
  Laurent out;
  out.lo_ = 1 - k;
  out.coeffs_.assign(static_cast<std::size_t>(2 * k - 1), Int(0));
  for (int t = 0; t < k; ++t) out.coeffs_[static_cast<std::size_t>(2 * t)] = 1;
  return out;
}

Laurent Laurent::q_factorial(int r) {
  if (r < 0) throw precondition_error("quantum factorial requires a nonnegative argument");
  Laurent out(1);
  for (int k = 2; k <= r; ++k) out *= q_int(k);
  return out;
}

Laurent exact_div(const Laurent& numer, const Laurent& denom) {
  if (denom.is_zero()) throw precondition_error("exact division by the zero polynomial");
  Laurent quotient;
  Laurent remainder = numer;
  int denom_width = denom.max_exp() - denom.min_exp();
  while (!remainder.is_zero()) {
    if (remainder.max_exp() - remainder.min_exp() < denom_width)
      throw not_divisible_error("polynomial division left a remainder");
    Laurent::Int lead = remainder.coeff(remainder.max_exp());
    if (lead % denom.coeff(denom.max_exp()) != 0)
      throw not_divisible_error("polynomial division needs a fractional coefficient");
    Laurent term =
        Laurent::monomial(lead / denom.coeff(denom.max_exp()), remainder.max_exp() - denom.max_exp());
    quotient += term;
    remainder -= term * denom;
  }
  return quotient;
}

std::ostream& operator<<(std::ostream& os, const Laurent& poly) { return os << poly.to_string(); }

}  // namespace fockcb
