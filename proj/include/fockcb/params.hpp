#pragma once

#include <compare>
#include <vector>

#include "fockcb/errors.hpp"

namespace fockcb {

// Element of Z/eZ, stored normalized into 0..e-1.
class Residue {
 public:
  Residue() = default;
  explicit Residue(int value) : value_(value) {
    if (value < 0) throw precondition_error("residue value must be nonnegative");
  }

  // Reduces an arbitrary integer content into 0..e-1.
  static Residue reduce(long long value, int e) {
    long long r = value % e;
    if (r < 0) r += e;
    return Residue(static_cast<int>(r));
  }

  int value() const { return value_; }

  auto operator<=>(const Residue&) const = default;

 private:
  int value_ = 0;
};

// The datum {e; v_0,...,v_{d-1}}: order e of the root of unity plus the
// weakly increasing charges 0 <= v_0 <= ... <= v_{d-1} < e. The level d is
// the number of charges.
class ParamSet {
 public:
  ParamSet(int e, std::vector<int> charges);

  int e() const { return e_; }
  int level() const { return static_cast<int>(v_.size()); }
  int charge(int c) const;
  const std::vector<int>& charges() const { return v_; }

  bool operator==(const ParamSet&) const = default;

 private:
  int e_ = 1;
  std::vector<int> v_;
};

inline ParamSet::ParamSet(int e, std::vector<int> charges) : e_(e), v_(std::move(charges)) {
  if (e_ < 1) throw usage_error("parameter e must be a positive integer");
  if (v_.empty()) throw usage_error("at least one charge is required (the level d is the number of charges)");
  for (std::size_t c = 0; c < v_.size(); ++c) {
    bool ordered = v_[c] >= 0 && v_[c] < e_ && (c == 0 || v_[c - 1] <= v_[c]);
    if (!ordered)
      throw usage_error("charges must satisfy 0 <= v_0 <= ... <= v_{d-1} < e");
  }
}

inline int ParamSet::charge(int c) const {
  if (c < 0 || c >= level()) throw diagram_error("component index out of range");
  return v_[static_cast<std::size_t>(c)];
}

}  // namespace fockcb
