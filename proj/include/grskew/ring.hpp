#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grskew/errors.hpp"
#include "grskew/group.hpp"

namespace grskew {

/// Finite commutative coefficient ring with unity: a product of integer
/// residue rings Z/m1 x ... x Z/mk.  Elements are dense codes in
/// [0, size) under the mixed-radix encoding of their residue tuples, and
/// all arithmetic is table lookups.  Characteristic 2 is rejected.
class Ring {
public:
  static constexpr int kMaxSize = 1024;

  int size() const { return size_; }
  long long characteristic() const { return characteristic_; }
  const std::vector<int>& moduli() const { return moduli_; }

  int zero() const { return 0; }
  int one() const { return one_; }
  int minus_one() const { return minus_one_; }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * size_ + b]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * size_ + b]; }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  /// k * a for an integer k (k may be negative).
  int scale(long long k, int a) const;

  bool is_unit(int a) const { return inverse_[static_cast<size_t>(a)] >= 0; }
  std::optional<int> inverse(int a) const {
    int v = inverse_[static_cast<size_t>(a)];
    return v >= 0 ? std::optional<int>(v) : std::nullopt;
  }
  bool squares_to_one(int a) const { return mul(a, a) == one_; }

  std::vector<int> residues(int a) const;
  int from_residues(const std::vector<int>& residues) const;  // validates ranges

  std::string spec_string() const;  // "Z4xZ3"

private:
  Ring() = default;
  friend Ring make_ring(std::vector<int> moduli);

  std::vector<int> moduli_;
  std::vector<int> stride_;
  long long characteristic_ = 0;
  int size_ = 0;
  int one_ = 0;
  int minus_one_ = 0;
  std::vector<int> add_, mul_, neg_, inverse_;
};

/// Builds the product ring; the characteristic is lcm(moduli) and must not
/// be 2.
Ring make_ring(std::vector<int> moduli);

/// Parses "Z4", "Z8xZ3", ... case-insensitively.
Ring parse_ring_spec(std::string_view spec);

/// True when some modulus has 2-part exactly 2 (a Z2 residue factor hides
/// inside, e.g. Z6); the classification theory does not cover those.
bool has_characteristic_two_component(const Ring& r);

struct UnitGroup {
  std::vector<int> codes;          // unit element codes, ascending
  std::vector<int> inverse_codes;  // parallel to codes
  Group group;                     // multiplication table on unit indices
  int index_of(int code) const;    // -1 when not a unit
};
UnitGroup units(const Ring& r);

/// The complete list { a : a*r = 0 }, ascending by code.  Computed
/// componentwise: in Z/m the annihilator of r is generated by m/gcd(m, r).
std::vector<int> annihilator(const Ring& r, int elem);

/// The code of the componentwise principal generator of the annihilator.
int annihilator_generator(const Ring& r, int elem);

}  // namespace grskew
