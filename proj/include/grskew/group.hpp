#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grskew/element_set.hpp"
#include "grskew/errors.hpp"

namespace grskew {

enum class GroupFamily { cyclic, dihedral, dicyclic, elementary_abelian };

/// Finite group on dense element indices 0..order-1 backed by a full
/// multiplication table.  Construction always goes through build_group(),
/// which verifies the group axioms and precomputes the structural data the
/// rest of the engine needs repeatedly (inverses, element orders, center,
/// derived subgroup).  Instances are immutable afterwards and safe to share
/// across threads.
class Group {
public:
  Group() = default;  // empty placeholder; real groups come from build_group()

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[static_cast<size_t>(x) * order_ + y]; }
  int inv(int x) const { return inverse_[static_cast<size_t>(x)]; }

  /// y^-1 x y
  int conj(int x, int y) const { return mul(mul(inv(y), x), y); }
  /// x^-1 y^-1 x y
  int commutator(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  int power(int x, long long k) const;

  int element_order(int x) const { return element_order_[static_cast<size_t>(x)]; }
  bool is_abelian() const { return abelian_; }
  const ElementSet& center() const { return center_; }
  const ElementSet& derived_subgroup() const { return derived_; }

  /// The element s when the derived subgroup is exactly {1, s}, s != 1.
  std::optional<int> unique_nontrivial_commutator() const { return unique_commutator_; }

  const std::string& name() const { return name_; }
  void rename(std::string n) { name_ = std::move(n); }
  const std::vector<int>& table() const { return table_; }  // row-major order*order
  const std::vector<int>& inverses() const { return inverse_; }

private:
  friend Group build_group(const std::vector<std::vector<int>>& table,
                           std::optional<int> identity_hint, std::string name);

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  bool abelian_ = false;
  ElementSet center_;
  ElementSet derived_;
  std::optional<int> unique_commutator_;
  std::string name_;
};

/// Validates the table as a group (closure, identity, inverses,
/// associativity) and computes the cached structure.  Errors name the
/// violated axiom and carry a witness.
Group build_group(const std::vector<std::vector<int>>& table,
                  std::optional<int> identity_hint = std::nullopt,
                  std::string name = "");

/// Standard small groups.  Element index conventions (tests rely on them):
///   cyclic(n):      g^k at index k
///   dihedral(n):    r^k at k, s*r^k at n+k          (order 2n, n >= 2)
///   dicyclic(n):    a^k at k, a^k*b at 2n+k          (order 4n, n >= 2)
///   elementary_abelian(k): bitmask indices, product = xor  (order 2^k)
/// dicyclic(2) is the quaternion group Q8 (a = i, b = j, a^2 = -1).
Group catalog_group(GroupFamily family, int parameter);

/// Product on index pairs flattened row-major: (g, h) -> g*|H| + h.
Group direct_product(const Group& g, const Group& h);

/// Subgroup generated by the seed elements (always contains the identity).
ElementSet generated_subgroup(const Group& g, const std::vector<int>& seeds);

/// True iff every pair of elements drawn from the set commutes.
bool pairwise_commuting(const Group& g, const ElementSet& set);

/// Limited commutativity: whenever (x, y) = 1, at least one of x, y, xy is
/// central.
bool is_lc_group(const Group& g);

bool is_subgroup(const Group& g, const ElementSet& set);
bool is_normal_subgroup(const Group& g, const ElementSet& set);

/// Exponent of G/N; N must be a normal subgroup.
int quotient_exponent(const Group& g, const ElementSet& normal_subgroup);

/// A subgroup reindexed as a standalone group, with index maps both ways.
struct SubgroupView {
  Group group;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index, -1 outside
};
SubgroupView subgroup_view(const Group& g, const ElementSet& set);

/// G/N with cosets canonically ordered by their smallest member.
struct QuotientView {
  Group group;
  std::vector<int> projection;  // parent index -> coset index
};
QuotientView quotient_view(const Group& g, const ElementSet& normal_subgroup);

/// Enumerates all homomorphisms from -> to by backtracking on images of a
/// greedy generating set; each map is a vector over element indices.  The
/// streaming form keeps memory flat when the homomorphism set is large
/// (endomorphisms of elementary abelian groups grow fast).
void for_each_homomorphism(const Group& from, const Group& to,
                           const std::function<void(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> all_homomorphisms(const Group& from, const Group& to);

/// Anti-automorphism of order <= 2, stored as the element permutation.
struct Involution {
  std::vector<int> perm;
  bool operator==(const Involution&) const = default;
};

bool is_involution(const Group& g, const Involution& tau);
void validate_involution(const Group& g, const Involution& tau);  // throws with witness

Involution identity_involution(const Group& g);   // valid iff g is abelian
Involution inversion_involution(const Group& g);  // x -> x^-1, valid for any group

/// For an LC-group with unique nontrivial commutator s: fixes the center and
/// sends noncentral x to s*x.  Empty when the group is not of that shape.
/// A group together with exactly this involution is an SLC-group.
std::optional<Involution> canonical_involution(const Group& g);
bool is_slc(const Group& g, const Involution& tau);

/// Complete, deduplicated, lexicographically ordered list of the order <= 2
/// anti-automorphisms.  Enumerated through automorphisms phi with phi^2 = id
/// via the bijection tau(x) = phi(x)^-1; a full permutation scan would be
/// infeasible already at order 16.
std::vector<Involution> enumerate_involutions(const Group& g);

ElementSet fixed_set(const Group& g, const Involution& tau);

}  // namespace grskew
