#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grskew/orientation.hpp"
#include "grskew/util.hpp"

namespace grskew {

/// Element of RG: the coefficient (a ring-element code) of group element x
/// sits at index x.
struct GroupRingElem {
  std::vector<int> coeffs;
  bool operator==(const GroupRingElem&) const = default;
};

GroupRingElem gr_zero(const InstanceContext& ctx);
GroupRingElem gr_monomial(const InstanceContext& ctx, int element, int coeff);
bool gr_is_zero(const GroupRingElem& a);

GroupRingElem gr_add(const InstanceContext& ctx, const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem gr_neg(const InstanceContext& ctx, const GroupRingElem& a);
GroupRingElem gr_sub(const InstanceContext& ctx, const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem gr_scale(const InstanceContext& ctx, int coeff, const GroupRingElem& a);

/// Convolution product: c_z = sum over xy = z of a_x * b_y.
GroupRingElem gr_mul(const InstanceContext& ctx, const GroupRingElem& a, const GroupRingElem& b);

/// (sum a_x x)^{sigma*} = sum sigma(x) a_x x*.
GroupRingElem sigma_star(const InstanceContext& ctx, const GroupRingElem& a);

/// Skew test straight from the definition: sigma*(a) == -a.
bool is_skew_by_definition(const InstanceContext& ctx, const GroupRingElem& a);

/// Skew test via the coefficient conditions, stratum by stratum:
///   x in N with x* = x:        2 a_x = 0
///   x in N,  x* != x:          a_{x*} = -a_x
///   x not in N, x* = x:        (1 + sigma(x)) a_x = 0
///   x outside both:            a_{x*} = -sigma(x) a_x
/// Requires a compatible context.
bool is_skew_by_conditions(const InstanceContext& ctx, const GroupRingElem& a);

/// Runs both characterizations and cross-checks them; a mismatch would be an
/// engine bug and throws internal_inconsistency.
bool is_skew(const InstanceContext& ctx, const GroupRingElem& a);

/// Spanning set of (RG)^-:
///   A1 = { alpha*x : x in G_*, alpha != 0, alpha*(1 + sigma(x)) = 0 }
///   A2 = { x - sigma(x)*x* : x not in G_* }, one entry per pair {x, x*}
/// (the mate x* - sigma(x*)*x is a unit multiple of the kept entry).
struct SkewGenerators {
  struct A1Item {
    int element;
    int coeff;
    GroupRingElem value;
  };
  struct A2Item {
    int element;
    int partner;
    GroupRingElem value;
  };
  std::vector<A1Item> a1;
  std::vector<A2Item> a2;

  size_t count() const { return a1.size() + a2.size(); }
  const GroupRingElem& at(size_t i) const;
  std::string label(size_t i, const Ring& ring) const;
};
SkewGenerators skew_generators(const InstanceContext& ctx);

/// Number of skew elements (product of the per-coordinate solution counts),
/// saturating at the given bound.
std::uint64_t skew_module_size(const InstanceContext& ctx, std::uint64_t bound);

/// The complete list of skew elements, solved coordinate-wise from the
/// coefficient conditions (no reference to A1/A2).  Throws too_large when
/// the count exceeds max_elements.
std::vector<GroupRingElem> skew_module(const InstanceContext& ctx,
                                       std::uint64_t max_elements = 200000);

struct OracleVerdict {
  bool anticommutative = false;
  size_t generator_count = 0;
  struct Witness {
    size_t first_index = 0;
    size_t second_index = 0;
    std::string first_label;
    std::string second_label;
    GroupRingElem product_sum;  // g*h + h*g, nonzero
  };
  std::optional<Witness> witness;
};

/// Brute-force anticommutativity of (RG)^-: checks g*h + h*g = 0 over all
/// generator pairs including g = h (bilinearity over the commutative
/// coefficient ring lifts the generator check to the whole span).  The
/// reported witness is the lexicographically first failing pair.
OracleVerdict oracle_anticommutative(const InstanceContext& ctx,
                                     const Deadline& deadline = Deadline::none());

/// For x, y outside G_*: the anticommutator of the two pair generators,
/// computed two ways -- the eight-term monomial expansion
///   xy + yx + sigma(xy)(x*y* + y*x*) - sigma(y)(xy* + y*x) - sigma(x)(yx* + x*y)
/// and the direct product sum via gr_mul -- asserted equal, then returned.
GroupRingElem skew_pair_anticommutator(const InstanceContext& ctx, int x, int y);

std::string gr_to_string(const InstanceContext& ctx, const GroupRingElem& a);

}  // namespace grskew
