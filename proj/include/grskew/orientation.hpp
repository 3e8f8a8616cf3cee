#pragma once

#include <memory>
#include <vector>

#include "grskew/element_set.hpp"
#include "grskew/group.hpp"
#include "grskew/ring.hpp"

namespace grskew {

/// Group homomorphism sigma: G -> U(R), stored as the ring-element code of
/// sigma(x) for every group element x.  A usable orientation is nontrivial
/// and compatible with the involution: sigma(x * tau(x)) = 1 for all x.
struct Orientation {
  std::vector<int> values;
  bool operator==(const Orientation&) const = default;
};

Orientation trivial_orientation(const Group& g, const Ring& r);

bool is_homomorphism(const Group& g, const Ring& r, const Orientation& sigma);
bool is_trivial(const Ring& r, const Orientation& sigma);
bool is_compatible(const Group& g, const Involution& tau, const Ring& r,
                   const Orientation& sigma);
/// First x with sigma(x * tau(x)) != 1, if any.
std::optional<int> compatibility_witness(const Group& g, const Involution& tau, const Ring& r,
                                         const Orientation& sigma);

/// All nontrivial homomorphisms G -> U(R) compatible with tau, in
/// lexicographic order of their value vectors.  Enumerated through the
/// abelianization G/G' (the unit group is abelian, so every homomorphism
/// factors through it).
std::vector<Orientation> enumerate_orientations(const Group& g, const Involution& tau,
                                                const Ring& r);

ElementSet orientation_kernel(const Group& g, const Ring& r, const Orientation& sigma);

/// True iff every value lies in {1, -1}.
bool is_classic(const Ring& r, const Orientation& sigma);

/// The ambient quadruple (G, tau, R, sigma) with the derived data the skew
/// machinery keeps consulting.  build_context cross-validates everything;
/// the unchecked variant skips the semantic checks so tests can probe how
/// the engine degrades on bad orientations (the oracle and the classifiers
/// refuse such contexts).
class InstanceContext {
public:
  const Group& group() const { return *group_; }
  const Ring& ring() const { return *ring_; }
  const Involution& tau() const { return tau_; }
  const Orientation& sigma() const { return sigma_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  std::shared_ptr<const Ring> ring_ptr() const { return ring_; }

  int tau_of(int x) const { return tau_.perm[static_cast<size_t>(x)]; }
  int sigma_of(int x) const { return sigma_.values[static_cast<size_t>(x)]; }

  const ElementSet& symmetric_set() const { return symmetric_; }  // G_*
  const ElementSet& sigma_kernel() const { return kernel_; }      // N

  bool compatible() const { return compatible_; }
  bool valid_homomorphism() const { return homomorphism_; }
  /// Plain mode: sigma == 1 everywhere, used to run the machinery with the
  /// bare group involution.
  bool plain() const { return plain_; }

private:
  InstanceContext(std::shared_ptr<const Group> g, Involution tau, std::shared_ptr<const Ring> r,
                  Orientation sigma, bool plain);

  friend InstanceContext build_context(std::shared_ptr<const Group>, Involution,
                                       std::shared_ptr<const Ring>, Orientation);
  friend InstanceContext build_context_unchecked(std::shared_ptr<const Group>, Involution,
                                                 std::shared_ptr<const Ring>, Orientation);
  friend InstanceContext build_plain_context(std::shared_ptr<const Group>, Involution,
                                             std::shared_ptr<const Ring>);

  std::shared_ptr<const Group> group_;
  std::shared_ptr<const Ring> ring_;
  Involution tau_;
  Orientation sigma_;
  ElementSet symmetric_;
  ElementSet kernel_;
  bool compatible_ = false;
  bool homomorphism_ = false;
  bool plain_ = false;
};

InstanceContext build_context(std::shared_ptr<const Group> g, Involution tau,
                              std::shared_ptr<const Ring> r, Orientation sigma);
InstanceContext build_context(const Group& g, const Involution& tau, const Ring& r,
                              const Orientation& sigma);

InstanceContext build_context_unchecked(std::shared_ptr<const Group> g, Involution tau,
                                        std::shared_ptr<const Ring> r, Orientation sigma);
InstanceContext build_context_unchecked(const Group& g, const Involution& tau, const Ring& r,
                                        const Orientation& sigma);

/// Context with the trivial orientation; the map sigma* then acts as the
/// plain linear extension of tau.
InstanceContext build_plain_context(std::shared_ptr<const Group> g, Involution tau,
                                    std::shared_ptr<const Ring> r);
InstanceContext build_plain_context(const Group& g, const Involution& tau, const Ring& r);

}  // namespace grskew
