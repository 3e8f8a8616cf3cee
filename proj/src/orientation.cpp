#include "grskew/orientation.hpp"

#include <algorithm>

namespace grskew {

Orientation trivial_orientation(const Group& g, const Ring& r) {
  Orientation sigma;
  sigma.values.assign(static_cast<size_t>(g.order()), r.one());
  return sigma;
}

bool is_homomorphism(const Group& g, const Ring& r, const Orientation& sigma) {
  if (static_cast<int>(sigma.values.size()) != g.order()) return false;
  for (int v : sigma.values)
    if (v < 0 || v >= r.size() || !r.is_unit(v)) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (sigma.values[static_cast<size_t>(g.mul(x, y))] !=
          r.mul(sigma.values[static_cast<size_t>(x)], sigma.values[static_cast<size_t>(y)]))
        return false;
  return true;
}

bool is_trivial(const Ring& r, const Orientation& sigma) {
  for (int v : sigma.values)
    if (v != r.one()) return false;
  return true;
}

std::optional<int> compatibility_witness(const Group& g, const Involution& tau, const Ring& r,
                                         const Orientation& sigma) {
  for (int x = 0; x < g.order(); ++x) {
    int xxstar = g.mul(x, tau.perm[static_cast<size_t>(x)]);
    if (sigma.values[static_cast<size_t>(xxstar)] != r.one()) return x;
  }
  return std::nullopt;
}

bool is_compatible(const Group& g, const Involution& tau, const Ring& r,
                   const Orientation& sigma) {
  return !compatibility_witness(g, tau, r, sigma).has_value();
}

std::vector<Orientation> enumerate_orientations(const Group& g, const Involution& tau,
                                                const Ring& r) {
  validate_involution(g, tau);
  QuotientView ab = quotient_view(g, g.derived_subgroup());
  UnitGroup u = units(r);

  std::vector<Orientation> out;
  for (const auto& hom : all_homomorphisms(ab.group, u.group)) {
    Orientation sigma;
    sigma.values.resize(static_cast<size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x)
      sigma.values[static_cast<size_t>(x)] =
          u.codes[static_cast<size_t>(hom[static_cast<size_t>(ab.projection[static_cast<size_t>(x)])])];
    if (is_trivial(r, sigma)) continue;
    if (!is_compatible(g, tau, r, sigma)) continue;
    out.push_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end(),
            [](const Orientation& a, const Orientation& b) { return a.values < b.values; });
  return out;
}

ElementSet orientation_kernel(const Group& g, const Ring& r, const Orientation& sigma) {
  ElementSet set(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (sigma.values[static_cast<size_t>(x)] == r.one()) set.insert(x);
  return set;
}

bool is_classic(const Ring& r, const Orientation& sigma) {
  for (int v : sigma.values)
    if (v != r.one() && v != r.minus_one()) return false;
  return true;
}

InstanceContext::InstanceContext(std::shared_ptr<const Group> g, Involution tau,
                                 std::shared_ptr<const Ring> r, Orientation sigma, bool plain)
    : group_(std::move(g)),
      ring_(std::move(r)),
      tau_(std::move(tau)),
      sigma_(std::move(sigma)),
      plain_(plain) {
  symmetric_ = fixed_set(group(), this->tau());
  kernel_ = orientation_kernel(group(), ring(), this->sigma());
  homomorphism_ = is_homomorphism(group(), ring(), this->sigma());
  compatible_ = homomorphism_ && is_compatible(group(), this->tau(), ring(), this->sigma());
}

namespace {

void check_shapes(const Group& g, const Involution& tau, const Ring& r,
                  const Orientation& sigma) {
  validate_involution(g, tau);
  if (static_cast<int>(sigma.values.size()) != g.order())
    fail(errc::validation_error, "orientation value count does not match group order");
  for (int v : sigma.values)
    if (v < 0 || v >= r.size())
      fail(errc::validation_error, "orientation value outside the ring");
}

}  // namespace

InstanceContext build_context(std::shared_ptr<const Group> g, Involution tau,
                              std::shared_ptr<const Ring> r, Orientation sigma) {
  check_shapes(*g, tau, *r, sigma);
  if (r->characteristic() == 2) fail(errc::characteristic_two, "characteristic 2 is excluded");
  if (!is_homomorphism(*g, *r, sigma))
    fail(errc::validation_error, "orientation is not a homomorphism into the unit group");
  if (is_trivial(*r, sigma))
    fail(errc::trivial_orientation, "orientation must be nontrivial");
  if (auto w = compatibility_witness(*g, tau, *r, sigma))
    fail(errc::incompatible_orientation,
         "sigma(x * tau(x)) != 1 at x = " + std::to_string(*w));
  return InstanceContext(std::move(g), std::move(tau), std::move(r), std::move(sigma), false);
}

InstanceContext build_context(const Group& g, const Involution& tau, const Ring& r,
                              const Orientation& sigma) {
  return build_context(std::make_shared<Group>(g), tau, std::make_shared<Ring>(r), sigma);
}

InstanceContext build_context_unchecked(std::shared_ptr<const Group> g, Involution tau,
                                        std::shared_ptr<const Ring> r, Orientation sigma) {
  check_shapes(*g, tau, *r, sigma);
  return InstanceContext(std::move(g), std::move(tau), std::move(r), std::move(sigma), false);
}

InstanceContext build_context_unchecked(const Group& g, const Involution& tau, const Ring& r,
                                        const Orientation& sigma) {
  return build_context_unchecked(std::make_shared<Group>(g), tau, std::make_shared<Ring>(r),
                                 sigma);
}

InstanceContext build_plain_context(std::shared_ptr<const Group> g, Involution tau,
                                    std::shared_ptr<const Ring> r) {
  Orientation sigma = trivial_orientation(*g, *r);
  check_shapes(*g, tau, *r, sigma);
  if (r->characteristic() == 2) fail(errc::characteristic_two, "characteristic 2 is excluded");
  return InstanceContext(std::move(g), std::move(tau), std::move(r), std::move(sigma), true);
}

InstanceContext build_plain_context(const Group& g, const Involution& tau, const Ring& r) {
  return build_plain_context(std::make_shared<Group>(g), tau, std::make_shared<Ring>(r));
}

}  // namespace grskew
