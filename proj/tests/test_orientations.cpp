#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "grskew/orientation.hpp"

using namespace grskew;

namespace {

// Oracle: scan of all functions G -> U(R) filtered by the homomorphism law,
// with prefix pruning; used for |G| <= 8 and |R| <= 16.
std::set<std::vector<int>> orientations_by_function_scan(const Group& g, const Involution& tau,
                                                         const Ring& r) {
  std::vector<int> unit_codes;
  for (int a = 0; a < r.size(); ++a)
    if (r.is_unit(a)) unit_codes.push_back(a);

  std::set<std::vector<int>> found;
  std::vector<int> values(static_cast<size_t>(g.order()), -1);

  auto prefix_ok = [&](int upto) {
    for (int x = 0; x <= upto; ++x)
      for (int y = 0; y <= upto; ++y) {
        int xy = g.mul(x, y);
        if (xy <= upto &&
            values[static_cast<size_t>(xy)] !=
                r.mul(values[static_cast<size_t>(x)], values[static_cast<size_t>(y)]))
          return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == g.order()) {
      Orientation sigma{values};
      if (!is_trivial(r, sigma) && is_compatible(g, tau, r, sigma)) found.insert(values);
      return;
    }
    for (int u : unit_codes) {
      values[static_cast<size_t>(pos)] = u;
      if (prefix_ok(pos)) self(self, pos + 1);
    }
    values[static_cast<size_t>(pos)] = -1;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

TEST_CASE("C2 with identity involution over Z4 has exactly one orientation") {
  Group c2 = catalog_group(GroupFamily::cyclic, 2);
  Ring z4 = make_ring({4});
  auto sigmas = enumerate_orientations(c2, identity_involution(c2), z4);
  REQUIRE(sigmas.size() == 1);
  CHECK(sigmas[0].values == std::vector<int>{1, 3});
}

TEST_CASE("C2 over Z8 has exactly three orientations") {
  Group c2 = catalog_group(GroupFamily::cyclic, 2);
  Ring z8 = make_ring({8});
  auto sigmas = enumerate_orientations(c2, identity_involution(c2), z8);
  REQUIRE(sigmas.size() == 3);
  std::set<int> images;
  for (const auto& s : sigmas) images.insert(s.values[1]);
  CHECK(images == std::set<int>{3, 5, 7});
}

TEST_CASE("C2 over Z5 has exactly one orientation (only -1 squares to 1)") {
  Group c2 = catalog_group(GroupFamily::cyclic, 2);
  Ring z5 = make_ring({5});
  auto sigmas = enumerate_orientations(c2, identity_involution(c2), z5);
  REQUIRE(sigmas.size() == 1);
  CHECK(sigmas[0].values[1] == 4);
}

TEST_CASE("Q8 with canonical involution over Z4 has exactly three orientations") {
  Group q8 = catalog_group(GroupFamily::dicyclic, 2);
  Ring z4 = make_ring({4});
  auto sigmas = enumerate_orientations(q8, *canonical_involution(q8), z4);
  CHECK(sigmas.size() == 3);
}

TEST_CASE("enumeration matches the full function scan for |G| <= 8, |R| <= 16") {
  struct Case {
    Group group;
    Ring ring;
  };
  std::vector<Case> cases;
  cases.push_back({catalog_group(GroupFamily::cyclic, 2), make_ring({8})});
  cases.push_back({catalog_group(GroupFamily::cyclic, 4), make_ring({8})});
  cases.push_back({catalog_group(GroupFamily::cyclic, 4), make_ring({16})});
  cases.push_back({catalog_group(GroupFamily::cyclic, 4), make_ring({4, 3})});
  cases.push_back({catalog_group(GroupFamily::elementary_abelian, 2), make_ring({8})});
  cases.push_back({catalog_group(GroupFamily::cyclic, 8), make_ring({4})});
  cases.push_back({catalog_group(GroupFamily::dicyclic, 2), make_ring({4})});
  cases.push_back({catalog_group(GroupFamily::dicyclic, 2), make_ring({4, 4})});
  cases.push_back({catalog_group(GroupFamily::dihedral, 4), make_ring({4})});
  for (const auto& c : cases) {
    for (const auto& tau : enumerate_involutions(c.group)) {
      CAPTURE(c.group.name());
      CAPTURE(c.ring.spec_string());
      auto expected = orientations_by_function_scan(c.group, tau, c.ring);
      auto actual = enumerate_orientations(c.group, tau, c.ring);
      REQUIRE(actual.size() == expected.size());
      for (const auto& sigma : actual) CHECK(expected.count(sigma.values) == 1);
      CHECK(std::is_sorted(actual.begin(), actual.end(),
                           [](const Orientation& a, const Orientation& b) {
                             return a.values < b.values;
                           }));
    }
  }
}

TEST_CASE("enumerated orientations satisfy the homomorphism and compatibility laws") {
  struct Case {
    Group group;
    Ring ring;
  };
  std::vector<Case> cases;
  cases.push_back({catalog_group(GroupFamily::dicyclic, 2), make_ring({4, 4})});
  cases.push_back({catalog_group(GroupFamily::cyclic, 4), make_ring({8})});
  cases.push_back({catalog_group(GroupFamily::dihedral, 4), make_ring({4})});
  cases.push_back({catalog_group(GroupFamily::cyclic, 8), make_ring({8, 3})});
  cases.push_back({catalog_group(GroupFamily::cyclic, 4), make_ring({5})});
  for (const auto& c : cases) {
    for (const auto& tau : enumerate_involutions(c.group)) {
      for (const auto& sigma : enumerate_orientations(c.group, tau, c.ring)) {
        CHECK(is_homomorphism(c.group, c.ring, sigma));
        CHECK_FALSE(is_trivial(c.ring, sigma));
        for (int x = 0; x < c.group.order(); ++x) {
          int xxstar = c.group.mul(x, tau.perm[static_cast<size_t>(x)]);
          CHECK(sigma.values[static_cast<size_t>(xxstar)] == c.ring.one());
          // Compatibility forces sigma(x)^2 = 1 on symmetric elements.
          if (tau.perm[static_cast<size_t>(x)] == x)
            CHECK(c.ring.squares_to_one(sigma.values[static_cast<size_t>(x)]));
        }
      }
    }
  }
}

TEST_CASE("kernels are normal subgroups containing the derived subgroup") {
  Group q8 = catalog_group(GroupFamily::dicyclic, 2);
  Ring z4 = make_ring({4});
  Involution tau = *canonical_involution(q8);
  auto sigmas = enumerate_orientations(q8, tau, z4);
  REQUIRE(sigmas.size() == 3);
  for (const auto& sigma : sigmas) {
    ElementSet n = orientation_kernel(q8, z4, sigma);
    CHECK(is_normal_subgroup(q8, n));
    CHECK(q8.derived_subgroup().is_subset_of(n));
    CHECK(n.size() == 4);
  }
  // sigma(i) = 1, sigma(j) = 3 has kernel {1, i, -1, -i} = indices 0..3.
  bool found = false;
  for (const auto& sigma : sigmas)
    if (sigma.values[1] == 1 && sigma.values[4] == 3) {
      CHECK(orientation_kernel(q8, z4, sigma).elements() == std::vector<int>{0, 1, 2, 3});
      found = true;
    }
  CHECK(found);
}

TEST_CASE("kernel of the trivial orientation is the whole group") {
  Group c2 = catalog_group(GroupFamily::cyclic, 2);
  Ring z4 = make_ring({4});
  CHECK(orientation_kernel(c2, z4, trivial_orientation(c2, z4)).size() == 2);

  Orientation sigma{{1, 3}};
  CHECK(orientation_kernel(c2, z4, sigma).elements() == std::vector<int>{0});
}

TEST_CASE("classic orientations") {
  Group c2 = catalog_group(GroupFamily::cyclic, 2);
  Ring z4 = make_ring({4});
  CHECK(is_classic(z4, Orientation{{1, 3}}));
  Ring z8 = make_ring({8});
  CHECK_FALSE(is_classic(z8, Orientation{{1, 3}}));
  CHECK(is_classic(z8, Orientation{{1, 7}}));
  Ring z44 = make_ring({4, 4});
  Orientation mixed{{z44.one(), z44.from_residues({3, 1})}};
  CHECK_FALSE(is_classic(z44, mixed));
  CHECK(c2.order() == 2);
}

TEST_CASE("build_context validates and caches") {
  Group c2 = catalog_group(GroupFamily::cyclic, 2);
  Ring z4 = make_ring({4});
  InstanceContext ctx = build_context(c2, identity_involution(c2), z4, Orientation{{1, 3}});
  CHECK(ctx.symmetric_set().size() == 2);
  CHECK(ctx.sigma_kernel().elements() == std::vector<int>{0});
  CHECK(ctx.compatible());
  CHECK_FALSE(ctx.plain());

  Group c4 = catalog_group(GroupFamily::cyclic, 4);
  Ring z8 = make_ring({8});
  InstanceContext c4ctx =
      build_context(c4, identity_involution(c4), z8, Orientation{{1, 3, 1, 3}});
  CHECK(c4ctx.sigma_kernel().elements() == std::vector<int>{0, 2});
}

TEST_CASE("build_context rejects trivial, incompatible, and characteristic-2 data") {
  Group c2 = catalog_group(GroupFamily::cyclic, 2);
  Ring z4 = make_ring({4});
  try {
    build_context(c2, identity_involution(c2), z4, trivial_orientation(c2, z4));
    FAIL("expected TrivialOrientation");
  } catch (const Error& e) {
    CHECK(e.code() == errc::trivial_orientation);
  }

  // sigma(g) = 2 on C4 is a homomorphism into U(Z5) but sigma(g*g) != 1.
  Group c4 = catalog_group(GroupFamily::cyclic, 4);
  Ring z5 = make_ring({5});
  Orientation sigma{{1, 2, 4, 3}};
  REQUIRE(is_homomorphism(c4, z5, sigma));
  try {
    build_context(c4, identity_involution(c4), z5, sigma);
    FAIL("expected IncompatibleOrientation");
  } catch (const Error& e) {
    CHECK(e.code() == errc::incompatible_orientation);
    CHECK(std::string(e.what()).find("x = 1") != std::string::npos);
  }

  CHECK_THROWS_AS(make_ring({2}), Error);
}

TEST_CASE("unchecked contexts carry the incompatibility flag") {
  Group c4 = catalog_group(GroupFamily::cyclic, 4);
  Ring z5 = make_ring({5});
  InstanceContext bad =
      build_context_unchecked(c4, identity_involution(c4), z5, Orientation{{1, 2, 4, 3}});
  CHECK(bad.valid_homomorphism());
  CHECK_FALSE(bad.compatible());
}

TEST_CASE("plain contexts use the trivial orientation") {
  Group c4 = catalog_group(GroupFamily::cyclic, 4);
  Ring z4 = make_ring({4});
  InstanceContext plain = build_plain_context(c4, inversion_involution(c4), z4);
  CHECK(plain.plain());
  CHECK(plain.compatible());
  CHECK(plain.sigma_kernel().size() == 4);
}
