#include "grskew/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace grskew {

namespace {

std::string triple(int x, int y, int z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
}

}  // namespace

int Group::power(int x, long long k) const {
  int acc = identity_;
  for (long long i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

Group build_group(const std::vector<std::vector<int>>& table,
                  std::optional<int> identity_hint, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(errc::invalid_parameter, "empty multiplication table");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[static_cast<size_t>(x)].size()) != n)
      fail(errc::index_out_of_range, "table row " + std::to_string(x) + " is not of length " +
                                         std::to_string(n));
    for (int y = 0; y < n; ++y) {
      int v = table[static_cast<size_t>(x)][static_cast<size_t>(y)];
      if (v < 0 || v >= n)
        fail(errc::index_out_of_range,
             "table[" + std::to_string(x) + "][" + std::to_string(y) + "] = " +
                 std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    }
  }

  Group g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.table_[static_cast<size_t>(x) * n + y] = table[static_cast<size_t>(x)][static_cast<size_t>(y)];

  auto is_identity = [&](int e) {
    for (int x = 0; x < n; ++x)
      if (g.mul(e, x) != x || g.mul(x, e) != x) return false;
    return true;
  };

  int identity = -1;
  if (identity_hint) {
    if (*identity_hint < 0 || *identity_hint >= n)
      fail(errc::index_out_of_range, "identity hint outside table");
    if (!is_identity(*identity_hint))
      fail(errc::no_identity,
           "hinted element " + std::to_string(*identity_hint) + " is not a two-sided identity");
    identity = *identity_hint;
  } else {
    for (int e = 0; e < n && identity < 0; ++e)
      if (is_identity(e)) identity = e;
    if (identity < 0) fail(errc::no_identity, "no two-sided identity element exists");
  }
  g.identity_ = identity;

  g.inverse_.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
        g.inverse_[static_cast<size_t>(x)] = y;
        break;
      }
    }
    if (g.inverse_[static_cast<size_t>(x)] < 0)
      fail(errc::missing_inverse, "element " + std::to_string(x) + " has no two-sided inverse");
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          fail(errc::not_associative, "associativity fails at " + triple(x, y, z));

  g.element_order_.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int acc = x, k = 1;
    while (acc != identity) {
      acc = g.mul(acc, x);
      ++k;
    }
    g.element_order_[static_cast<size_t>(x)] = k;
  }

  g.center_ = ElementSet(n);
  for (int z = 0; z < n; ++z) {
    bool central = true;
    for (int x = 0; x < n && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) g.center_.insert(z);
  }
  g.abelian_ = g.center_.size() == n;

  std::vector<int> commutators;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) commutators.push_back(g.commutator(x, y));
  g.derived_ = generated_subgroup(g, commutators);

  if (g.derived_.size() == 2) {
    for (int s : g.derived_.elements())
      if (s != identity) g.unique_commutator_ = s;
  }

  return g;
}

Group catalog_group(GroupFamily family, int parameter) {
  auto cyclic_table = [](int n) {
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
    return t;
  };

  switch (family) {
    case GroupFamily::cyclic: {
      if (parameter < 1) fail(errc::invalid_parameter, "cyclic group needs parameter >= 1");
      return build_group(cyclic_table(parameter), 0, "C" + std::to_string(parameter));
    }
    case GroupFamily::dihedral: {
      const int n = parameter;
      if (n < 2) fail(errc::invalid_parameter, "dihedral group needs parameter >= 2");
      const int order = 2 * n;
      // index: r^k -> k, s*r^k -> n + k
      std::vector<std::vector<int>> t(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
      for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < n; ++k1)
          for (int e2 = 0; e2 < 2; ++e2)
            for (int k2 = 0; k2 < n; ++k2) {
              // (s^e1 r^k1)(s^e2 r^k2) = s^(e1+e2) r^(k2 + (e2 ? -k1 : k1))
              int e = (e1 + e2) % 2;
              int k = e2 ? ((k2 - k1) % n + n) % n : (k1 + k2) % n;
              t[static_cast<size_t>(e1 * n + k1)][static_cast<size_t>(e2 * n + k2)] = e * n + k;
            }
      return build_group(t, 0, "D" + std::to_string(n));
    }
    case GroupFamily::dicyclic: {
      const int n = parameter;
      if (n < 2) fail(errc::invalid_parameter, "dicyclic group needs parameter >= 2");
      const int m = 2 * n;  // order of a
      const int order = 4 * n;
      // index: a^k -> k, a^k*b -> 2n + k; relations a^2n = 1, b^2 = a^n,
      // b^-1 a b = a^-1.
      std::vector<std::vector<int>> t(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
      for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < m; ++k1)
          for (int e2 = 0; e2 < 2; ++e2)
            for (int k2 = 0; k2 < m; ++k2) {
              // (a^k1 b^e1)(a^k2 b^e2); moving b past a^k2 inverts the power.
              int e, k;
              if (e1 == 0) {
                e = e2;
                k = (k1 + k2) % m;
              } else if (e2 == 0) {
                e = 1;
                k = ((k1 - k2) % m + m) % m;
              } else {
                e = 0;
                k = ((k1 - k2 + n) % m + m) % m;
              }
              t[static_cast<size_t>(e1 * m + k1)][static_cast<size_t>(e2 * m + k2)] = e * m + k;
            }
      std::string nm = n == 2 ? std::string("Q8") : "Dic" + std::to_string(n);
      return build_group(t, 0, std::move(nm));
    }
    case GroupFamily::elementary_abelian: {
      const int k = parameter;
      if (k < 1 || k > 10) fail(errc::invalid_parameter, "elementary abelian rank must be in [1, 10]");
      const int order = 1 << k;
      std::vector<std::vector<int>> t(static_cast<size_t>(order),
                                      std::vector<int>(static_cast<size_t>(order)));
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = i ^ j;
      return build_group(t, 0, "E" + std::to_string(order));
    }
  }
  fail(errc::invalid_parameter, "unknown group family");
}

Group direct_product(const Group& g, const Group& h) {
  const int n = g.order(), m = h.order();
  const int order = n * m;
  std::vector<std::vector<int>> t(static_cast<size_t>(order),
                                  std::vector<int>(static_cast<size_t>(order)));
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < m; ++b2)
          t[static_cast<size_t>(a1 * m + b1)][static_cast<size_t>(a2 * m + b2)] =
              g.mul(a1, a2) * m + h.mul(b1, b2);
  return build_group(t, g.identity() * m + h.identity(), g.name() + "x" + h.name());
}

ElementSet generated_subgroup(const Group& g, const std::vector<int>& seeds) {
  ElementSet set(g.order());
  set.insert(g.identity());
  std::vector<int> members{g.identity()};
  std::vector<int> queue = seeds;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    if (set.contains(x)) continue;
    set.insert(x);
    members.push_back(x);
    for (size_t i = 0; i < members.size(); ++i) {
      queue.push_back(g.mul(x, members[i]));
      queue.push_back(g.mul(members[i], x));
    }
  }
  return set;
}

bool pairwise_commuting(const Group& g, const ElementSet& set) {
  auto elems = set.elements();
  for (int x : elems)
    for (int y : elems)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_lc_group(const Group& g) {
  const ElementSet& z = g.center();
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int xy = g.mul(x, y);
      if (xy != g.mul(y, x)) continue;
      if (!z.contains(x) && !z.contains(y) && !z.contains(xy)) return false;
    }
  return true;
}

bool is_subgroup(const Group& g, const ElementSet& set) {
  if (set.universe() != g.order()) return false;
  if (!set.contains(g.identity())) return false;
  auto elems = set.elements();
  for (int x : elems) {
    if (!set.contains(g.inv(x))) return false;
    for (int y : elems)
      if (!set.contains(g.mul(x, y))) return false;
  }
  return true;
}

bool is_normal_subgroup(const Group& g, const ElementSet& set) {
  if (!is_subgroup(g, set)) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int n : set.elements())
      if (!set.contains(g.conj(n, x))) return false;
  return true;
}

int quotient_exponent(const Group& g, const ElementSet& normal_subgroup) {
  if (!is_subgroup(g, normal_subgroup))
    fail(errc::not_a_subgroup, "the given set is not a subgroup");
  if (!is_normal_subgroup(g, normal_subgroup))
    fail(errc::not_normal, "the given subgroup is not normal");
  long long exponent = 1;
  for (int x = 0; x < g.order(); ++x) {
    int acc = g.identity();
    int k = 0;
    do {
      acc = g.mul(acc, x);
      ++k;
    } while (!normal_subgroup.contains(acc));
    exponent = std::lcm(exponent, static_cast<long long>(k));
  }
  return static_cast<int>(exponent);
}

SubgroupView subgroup_view(const Group& g, const ElementSet& set) {
  if (!is_subgroup(g, set)) fail(errc::not_a_subgroup, "the given set is not a subgroup");
  SubgroupView view;
  view.to_parent = set.elements();
  view.from_parent.assign(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < view.to_parent.size(); ++i)
    view.from_parent[static_cast<size_t>(view.to_parent[i])] = static_cast<int>(i);
  const int m = static_cast<int>(view.to_parent.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          view.from_parent[static_cast<size_t>(g.mul(view.to_parent[static_cast<size_t>(i)],
                                                     view.to_parent[static_cast<size_t>(j)]))];
  view.group = build_group(t, view.from_parent[static_cast<size_t>(g.identity())],
                           g.name() + "[sub" + std::to_string(m) + "]");
  return view;
}

QuotientView quotient_view(const Group& g, const ElementSet& normal_subgroup) {
  if (!is_normal_subgroup(g, normal_subgroup))
    fail(errc::not_normal, "quotient requires a normal subgroup");
  QuotientView view;
  view.projection.assign(static_cast<size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (view.projection[static_cast<size_t>(x)] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int n : normal_subgroup.elements())
      view.projection[static_cast<size_t>(g.mul(x, n))] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          view.projection[static_cast<size_t>(g.mul(reps[static_cast<size_t>(i)],
                                                    reps[static_cast<size_t>(j)]))];
  view.group = build_group(t, view.projection[static_cast<size_t>(g.identity())],
                           g.name() + "/N" + std::to_string(normal_subgroup.size()));
  return view;
}

namespace {

// Greedy generating set plus a factorization of every element as
// parent * generator, discovered by BFS from the identity.
struct GenDecomposition {
  std::vector<int> generators;
  std::vector<int> bfs_order;  // excludes the identity
  std::vector<int> parent;     // element -> previously reached element
  std::vector<int> via;        // element -> generator index used
};

GenDecomposition decompose(const Group& g) {
  GenDecomposition d;
  ElementSet reached(g.order());
  auto extend = [&]() {
    // BFS closure over the current generator list.
    std::vector<int> frontier;
    for (int x = 0; x < g.order(); ++x)
      if (reached.contains(x)) frontier.push_back(x);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (size_t gi = 0; gi < d.generators.size(); ++gi) {
          int y = g.mul(x, d.generators[gi]);
          if (reached.contains(y)) continue;
          reached.insert(y);
          d.parent[static_cast<size_t>(y)] = x;
          d.via[static_cast<size_t>(y)] = static_cast<int>(gi);
          d.bfs_order.push_back(y);
          next.push_back(y);
        }
      frontier = std::move(next);
    }
  };

  d.parent.assign(static_cast<size_t>(g.order()), -1);
  d.via.assign(static_cast<size_t>(g.order()), -1);
  reached.insert(g.identity());
  extend();
  for (int x = 0; x < g.order(); ++x) {
    if (reached.contains(x)) continue;
    d.generators.push_back(x);
    reached.insert(x);
    d.parent[static_cast<size_t>(x)] = g.identity();
    d.via[static_cast<size_t>(x)] = static_cast<int>(d.generators.size()) - 1;
    d.bfs_order.push_back(x);
    extend();
  }
  return d;
}

}  // namespace

void for_each_homomorphism(const Group& from, const Group& to,
                           const std::function<void(const std::vector<int>&)>& fn) {
  GenDecomposition d = decompose(from);
  const size_t k = d.generators.size();

  std::vector<std::vector<int>> candidates(k);
  for (size_t i = 0; i < k; ++i) {
    int ord = from.element_order(d.generators[i]);
    for (int b = 0; b < to.order(); ++b)
      if (to.power(b, ord) == to.identity()) candidates[i].push_back(b);
  }

  std::vector<int> image(k, 0);
  std::vector<int> map(static_cast<size_t>(from.order()));

  auto emit = [&]() {
    map[static_cast<size_t>(from.identity())] = to.identity();
    for (int x : d.bfs_order)
      map[static_cast<size_t>(x)] = to.mul(map[static_cast<size_t>(d.parent[static_cast<size_t>(x)])],
                                           image[static_cast<size_t>(d.via[static_cast<size_t>(x)])]);
    for (int x = 0; x < from.order(); ++x)
      for (int y = 0; y < from.order(); ++y)
        if (map[static_cast<size_t>(from.mul(x, y))] !=
            to.mul(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
          return;
    fn(map);
  };

  // Trivial generating set means the trivial group.
  if (k == 0) {
    emit();
    return;
  }

  std::vector<size_t> idx(k, 0);
  while (true) {
    for (size_t i = 0; i < k; ++i) image[i] = candidates[i][idx[i]];
    emit();
    size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < candidates[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<std::vector<int>> all_homomorphisms(const Group& from, const Group& to) {
  std::vector<std::vector<int>> result;
  for_each_homomorphism(from, to, [&](const std::vector<int>& map) { result.push_back(map); });
  return result;
}

bool is_involution(const Group& g, const Involution& tau) {
  if (static_cast<int>(tau.perm.size()) != g.order()) return false;
  for (int v : tau.perm)
    if (v < 0 || v >= g.order()) return false;
  for (int x = 0; x < g.order(); ++x)
    if (tau.perm[static_cast<size_t>(tau.perm[static_cast<size_t>(x)])] != x) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (tau.perm[static_cast<size_t>(g.mul(x, y))] !=
          g.mul(tau.perm[static_cast<size_t>(y)], tau.perm[static_cast<size_t>(x)]))
        return false;
  return true;
}

void validate_involution(const Group& g, const Involution& tau) {
  if (static_cast<int>(tau.perm.size()) != g.order())
    fail(errc::validation_error, "involution permutation length does not match group order");
  for (int v : tau.perm)
    if (v < 0 || v >= g.order())
      fail(errc::validation_error, "involution permutation entry outside element range");
  for (int x = 0; x < g.order(); ++x)
    if (tau.perm[static_cast<size_t>(tau.perm[static_cast<size_t>(x)])] != x)
      fail(errc::validation_error,
           "map does not square to the identity at element " + std::to_string(x));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (tau.perm[static_cast<size_t>(g.mul(x, y))] !=
          g.mul(tau.perm[static_cast<size_t>(y)], tau.perm[static_cast<size_t>(x)]))
        fail(errc::validation_error, "anti-automorphism law fails at pair (" + std::to_string(x) +
                                         ", " + std::to_string(y) + ")");
}

Involution identity_involution(const Group& g) {
  Involution tau;
  tau.perm.resize(static_cast<size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) tau.perm[static_cast<size_t>(x)] = x;
  return tau;
}

Involution inversion_involution(const Group& g) {
  Involution tau;
  tau.perm.resize(static_cast<size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) tau.perm[static_cast<size_t>(x)] = g.inv(x);
  return tau;
}

std::optional<Involution> canonical_involution(const Group& g) {
  if (!is_lc_group(g)) return std::nullopt;
  auto s = g.unique_nontrivial_commutator();
  if (!s) return std::nullopt;
  Involution tau;
  tau.perm.resize(static_cast<size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    tau.perm[static_cast<size_t>(x)] = g.center().contains(x) ? x : g.mul(*s, x);
  if (!is_involution(g, tau)) return std::nullopt;
  return tau;
}

bool is_slc(const Group& g, const Involution& tau) {
  auto canonical = canonical_involution(g);
  return canonical && *canonical == tau;
}

std::vector<Involution> enumerate_involutions(const Group& g) {
  std::set<std::vector<int>> seen;
  for_each_homomorphism(g, g, [&](const std::vector<int>& phi) {
    ElementSet image(g.order());
    for (int v : phi) image.insert(v);
    if (image.size() != g.order()) return;  // not bijective
    for (int x = 0; x < g.order(); ++x)
      if (phi[static_cast<size_t>(phi[static_cast<size_t>(x)])] != x) return;
    std::vector<int> tau(static_cast<size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x)
      tau[static_cast<size_t>(x)] = g.inv(phi[static_cast<size_t>(x)]);
    seen.insert(std::move(tau));
  });
  std::vector<Involution> out;
  out.reserve(seen.size());
  for (const auto& perm : seen) out.push_back(Involution{perm});
  return out;
}

ElementSet fixed_set(const Group& g, const Involution& tau) {
  ElementSet set(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (tau.perm[static_cast<size_t>(x)] == x) set.insert(x);
  return set;
}

}  // namespace grskew
