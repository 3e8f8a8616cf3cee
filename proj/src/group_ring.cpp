#include "grskew/group_ring.hpp"

#include <algorithm>

namespace grskew {

namespace {

void require_fit(const InstanceContext& ctx, const GroupRingElem& a) {
  if (static_cast<int>(a.coeffs.size()) != ctx.group().order())
    fail(errc::context_mismatch, "element length does not match the group order");
  for (int c : a.coeffs)
    if (c < 0 || c >= ctx.ring().size())
      fail(errc::context_mismatch, "coefficient code outside the ring");
}

void require_usable(const InstanceContext& ctx) {
  if (!ctx.valid_homomorphism())
    fail(errc::validation_error, "orientation is not a homomorphism");
  if (!ctx.compatible())
    fail(errc::incompatible_orientation, "context carries an incompatible orientation");
}

}  // namespace

GroupRingElem gr_zero(const InstanceContext& ctx) {
  return GroupRingElem{std::vector<int>(static_cast<size_t>(ctx.group().order()),
                                        ctx.ring().zero())};
}

GroupRingElem gr_monomial(const InstanceContext& ctx, int element, int coeff) {
  if (element < 0 || element >= ctx.group().order())
    fail(errc::context_mismatch, "monomial element outside the group");
  GroupRingElem a = gr_zero(ctx);
  a.coeffs[static_cast<size_t>(element)] = coeff;
  require_fit(ctx, a);
  return a;
}

bool gr_is_zero(const GroupRingElem& a) {
  for (int c : a.coeffs)
    if (c != 0) return false;
  return true;
}

GroupRingElem gr_add(const InstanceContext& ctx, const GroupRingElem& a, const GroupRingElem& b) {
  require_fit(ctx, a);
  require_fit(ctx, b);
  GroupRingElem c = a;
  for (size_t i = 0; i < c.coeffs.size(); ++i)
    c.coeffs[i] = ctx.ring().add(c.coeffs[i], b.coeffs[i]);
  return c;
}

GroupRingElem gr_neg(const InstanceContext& ctx, const GroupRingElem& a) {
  require_fit(ctx, a);
  GroupRingElem c = a;
  for (int& v : c.coeffs) v = ctx.ring().neg(v);
  return c;
}

GroupRingElem gr_sub(const InstanceContext& ctx, const GroupRingElem& a, const GroupRingElem& b) {
  return gr_add(ctx, a, gr_neg(ctx, b));
}

GroupRingElem gr_scale(const InstanceContext& ctx, int coeff, const GroupRingElem& a) {
  require_fit(ctx, a);
  GroupRingElem c = a;
  for (int& v : c.coeffs) v = ctx.ring().mul(coeff, v);
  return c;
}

GroupRingElem gr_mul(const InstanceContext& ctx, const GroupRingElem& a, const GroupRingElem& b) {
  require_fit(ctx, a);
  require_fit(ctx, b);
  const Group& g = ctx.group();
  const Ring& r = ctx.ring();
  GroupRingElem c = gr_zero(ctx);
  for (int x = 0; x < g.order(); ++x) {
    int ax = a.coeffs[static_cast<size_t>(x)];
    if (ax == 0) continue;
    for (int y = 0; y < g.order(); ++y) {
      int by = b.coeffs[static_cast<size_t>(y)];
      if (by == 0) continue;
      int z = g.mul(x, y);
      c.coeffs[static_cast<size_t>(z)] = r.add(c.coeffs[static_cast<size_t>(z)], r.mul(ax, by));
    }
  }
  return c;
}

GroupRingElem sigma_star(const InstanceContext& ctx, const GroupRingElem& a) {
  require_fit(ctx, a);
  const Ring& r = ctx.ring();
  GroupRingElem c = gr_zero(ctx);
  for (int x = 0; x < ctx.group().order(); ++x) {
    int ax = a.coeffs[static_cast<size_t>(x)];
    if (ax == 0) continue;
    c.coeffs[static_cast<size_t>(ctx.tau_of(x))] = r.mul(ctx.sigma_of(x), ax);
  }
  return c;
}

bool is_skew_by_definition(const InstanceContext& ctx, const GroupRingElem& a) {
  return sigma_star(ctx, a) == gr_neg(ctx, a);
}

bool is_skew_by_conditions(const InstanceContext& ctx, const GroupRingElem& a) {
  require_usable(ctx);
  require_fit(ctx, a);
  const Ring& r = ctx.ring();
  for (int x = 0; x < ctx.group().order(); ++x) {
    int ax = a.coeffs[static_cast<size_t>(x)];
    int xs = ctx.tau_of(x);
    bool symmetric = ctx.symmetric_set().contains(x);
    bool in_kernel = ctx.sigma_kernel().contains(x);
    if (symmetric && in_kernel) {
      if (r.add(ax, ax) != r.zero()) return false;
    } else if (in_kernel) {
      if (a.coeffs[static_cast<size_t>(xs)] != r.neg(ax)) return false;
    } else if (symmetric) {
      if (r.mul(r.add(r.one(), ctx.sigma_of(x)), ax) != r.zero()) return false;
    } else {
      if (a.coeffs[static_cast<size_t>(xs)] != r.neg(r.mul(ctx.sigma_of(x), ax))) return false;
    }
  }
  return true;
}

bool is_skew(const InstanceContext& ctx, const GroupRingElem& a) {
  bool by_def = is_skew_by_definition(ctx, a);
  bool by_cond = is_skew_by_conditions(ctx, a);
  if (by_def != by_cond)
    fail(errc::internal_inconsistency,
         "skew characterizations disagree on " + gr_to_string(ctx, a));
  return by_def;
}

const GroupRingElem& SkewGenerators::at(size_t i) const {
  if (i < a1.size()) return a1[i].value;
  return a2[i - a1.size()].value;
}

std::string SkewGenerators::label(size_t i, const Ring& ring) const {
  if (i < a1.size()) {
    const A1Item& it = a1[i];
    std::string alpha;
    for (int v : ring.residues(it.coeff)) {
      if (!alpha.empty()) alpha += ",";
      alpha += std::to_string(v);
    }
    return "A1(x=" + std::to_string(it.element) + ", alpha=[" + alpha + "])";
  }
  const A2Item& it = a2[i - a1.size()];
  return "A2(x=" + std::to_string(it.element) + ", x*=" + std::to_string(it.partner) + ")";
}

SkewGenerators skew_generators(const InstanceContext& ctx) {
  require_usable(ctx);
  const Group& g = ctx.group();
  const Ring& r = ctx.ring();
  SkewGenerators out;
  for (int x : ctx.symmetric_set().elements()) {
    int one_plus = r.add(r.one(), ctx.sigma_of(x));
    for (int alpha : annihilator(r, one_plus)) {
      if (alpha == r.zero()) continue;
      out.a1.push_back({x, alpha, gr_monomial(ctx, x, alpha)});
    }
  }
  std::vector<bool> seen(static_cast<size_t>(g.order()), false);
  for (int x = 0; x < g.order(); ++x) {
    if (ctx.symmetric_set().contains(x) || seen[static_cast<size_t>(x)]) continue;
    int xs = ctx.tau_of(x);
    seen[static_cast<size_t>(x)] = seen[static_cast<size_t>(xs)] = true;
    GroupRingElem v = gr_zero(ctx);
    v.coeffs[static_cast<size_t>(x)] = r.one();
    v.coeffs[static_cast<size_t>(xs)] = r.neg(ctx.sigma_of(x));
    out.a2.push_back({x, xs, std::move(v)});
  }
  return out;
}

namespace {

// Per-coordinate solution structure of the skew conditions: symmetric
// elements carry an annihilator's worth of choices, non-symmetric pairs one
// free coefficient each (the partner coefficient is determined).
struct SkewSolution {
  std::vector<std::pair<int, std::vector<int>>> single;  // (element, choices)
  std::vector<std::pair<int, int>> pairs;                // (x, x*), coefficient free
};

SkewSolution solve_skew_coordinates(const InstanceContext& ctx) {
  require_usable(ctx);
  const Ring& r = ctx.ring();
  SkewSolution sol;
  std::vector<bool> seen(static_cast<size_t>(ctx.group().order()), false);
  for (int x = 0; x < ctx.group().order(); ++x) {
    if (ctx.symmetric_set().contains(x)) {
      sol.single.push_back({x, annihilator(r, r.add(r.one(), ctx.sigma_of(x)))});
    } else if (!seen[static_cast<size_t>(x)]) {
      int xs = ctx.tau_of(x);
      seen[static_cast<size_t>(x)] = seen[static_cast<size_t>(xs)] = true;
      sol.pairs.push_back({x, xs});
    }
  }
  return sol;
}

}  // namespace

std::uint64_t skew_module_size(const InstanceContext& ctx, std::uint64_t bound) {
  SkewSolution sol = solve_skew_coordinates(ctx);
  std::uint64_t count = 1;
  for (const auto& s : sol.single) {
    count *= static_cast<std::uint64_t>(s.second.size());
    if (count > bound) return bound + 1;
  }
  for (size_t i = 0; i < sol.pairs.size(); ++i) {
    count *= static_cast<std::uint64_t>(ctx.ring().size());
    if (count > bound) return bound + 1;
  }
  return count;
}

std::vector<GroupRingElem> skew_module(const InstanceContext& ctx, std::uint64_t max_elements) {
  if (skew_module_size(ctx, max_elements) > max_elements)
    fail(errc::too_large, "skew module enumeration exceeds " + std::to_string(max_elements) +
                              " elements");
  SkewSolution sol = solve_skew_coordinates(ctx);
  const Ring& r = ctx.ring();

  std::vector<GroupRingElem> out;
  out.push_back(gr_zero(ctx));
  // Extend coordinate by coordinate: all annihilator choices on symmetric
  // elements, a free ring coefficient per non-symmetric pair.
  for (const auto& [x, choices] : sol.single) {
    std::vector<GroupRingElem> next;
    next.reserve(out.size() * choices.size());
    for (const auto& base : out)
      for (int alpha : choices) {
        GroupRingElem e = base;
        e.coeffs[static_cast<size_t>(x)] = alpha;
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  for (const auto& [x, xs] : sol.pairs) {
    std::vector<GroupRingElem> next;
    next.reserve(out.size() * static_cast<size_t>(r.size()));
    for (const auto& base : out)
      for (int alpha = 0; alpha < r.size(); ++alpha) {
        GroupRingElem e = base;
        e.coeffs[static_cast<size_t>(x)] = alpha;
        e.coeffs[static_cast<size_t>(xs)] = r.neg(r.mul(ctx.sigma_of(x), alpha));
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

// g*h + h*g accumulated sparsely into scratch; returns true when zero.
bool pair_anticommutes(const InstanceContext& ctx, const GroupRingElem& a, const GroupRingElem& b,
                       const std::vector<int>& support_a, const std::vector<int>& support_b,
                       std::vector<int>& scratch, std::vector<int>& touched) {
  const Group& g = ctx.group();
  const Ring& r = ctx.ring();
  touched.clear();
  for (int x : support_a)
    for (int y : support_b) {
      int p = r.mul(a.coeffs[static_cast<size_t>(x)], b.coeffs[static_cast<size_t>(y)]);
      int z1 = g.mul(x, y);
      if (scratch[static_cast<size_t>(z1)] == 0) touched.push_back(z1);
      scratch[static_cast<size_t>(z1)] = r.add(scratch[static_cast<size_t>(z1)], p);
      int q = r.mul(b.coeffs[static_cast<size_t>(y)], a.coeffs[static_cast<size_t>(x)]);
      int z2 = g.mul(y, x);
      if (scratch[static_cast<size_t>(z2)] == 0) touched.push_back(z2);
      scratch[static_cast<size_t>(z2)] = r.add(scratch[static_cast<size_t>(z2)], q);
    }
  bool zero = true;
  for (int z : touched) {
    if (scratch[static_cast<size_t>(z)] != 0) zero = false;
    scratch[static_cast<size_t>(z)] = 0;
  }
  return zero;
}

std::vector<int> support(const GroupRingElem& a) {
  std::vector<int> s;
  for (int x = 0; x < static_cast<int>(a.coeffs.size()); ++x)
    if (a.coeffs[static_cast<size_t>(x)] != 0) s.push_back(x);
  return s;
}

}  // namespace

OracleVerdict oracle_anticommutative(const InstanceContext& ctx, const Deadline& deadline) {
  require_usable(ctx);
  SkewGenerators gens = skew_generators(ctx);
  const size_t n = gens.count();

  OracleVerdict verdict;
  verdict.generator_count = n;

  std::vector<std::vector<int>> supports(n);
  for (size_t i = 0; i < n; ++i) supports[i] = support(gens.at(i));

  std::vector<int> scratch(static_cast<size_t>(ctx.group().order()), 0);
  std::vector<int> touched;
  size_t steps = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      if ((++steps & 0xff) == 0) deadline.check();
      if (pair_anticommutes(ctx, gens.at(i), gens.at(j), supports[i], supports[j], scratch,
                            touched))
        continue;
      OracleVerdict::Witness w;
      w.first_index = i;
      w.second_index = j;
      w.first_label = gens.label(i, ctx.ring());
      w.second_label = gens.label(j, ctx.ring());
      w.product_sum = gr_add(ctx, gr_mul(ctx, gens.at(i), gens.at(j)),
                             gr_mul(ctx, gens.at(j), gens.at(i)));
      verdict.witness = std::move(w);
      verdict.anticommutative = false;
      return verdict;
    }
  verdict.anticommutative = true;
  return verdict;
}

GroupRingElem skew_pair_anticommutator(const InstanceContext& ctx, int x, int y) {
  require_usable(ctx);
  const Group& g = ctx.group();
  const Ring& r = ctx.ring();
  if (ctx.symmetric_set().contains(x) || ctx.symmetric_set().contains(y))
    fail(errc::symmetric_element, "both elements must lie outside the symmetric set");

  int xs = ctx.tau_of(x), ys = ctx.tau_of(y);
  int sx = ctx.sigma_of(x), sy = ctx.sigma_of(y);
  int sxy = ctx.sigma_of(g.mul(x, y));

  GroupRingElem expansion = gr_zero(ctx);
  auto put = [&](int element, int coeff) {
    expansion.coeffs[static_cast<size_t>(element)] =
        r.add(expansion.coeffs[static_cast<size_t>(element)], coeff);
  };
  put(g.mul(x, y), r.one());
  put(g.mul(y, x), r.one());
  put(g.mul(xs, ys), sxy);
  put(g.mul(ys, xs), sxy);
  put(g.mul(x, ys), r.neg(sy));
  put(g.mul(ys, x), r.neg(sy));
  put(g.mul(y, xs), r.neg(sx));
  put(g.mul(xs, y), r.neg(sx));

  GroupRingElem gx = gr_zero(ctx);
  gx.coeffs[static_cast<size_t>(x)] = r.one();
  gx.coeffs[static_cast<size_t>(xs)] = r.neg(sx);
  GroupRingElem gy = gr_zero(ctx);
  gy.coeffs[static_cast<size_t>(y)] = r.one();
  gy.coeffs[static_cast<size_t>(ys)] = r.neg(sy);
  GroupRingElem direct =
      gr_add(ctx, gr_mul(ctx, gx, gy), gr_mul(ctx, gy, gx));

  if (!(expansion == direct))
    fail(errc::internal_inconsistency,
         "pair anticommutator expansion disagrees with the direct product sum");
  return expansion;
}

std::string gr_to_string(const InstanceContext& ctx, const GroupRingElem& a) {
  std::string out = "[";
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) out += ", ";
    const auto res = ctx.ring().residues(a.coeffs[i]);
    out += "(";
    for (size_t j = 0; j < res.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(res[j]);
    }
    out += ")";
  }
  return out + "]";
}

}  // namespace grskew
