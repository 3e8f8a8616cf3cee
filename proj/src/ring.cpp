#include "grskew/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace grskew {

int Ring::scale(long long k, int a) const {
  std::vector<int> r = residues(a);
  for (size_t i = 0; i < r.size(); ++i) {
    long long m = moduli_[i];
    long long v = (static_cast<long long>(r[i]) * (k % m)) % m;
    if (v < 0) v += m;
    r[i] = static_cast<int>(v);
  }
  return from_residues(r);
}

std::vector<int> Ring::residues(int a) const {
  std::vector<int> out(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) out[i] = (a / stride_[i]) % moduli_[i];
  return out;
}

int Ring::from_residues(const std::vector<int>& residues) const {
  if (residues.size() != moduli_.size())
    fail(errc::validation_error, "residue tuple length does not match ring components");
  int code = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= moduli_[i])
      fail(errc::validation_error, "residue " + std::to_string(residues[i]) +
                                       " outside [0, " + std::to_string(moduli_[i]) + ")");
    code += residues[i] * stride_[i];
  }
  return code;
}

std::string Ring::spec_string() const {
  std::string out;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(moduli_[i]);
  }
  return out;
}

Ring make_ring(std::vector<int> moduli) {
  if (moduli.empty()) fail(errc::invalid_parameter, "ring needs at least one modulus");
  long long size = 1;
  long long characteristic = 1;
  for (int m : moduli) {
    if (m < 2) fail(errc::invalid_parameter, "modulus " + std::to_string(m) + " is below 2");
    size *= m;
    characteristic = std::lcm(characteristic, static_cast<long long>(m));
    if (size > Ring::kMaxSize)
      fail(errc::too_large, "ring size exceeds the supported bound " + std::to_string(Ring::kMaxSize));
  }
  if (characteristic == 2)
    fail(errc::characteristic_two, "coefficient rings of characteristic 2 are excluded");

  Ring r;
  r.moduli_ = std::move(moduli);
  r.characteristic_ = characteristic;
  r.size_ = static_cast<int>(size);
  r.stride_.resize(r.moduli_.size());
  int stride = 1;
  for (size_t i = 0; i < r.moduli_.size(); ++i) {
    r.stride_[i] = stride;
    stride *= r.moduli_[i];
  }

  const int n = r.size_;
  r.add_.resize(static_cast<size_t>(n) * n);
  r.mul_.resize(static_cast<size_t>(n) * n);
  r.neg_.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::vector<int> ra = r.residues(a);
    std::vector<int> nr(ra.size());
    for (size_t i = 0; i < ra.size(); ++i) nr[i] = (r.moduli_[i] - ra[i]) % r.moduli_[i];
    r.neg_[static_cast<size_t>(a)] = r.from_residues(nr);
    for (int b = 0; b < n; ++b) {
      std::vector<int> rb = r.residues(b);
      std::vector<int> s(ra.size()), p(ra.size());
      for (size_t i = 0; i < ra.size(); ++i) {
        s[i] = (ra[i] + rb[i]) % r.moduli_[i];
        p[i] = static_cast<int>((static_cast<long long>(ra[i]) * rb[i]) % r.moduli_[i]);
      }
      r.add_[static_cast<size_t>(a) * n + b] = r.from_residues(s);
      r.mul_[static_cast<size_t>(a) * n + b] = r.from_residues(p);
    }
  }

  r.one_ = r.from_residues(std::vector<int>(r.moduli_.size(), 1));
  r.minus_one_ = r.neg(r.one_);

  r.inverse_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.mul(a, b) == r.one_) {
        r.inverse_[static_cast<size_t>(a)] = b;
        break;
      }

  return r;
}

Ring parse_ring_spec(std::string_view spec) {
  std::vector<int> moduli;
  size_t i = 0;
  while (i < spec.size()) {
    char c = spec[i];
    if (c == 'z' || c == 'Z') {
      ++i;
      size_t start = i;
      while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
      if (start == i) fail(errc::parse_error, "ring spec: expected digits after 'Z'");
      moduli.push_back(std::stoi(std::string(spec.substr(start, i - start))));
      if (i < spec.size()) {
        if (spec[i] != 'x' && spec[i] != 'X')
          fail(errc::parse_error, std::string("ring spec: expected 'x' separator, got '") +
                                      spec[i] + "'");
        ++i;
        if (i == spec.size()) fail(errc::parse_error, "ring spec: trailing separator");
      }
    } else {
      fail(errc::parse_error, std::string("ring spec: expected 'Z', got '") + c + "'");
    }
  }
  if (moduli.empty()) fail(errc::parse_error, "empty ring spec");
  return make_ring(std::move(moduli));
}

bool has_characteristic_two_component(const Ring& r) {
  for (int m : r.moduli())
    if (m % 4 == 2) return true;
  return false;
}

int UnitGroup::index_of(int code) const {
  auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) return -1;
  return static_cast<int>(it - codes.begin());
}

UnitGroup units(const Ring& r) {
  UnitGroup u;
  for (int a = 0; a < r.size(); ++a)
    if (r.is_unit(a)) u.codes.push_back(a);
  u.inverse_codes.resize(u.codes.size());
  for (size_t i = 0; i < u.codes.size(); ++i) u.inverse_codes[i] = *r.inverse(u.codes[i]);

  const int m = static_cast<int>(u.codes.size());
  std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = r.mul(u.codes[static_cast<size_t>(i)], u.codes[static_cast<size_t>(j)]);
      int idx = u.index_of(prod);
      if (idx < 0) fail(errc::internal_inconsistency, "unit product left the unit set");
      t[static_cast<size_t>(i)][static_cast<size_t>(j)] = idx;
    }
  u.group = build_group(t, u.index_of(r.one()), "U(" + r.spec_string() + ")");
  return u;
}

std::vector<int> annihilator(const Ring& r, int elem) {
  std::vector<int> re = r.residues(elem);
  std::vector<std::vector<int>> component(re.size());
  for (size_t i = 0; i < re.size(); ++i) {
    int m = r.moduli()[i];
    int gen = m / std::gcd(m, re[i] == 0 ? m : re[i]);
    for (int v = 0; v < m; v += gen) component[i].push_back(v);
  }
  std::vector<int> out;
  std::vector<size_t> idx(re.size(), 0);
  while (true) {
    std::vector<int> tuple(re.size());
    for (size_t i = 0; i < re.size(); ++i) tuple[i] = component[i][idx[i]];
    out.push_back(r.from_residues(tuple));
    size_t pos = re.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < component[pos].size()) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int annihilator_generator(const Ring& r, int elem) {
  std::vector<int> re = r.residues(elem);
  std::vector<int> gen(re.size());
  for (size_t i = 0; i < re.size(); ++i) {
    int m = r.moduli()[i];
    int g = m / std::gcd(m, re[i] == 0 ? m : re[i]);
    gen[i] = g % m;
  }
  return r.from_residues(gen);
}

}  // namespace grskew
