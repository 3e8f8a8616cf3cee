#pragma once

#include <vector>

namespace grskew {

/// Subset of the element indices [0, universe) of a finite group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int universe) : bits_(static_cast<size_t>(universe), false) {}

  static ElementSet full(int universe) {
    ElementSet s(universe);
    s.bits_.assign(static_cast<size_t>(universe), true);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(int x) const { return bits_[static_cast<size_t>(x)]; }
  void insert(int x) { bits_[static_cast<size_t>(x)] = true; }
  void erase(int x) { bits_[static_cast<size_t>(x)] = false; }

  int size() const {
    int n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < universe(); ++i)
      if (bits_[static_cast<size_t>(i)]) out.push_back(i);
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (int i = 0; i < universe(); ++i)
      if (contains(i) && !other.contains(i)) return false;
    return true;
  }

  bool operator==(const ElementSet&) const = default;

private:
  std::vector<bool> bits_;
};

}  // namespace grskew
