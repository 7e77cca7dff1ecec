#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace finsemi {

/// Element of a finite carrier, identified by its index into the carrier list.
using Elem = int;

/// Subset of a fixed finite carrier, stored as a bit mask. Carriers are small
/// (catalog structures stay under 24 elements, product modules around 120),
/// so all set operations are a handful of word operations.
class ElemSet {
 public:
  ElemSet() = default;

  explicit ElemSet(int universe) : n_(universe), w_(words(universe), 0) {}

  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (std::size_t k = 0; k < s.w_.size(); ++k) s.w_[k] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static ElemSet of(int universe, std::initializer_list<int> xs) {
    ElemSet s(universe);
    for (int x : xs) s.insert(x);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int e) const { return (w_[e >> 6] >> (e & 63)) & 1u; }
  void insert(int e) { w_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(int e) { w_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return count() == n_; }

  bool subset_of(const ElemSet& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const ElemSet& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  ElemSet complement() const {
    ElemSet r = full(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~w_[k];
    return r;
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const ElemSet& a, const ElemSet& b) { return !(a == b); }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(int(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Canonical order: by cardinality, then by smallest differing element
  /// (the set containing it comes first). Gives a stable, reproducible
  /// order for lattices and witness selection.
  static int compare(const ElemSet& a, const ElemSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb ? -1 : 1;
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
      std::uint64_t d = a.w_[k] ^ b.w_[k];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (a.w_[k] & low) ? -1 : 1;
      }
    }
    return 0;
  }

  friend bool operator<(const ElemSet& a, const ElemSet& b) { return compare(a, b) < 0; }

  std::size_t hash() const {
    std::size_t h = std::size_t(n_) * 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  static std::size_t words(int n) { return std::size_t((n + 63) / 64); }

  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace finsemi
