#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qk {

// Subset of a fixed finite universe [0, n), packed into 64-bit words.
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits single(int n, int i) {
    Bits b(n);
    b.set(i);
    return b;
  }

  static Bits full(int n) {
    Bits b(n);
    for (auto& w : b.w_) w = ~0ull;
    b.trim();
    return b;
  }

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool subset_of(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }

  Bits minus(const Bits& o) const {
    Bits r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }

  Bits& operator|=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  Bits& operator&=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Deterministic total order (by size, then reverse-lexicographic on words).
  bool operator<(const Bits& o) const {
    int ca = count(), cb = o.count();
    if (ca != cb) return ca < cb;
    for (size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  // Next member >= from, or -1.
  int next(int from) const {
    for (int i = from; i < n_; ++i)
      if (test(i)) return i;
    return -1;
  }

  // First member, or -1.
  int first() const { return next(0); }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ (std::size_t)n_;
    for (auto w : w_) h = (h * 1099511628211ull) ^ w;
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool fst = true;
    for (int i = next(0); i >= 0; i = next(i + 1)) {
      if (!fst) s += ",";
      s += std::to_string(i);
      fst = false;
    }
    return s + "}";
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace qk

template <>
struct std::hash<qk::Bits> {
  std::size_t operator()(const qk::Bits& b) const { return b.hash(); }
};
