#ifndef KLSF_LABEL_SET_HPP
#define KLSF_LABEL_SET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace klsf {

// Fixed-width bit vector over the label universe 0..width-1.
// Bit i set <=> label i selected.
class LabelSet {
 public:
  LabelSet() = default;

  explicit LabelSet(int width) : width_(width) {
    if (width < 0) throw std::invalid_argument("LabelSet width must be non-negative");
    blocks_.assign((width + 63) / 64, 0);
  }

  static LabelSet full(int width) {
    LabelSet s(width);
    for (auto& b : s.blocks_) b = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int width() const { return width_; }

  bool test(int i) const {
    check_index(i);
    return (blocks_[i / 64] >> (i % 64)) & 1u;
  }

  void set(int i) {
    check_index(i);
    blocks_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void reset(int i) {
    check_index(i);
    blocks_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  int count() const {
    int c = 0;
    for (auto b : blocks_) c += std::popcount(b);
    return c;
  }

  bool none() const {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }

  LabelSet complement() const {
    LabelSet s(width_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) s.blocks_[i] = ~blocks_[i];
    s.trim();
    return s;
  }

  bool is_subset_of(const LabelSet& other) const {
    check_same_width(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < width_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend LabelSet operator^(const LabelSet& a, const LabelSet& b) {
    a.check_same_width(b);
    LabelSet r(a.width_);
    for (std::size_t i = 0; i < r.blocks_.size(); ++i) r.blocks_[i] = a.blocks_[i] ^ b.blocks_[i];
    return r;
  }

  friend LabelSet operator&(const LabelSet& a, const LabelSet& b) {
    a.check_same_width(b);
    LabelSet r(a.width_);
    for (std::size_t i = 0; i < r.blocks_.size(); ++i) r.blocks_[i] = a.blocks_[i] & b.blocks_[i];
    return r;
  }

  friend LabelSet operator|(const LabelSet& a, const LabelSet& b) {
    a.check_same_width(b);
    LabelSet r(a.width_);
    for (std::size_t i = 0; i < r.blocks_.size(); ++i) r.blocks_[i] = a.blocks_[i] | b.blocks_[i];
    return r;
  }

  friend bool operator==(const LabelSet& a, const LabelSet& b) {
    return a.width_ == b.width_ && a.blocks_ == b.blocks_;
  }

  friend bool operator!=(const LabelSet& a, const LabelSet& b) { return !(a == b); }

 private:
  void trim() {
    if (width_ % 64 != 0 && !blocks_.empty())
      blocks_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
  }

  void check_index(int i) const {
    if (i < 0 || i >= width_) throw std::out_of_range("label id out of range");
  }

  void check_same_width(const LabelSet& other) const {
    if (width_ != other.width_) throw std::invalid_argument("LabelSet width mismatch");
  }

  int width_ = 0;
  std::vector<std::uint64_t> blocks_;
};

// |a xor b|, the symmetric-difference size.
inline int hamming_distance(const LabelSet& a, const LabelSet& b) { return (a ^ b).count(); }

inline LabelSet complement(const LabelSet& s) { return s.complement(); }

}  // namespace klsf

#endif
