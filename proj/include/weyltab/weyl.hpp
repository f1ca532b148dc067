#pragma once

#include "weyltab/root_system.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace weyltab {

// Subset of the positive roots of a fixed RootSystem, as a bitset over the
// canonical positive-root order.  Holds R(w), Z(gamma), P(gamma), J, K and
// closures.  192 bits covers every rank this library accepts.
struct RootSet {
  std::array<std::uint64_t, 3> bits{};

  void set(int i) { bits[i >> 6] |= (1ULL << (i & 63)); }
  void reset(int i) { bits[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }

  bool empty() const { return !(bits[0] | bits[1] | bits[2]); }
  int count() const;

  RootSet operator|(const RootSet& o) const;
  RootSet operator&(const RootSet& o) const;
  RootSet operator-(const RootSet& o) const;  // set difference
  RootSet complement(int universe) const;

  bool subset_of(const RootSet& o) const;
  bool operator==(const RootSet& o) const { return bits == o.bits; }
  bool operator!=(const RootSet& o) const { return bits != o.bits; }
  bool operator<(const RootSet& o) const { return bits < o.bits; }

  std::vector<int> indices() const;
  static RootSet of(const std::vector<int>& idxs);
};

// A Weyl-group element stored as a signed permutation of {1..n} acting by
// w e_i = e_{w(i)} with e_{-i} = -e_i.  Type A elements never negate.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> img) : img_(std::move(img)) {}
  static WeylElement identity(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int map(int i) const {  // signed input in {-n..-1, 1..n}
    return i > 0 ? img_[i - 1] : -img_[-i - 1];
  }
  const std::vector<int>& one_line() const { return img_; }
  bool is_identity() const;

  WeylElement operator*(const WeylElement& v) const;  // (uv)(i) = u(v(i))
  WeylElement inverse() const;

  Coords act(const Coords& c) const;
  Weight act(const Weight& x) const;

  bool operator==(const WeylElement& o) const { return img_ == o.img_; }
  bool operator!=(const WeylElement& o) const { return img_ != o.img_; }
  bool operator<(const WeylElement& o) const { return img_ < o.img_; }

  std::string to_string() const;  // one-line notation "(2,-1,3)"

 private:
  std::vector<int> img_;
};

WeylElement simple_reflection(const RootSystem& rs, int i);  // 0-based i
WeylElement reflection(const RootSystem& rs, const Coords& alpha);

RootSet inversion_set(const RootSystem& rs, const WeylElement& w);
int length(const RootSystem& rs, const WeylElement& w);

// Reduced word by greedy descent stripping; returns 0-based simple indices.
std::vector<int> reduced_word(const RootSystem& rs, WeylElement w);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

WeylElement longest_element(const RootSystem& rs);

// Longest element of the parabolic subgroup whose positive roots are zset.
// zset must be the full positive part of a subsystem generated by the simple
// roots it contains, else StructuralError.
WeylElement parabolic_longest(const RootSystem& rs, const RootSet& zset);

bool weak_bruhat_leq(const RootSystem& rs, const WeylElement& v,
                     const WeylElement& w);

// Saturation of K under alpha,beta -> alpha+beta whenever the sum is again a
// positive root.
RootSet closure(const RootSystem& rs, RootSet k);

constexpr long long kDefaultGroupCap = 10'000'000;

// Fully enumerated Weyl group, ordered by (length, one-line notation), with
// cached inversion sets.  Immutable once built.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystemPtr rs, long long cap = kDefaultGroupCap);

  const RootSystem& rs() const { return *rs_; }
  RootSystemPtr rs_ptr() const { return rs_; }

  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElement& element(int k) const { return elements_[k]; }
  const RootSet& inversions(int k) const { return inversions_[k]; }
  int length(int k) const { return inversions_[k].count(); }
  const std::vector<WeylElement>& elements() const { return elements_; }

  int index_of(const WeylElement& w) const;  // -1 if absent

 private:
  RootSystemPtr rs_;
  std::vector<WeylElement> elements_;
  std::vector<RootSet> inversions_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace weyltab
