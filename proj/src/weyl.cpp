#include "weyltab/weyl.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace weyltab {

int RootSet::count() const {
  return std::popcount(bits[0]) + std::popcount(bits[1]) + std::popcount(bits[2]);
}

RootSet RootSet::operator|(const RootSet& o) const {
  RootSet r;
  for (int i = 0; i < 3; ++i) r.bits[i] = bits[i] | o.bits[i];
  return r;
}

RootSet RootSet::operator&(const RootSet& o) const {
  RootSet r;
  for (int i = 0; i < 3; ++i) r.bits[i] = bits[i] & o.bits[i];
  return r;
}

RootSet RootSet::operator-(const RootSet& o) const {
  RootSet r;
  for (int i = 0; i < 3; ++i) r.bits[i] = bits[i] & ~o.bits[i];
  return r;
}

RootSet RootSet::complement(int universe) const {
  RootSet r;
  for (int i = 0; i < universe; ++i)
    if (!test(i)) r.set(i);
  return r;
}

bool RootSet::subset_of(const RootSet& o) const {
  for (int i = 0; i < 3; ++i)
    if (bits[i] & ~o.bits[i]) return false;
  return true;
}

std::vector<int> RootSet::indices() const {
  std::vector<int> out;
  for (int word = 0; word < 3; ++word) {
    std::uint64_t b = bits[word];
    while (b) {
      int k = std::countr_zero(b);
      out.push_back(word * 64 + k);
      b &= b - 1;
    }
  }
  return out;
}

RootSet RootSet::of(const std::vector<int>& idxs) {
  RootSet r;
  for (int i : idxs) r.set(i);
  return r;
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return WeylElement(std::move(img));
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

WeylElement WeylElement::operator*(const WeylElement& v) const {
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[i] = map(v.img_[i]);
  return WeylElement(std::move(img));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) {
    int j = img_[i];
    if (j > 0)
      img[j - 1] = i + 1;
    else
      img[-j - 1] = -(i + 1);
  }
  return WeylElement(std::move(img));
}

Coords WeylElement::act(const Coords& c) const {
  Coords out(c.size(), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int j = img_[i];
    if (j > 0)
      out[j - 1] += c[i];
    else
      out[-j - 1] -= c[i];
  }
  return out;
}

Weight WeylElement::act(const Weight& x) const {
  if (static_cast<int>(x.size()) != n())
    throw InvalidInput("dimension mismatch in Weyl action");
  Weight out(x.size(), Rat(0));
  for (size_t i = 0; i < x.size(); ++i) {
    int j = img_[i];
    if (j > 0)
      out[j - 1] += x[i];
    else
      out[-j - 1] -= x[i];
  }
  return out;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n(); ++i) {
    if (i) os << ',';
    os << img_[i];
  }
  os << ')';
  return os.str();
}

WeylElement reflection(const RootSystem& rs, const Coords& alpha) {
  int m = rs.ambient();
  int norm = dot(alpha, alpha);
  std::vector<int> img(m, 0);
  for (int i = 0; i < m; ++i) {
    // s_alpha(e_i) = e_i - 2<e_i,alpha>/<alpha,alpha> alpha
    std::vector<Rat> v(m, Rat(0));
    v[i] = Rat(1);
    Rat coef = Rat(2 * alpha[i], norm);
    for (int k = 0; k < m; ++k) v[k] -= coef * Rat(alpha[k]);
    int target = 0, sign = 0;
    for (int k = 0; k < m; ++k) {
      if (v[k] == Rat(0)) continue;
      if (sign != 0 || (v[k] != Rat(1) && v[k] != Rat(-1)))
        throw StructuralError("reflection is not a signed permutation");
      target = k + 1;
      sign = v[k] > Rat(0) ? 1 : -1;
    }
    if (sign == 0) throw StructuralError("reflection collapsed a basis vector");
    img[i] = sign * target;
  }
  return WeylElement(std::move(img));
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return reflection(rs, rs.simple(i));
}

RootSet inversion_set(const RootSystem& rs, const WeylElement& w) {
  RootSet out;
  for (int p = 0; p < rs.num_positive(); ++p) {
    if (rs.lookup(w.act(rs.positive(p))) < 0) out.set(p);
  }
  return out;
}

int length(const RootSystem& rs, const WeylElement& w) {
  return inversion_set(rs, w).count();
}

std::vector<int> reduced_word(const RootSystem& rs, WeylElement w) {
  std::vector<int> word;
  while (!w.is_identity()) {
    bool found = false;
    for (int i = 0; i < rs.num_simple(); ++i) {
      if (rs.lookup(w.act(rs.simple(i))) < 0) {
        word.push_back(i);
        w = w * simple_reflection(rs, i);
        found = true;
        break;
      }
    }
    if (!found) throw StructuralError("descent stripping stuck");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.ambient());
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

namespace {

// Greedy ascent within the standard parabolic generated by the simple roots
// flagged in `allowed`; terminates at the longest element of that subgroup.
WeylElement greedy_longest(const RootSystem& rs, const std::vector<bool>& allowed) {
  WeylElement w = WeylElement::identity(rs.ambient());
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < rs.num_simple(); ++i) {
      if (!allowed[i]) continue;
      if (rs.lookup(w.act(rs.simple(i))) > 0) {
        w = w * simple_reflection(rs, i);
        progress = true;
      }
    }
  }
  return w;
}

}  // namespace

WeylElement longest_element(const RootSystem& rs) {
  return greedy_longest(rs, std::vector<bool>(rs.num_simple(), true));
}

WeylElement parabolic_longest(const RootSystem& rs, const RootSet& zset) {
  std::vector<bool> allowed(rs.num_simple(), false);
  for (int i = 0; i < rs.num_simple(); ++i)
    if (zset.test(rs.simple_index(i))) allowed[i] = true;

  // zset must equal the positive subsystem spanned by the simples it contains.
  RootSet span;
  for (int p = 0; p < rs.num_positive(); ++p) {
    const auto& sc = rs.simple_coords(p);
    bool inside = true;
    for (int i = 0; i < rs.num_simple(); ++i)
      if (sc[i] != 0 && !allowed[i]) { inside = false; break; }
    if (inside) span.set(p);
  }
  if (!(span == zset))
    throw StructuralError("root set is not parabolic (not spanned by its simple roots)");

  WeylElement v = greedy_longest(rs, allowed);
  if (!(inversion_set(rs, v) == zset))
    throw StructuralError("parabolic longest element has wrong inversion set");
  return v;
}

bool weak_bruhat_leq(const RootSystem& rs, const WeylElement& v,
                     const WeylElement& w) {
  return inversion_set(rs, v).subset_of(inversion_set(rs, w));
}

RootSet closure(const RootSystem& rs, RootSet k) {
  bool grew = true;
  while (grew) {
    grew = false;
    auto idxs = k.indices();
    for (size_t a = 0; a < idxs.size(); ++a) {
      for (size_t b = a; b < idxs.size(); ++b) {
        const Coords& x = rs.positive(idxs[a]);
        const Coords& y = rs.positive(idxs[b]);
        Coords s(x.size());
        for (size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
        int id = rs.lookup(s);
        if (id > 0 && !k.test(id - 1)) {
          k.set(id - 1);
          grew = true;
        }
      }
    }
  }
  return k;
}

WeylGroup::WeylGroup(RootSystemPtr rs, long long cap) : rs_(std::move(rs)) {
  long long order = rs_->weyl_order();
  if (order > cap)
    throw CapExceeded("Weyl group of order " + std::to_string(order) +
                      " exceeds cap " + std::to_string(cap));

  // Breadth-first by length from the identity, each level sorted by one-line
  // notation, so the enumeration order is deterministic.
  std::vector<WeylElement> level{WeylElement::identity(rs_->ambient())};
  std::vector<WeylElement> simples;
  for (int i = 0; i < rs_->num_simple(); ++i)
    simples.push_back(simple_reflection(*rs_, i));

  std::map<std::vector<int>, int> seen;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    std::vector<WeylElement> next;
    for (auto& w : level) {
      if (seen.count(w.one_line())) continue;
      seen[w.one_line()] = static_cast<int>(elements_.size());
      elements_.push_back(w);
      for (int i = 0; i < rs_->num_simple(); ++i) {
        if (rs_->lookup(w.act(rs_->simple(i))) > 0) {
          WeylElement ws = w * simples[i];
          if (!seen.count(ws.one_line())) next.push_back(ws);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }

  if (static_cast<long long>(elements_.size()) != order)
    throw StructuralError("enumeration found " + std::to_string(elements_.size()) +
                          " elements, expected " + std::to_string(order));
  index_ = std::move(seen);
  inversions_.reserve(elements_.size());
  for (const auto& w : elements_) inversions_.push_back(inversion_set(*rs_, w));
}

int WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w.one_line());
  return it == index_.end() ? -1 : it->second;
}

}  // namespace weyltab
