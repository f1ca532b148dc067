#include "weyltab/root_system.hpp"

#include <algorithm>
#include <sstream>

namespace weyltab {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in rational: " + s);
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed rational: " + s);
  } catch (const std::out_of_range&) {
    throw InvalidInput("rational out of range: " + s);
  }
}

std::string weight_to_string(const Weight& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(w[i]);
  }
  out += ")";
  return out;
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw InvalidInput(std::string("unsupported type: ") + c);
}

Rat dot(const Weight& x, const Coords& a) {
  if (x.size() != a.size()) throw InvalidInput("dimension mismatch in pairing");
  Rat s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * a[i];
  return s;
}

Rat dot(const Weight& x, const Weight& y) {
  if (x.size() != y.size()) throw InvalidInput("dimension mismatch in pairing");
  Rat s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

int dot(const Coords& a, const Coords& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

Coords eps(int ambient, int i, int c = 1) {
  Coords v(ambient, 0);
  v[i] = c;
  return v;
}

Coords diff(int ambient, int j, int i) {  // e_j - e_i, zero-based
  Coords v(ambient, 0);
  v[j] = 1;
  v[i] = -1;
  return v;
}

Coords sum(int ambient, int j, int i) {  // e_j + e_i
  Coords v(ambient, 0);
  v[j] += 1;
  v[i] += 1;
  return v;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(Family f, int rank) {
  auto rs = std::make_shared<RootSystem>();
  rs->family_ = f;
  rs->rank_ = rank;

  std::vector<Coords> pos;
  std::vector<Coords> simples;
  switch (f) {
    case Family::A: {
      if (rank < 0) throw InvalidInput("unsupported type: A requires rank >= 0");
      int n = rank + 1;
      rs->ambient_ = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pos.push_back(diff(n, j, i));
      for (int i = 0; i + 1 < n; ++i) simples.push_back(diff(n, i + 1, i));
      break;
    }
    case Family::B: {
      if (rank < 1) throw InvalidInput("unsupported type: B requires rank >= 1");
      int n = rank;
      rs->ambient_ = n;
      for (int i = 0; i < n; ++i) pos.push_back(eps(n, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(diff(n, j, i));
          pos.push_back(sum(n, j, i));
        }
      simples.push_back(eps(n, 0));
      for (int i = 1; i < n; ++i) simples.push_back(diff(n, i, i - 1));
      break;
    }
    case Family::C: {
      if (rank < 1) throw InvalidInput("unsupported type: C requires rank >= 1");
      int n = rank;
      rs->ambient_ = n;
      for (int i = 0; i < n; ++i) pos.push_back(eps(n, i, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(diff(n, j, i));
          pos.push_back(sum(n, j, i));
        }
      simples.push_back(eps(n, 0, 2));
      for (int i = 1; i < n; ++i) simples.push_back(diff(n, i, i - 1));
      break;
    }
    case Family::D: {
      if (rank < 2) throw InvalidInput("unsupported type: D requires rank >= 2");
      int n = rank;
      rs->ambient_ = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(diff(n, j, i));
          pos.push_back(sum(n, j, i));
        }
      simples.push_back(sum(n, 1, 0));
      simples.push_back(diff(n, 1, 0));
      for (int i = 2; i < n; ++i) simples.push_back(diff(n, i, i - 1));
      break;
    }
  }

  std::sort(pos.begin(), pos.end());
  rs->positive_ = std::move(pos);
  if (rs->num_positive() > 192)
    throw CapExceeded("root system too large: " + std::to_string(rs->num_positive()) +
                      " positive roots (limit 192)");
  for (int i = 0; i < rs->num_positive(); ++i) rs->index_[rs->positive_[i]] = i;

  for (const auto& s : simples) {
    auto it = rs->index_.find(s);
    if (it == rs->index_.end()) throw StructuralError("simple root missing from R+");
    rs->simple_idx_.push_back(it->second);
  }

  // Express each positive root in the simple-root basis by exact elimination.
  // Simple roots are linearly independent, so back-substitution over Q works.
  int ns = rs->num_simple();
  rs->simple_coords_.resize(rs->num_positive());
  for (int p = 0; p < rs->num_positive(); ++p) {
    // Solve sum_k c_k simple_k = positive_p with Gaussian elimination.
    int m = rs->ambient_;
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(ns + 1, Rat(0)));
    for (int r = 0; r < m; ++r) {
      for (int k = 0; k < ns; ++k) M[r][k] = Rat(rs->simple(k)[r]);
      M[r][ns] = Rat(rs->positive_[p][r]);
    }
    int row = 0;
    std::vector<int> pivot_col(m, -1);
    for (int col = 0; col < ns && row < m; ++col) {
      int pr = -1;
      for (int r = row; r < m; ++r)
        if (M[r][col] != Rat(0)) { pr = r; break; }
      if (pr < 0) continue;
      std::swap(M[row], M[pr]);
      Rat lead = M[row][col];
      for (auto& x : M[row]) x /= lead;
      for (int r = 0; r < m; ++r) {
        if (r == row || M[r][col] == Rat(0)) continue;
        Rat fac = M[r][col];
        for (int k = col; k <= ns; ++k) M[r][k] -= fac * M[row][k];
      }
      pivot_col[row] = col;
      ++row;
    }
    std::vector<int> coeffs(ns, 0);
    for (int r = 0; r < row; ++r) {
      const Rat& v = M[r][ns];
      if (!is_integer(v)) throw StructuralError("non-integral simple-root coordinates");
      coeffs[pivot_col[r]] = static_cast<int>(v.numerator());
    }
    for (int r = row; r < m; ++r)
      if (M[r][ns] != Rat(0)) throw StructuralError("positive root outside simple-root span");
    rs->simple_coords_[p] = std::move(coeffs);
  }
  return rs;
}

int RootSystem::lookup(const Coords& c) const {
  auto it = index_.find(c);
  if (it != index_.end()) return it->second + 1;
  Coords neg(c.size());
  for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  it = index_.find(neg);
  if (it != index_.end()) return -(it->second + 1);
  return 0;
}

long long RootSystem::weyl_order() const {
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (family_) {
    case Family::A: return fact(rank_ + 1);
    case Family::B:
    case Family::C: return (1LL << rank_) * fact(rank_);
    case Family::D: return (1LL << (rank_ - 1)) * fact(rank_);
  }
  return 0;
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

}  // namespace weyltab
