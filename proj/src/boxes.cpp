#include "weyltab/boxes.hpp"

#include <algorithm>
#include <map>

namespace weyltab {

const Box* BoxConfig::by_index(int idx) const {
  for (const auto& b : boxes)
    if (b.index == idx) return &b;
  return nullptr;
}

const Box* BoxConfig::at(int row, int col) const {
  for (const auto& b : boxes)
    if (b.row == row && b.col == col) return &b;
  return nullptr;
}

BoxConfig make_config(const Rat& page, std::vector<Box> boxes) {
  if (boxes.empty()) throw InvalidInput("empty box configuration");
  std::optional<Rat> shift;
  std::map<std::pair<int, int>, int> pos;
  for (const auto& b : boxes) {
    Rat s = Rat(b.col - b.row) - b.content;
    if (!shift) shift = s;
    if (*shift != s)
      throw InvalidInput("box content inconsistent with its (row, col)");
    if (!pos.emplace(std::make_pair(b.row, b.col), b.index).second)
      throw InvalidInput("two boxes share a position");
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& x, const Box& y) {
    if (x.content != y.content) return x.content < y.content;
    return x.row < y.row;
  });
  for (size_t i = 0; i + 1 < boxes.size(); ++i) {
    if (boxes[i].content == boxes[i + 1].content &&
        boxes[i].index >= boxes[i + 1].index)
      throw InvalidInput("within-diagonal index order violated");
  }
  BoxConfig c;
  c.page = page;
  c.boxes = std::move(boxes);
  return c;
}

const Box* Book::by_index(int idx) const {
  for (const auto& p : pages)
    if (const Box* b = p.by_index(idx)) return b;
  return nullptr;
}

int Book::total_boxes() const {
  int t = 0;
  for (const auto& p : pages) t += static_cast<int>(p.boxes.size());
  return t;
}

namespace {

// Flattened box data plus the entry-order DAG derived from the geometry.
struct Dag {
  struct Node {
    const Box* box;
    int mirror = -1;       // position of box_{-index}, or -1
    bool zero_diag = false;  // unpaired page-0 box: entry must be positive
    std::vector<int> preds;  // nodes whose entry must be smaller
  };
  std::vector<Node> nodes;
  std::map<int, int> by_index;  // signed box index -> node position
};

Dag build_dag(const Book& book) {
  Dag d;
  std::vector<Rat> page_of;
  for (const auto& page : book.pages) {
    size_t base = d.nodes.size();
    for (const auto& b : page.boxes) {
      Dag::Node n;
      n.box = &b;
      d.nodes.push_back(n);
      page_of.push_back(page.page);
      d.by_index[b.index] = static_cast<int>(d.nodes.size() - 1);
    }
    // Order conditions within the page; preds sit on the larger entry.
    for (size_t x = base; x < d.nodes.size(); ++x)
      for (size_t y = base; y < d.nodes.size(); ++y) {
        const Box& a = *d.nodes[x].box;
        const Box& b = *d.nodes[y].box;
        if (a.index >= b.index) continue;  // handle each pair once, a < b
        if (a.content == b.content) {
          d.nodes[y].preds.push_back(static_cast<int>(x));  // t(a) < t(b)
        } else if ((b.content - a.content) == Rat(1) ||
                   (a.content - b.content) == Rat(1)) {
          if (northwest(b, a))
            d.nodes[x].preds.push_back(static_cast<int>(y));  // t(b) < t(a)
          else if (southeast(b, a))
            d.nodes[y].preds.push_back(static_cast<int>(x));  // t(a) < t(b)
          else
            throw StructuralError("adjacent-diagonal boxes neither NW nor SE");
        }
      }
  }
  for (size_t v = 0; v < d.nodes.size(); ++v) {
    auto& n = d.nodes[v];
    int m = d.by_index.count(-n.box->index) ? d.by_index[-n.box->index] : -1;
    n.mirror = m;
    n.zero_diag = (book.family == Family::C && page_of[v] == Rat(0) && m < 0 &&
                   n.box->content == Rat(0));
  }
  return d;
}

struct FillState {
  const Book* book;
  const Dag* dag;
  std::vector<int> entry;        // per node, 0 = unfilled
  std::vector<int> missing;      // unfilled predecessor count per node
  std::vector<char> abs_closed;  // abs value fully decided (1-based)
  std::vector<int> pending;      // abs -> node that must take +abs, else -1
  std::vector<Filling>* out;
  long long cap;
  const Filling* guide = nullptr;  // when set, follow this filling only
  bool guide_ok = true;

  bool ready(int v) const { return entry[v] == 0 && missing[v] == 0; }

  void place(int v, int val) {
    entry[v] = val;
    for (size_t u = 0; u < dag->nodes.size(); ++u)
      for (int p : dag->nodes[u].preds)
        if (p == v) --missing[u];
  }
  void unplace(int v) {
    entry[v] = 0;
    for (size_t u = 0; u < dag->nodes.size(); ++u)
      for (int p : dag->nodes[u].preds)
        if (p == v) ++missing[u];
  }

  int guided_target(int val) const {  // node the guide puts val into, or -1
    for (const auto& [idx, node] : dag->by_index) {
      int e = idx > 0 ? (*guide)[idx - 1] : -(*guide)[-idx - 1];
      if (e == val) return node;
    }
    return -1;
  }

  void emit() {
    Filling f(book->n, 0);
    for (const auto& [idx, node] : dag->by_index)
      if (idx > 0) f[idx - 1] = entry[node];
    if (guide) {
      if (f == *guide) guide_ok = true;
      return;
    }
    out->push_back(std::move(f));
    if (static_cast<long long>(out->size()) > cap)
      throw CapExceeded("too many fillings (cap " + std::to_string(cap) + ")");
  }

  // Values run through -n..-1, 1..n in increasing order.
  void run(int val) {
    int n = book->n;
    if (val == 0) val = 1;
    if (val > n) {
      for (size_t v = 0; v < dag->nodes.size(); ++v)
        if (entry[v] == 0) return;
      emit();
      return;
    }
    int a = std::abs(val);

    auto try_node = [&](int v) {
      if (guide && guided_target(val) != v) return;
      place(v, val);
      if (val < 0 && dag->nodes[v].mirror >= 0) {
        pending[a] = dag->nodes[v].mirror;
        run(val + 1);
        pending[a] = -1;
      } else if (val < 0) {
        abs_closed[a] = 1;  // +a may no longer appear
        run(val + 1);
        abs_closed[a] = 0;
      } else {
        run(val + 1);
      }
      unplace(v);
    };

    if (val < 0) {
      // Option 1: leave -a unused.
      if (!guide || guided_target(val) == -1) run(val + 1);
      // Option 2: place it anywhere legal.
      for (size_t v = 0; v < dag->nodes.size(); ++v) {
        if (!ready(static_cast<int>(v))) continue;
        const auto& node = dag->nodes[v];
        if (node.zero_diag) continue;  // needs positive entry
        try_node(static_cast<int>(v));
      }
    } else {
      if (pending[a] >= 0) {
        int v = pending[a];
        if (ready(v)) {
          if (guide && guided_target(val) != v) { /* guide deviates */ }
          else {
            place(v, val);
            run(val + 1);
            unplace(v);
          }
        }
        return;  // +a has no other legal home
      }
      if (abs_closed[a]) {
        if (!guide || guided_target(val) == -1) run(val + 1);
        return;
      }
      // abs a untouched: +a must be used now, in an unmirrored box.
      for (size_t v = 0; v < dag->nodes.size(); ++v) {
        if (!ready(static_cast<int>(v))) continue;
        if (dag->nodes[v].mirror >= 0) continue;
        if (guide && guided_target(val) != static_cast<int>(v)) continue;
        place(static_cast<int>(v), val);
        run(val + 1);
        unplace(static_cast<int>(v));
      }
    }
  }
};

void run_engine(const Book& book, std::vector<Filling>* out, long long cap,
                const Filling* guide, bool* found) {
  Dag dag = build_dag(book);
  FillState st;
  st.book = &book;
  st.dag = &dag;
  st.entry.assign(dag.nodes.size(), 0);
  st.missing.assign(dag.nodes.size(), 0);
  for (size_t v = 0; v < dag.nodes.size(); ++v)
    st.missing[v] = static_cast<int>(dag.nodes[v].preds.size());
  st.abs_closed.assign(book.n + 1, 0);
  st.pending.assign(book.n + 1, -1);
  st.out = out;
  st.cap = cap;
  st.guide = guide;
  if (guide) st.guide_ok = false;

  if (book.family == Family::A) {
    // entries 1..n, no signs: skip the negative half entirely
    st.run(1);
  } else {
    st.run(-book.n);
  }
  if (found) *found = guide ? st.guide_ok : false;
}

}  // namespace

std::vector<Filling> enumerate_fillings(const Book& book, long long max_results) {
  std::vector<Filling> out;
  run_engine(book, &out, max_results, nullptr, nullptr);
  return out;
}

bool filling_in_enumeration(const Book& book, const Filling& t) {
  if (static_cast<int>(t.size()) != book.n) return false;
  std::vector<Filling> out;
  bool found = false;
  run_engine(book, &out, 1, &t, &found);
  return found;
}

bool is_standard_filling(const Book& book, const Filling& t) {
  if (static_cast<int>(t.size()) != book.n) return false;
  int n = book.n;
  if (book.family == Family::A) {
    std::vector<char> used(n + 1, 0);
    for (int v : t) {
      if (v < 1 || v > n || used[v]) return false;
      used[v] = 1;
    }
  } else {
    std::vector<char> used(n + 1, 0);
    for (int v : t) {
      int a = std::abs(v);
      if (a < 1 || a > n || used[a]) return false;
      used[a] = 1;
    }
  }
  auto entry_of = [&](const Box& b) {
    return b.index > 0 ? t[b.index - 1] : -t[-b.index - 1];
  };
  for (const auto& page : book.pages) {
    for (const auto& b : page.boxes) {
      if (book.family == Family::C && b.index > 0 &&
          page.by_index(-b.index) == nullptr && b.content == Rat(0) &&
          page.page == Rat(0) && entry_of(b) < 0)
        return false;  // unpaired zero-diagonal boxes take positive entries
      for (const auto& c : page.boxes) {
        if (b.index >= c.index) continue;
        // b has the smaller index
        if (b.content == c.content) {
          if (!(entry_of(b) < entry_of(c))) return false;
        } else if (c.content - b.content == Rat(1) ||
                   b.content - c.content == Rat(1)) {
          if (northwest(c, b)) {
            if (!(entry_of(b) > entry_of(c))) return false;
          } else if (southeast(c, b)) {
            if (!(entry_of(b) < entry_of(c))) return false;
          }
        }
      }
    }
  }
  return true;
}

bool config_equivalent(const BoxConfig& a, const BoxConfig& b) {
  if (a.page != b.page) return false;
  if (a.boxes.size() != b.boxes.size()) return false;
  auto data = [](const BoxConfig& c) {
    std::vector<std::pair<int, Rat>> d;
    for (const auto& box : c.boxes) d.emplace_back(box.index, box.content);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (data(a) != data(b)) return false;
  for (const auto& x : a.boxes)
    for (const auto& y : a.boxes) {
      if (x.index >= y.index) continue;
      Rat diff = y.content - x.content;
      if (diff != Rat(1) && diff != Rat(-1)) continue;
      const Box* xb = b.by_index(x.index);
      const Box* yb = b.by_index(y.index);
      if (northwest(y, x) != northwest(*yb, *xb)) return false;
    }
  return true;
}

}  // namespace weyltab
