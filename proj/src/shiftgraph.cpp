#include "psmonoid/shiftgraph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "psmonoid/parallel.hpp"

namespace psmonoid {

namespace {

using Column = Tableau::Column;

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int cur = q.front();
    q.pop_front();
    for (int nxt : adj[cur]) {
      if (dist[nxt] < 0) {
        dist[nxt] = dist[cur] + 1;
        q.push_back(nxt);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<int> ShiftGraph::index_of(const Tableau& t) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
  if (it == vertices.end() || *it != t) return std::nullopt;
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<int>> ShiftGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<Tableau> enumerate_class(const Evaluation& e, Variant variant,
                                     std::uint64_t guard) {
  check_guard(e, guard);
  std::set<Tableau> seen;
  detail::for_each_word_of(e, [&](const std::vector<Symbol>& w) {
    Tableau t(variant);
    for (Symbol a : w) detail::insert_into(t.columns(), variant, a);
    seen.insert(std::move(t));
  });
  return std::vector<Tableau>(seen.begin(), seen.end());
}

ShiftGraph class_graph(const Evaluation& e, Variant variant,
                       std::uint64_t guard) {
  check_guard(e, guard);
  std::unordered_map<Tableau, int, TableauHash> index;
  std::vector<Tableau> verts;
  auto intern = [&](Tableau&& t) {
    auto [it, inserted] = index.emplace(std::move(t), verts.size());
    if (inserted) verts.push_back(it->first);
    return it->second;
  };

  std::set<std::pair<int, int>> edges;
  std::vector<Symbol> rotated;
  detail::for_each_word_of(e, [&](const std::vector<Symbol>& w) {
    Tableau t(variant);
    for (Symbol a : w) detail::insert_into(t.columns(), variant, a);
    int self = intern(std::move(t));
    for (std::size_t shift = 1; shift < w.size(); ++shift) {
      rotated.assign(w.begin() + shift, w.end());
      rotated.insert(rotated.end(), w.begin(), w.begin() + shift);
      Tableau r(variant);
      for (Symbol a : rotated) detail::insert_into(r.columns(), variant, a);
      int other = intern(std::move(r));
      if (other != self) {
        edges.insert(std::minmax(self, other));
      }
    }
  });

  // Renumber vertices into sorted order so the artifact is canonical.
  std::vector<int> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return verts[a] < verts[b]; });
  std::vector<int> rank(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  ShiftGraph g;
  g.variant = variant;
  g.evaluation = e;
  g.vertices.reserve(verts.size());
  for (int old : order) g.vertices.push_back(std::move(verts[old]));
  for (auto [a, b] : edges) {
    g.edges.push_back(std::minmax(rank[a], rank[b]));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<Tableau> shift_neighbors(const Tableau& t, std::uint64_t guard) {
  const Evaluation e = evaluation_of(t);
  check_guard(e, guard);
  std::set<Tableau> out;
  std::vector<Symbol> rotated;
  detail::for_each_word_of(e, [&](const std::vector<Symbol>& w) {
    Tableau cand(t.variant());
    for (Symbol a : w) detail::insert_into(cand.columns(), t.variant(), a);
    if (cand != t) return;
    for (std::size_t shift = 1; shift < w.size(); ++shift) {
      rotated.assign(w.begin() + shift, w.end());
      rotated.insert(rotated.end(), w.begin(), w.begin() + shift);
      Tableau r(t.variant());
      for (Symbol a : rotated) detail::insert_into(r.columns(), t.variant(), a);
      if (r != t) out.insert(std::move(r));
    }
  });
  return std::vector<Tableau>(out.begin(), out.end());
}

ShiftGraph component(const Tableau& t, std::uint64_t guard) {
  ShiftGraph full = class_graph(evaluation_of(t), t.variant(), guard);
  auto start = full.index_of(t);
  if (!start) {
    throw std::invalid_argument("tableau is not a member of its class graph");
  }
  auto adj = full.adjacency();
  std::vector<int> dist = bfs_distances(adj, *start);

  std::vector<int> keep;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] >= 0) keep.push_back(static_cast<int>(i));
  }
  if (keep.size() == full.vertices.size()) return full;

  std::vector<int> rank(full.vertices.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) rank[keep[i]] = static_cast<int>(i);
  ShiftGraph g;
  g.variant = full.variant;
  g.evaluation = full.evaluation;
  for (int old : keep) g.vertices.push_back(std::move(full.vertices[old]));
  for (auto [a, b] : full.edges) {
    if (rank[a] >= 0 && rank[b] >= 0) g.edges.emplace_back(rank[a], rank[b]);
  }
  return g;
}

bool is_connected(const ShiftGraph& g) {
  if (g.vertices.empty()) return true;
  auto adj = g.adjacency();
  std::vector<int> dist = bfs_distances(adj, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const ShiftGraph& g, unsigned parallelism) {
  if (g.vertices.size() <= 1) return 0;
  const auto adj = g.adjacency();
  {
    std::vector<int> dist = bfs_distances(adj, 0);
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
      throw std::invalid_argument("diameter of a disconnected graph");
    }
  }
  std::atomic<int> best{0};
  parallel_for(adj.size(), parallelism, [&](std::size_t src) {
    std::vector<int> dist = bfs_distances(adj, static_cast<int>(src));
    int far = *std::max_element(dist.begin(), dist.end());
    int cur = best.load();
    while (far > cur && !best.compare_exchange_weak(cur, far)) {
    }
  });
  return best.load();
}

int distance(const ShiftGraph& g, const Tableau& from, const Tableau& to) {
  auto a = g.index_of(from);
  auto b = g.index_of(to);
  if (!a || !b) throw std::invalid_argument("tableau is not a graph vertex");
  return bfs_distances(g.adjacency(), *a)[*b];
}

int eccentricity(const ShiftGraph& g, const Tableau& t) {
  auto a = g.index_of(t);
  if (!a) throw std::invalid_argument("tableau is not a graph vertex");
  std::vector<int> dist = bfs_distances(g.adjacency(), *a);
  int far = 0;
  for (int d : dist) {
    if (d < 0) throw std::invalid_argument("eccentricity in a disconnected graph");
    far = std::max(far, d);
  }
  return far;
}

Tableau central_element(const Evaluation& e) {
  if (!e.contiguous() || e.max_symbol() < 3) {
    throw std::invalid_argument("center defined for n >= 3 with content {1,...,n}");
  }
  const Symbol n = e.max_symbol();
  std::vector<Symbol> w;
  for (Symbol a = n - 1; a >= 1; --a) w.insert(w.end(), e.count(a), a);
  w.insert(w.end(), e.count(n), n);
  return insert_word(Word(std::move(w)), Variant::right);
}

bool verify(const ShiftPath& path, Variant variant) {
  if (path.nodes.size() != path.witnesses.size() + 1) return false;
  for (std::size_t i = 0; i < path.witnesses.size(); ++i) {
    const auto& [x, y] = path.witnesses[i];
    if (insert_word(x + y, variant) != path.nodes[i]) return false;
    if (insert_word(y + x, variant) != path.nodes[i + 1]) return false;
  }
  return true;
}

namespace {

// Reading of column c (top to bottom) as a raw symbol vector.
std::vector<Symbol> column_segment(const Tableau& t, std::size_t c) {
  const Column& col = t.columns()[c];
  return std::vector<Symbol>(col.rbegin(), col.rend());
}

// Index inside column c's reading of the first (topmost) occurrence of s.
std::size_t first_in_segment(const std::vector<Symbol>& seg, Symbol s) {
  auto it = std::find(seg.begin(), seg.end(), s);
  if (it == seg.end()) throw std::logic_error("symbol missing from column segment");
  return static_cast<std::size_t>(it - seg.begin());
}

struct Split {
  Word x;
  Word y;
};

// Plain-reading split of t before position pos of its column reading.
Split plain_split(const Tableau& t, std::size_t pos) {
  const Word r = column_reading(t);
  return {Word(std::vector<Symbol>(r.begin(), r.begin() + pos)),
          Word(std::vector<Symbol>(r.begin() + pos, r.end()))};
}

// Split of the delayed column reading whose postponed minimum is placed just
// before position `pos` of the tail (the reading after column one), with the
// cut taken at the postponed symbol: x is everything before it, y starts with
// the minimum.  pos == 0 degenerates to the plain reading split in which the
// bottom symbol of column one starts y.
Split delayed_split(const Tableau& t, std::size_t pos) {
  const Word r = column_reading(t);
  const std::size_t h = t.columns().front().size();
  const Symbol bottom = t.columns().front().front();
  std::vector<Symbol> x(r.begin(), r.begin() + h - 1);
  x.insert(x.end(), r.begin() + h, r.begin() + h + pos);
  std::vector<Symbol> y{bottom};
  y.insert(y.end(), r.begin() + h + pos, r.end());
  return {Word(std::move(x)), Word(std::move(y))};
}

ShiftPath run_path(const Tableau& start, const Tableau& target,
                   const std::function<Split(const Tableau&)>& pick,
                   std::size_t max_steps) {
  ShiftPath path;
  path.nodes.push_back(start);
  Tableau cur = start;
  while (cur != target) {
    if (path.witnesses.size() > max_steps) {
      throw std::logic_error("shift path construction did not terminate");
    }
    Split s = pick(cur);
    Tableau next = insert_word(s.y + s.x, cur.variant());
    path.witnesses.emplace_back(std::move(s.x), std::move(s.y));
    path.nodes.push_back(next);
    cur = std::move(next);
  }
  return path;
}

void require_center_preconditions(const Tableau& t, Symbol min_n) {
  if (t.variant() != Variant::right) {
    throw std::invalid_argument("center paths are defined for right-variant tableaux");
  }
  if (!t.valid()) throw std::invalid_argument("tableau violates its invariants");
  const Evaluation e = evaluation_of(t);
  if (!e.contiguous() || e.max_symbol() < min_n) {
    throw std::invalid_argument("center defined for n >= " +
                                std::to_string(min_n) +
                                " with content {1,...,n}");
  }
}

}  // namespace

ShiftPath path_to_center(const Tableau& t) {
  require_center_preconditions(t, 3);
  const Evaluation e = evaluation_of(t);
  const Tableau target = central_element(e);

  auto pick = [&](const Tableau& cur) -> Split {
    const auto& cols = cur.columns();
    if (cols.size() == 1) {
      // Move the leading run of the top symbol to the back.
      const Word r = column_reading(cur);
      std::size_t run = 1;
      while (run < r.size() && r[run] == r[0]) ++run;
      return plain_split(cur, run);
    }
    // Cut before the topmost occurrence in column two of its bottom symbol;
    // the shift packs every symbol <= that pivot into column one.
    const Symbol pivot = cols[1].front();
    const auto seg = column_segment(cur, 1);
    return plain_split(cur, cols[0].size() + first_in_segment(seg, pivot));
  };
  return run_path(t, target, pick, e.max_symbol());
}

Tableau repeated_min_target(const Evaluation& e) {
  if (!e.contiguous() || e.max_symbol() < 4 || e.count(1) < 2 || e.count(2) != 1) {
    throw std::invalid_argument(
        "repeated-minimum form needs content {1,...,n}, n >= 4, with the "
        "minimum repeated and the second symbol unique");
  }
  const Symbol n = e.max_symbol();
  std::vector<Symbol> w(e.count(1), 1);
  for (Symbol a = n - 1; a >= 2; --a) w.insert(w.end(), e.count(a), a);
  w.insert(w.end(), e.count(n), n);
  return insert_word(Word(std::move(w)), Variant::right);
}

ShiftPath path_to_center_repeated_min(const Tableau& t) {
  require_center_preconditions(t, 4);
  const Evaluation e = evaluation_of(t);
  const Tableau target = repeated_min_target(e);
  const Symbol n = e.max_symbol();

  auto pick = [&](const Tableau& cur) -> Split {
    const auto& cols = cur.columns();
    if (cols.size() == 1) {
      const Word r = column_reading(cur);
      std::size_t run = 1;
      while (run < r.size() && r[run] == r[0]) ++run;
      return plain_split(cur, run);
    }
    const bool ones_only = std::all_of(cols[0].begin(), cols[0].end(),
                                       [](Symbol s) { return s == 1; });
    if (!ones_only) {
      const Symbol k = cols[1].front();
      const auto seg2 = column_segment(cur, 1);
      if (k == n && cols[0].back() < n) {
        // Column one already carries the full 2..n-1 chain over the ones and
        // the n's wait in column two; postponing the bottom minimum to the
        // very end finishes in a single shift.
        return delayed_split(cur, column_reading(cur).size() - cols[0].size());
      }
      if (k > 2) {
        // Covers the remaining k == n shapes: the shift stacks everything
        // above the ones into column two, which the two-column case below
        // then unpacks.
        return delayed_split(cur, first_in_segment(seg2, k));
      }
      // k == 2: cut at a 3 in the rightmost column holding one (it can only
      // sit in the first three columns); with no 3 outside column one, fall
      // back to cutting at the unique 2.
      if (cols.size() >= 3 && cols[2].front() == 3) {
        const auto seg3 = column_segment(cur, 2);
        return delayed_split(cur, seg2.size() + first_in_segment(seg3, 3));
      }
      if (std::find(seg2.begin(), seg2.end(), 3) != seg2.end()) {
        return delayed_split(cur, first_in_segment(seg2, 3));
      }
      return delayed_split(cur, first_in_segment(seg2, 2));
    }
    if (cols.size() == 2) {
      // Everything but the minimum sits in column two with the top symbols on
      // top; cut right after that leading run of n's.
      const auto seg2 = column_segment(cur, 1);
      std::size_t run = 0;
      while (run < seg2.size() && seg2[run] == n) ++run;
      return delayed_split(cur, run);
    }
    const Symbol pivot = cols[2].front();
    const auto seg3 = column_segment(cur, 2);
    return delayed_split(cur, column_segment(cur, 1).size() +
                                  first_in_segment(seg3, pivot));
  };
  return run_path(t, target, pick, e.max_symbol() + 2);
}

std::string CochargeSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(labels[i]);
  }
  out.push_back(')');
  return out;
}

bool CochargeSequence::well_formed() const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i == 0 ? labels[0] != 0
               : labels[i] < labels[i - 1] || labels[i] > labels[i - 1] + 1) {
      return false;
    }
  }
  return true;
}

CochargeSequence cocharge(const Word& w) {
  if (!is_standard(w)) {
    throw std::invalid_argument("cocharge is defined for standard words");
  }
  const Symbol n = static_cast<Symbol>(w.size());
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]] = i;
  CochargeSequence out;
  out.labels.resize(n);
  out.labels[0] = 0;
  for (Symbol a = 1; a < n; ++a) {
    out.labels[a] = out.labels[a - 1] + (pos[a + 1] < pos[a] ? 1 : 0);
  }
  return out;
}

CochargeSequence cocharge_of_element(const Tableau& t) {
  if (t.variant() != Variant::right) {
    throw std::invalid_argument("cocharge of an element needs the right variant");
  }
  return cocharge(column_reading(t));
}

std::string to_dot(const ShiftGraph& g) {
  std::ostringstream out;
  out << "graph shift_component {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << column_reading(g.vertices[i]).str()
        << "\"];\n";
  }
  for (auto [a, b] : g.edges) {
    out << "  v" << a << " -- v" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const ShiftGraph& g, std::optional<int> diameter) {
  nlohmann::json j;
  j["variant"] = variant_name(g.variant);
  j["evaluation"] = g.evaluation.counts();
  j["vertices"] = nlohmann::json::array();
  for (const Tableau& t : g.vertices) j["vertices"].push_back(t.to_json());
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  if (diameter) {
    j["diameter"] = *diameter;
  } else {
    j["diameter"] = nullptr;
  }
  return j;
}

}  // namespace psmonoid
