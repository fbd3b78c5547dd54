#pragma once

#include <optional>
#include <utility>

#include "psmonoid/core.hpp"
#include "psmonoid/insertion.hpp"

namespace psmonoid {

/// Undirected graph on insertion tableaux of one evaluation class, with an
/// edge between P(w1 w2) and P(w2 w1) for every two-part factorization; built
/// by rotating every word of the class.  Vertices are sorted by tableau shape
/// so identical inputs always produce identical artifacts; edges are sorted
/// index pairs (i, j) with i < j, self-loops omitted.
struct ShiftGraph {
  Variant variant = Variant::right;
  Evaluation evaluation;
  std::vector<Tableau> vertices;
  std::vector<std::pair<int, int>> edges;

  std::optional<int> index_of(const Tableau& t) const;
  std::vector<std::vector<int>> adjacency() const;
};

/// All tableaux of the evaluation class, sorted.
std::vector<Tableau> enumerate_class(const Evaluation& e, Variant variant,
                                     std::uint64_t guard = kDefaultGuard);

/// Cyclic-shift graph of the whole evaluation class (possibly disconnected
/// for the left variant).
ShiftGraph class_graph(const Evaluation& e, Variant variant,
                       std::uint64_t guard = kDefaultGuard);

/// Tableaux one cyclic shift away from t, sorted, t excluded.
std::vector<Tableau> shift_neighbors(const Tableau& t,
                                     std::uint64_t guard = kDefaultGuard);

/// Connected component of the class graph containing t.
ShiftGraph component(const Tableau& t, std::uint64_t guard = kDefaultGuard);

bool is_connected(const ShiftGraph& g);

/// Largest pairwise distance; throws std::invalid_argument on a disconnected
/// graph.  parallelism 0 means one worker per hardware thread.
int diameter(const ShiftGraph& g, unsigned parallelism = 0);

/// Distance between two vertices, -1 when unreachable.
int distance(const ShiftGraph& g, const Tableau& from, const Tableau& to);

/// Largest distance from t to any vertex of its (connected) graph.
int eccentricity(const ShiftGraph& g, const Tableau& t);

/// The element P_r((n-1)^{e_{n-1}} (n-2)^{e_{n-2}} ... 2^{e_2} 1^{e_1} n^{e_n})
/// whose distance to every class member is at most n - 2.  Requires content
/// {1, ..., n} with n >= 3.
Tableau central_element(const Evaluation& e);

/// Chain of cyclic shifts.  nodes[i+1] is obtained from nodes[i] via the
/// witness pair: insert(x + y) == nodes[i] and insert(y + x) == nodes[i+1].
struct ShiftPath {
  std::vector<Tableau> nodes;                   // length() + 1 entries
  std::vector<std::pair<Word, Word>> witnesses; // (x, y) per step
  std::size_t length() const { return witnesses.size(); }
};

/// True when every recorded witness links its endpoints as promised.
bool verify(const ShiftPath& path, Variant variant);

/// Splits of column readings move t to central_element(evaluation_of(t)) in
/// at most n - 2 shifts.  Requires right variant and content {1,...,n}, n >= 3.
ShiftPath path_to_center(const Tableau& t);

/// Delayed-column-reading shifts move t to
/// P_r(1^{e_1} (n-1)^{e_{n-1}} ... 3^{e_3} 2 n^{e_n}).  Requires right
/// variant, content {1,...,n} with n >= 4, e_1 >= 2 and e_2 == 1.  The
/// construction uses at most n - 2 shifts; one-column starts and starts whose
/// threes all sit in column one genuinely need that many, so n - 3 is not a
/// bound any split-based routing can promise.
ShiftPath path_to_center_repeated_min(const Tableau& t);

/// Endpoint of path_to_center_repeated_min for evaluation e.
Tableau repeated_min_target(const Evaluation& e);

/// Cocharge labels of a standard word, listed for symbols 1, 2, ..., n.
/// label(1) = 0 and label(a+1) = label(a) + 1 exactly when a+1 occurs to the
/// left of a; the sequence starts at 0 and climbs by steps of 0 or 1.
struct CochargeSequence {
  std::vector<int> labels;

  std::string str() const;
  bool well_formed() const;
  auto operator<=>(const CochargeSequence&) const = default;
};

CochargeSequence cocharge(const Word& w);

/// cocharge(column_reading(t)) for a right-variant standard-content tableau.
CochargeSequence cocharge_of_element(const Tableau& t);

std::string to_dot(const ShiftGraph& g);
nlohmann::json to_json(const ShiftGraph& g, std::optional<int> diameter);

}  // namespace psmonoid
