#pragma once

#include "psmonoid/core.hpp"

namespace psmonoid {

/// Occurrence of a defining relation inside a word.  The relation schemes are
///   left:  (y u x, y x u) with x < y <= u_1 < ... < u_m,
///   right: (y u x, y x u) with x <= y < u_1 <= ... <= u_m,
/// where u = u_m ... u_1 is written highest symbol first, so it appears in the
/// word as a decreasing run.  `forward` matches the factor y u x and moves x
/// next to y; `backward` matches y x u and moves x behind the run.
struct RelationMatch {
  enum class Direction { forward, backward };

  std::size_t position = 0;  // index of y in the word
  Symbol x = 0;
  Symbol y = 0;
  std::vector<Symbol> run;  // u as it appears in the word (decreasing)
  Direction direction = Direction::forward;

  /// The word with this occurrence rewritten to the other side.
  Word apply(const Word& w) const;
};

/// All defining-relation occurrences in w for the given variant.
std::vector<RelationMatch> relation_matches(const Word& w, Variant variant);

/// Words one rewrite away from w (both directions), sorted, w excluded.
std::vector<Word> rewrite_neighbors(const Word& w, Variant variant);

/// The congruence class of w generated by the defining relations, computed by
/// breadth-first closure under rewrite_neighbors; sorted.
std::vector<Word> congruence_closure(const Word& w, Variant variant,
                                     std::uint64_t guard = kDefaultGuard);

}  // namespace psmonoid
