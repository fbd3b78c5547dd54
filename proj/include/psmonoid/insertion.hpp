#pragma once

#include <algorithm>

#include "psmonoid/core.hpp"

namespace psmonoid {

/// One patience sorting insertion step.  With bottom row r_1 ... r_k:
///   left:  append [a] when r_k <= a, else bump column min{i : a < r_i};
///   right: append [a] when r_k <  a, else bump column min{i : a <= r_i}.
/// Bumping pushes the whole column up one box and places a at its bottom.
Tableau insert_symbol(const Tableau& t, Symbol a);

/// Fold of insert_symbol over w starting from the empty tableau.
Tableau insert_word(const Word& w, Variant variant);

/// Columns left to right, each read top to bottom.
Word column_reading(const Tableau& t);

/// Words obtained from column_reading(t) by postponing the symbol at the
/// bottom of the first column (an occurrence of the minimum) to a strictly
/// later position, keeping only words that still insert to t.  Defined for
/// right-variant tableaux whose minimum symbol occurs at least twice; the
/// plain column reading is not included, so one-column tableaux yield {}.
std::vector<Word> delayed_column_readings(const Tableau& t);

/// All words inserting to t, in lexicographic order.
std::vector<Word> words_of(const Tableau& t, std::uint64_t guard = kDefaultGuard);

/// Whether u and v have the same insertion tableau under the given variant.
bool equivalent(const Word& u, const Word& v, Variant variant);

namespace detail {
/// In-place insertion on raw columns; cols must satisfy the variant invariants.
void insert_into(std::vector<Tableau::Column>& cols, Variant variant, Symbol a);

/// Calls fn(word) for every distinct word with evaluation e, in lexicographic
/// order.  The caller is responsible for guard checks.
template <typename F>
void for_each_word_of(const Evaluation& e, F&& fn) {
  std::vector<Symbol> w = e.multiset();
  do {
    fn(const_cast<const std::vector<Symbol>&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}
}  // namespace detail

}  // namespace psmonoid
