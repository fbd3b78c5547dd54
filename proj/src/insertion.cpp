#include "psmonoid/insertion.hpp"

#include <algorithm>

namespace psmonoid {

namespace detail {

void insert_into(std::vector<Tableau::Column>& cols, Variant variant, Symbol a) {
  if (cols.empty() ||
      (variant == Variant::left ? cols.back().front() <= a
                                : cols.back().front() < a)) {
    cols.emplace_back(1, a);
    return;
  }
  // Bottom row is sorted, so the bumped column can be found by bisection.
  std::size_t lo = 0, hi = cols.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    bool bumpable = variant == Variant::left ? a < cols[mid].front()
                                             : a <= cols[mid].front();
    if (bumpable) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  cols[lo].insert(cols[lo].begin(), a);
}

}  // namespace detail

Tableau insert_symbol(const Tableau& t, Symbol a) {
  if (a < 1) throw std::invalid_argument("symbols must be >= 1");
  Tableau out = t;
  detail::insert_into(out.columns(), t.variant(), a);
  return out;
}

Tableau insert_word(const Word& w, Variant variant) {
  Tableau t(variant);
  for (Symbol a : w) detail::insert_into(t.columns(), variant, a);
  return t;
}

Word column_reading(const Tableau& t) {
  std::vector<Symbol> out;
  out.reserve(t.size());
  for (const auto& col : t.columns()) {
    out.insert(out.end(), col.rbegin(), col.rend());
  }
  return Word(std::move(out));
}

std::vector<Word> delayed_column_readings(const Tableau& t) {
  if (t.variant() != Variant::right) {
    throw std::invalid_argument(
        "delayed readings undefined: tableau must be right-variant");
  }
  if (t.empty()) {
    throw std::invalid_argument(
        "delayed readings undefined: tableau is empty");
  }
  Symbol bottom = t.columns().front().front();
  if (evaluation_of(t).count(bottom) < 2) {
    throw std::invalid_argument(
        "delayed readings undefined: minimum symbol occurs only once");
  }

  const Word reading = column_reading(t);
  const std::size_t h = t.columns().front().size();
  // head = first column read without its bottom symbol, tail = later columns.
  std::vector<Symbol> head(reading.begin(), reading.begin() + h - 1);
  std::vector<Symbol> tail(reading.begin() + h, reading.end());

  std::vector<Word> out;
  for (std::size_t offset = 1; offset <= tail.size(); ++offset) {
    std::vector<Symbol> cand = head;
    cand.insert(cand.end(), tail.begin(), tail.begin() + offset);
    cand.push_back(bottom);
    cand.insert(cand.end(), tail.begin() + offset, tail.end());
    Word w(std::move(cand));
    if (insert_word(w, Variant::right) == t) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_of(const Tableau& t, std::uint64_t guard) {
  const Evaluation e = evaluation_of(t);
  check_guard(e, guard);
  std::vector<Word> out;
  detail::for_each_word_of(e, [&](const std::vector<Symbol>& w) {
    Tableau cand(t.variant());
    for (Symbol a : w) detail::insert_into(cand.columns(), t.variant(), a);
    if (cand == t) out.emplace_back(w);
  });
  return out;
}

bool equivalent(const Word& u, const Word& v, Variant variant) {
  return insert_word(u, variant) == insert_word(v, variant);
}

}  // namespace psmonoid
