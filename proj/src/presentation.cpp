#include "psmonoid/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace psmonoid {

namespace {

// Run symbols must exceed y (right) or at least reach it (left); together with
// the decreasing-run shape this captures y <= u_1 < ... < u_m resp.
// y < u_1 <= ... <= u_m.
bool run_symbol_ok(Symbol s, Symbol y, Variant variant) {
  return variant == Variant::left ? s >= y : s > y;
}

bool run_step_ok(Symbol prev, Symbol next, Variant variant) {
  return variant == Variant::left ? next < prev : next <= prev;
}

bool x_ok(Symbol x, Symbol y, Variant variant) {
  return variant == Variant::left ? x < y : x <= y;
}

}  // namespace

Word RelationMatch::apply(const Word& w) const {
  std::vector<Symbol> out = w.symbols();
  const std::size_t m = run.size();
  if (direction == Direction::forward) {
    // y u x -> y x u
    out[position + 1] = x;
    std::copy(run.begin(), run.end(), out.begin() + position + 2);
  } else {
    // y x u -> y u x
    std::copy(run.begin(), run.end(), out.begin() + position + 1);
    out[position + 1 + m] = x;
  }
  return Word(std::move(out));
}

std::vector<RelationMatch> relation_matches(const Word& w, Variant variant) {
  std::vector<RelationMatch> out;
  const auto& s = w.symbols();
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol y = s[i];

    // Forward: y followed by a decreasing run, then x.
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!run_symbol_ok(s[j], y, variant)) break;
      if (j > i + 1 && !run_step_ok(s[j - 1], s[j], variant)) break;
      if (j + 1 < n && x_ok(s[j + 1], y, variant)) {
        out.push_back({i, s[j + 1], y,
                       std::vector<Symbol>(s.begin() + i + 1, s.begin() + j + 1),
                       RelationMatch::Direction::forward});
      }
    }

    // Backward: y, then x, then a decreasing run.
    if (i + 2 < n && x_ok(s[i + 1], y, variant)) {
      const Symbol x = s[i + 1];
      for (std::size_t j = i + 2; j < n; ++j) {
        if (!run_symbol_ok(s[j], y, variant)) break;
        if (j > i + 2 && !run_step_ok(s[j - 1], s[j], variant)) break;
        out.push_back({i, x, y,
                       std::vector<Symbol>(s.begin() + i + 2, s.begin() + j + 1),
                       RelationMatch::Direction::backward});
      }
    }
  }
  return out;
}

std::vector<Word> rewrite_neighbors(const Word& w, Variant variant) {
  std::set<Word> out;
  for (const RelationMatch& match : relation_matches(w, variant)) {
    Word next = match.apply(w);
    if (next != w) out.insert(std::move(next));
  }
  return std::vector<Word>(out.begin(), out.end());
}

std::vector<Word> congruence_closure(const Word& w, Variant variant,
                                     std::uint64_t guard) {
  check_guard(Evaluation::of(w), guard);
  std::set<Word> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (Word& next : rewrite_neighbors(cur, variant)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

}  // namespace psmonoid
