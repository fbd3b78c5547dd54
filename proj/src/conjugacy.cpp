#include "psmonoid/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

#include "psmonoid/insertion.hpp"
#include "psmonoid/shiftgraph.hpp"

namespace psmonoid {

namespace {

void require_same_variant(const Tableau& u, const Tableau& v) {
  if (u.variant() != v.variant()) {
    throw std::invalid_argument("operands must share a variant");
  }
}

// Word realisation of a generator code: 1 -> "1", 2 -> "21".
Word code_word(const C2Code& code, std::size_t prefix_len) {
  std::vector<Symbol> w;
  for (std::size_t i = 0; i < prefix_len; ++i) {
    if (code.letters[i] == 2) w.push_back(2);
    w.push_back(1);
  }
  return Word(std::move(w));
}

// Lexicographically next candidate over {1,...,k}; false once exhausted.
bool next_candidate(std::vector<Symbol>& g, Symbol k) {
  for (std::size_t i = g.size(); i-- > 0;) {
    if (g[i] < k) {
      ++g[i];
      std::fill(g.begin() + i + 1, g.end(), 1);
      return true;
    }
  }
  return false;
}

// Shortest-then-lexicographic search for g solving
// insert(left · g) = insert(g · right).
std::optional<Word> search_conjugator(const Word& left, const Word& right,
                                      Variant variant, Symbol k,
                                      std::size_t max_g_len) {
  for (std::size_t len = 0; len <= max_g_len; ++len) {
    if (len > 0 && k == 0) break;
    std::vector<Symbol> g(len, 1);
    do {
      Word gw(g);
      if (insert_word(left + gw, variant) == insert_word(gw + right, variant)) {
        return gw;
      }
    } while (next_candidate(g, k));
  }
  return std::nullopt;
}

struct Direction {
  bool swapped;  // false: u·g = g·v, true: g·u = v·g
};

ConjugacyVerdict one_sided_bounded(const Tableau& u, const Tableau& v,
                                   std::size_t max_g_len, Direction dir) {
  require_same_variant(u, v);
  if (!evsim(u, v)) return ConjugacyVerdict::not_related();

  if (u.variant() == Variant::left) {
    auto cu = c2_decode(u);
    auto cv = c2_decode(v);
    if (cu && cv) {
      // Inside the free submonoid conjugacy is exactly rotation of codes, and
      // both one-sided equations have the same solvability there.
      const auto& a = cu->letters;
      const auto& b = cv->letters;
      if (a.size() != b.size()) return ConjugacyVerdict::not_related();
      for (std::size_t s = 0; s < std::max<std::size_t>(a.size(), 1); ++s) {
        bool match = true;
        for (std::size_t i = 0; i < a.size() && match; ++i) {
          match = a[(s + i) % a.size()] == b[i];
        }
        if (match) {
          // u = x·y, v = y·x with |x| = s; then u·η(x) = η(x)·v and
          // η(y)·u = v·η(y).
          if (!dir.swapped) return ConjugacyVerdict::related(code_word(*cu, s));
          C2Code y{std::vector<int>(a.begin() + s, a.end())};
          return ConjugacyVerdict::related(code_word(y, y.letters.size()));
        }
      }
      return ConjugacyVerdict::not_related();
    }
  }

  Symbol k = std::max(evaluation_of(u).max_symbol(), evaluation_of(v).max_symbol());
  const Word ru = column_reading(u);
  const Word rv = column_reading(v);
  auto g = dir.swapped ? search_conjugator(rv, ru, u.variant(), k, max_g_len)
                       : search_conjugator(ru, rv, u.variant(), k, max_g_len);
  if (g) return ConjugacyVerdict::related(std::move(*g));
  return ConjugacyVerdict::up_to_bound(max_g_len);
}

}  // namespace

std::string status_name(ConjugacyStatus s) {
  switch (s) {
    case ConjugacyStatus::related:
      return "Related";
    case ConjugacyStatus::not_related:
      return "NotRelated";
    case ConjugacyStatus::not_related_up_to_bound:
      return "NotRelatedUpToBound";
  }
  throw std::logic_error("unknown status");
}

ConjugacyVerdict ConjugacyVerdict::related(Word g) {
  return {ConjugacyStatus::related, std::move(g), std::nullopt};
}

ConjugacyVerdict ConjugacyVerdict::not_related() {
  return {ConjugacyStatus::not_related, std::nullopt, std::nullopt};
}

ConjugacyVerdict ConjugacyVerdict::up_to_bound(std::size_t b) {
  return {ConjugacyStatus::not_related_up_to_bound, std::nullopt, b};
}

nlohmann::json ConjugacyVerdict::to_json() const {
  nlohmann::json j;
  j["status"] = status_name(status);
  j["witness"] = witness ? nlohmann::json(witness->str()) : nlohmann::json();
  j["bound"] = bound ? nlohmann::json(*bound) : nlohmann::json();
  return j;
}

bool psim(const Tableau& u, const Tableau& v, std::uint64_t guard) {
  require_same_variant(u, v);
  if (u == v) return true;
  if (!evsim(u, v)) return false;
  auto nbrs = shift_neighbors(u, guard);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool tpsim(const Tableau& u, const Tableau& v, std::uint64_t guard) {
  require_same_variant(u, v);
  if (u == v) return true;
  if (!evsim(u, v)) return false;
  ShiftGraph comp = component(u, guard);
  return comp.index_of(v).has_value();
}

bool evsim(const Tableau& u, const Tableau& v) {
  return evaluation_of(u) == evaluation_of(v);
}

std::size_t default_conjugacy_bound(const Tableau& u) { return u.size() + 4; }

ConjugacyVerdict lsim_bounded(const Tableau& u, const Tableau& v,
                              std::size_t max_g_len) {
  return one_sided_bounded(u, v, max_g_len, {false});
}

ConjugacyVerdict osim_bounded(const Tableau& u, const Tableau& v,
                              std::size_t max_g_len) {
  ConjugacyVerdict fwd = one_sided_bounded(u, v, max_g_len, {false});
  if (fwd.status == ConjugacyStatus::not_related) return fwd;
  ConjugacyVerdict rev = one_sided_bounded(u, v, max_g_len, {true});
  if (rev.status == ConjugacyStatus::not_related) return rev;
  if (fwd.is_related() && rev.is_related()) return fwd;
  return ConjugacyVerdict::up_to_bound(max_g_len);
}

std::string C2Code::str() const {
  std::string out;
  for (int g : letters) out += g == 1 ? "g1" : "g2";
  return out;
}

Tableau c2_encode(const C2Code& code) {
  return insert_word(code_word(code, code.letters.size()), Variant::left);
}

std::optional<C2Code> c2_decode(const Tableau& t) {
  if (t.variant() != Variant::left) {
    throw std::invalid_argument("the free-submonoid code lives in the left variant");
  }
  C2Code code;
  for (const auto& col : t.columns()) {
    if (col == Tableau::Column{1}) {
      code.letters.push_back(1);
    } else if (col == Tableau::Column{1, 2}) {
      code.letters.push_back(2);
    } else {
      return std::nullopt;
    }
  }
  return code;
}

bool lsim_in_c2(const C2Code& u, const C2Code& v) {
  if (u.letters.size() != v.letters.size()) return false;
  if (u.letters.empty()) return true;
  std::vector<int> doubled = u.letters;
  doubled.insert(doubled.end(), u.letters.begin(), u.letters.end());
  return std::search(doubled.begin(), doubled.end(), v.letters.begin(),
                     v.letters.end()) != doubled.end();
}

TwoSymbolReport two_symbol_tpsim_equals_lsim_check(const Evaluation& e,
                                                   std::size_t max_g_len,
                                                   std::uint64_t guard) {
  std::size_t support = 0;
  for (Symbol a = 1; a <= e.max_symbol(); ++a) {
    if (e.count(a) > 0) ++support;
  }
  if (support != 2) {
    throw std::invalid_argument("check requires an evaluation with exactly two symbols");
  }

  ShiftGraph g = class_graph(e, Variant::left, guard);
  // Component id per vertex.
  std::vector<int> comp(g.vertices.size(), -1);
  auto adj = g.adjacency();
  int ncomp = 0;
  for (std::size_t s = 0; s < comp.size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (int nxt : adj[cur]) {
        if (comp[nxt] < 0) {
          comp[nxt] = ncomp;
          stack.push_back(static_cast<std::size_t>(nxt));
        }
      }
    }
    ++ncomp;
  }

  TwoSymbolReport report;
  report.evaluation = e;
  report.bound = max_g_len;
  report.elements = g.vertices.size();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      ++report.pairs_checked;
      bool same_component = comp[i] == comp[j];
      bool found = lsim_bounded(g.vertices[i], g.vertices[j], max_g_len).is_related();
      if (same_component) ++report.related_pairs;
      if (same_component != found) {
        report.violations.emplace_back(g.vertices[i], g.vertices[j]);
      }
    }
  }
  return report;
}

std::string TwoSymbolReport::str() const {
  std::string out = "evaluation " + evaluation.str() + ": " +
                    std::to_string(elements) + " elements, " +
                    std::to_string(pairs_checked) + " pairs, bound " +
                    std::to_string(bound) + ", " +
                    std::to_string(related_pairs) + " related, " +
                    std::to_string(violations.size()) + " violations";
  return out;
}

}  // namespace psmonoid
