#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace psmonoid {

/// Alphabet symbol. Symbols are positive integers ordered in the usual way.
using Symbol = int;

/// Thrown when an enumeration would exceed the configured class-size guard.
class guard_exceeded : public std::runtime_error {
 public:
  explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default cap on the number of words enumerated per evaluation class.
inline constexpr std::uint64_t kDefaultGuard = 500000;

/// Finite word over the positive integers.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols);
  explicit Word(std::vector<Symbol> symbols);

  /// Accepts "4,5,1,1,4,3,2" or the digit shorthand "4511432" (symbols <= 9).
  static Word parse(std::string_view text);
  /// Inverse of parse: digit shorthand when all symbols are <= 9.
  std::string str() const;

  std::size_t size() const { return syms_.size(); }
  bool empty() const { return syms_.empty(); }
  Symbol operator[](std::size_t i) const { return syms_[i]; }
  const std::vector<Symbol>& symbols() const { return syms_; }

  auto begin() const { return syms_.begin(); }
  auto end() const { return syms_.end(); }

  friend Word operator+(const Word& a, const Word& b);
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Symbol> syms_;
};

/// Symbol multiplicities of a word; trailing zero counts are trimmed away.
class Evaluation {
 public:
  Evaluation() = default;
  explicit Evaluation(std::vector<int> counts);

  static Evaluation of(const Word& w);
  /// Accepts "(2,1,1,2,1)"; the empty evaluation is "()".
  static Evaluation parse(std::string_view text);
  std::string str() const;

  /// Count of symbol a, zero when a is beyond the stored range.
  int count(Symbol a) const;
  /// Largest symbol with a nonzero count, 0 for the empty evaluation.
  Symbol max_symbol() const { return static_cast<Symbol>(counts_.size()); }
  std::uint64_t total() const;
  std::vector<Symbol> content() const;
  /// True when every count up to max_symbol equals one.
  bool standard() const;
  /// True when the content is exactly {1, ..., max_symbol}.
  bool contiguous() const;
  /// The weakly increasing word carrying this evaluation.
  std::vector<Symbol> multiset() const;

  const std::vector<int>& counts() const { return counts_; }
  auto operator<=>(const Evaluation&) const = default;

 private:
  std::vector<int> counts_;
};

enum class Variant { left, right };

std::string variant_name(Variant v);
Variant parse_variant(std::string_view name);

/// Patience sorting insertion tableau.
///
/// Columns run left to right; each column stores its symbols bottom-to-top.
/// Construction does not check the column/row orderings, so ill-formed shapes
/// are representable; `valid()` decides whether the invariants hold:
///   left:  columns strictly decreasing top-to-bottom, bottom row weakly
///          increasing left-to-right;
///   right: columns weakly decreasing top-to-bottom, bottom row strictly
///          increasing left-to-right.
/// The empty tableau (no columns) is the monoid identity and is valid.
class Tableau {
 public:
  using Column = std::vector<Symbol>;

  explicit Tableau(Variant v) : variant_(v) {}
  Tableau(Variant v, std::vector<Column> columns);

  Variant variant() const { return variant_; }
  const std::vector<Column>& columns() const { return cols_; }
  std::vector<Column>& columns() { return cols_; }

  bool empty() const { return cols_.empty(); }
  std::uint64_t size() const;
  std::vector<Symbol> bottom_row() const;
  bool valid() const;

  nlohmann::json to_json() const;
  static Tableau from_json(const nlohmann::json& j);
  /// Compact single-line JSON, the canonical serialized form.
  std::string dump() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  Variant variant_;
  std::vector<Column> cols_;
};

struct TableauHash {
  std::size_t operator()(const Tableau& t) const noexcept;
};

Evaluation evaluation_of(const Word& w);
Evaluation evaluation_of(const Tableau& t);
bool is_standard(const Word& w);

/// Distinct cyclic rotations of w, sorted; the empty word yields {empty}.
std::vector<Word> rotations(const Word& w);

bool validate_tableau(const Tableau& t);

/// Number of words with evaluation e, clamped to 2^63 on overflow.
std::uint64_t multinomial(const Evaluation& e);

/// Throws guard_exceeded("class too large ...") when multinomial(e) > guard.
void check_guard(const Evaluation& e, std::uint64_t guard);

}  // namespace psmonoid
