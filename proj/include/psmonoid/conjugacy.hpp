#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "psmonoid/core.hpp"

namespace psmonoid {

enum class ConjugacyStatus { related, not_related, not_related_up_to_bound };

std::string status_name(ConjugacyStatus s);

struct ConjugacyVerdict {
  ConjugacyStatus status;
  std::optional<Word> witness;            // conjugator, present iff related
  std::optional<std::size_t> bound;       // search depth, present iff bounded miss

  static ConjugacyVerdict related(Word g);
  static ConjugacyVerdict not_related();
  static ConjugacyVerdict up_to_bound(std::size_t b);

  bool is_related() const { return status == ConjugacyStatus::related; }
  nlohmann::json to_json() const;
};

// u and v are one cyclic shift apart (or equal).
bool psim(const Tableau& u, const Tableau& v, std::uint64_t guard = kDefaultGuard);

// u and v lie in the same cyclic shift component.
bool tpsim(const Tableau& u, const Tableau& v, std::uint64_t guard = kDefaultGuard);

// u and v have the same evaluation.
bool evsim(const Tableau& u, const Tableau& v);

// Search cap used when the caller does not pick one.
std::size_t default_conjugacy_bound(const Tableau& u);

// Left conjugacy u·g = g·v, searched over words g up to the given length.
// Conjugators never need symbols above the operands' alphabet, so the search
// ranges over A_k only.  A definitive NotRelated needs a finite argument:
// evaluation mismatch, or both operands decoding into the free submonoid.
ConjugacyVerdict lsim_bounded(const Tableau& u, const Tableau& v,
                              std::size_t max_g_len);

// Two-sided conjugacy: related only when u·g = g·v and h·u = v·h both have
// bounded witnesses; the reported witness solves the first equation.
ConjugacyVerdict osim_bounded(const Tableau& u, const Tableau& v,
                              std::size_t max_g_len);

// Generator word over the two-element code {1 -> insert("1"), 2 -> insert("21")}
// whose products form a free submonoid of the left monoid.
struct C2Code {
  std::vector<int> letters;
  std::string str() const;  // "g2g1g2g1"
  auto operator<=>(const C2Code&) const = default;
};

// Product of the coded generators, as a left-variant tableau.
Tableau c2_encode(const C2Code& code);

// Inverse of c2_encode: present exactly when the bottom row is all 1s and no
// symbol exceeds 2, i.e. every column is [1] or [1,2].
std::optional<C2Code> c2_decode(const Tableau& t);

// Conjugacy inside the free submonoid: rotation equivalence of the codes.
bool lsim_in_c2(const C2Code& u, const C2Code& v);

struct TwoSymbolReport {
  Evaluation evaluation;
  std::size_t bound = 0;
  std::size_t elements = 0;
  std::size_t pairs_checked = 0;
  std::size_t related_pairs = 0;
  // pairs where component membership and the bounded conjugator search disagree
  std::vector<std::pair<Tableau, Tableau>> violations;

  bool ok() const { return violations.empty(); }
  std::string str() const;
};

// Exhaustively compares component membership with the bounded conjugator
// search over the left-variant class of a two-symbol evaluation.
TwoSymbolReport two_symbol_tpsim_equals_lsim_check(
    const Evaluation& e, std::size_t max_g_len,
    std::uint64_t guard = kDefaultGuard);

}  // namespace psmonoid
