#include "psmonoid/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace psmonoid {

namespace {

void require_positive(const std::vector<Symbol>& syms) {
  for (Symbol s : syms) {
    if (s < 1) throw std::invalid_argument("word symbols must be >= 1");
  }
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("cannot parse " + std::string(what) + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Word::Word(std::initializer_list<Symbol> symbols) : syms_(symbols) {
  require_positive(syms_);
}

Word::Word(std::vector<Symbol> symbols) : syms_(std::move(symbols)) {
  require_positive(syms_);
}

Word Word::parse(std::string_view text) {
  if (text.empty()) return Word{};
  std::vector<Symbol> syms;
  if (text.find(',') != std::string_view::npos) {
    // A single trailing comma is allowed so that one-symbol words with a
    // multi-digit symbol ("12,") stay distinguishable from the shorthand.
    if (text.back() == ',') text.remove_suffix(1);
    for (std::string_view part : split(text, ',')) {
      syms.push_back(parse_int(part, "word symbol"));
    }
  } else if (text.size() == 1) {
    syms.push_back(parse_int(text, "word symbol"));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument(
            "digit shorthand admits only symbols 1-9: '" + std::string(text) +
            "'");
      }
      syms.push_back(c - '0');
    }
  }
  require_positive(syms);
  return Word(std::move(syms));
}

std::string Word::str() const {
  if (syms_.empty()) return "";
  bool small = std::all_of(syms_.begin(), syms_.end(),
                           [](Symbol s) { return s <= 9; });
  std::string out;
  if (small) {
    for (Symbol s : syms_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < syms_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(syms_[i]);
  }
  if (syms_.size() == 1) out.push_back(',');
  return out;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Symbol> syms = a.syms_;
  syms.insert(syms.end(), b.syms_.begin(), b.syms_.end());
  return Word(std::move(syms));
}

Evaluation::Evaluation(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("evaluation counts must be >= 0");
  }
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

Evaluation Evaluation::of(const Word& w) {
  std::vector<int> counts;
  for (Symbol s : w) {
    if (static_cast<std::size_t>(s) > counts.size()) counts.resize(s, 0);
    ++counts[s - 1];
  }
  return Evaluation(std::move(counts));
}

Evaluation Evaluation::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text.remove_prefix(1);
    text.remove_suffix(1);
  }
  if (text.empty()) return Evaluation{};
  std::vector<int> counts;
  for (std::string_view part : split(text, ',')) {
    counts.push_back(parse_int(part, "evaluation count"));
  }
  return Evaluation(std::move(counts));
}

std::string Evaluation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(counts_[i]);
  }
  out.push_back(')');
  return out;
}

int Evaluation::count(Symbol a) const {
  if (a < 1 || static_cast<std::size_t>(a) > counts_.size()) return 0;
  return counts_[a - 1];
}

std::uint64_t Evaluation::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::vector<Symbol> Evaluation::content() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > 0) out.push_back(static_cast<Symbol>(i + 1));
  }
  return out;
}

bool Evaluation::standard() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](int c) { return c == 1; });
}

bool Evaluation::contiguous() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](int c) { return c >= 1; });
}

std::vector<Symbol> Evaluation::multiset() const {
  std::vector<Symbol> out;
  out.reserve(total());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out.insert(out.end(), counts_[i], static_cast<Symbol>(i + 1));
  }
  return out;
}

std::string variant_name(Variant v) {
  return v == Variant::left ? "left" : "right";
}

Variant parse_variant(std::string_view name) {
  if (name == "left" || name == "l") return Variant::left;
  if (name == "right" || name == "r") return Variant::right;
  throw std::invalid_argument("unknown variant: '" + std::string(name) + "'");
}

Tableau::Tableau(Variant v, std::vector<Column> columns)
    : variant_(v), cols_(std::move(columns)) {
  for (const Column& col : cols_) {
    if (col.empty()) throw std::invalid_argument("tableau columns must be nonempty");
    require_positive(col);
  }
}

std::uint64_t Tableau::size() const {
  std::uint64_t n = 0;
  for (const Column& col : cols_) n += col.size();
  return n;
}

std::vector<Symbol> Tableau::bottom_row() const {
  std::vector<Symbol> row;
  row.reserve(cols_.size());
  for (const Column& col : cols_) row.push_back(col.front());
  return row;
}

bool Tableau::valid() const {
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    const Column& col = cols_[i];
    if (col.empty()) return false;
    for (std::size_t r = 1; r < col.size(); ++r) {
      if (variant_ == Variant::left ? col[r] <= col[r - 1]
                                    : col[r] < col[r - 1]) {
        return false;
      }
    }
    if (i > 0) {
      Symbol prev = cols_[i - 1].front();
      if (variant_ == Variant::left ? col.front() < prev
                                    : col.front() <= prev) {
        return false;
      }
    }
  }
  return true;
}

nlohmann::json Tableau::to_json() const {
  nlohmann::json j;
  j["variant"] = variant_name(variant_);
  j["columns"] = cols_;
  return j;
}

Tableau Tableau::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variant") || !j.contains("columns")) {
    throw std::invalid_argument(
        "tableau JSON must be {\"variant\": ..., \"columns\": [...]}");
  }
  Variant v = parse_variant(j.at("variant").get<std::string>());
  auto cols = j.at("columns").get<std::vector<Column>>();
  return Tableau(v, std::move(cols));
}

std::string Tableau::dump() const { return to_json().dump(); }

std::size_t TableauHash::operator()(const Tableau& t) const noexcept {
  std::size_t h = t.variant() == Variant::left ? 0x9e3779b97f4a7c15ull : 17;
  for (const auto& col : t.columns()) {
    h = h * 1099511628211ull + 0xfeu;
    for (Symbol s : col) h = h * 1099511628211ull + static_cast<std::size_t>(s);
  }
  return h;
}

Evaluation evaluation_of(const Word& w) { return Evaluation::of(w); }

Evaluation evaluation_of(const Tableau& t) {
  std::vector<int> counts;
  for (const auto& col : t.columns()) {
    for (Symbol s : col) {
      if (static_cast<std::size_t>(s) > counts.size()) counts.resize(s, 0);
      ++counts[s - 1];
    }
  }
  return Evaluation(std::move(counts));
}

bool is_standard(const Word& w) {
  return !w.empty() && Evaluation::of(w).standard();
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  const auto& s = w.symbols();
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Symbol> rot(s.begin() + i, s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + i);
    out.emplace_back(std::move(rot));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool validate_tableau(const Tableau& t) { return t.valid(); }

std::uint64_t multinomial(const Evaluation& e) {
  constexpr std::uint64_t kCap = std::uint64_t{1} << 63;
  unsigned __int128 result = 1;
  std::uint64_t placed = 0;
  for (int c : e.counts()) {
    for (int i = 1; i <= c; ++i) {
      ++placed;
      result = result * placed / i;  // exact: result accumulates binomials
      if (result > kCap) return kCap;
    }
  }
  return static_cast<std::uint64_t>(result);
}

void check_guard(const Evaluation& e, std::uint64_t guard) {
  if (multinomial(e) > guard) {
    throw guard_exceeded("class too large: evaluation " + e.str() + " has " +
                         std::to_string(multinomial(e)) +
                         " words, guard is " + std::to_string(guard));
  }
}

}  // namespace psmonoid
