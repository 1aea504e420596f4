#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "group.hpp"
#include "idl.hpp"
#include "nucleus.hpp"
#include "words.hpp"

namespace nucpre {

// Unparsable text: bad directives, literals, missing tables.
struct ParseError : StructuralError {
  using StructuralError::StructuralError;
};

struct AlgebraFile {
  FinitePomonoid algebra;
  std::vector<Nucleus> nuclei;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  }
}

}  // namespace detail

inline AlgebraFile parse_algebra(const std::string& text) {
  AlgebraFile file;
  FinitePomonoid& A = file.algebra;
  std::string kind;
  std::vector<char> seen_mult, seen_join;
  Nucleus* cur = nullptr;
  std::istringstream in(text);
  int lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  auto id = [&](const std::string& s) {
    const int v = detail::to_int(s, lineno);
    if (A.n == 0) fail("'elements' must come first");
    if (v < 0 || v >= A.n) fail("id " + s + " out of range");
    return v;
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto t = detail::tokens(line);
    if (t.empty()) continue;
    const std::string& d = t[0];
    auto arity = [&](std::size_t k) {
      if (t.size() != k + 1) fail("'" + d + "' takes " + std::to_string(k) + " arguments");
    };
    if (d == "pomonoid" || d == "slmonoid" || d == "posemigroup") {
      if (!kind.empty()) fail("second header");
      arity(1);
      kind = d;
      A.name = t[1];
    } else if (kind.empty()) {
      fail("missing header");
    } else if (d == "elements") {
      arity(1);
      if (A.n) fail("second 'elements'");
      A.n = detail::to_int(t[1], lineno);
      if (A.n <= 0 || A.n > 64) fail("element count out of range");
      A.order.assign(A.n * A.n, 0);
      for (int a = 0; a < A.n; ++a) A.order[a * A.n + a] = 1;
      A.product.assign(A.n * A.n, 0);
      seen_mult.assign(A.n * A.n, 0);
    } else if (d == "unit") {
      arity(1);
      if (kind == "posemigroup") fail("posemigroups have no unit");
      A.unit = id(t[1]);
    } else if (d == "le") {
      arity(2);
      A.order[id(t[1]) * A.n + id(t[2])] = 1;
    } else if (d == "mult") {
      arity(3);
      const int c = id(t[1]) * A.n + id(t[2]);
      if (seen_mult[c]) fail("duplicate mult entry");
      seen_mult[c] = 1;
      A.product[c] = id(t[3]);
    } else if (d == "join") {
      arity(3);
      if (kind != "slmonoid") fail("join lines belong to slmonoid files");
      if (A.joins.empty()) {
        A.joins.assign(A.n * A.n, 0);
        seen_join.assign(A.n * A.n, 0);
      }
      const int c = id(t[1]) * A.n + id(t[2]);
      if (seen_join[c]) fail("duplicate join entry");
      seen_join[c] = 1;
      A.joins[c] = id(t[3]);
    } else if (d == "nucleus") {
      arity(1);
      if (A.n == 0) fail("'elements' must come first");
      file.nuclei.push_back({t[1], std::vector<Elem>(A.n, -1)});
      cur = &file.nuclei.back();
    } else if (d == "map") {
      arity(2);
      if (!cur) fail("'map' outside a nucleus block");
      const int a = id(t[1]);
      if (cur->map[a] >= 0) fail("duplicate map entry");
      cur->map[a] = id(t[2]);
    } else {
      fail("unknown directive '" + d + "'");
    }
  }
  if (kind.empty()) throw ParseError("empty algebra file");
  if (A.n == 0) throw ParseError("missing 'elements'");
  if (kind != "posemigroup" && !A.unit) throw ParseError("missing 'unit'");
  for (char c : seen_mult)
    if (!c) throw ParseError("mult table incomplete");
  for (char c : seen_join)
    if (!c) throw ParseError("join table incomplete");
  if (kind == "slmonoid" && A.joins.empty()) {
    A.joins.assign(A.n * A.n, 0);
    for (int a = 0; a < A.n; ++a)
      for (int b = 0; b < A.n; ++b) {
        auto j = A.lub(a, b);
        if (!j) throw ParseError("slmonoid without join lines needs binary least upper bounds");
        A.joins[a * A.n + b] = *j;
      }
  }
  for (const Nucleus& g : file.nuclei)
    for (Elem v : g.map)
      if (v < 0) throw ParseError("nucleus " + g.name + " is not total");
  return file;
}

inline AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

inline std::string serialize(const FinitePomonoid& A) {
  std::ostringstream out;
  out << (A.has_join() ? "slmonoid " : A.unit ? "pomonoid " : "posemigroup ")
      << (A.name.empty() ? "unnamed" : A.name) << "\n";
  out << "elements " << A.n << "\n";
  if (A.unit) out << "unit " << *A.unit << "\n";
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b)
      if (a != b && A.le(a, b)) out << "le " << a << " " << b << "\n";
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < A.n; ++b) out << "mult " << a << " " << b << " " << A.mul(a, b) << "\n";
  if (A.has_join())
    for (Elem a = 0; a < A.n; ++a)
      for (Elem b = 0; b < A.n; ++b) out << "join " << a << " " << b << " " << A.join(a, b) << "\n";
  return out.str();
}

inline std::string serialize(const Nucleus& g) {
  std::ostringstream out;
  out << "nucleus " << g.name << "\n";
  for (Elem a = 0; a < static_cast<Elem>(g.map.size()); ++a) out << "map " << a << " " << g.map[a] << "\n";
  return out.str();
}

inline std::string serialize(const AlgebraFile& f) {
  std::string out = serialize(f.algebra);
  for (const Nucleus& g : f.nuclei) out += serialize(g);
  return out;
}

// ---- literals -----------------------------------------------------------------

namespace detail {

class LiteralReader {
 public:
  explicit LiteralReader(const std::string& s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an element id");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing input");
  }
  bool at_end() {
    skip();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("literal '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  Word word() {
    if (accept('e')) return Word{};
    expect('[');
    Word w;
    if (accept(']')) return w;
    do w.letters.push_back(number());
    while (accept(','));
    expect(']');
    return w;
  }

  SignedWord signed_word() {
    if (accept('e')) return SignedWord{};
    expect('[');
    SignedWord w;
    if (accept(']')) return w;
    do {
      const bool neg = accept('~');
      w.letters.push_back({number(), neg});
    } while (accept(','));
    expect(']');
    return w;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(const std::string& s) {
  detail::LiteralReader r(s);
  Word w = r.word();
  r.finish();
  return w;
}

inline SignedWord parse_signed_word(const std::string& s) {
  detail::LiteralReader r(s);
  SignedWord w = r.signed_word();
  r.finish();
  return w;
}

// `{[0],[1,2]}`
inline Antichain<Word> parse_word_antichain(const std::string& s) {
  detail::LiteralReader r(s);
  r.expect('{');
  Antichain<Word> a;
  do a.gens.push_back(r.word());
  while (r.accept(','));
  r.expect('}');
  r.finish();
  return a;
}

// `{0,2}`
inline Antichain<Elem> parse_elem_antichain(const std::string& s) {
  detail::LiteralReader r(s);
  r.expect('{');
  Antichain<Elem> a;
  do a.gens.push_back(r.number());
  while (r.accept(','));
  r.expect('}');
  r.finish();
  return a;
}

inline void check_letters(const FinitePomonoid& A, const Word& w) {
  for (Elem a : w.letters)
    if (a < 0 || a >= A.n) throw ParseError("letter " + std::to_string(a) + " out of range");
}

inline void check_letters(const FinitePomonoid& A, const SignedWord& w) {
  for (const Letter& l : w.letters)
    if (l.elem < 0 || l.elem >= A.n) throw ParseError("letter " + std::to_string(l.elem) + " out of range");
}

inline std::string to_literal(const Word& w) {
  if (w.empty()) return "e";
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

inline std::string to_literal(const SignedWord& w) {
  if (w.empty()) return "e";
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    if (w.letters[i].negative) out += "~";
    out += std::to_string(w.letters[i].elem);
  }
  return out + "]";
}

inline std::string to_literal(const Antichain<Word>& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    if (i) out += ",";
    out += to_literal(a.gens[i]);
  }
  return out + "}";
}

inline std::string to_literal(const Antichain<Elem>& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.gens[i]);
  }
  return out + "}";
}

inline std::string to_literal(const std::vector<Elem>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

// Side condition of a proof step in the word-literal syntax.
inline std::string side_condition_text(const ProofStep& s) {
  auto w = [](const Word& x) { return to_literal(x); };
  switch (s.rule) {
    case Rule::pos_mono: return w(s.u) + " <= " + w(s.v);
    case Rule::neg_mono: return w(s.v) + " <= " + w(s.u);
    case Rule::contraction: return w(s.v) + " <= " + w(cat(s.u, s.x, s.w));
    case Rule::expansion: return w(cat(s.u, s.x, s.w)) + " <= " + w(s.v);
    case Rule::perm_left: return w(cat(s.x, s.u)) + " <= " + w(cat(s.y, s.v));
    case Rule::perm_right: return w(cat(s.v, s.y)) + " <= " + w(cat(s.u, s.x));
  }
  return "";
}

inline std::string to_text(const Proof& p) {
  std::ostringstream out;
  out << to_literal(p.start) << "\n";
  SignedWord cur = p.start;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    cur = apply_step(cur, p.steps[i]);
    out << (i + 1) << ". " << to_string(p.steps[i].rule) << " at " << p.steps[i].at << "  ["
        << side_condition_text(p.steps[i]) << "]  " << to_literal(cur) << "\n";
  }
  return out.str();
}

}  // namespace nucpre
