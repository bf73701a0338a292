// Fact-file syntax: ground atoms over integers, with intervals and one level
// of wrapping (legacyConfig(...), reuse(...), delete(...), create(...)).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reconf::facts {

struct Atom;

/// An argument: either an integer constant or a nested atom.
struct Term {
  std::int64_t value = 0;
  std::vector<Atom> nested;  // empty for integers, exactly one element otherwise

  bool is_atom() const { return !nested.empty(); }
  const Atom& atom() const { return nested.front(); }

  static Term integer(std::int64_t v) { return Term{v, {}}; }
  static Term wrap(Atom a);

  friend bool operator==(const Term&, const Term&);
  friend bool operator<(const Term&, const Term&);
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend bool operator<(const Atom& l, const Atom& r);
};

inline Term Term::wrap(Atom a) {
  Term t;
  t.nested.push_back(std::move(a));
  return t;
}

struct FactFile {
  std::vector<Atom> facts;
  std::vector<std::string> warnings;

  bool operator==(const FactFile& other) const { return facts == other.facts; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Declared arity of a known predicate, or -1 when the predicate is unknown.
int known_arity(std::string_view predicate);

/// True for predicates whose single argument is itself an atom.
bool is_wrapper(std::string_view predicate);

FactFile parse(std::string_view text);
std::string serialize(const FactFile& file);
std::string to_string(const Atom& atom);

Atom make_atom(std::string predicate, std::initializer_list<std::int64_t> args);
Atom make_wrapped(std::string wrapper, Atom inner);

}  // namespace reconf::facts
