#include "reconf/facts.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace reconf::facts {

namespace {

// Every predicate the engine reads or writes. All predicates have a unique arity.
const std::map<std::string, int, std::less<>>& vocabulary() {
  static const std::map<std::string, int, std::less<>> table = {
      // customer requirements and solution schema
      {"person", 1}, {"thing", 1}, {"personTOthing", 2},
      {"thingLong", 1}, {"thingShort", 1},
      {"cabinet", 1}, {"room", 1}, {"cabinetHigh", 1}, {"cabinetSmall", 1},
      {"cabinetTOthing", 2}, {"roomTOcabinet", 2}, {"personTOroom", 2},
      // bounded-type overrides
      {"cabinetDomain", 1}, {"roomDomain", 1},
      {"cabinetDomainNew", 1}, {"roomDomainNew", 1},
      {"cabinetLower", 1}, {"cabinetUpper", 1},
      {"roomLower", 1}, {"roomUpper", 1},
      // wrappers
      {"legacyConfig", 1}, {"reuse", 1}, {"delete", 1}, {"create", 1},
      // cost declarations
      {"cabinetCost", 1}, {"cabinetSmallCost", 1}, {"cabinetHighCost", 1},
      {"roomCost", 1}, {"cabinetTOthingCost", 1}, {"roomTOcabinetCost", 1},
      {"personTOroomCost", 1},
      {"reuseCabinetAsSmallCost", 1}, {"reuseCabinetAsHighCost", 1},
      {"reuseRoomCost", 1}, {"reuseCabinetTOthingCost", 1},
      {"reuseRoomTOcabinetCost", 1}, {"reusePersonTOroomCost", 1},
      {"deleteCabinetCost", 1}, {"deleteRoomCost", 1},
      {"deleteCabinetTOthingCost", 1}, {"deleteRoomTOcabinetCost", 1},
      {"deletePersonTOroomCost", 1}, {"deletePersonCost", 1},
      {"deleteThingCost", 1}, {"deletePersonTOthingCost", 1},
      {"deleteDefaultCost", 1},
  };
  return table;
}

struct RawAtom;

struct RawTerm {
  enum class Kind { Integer, Interval, Atom } kind = Kind::Integer;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<RawAtom> atom;  // one element when kind == Atom
};

struct RawAtom {
  std::string predicate;
  std::vector<RawTerm> args;
  int line = 1;
  int column = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawAtom> parse_file() {
    std::vector<RawAtom> out;
    skip_space();
    while (!at_end()) {
      RawAtom a = parse_atom(0);
      skip_space();
      expect('.');
      out.push_back(std::move(a));
      skip_space();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

  void expect(char c) {
    if (peek() != c) {
      std::string got = at_end() ? "end of input" : std::string("'") + peek() + "'";
      fail(std::string("expected '") + c + "' but found " + got);
    }
    advance();
  }

  std::string parse_identifier() {
    std::string id;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      id.push_back(peek());
      advance();
    }
    return id;
  }

  std::int64_t parse_integer() {
    std::string digits;
    if (peek() == '-') {
      digits.push_back('-');
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      fail("integer out of range: " + digits);
    }
  }

  RawAtom parse_atom(int depth) {
    RawAtom a;
    a.line = line_;
    a.column = column_;
    char c = peek();
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      fail("non-ground term: variables are not allowed in facts");
    }
    if (!std::islower(static_cast<unsigned char>(c))) {
      fail(at_end() ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }
    a.predicate = parse_identifier();
    skip_space();
    if (peek() == '(') {
      advance();
      skip_space();
      a.args.push_back(parse_term(depth));
      skip_space();
      while (peek() == ',') {
        advance();
        skip_space();
        a.args.push_back(parse_term(depth));
        skip_space();
      }
      expect(')');
    }
    return a;
  }

  RawTerm parse_term(int depth) {
    RawTerm t;
    char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      t.lo = parse_integer();
      t.hi = t.lo;
      skip_space();
      if (peek() == '.' && peek(1) == '.') {
        advance();
        advance();
        skip_space();
        t.hi = parse_integer();
        t.kind = RawTerm::Kind::Interval;
        if (t.hi < t.lo) fail("empty interval " + std::to_string(t.lo) + ".." + std::to_string(t.hi));
      }
      return t;
    }
    if (depth >= 1) fail("atoms may be nested at most one level deep");
    t.kind = RawTerm::Kind::Atom;
    t.atom.push_back(parse_atom(depth + 1));
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

void check_schema(const RawAtom& a, bool nested) {
  auto it = vocabulary().find(a.predicate);
  if (it == vocabulary().end()) {
    throw ParseError("unknown predicate '" + a.predicate + "'", a.line, a.column);
  }
  if (static_cast<int>(a.args.size()) != it->second) {
    throw ParseError("arity mismatch: '" + a.predicate + "' takes " + std::to_string(it->second) +
                         " argument(s), got " + std::to_string(a.args.size()),
                     a.line, a.column);
  }
  const bool wrapper = is_wrapper(a.predicate);
  if (wrapper && nested) {
    throw ParseError("'" + a.predicate + "' cannot be nested", a.line, a.column);
  }
  for (const RawTerm& t : a.args) {
    const bool atom_arg = t.kind == RawTerm::Kind::Atom;
    if (wrapper && !atom_arg) {
      throw ParseError("'" + a.predicate + "' expects an atom argument", a.line, a.column);
    }
    if (!wrapper && atom_arg) {
      throw ParseError("'" + a.predicate + "' expects integer arguments", a.line, a.column);
    }
    if (atom_arg) check_schema(t.atom.front(), true);
  }
}

std::vector<Term> expand_term(const RawTerm& t);

std::vector<Atom> expand_atom(const RawAtom& a) {
  std::vector<Atom> out{Atom{a.predicate, {}}};
  for (const RawTerm& rt : a.args) {
    std::vector<Term> choices = expand_term(rt);
    std::vector<Atom> next;
    next.reserve(out.size() * choices.size());
    for (const Atom& prefix : out) {
      for (const Term& choice : choices) {
        Atom extended = prefix;
        extended.args.push_back(choice);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Term> expand_term(const RawTerm& t) {
  std::vector<Term> out;
  switch (t.kind) {
    case RawTerm::Kind::Integer:
      out.push_back(Term::integer(t.lo));
      break;
    case RawTerm::Kind::Interval:
      for (std::int64_t v = t.lo; v <= t.hi; ++v) out.push_back(Term::integer(v));
      break;
    case RawTerm::Kind::Atom:
      for (Atom& inner : expand_atom(t.atom.front())) out.push_back(Term::wrap(std::move(inner)));
      break;
  }
  return out;
}

void write_atom(std::ostream& os, const Atom& a) {
  os << a.predicate;
  if (a.args.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ',';
    if (a.args[i].is_atom()) {
      write_atom(os, a.args[i].atom());
    } else {
      os << a.args[i].value;
    }
  }
  os << ')';
}

}  // namespace

bool operator==(const Term& l, const Term& r) {
  return l.value == r.value && l.nested == r.nested;
}

bool operator<(const Term& l, const Term& r) {
  if (l.is_atom() != r.is_atom()) return !l.is_atom();
  if (!l.is_atom()) return l.value < r.value;
  return l.atom() < r.atom();
}

bool operator<(const Atom& l, const Atom& r) {
  if (l.predicate != r.predicate) return l.predicate < r.predicate;
  return std::lexicographical_compare(l.args.begin(), l.args.end(), r.args.begin(), r.args.end());
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

int known_arity(std::string_view predicate) {
  auto it = vocabulary().find(predicate);
  return it == vocabulary().end() ? -1 : it->second;
}

bool is_wrapper(std::string_view predicate) {
  return predicate == "legacyConfig" || predicate == "reuse" || predicate == "delete" ||
         predicate == "create";
}

FactFile parse(std::string_view text) {
  Parser parser(text);
  std::vector<RawAtom> raw = parser.parse_file();

  FactFile file;
  std::set<Atom> seen;
  for (const RawAtom& ra : raw) {
    check_schema(ra, false);
    for (Atom& a : expand_atom(ra)) {
      if (!seen.insert(a).second) {
        file.warnings.push_back("duplicate fact " + to_string(a) + " collapsed (line " +
                                std::to_string(ra.line) + ")");
        continue;
      }
      file.facts.push_back(std::move(a));
    }
  }
  return file;
}

std::string to_string(const Atom& atom) {
  std::ostringstream os;
  write_atom(os, atom);
  return os.str();
}

std::string serialize(const FactFile& file) {
  std::ostringstream os;
  for (const Atom& a : file.facts) {
    write_atom(os, a);
    os << ".\n";
  }
  return os.str();
}

Atom make_atom(std::string predicate, std::initializer_list<std::int64_t> args) {
  Atom a{std::move(predicate), {}};
  for (std::int64_t v : args) a.args.push_back(Term::integer(v));
  return a;
}

Atom make_wrapped(std::string wrapper, Atom inner) {
  Atom a{std::move(wrapper), {}};
  a.args.push_back(Term::wrap(std::move(inner)));
  return a;
}

}  // namespace reconf::facts
