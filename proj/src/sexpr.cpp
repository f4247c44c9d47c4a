#include "ukern/sexpr.hpp"

#include <cctype>

#include "ukern/error.hpp"

namespace ukern {

namespace {

struct Reader {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void error(const std::string& msg, std::size_t at) {
    fail(errc::parse, msg + " at offset " + std::to_string(at));
  }

  SExpr read() {
    skip_space();
    if (pos >= text.size()) error("unexpected end of input", pos);
    SExpr out;
    out.pos = pos;
    if (text[pos] == '(') {
      ++pos;
      out.is_atom = false;
      for (;;) {
        skip_space();
        if (pos >= text.size()) error("unterminated list", out.pos);
        if (text[pos] == ')') {
          ++pos;
          return out;
        }
        out.items.push_back(read());
      }
    }
    if (text[pos] == ')') error("unexpected ')'", pos);
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    out.atom = std::string(text.substr(start, pos - start));
    return out;
  }
};

std::uint64_t nat_atom(const SExpr& s, const char* what) {
  if (!s.is_atom || s.atom.empty())
    fail(errc::parse, std::string("expected ") + what + " at offset " + std::to_string(s.pos));
  std::uint64_t n = 0;
  for (char c : s.atom) {
    if (c < '0' || c > '9')
      fail(errc::parse, std::string("expected ") + what + " at offset " + std::to_string(s.pos));
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return n;
}

[[noreturn]] void arity_error(const SExpr& s, const std::string& head) {
  fail(errc::parse, "wrong arity for " + head + " at offset " + std::to_string(s.pos));
}

const std::string& head_of(const SExpr& s) {
  if (s.items.empty() || !s.items[0].is_atom)
    fail(errc::parse, "expected a form at offset " + std::to_string(s.pos));
  return s.items[0].atom;
}

Family family_from_sexpr(const SExpr& s);
RelFamily rel_from_sexpr(const SExpr& s);

}  // namespace

SExpr read_sexpr(std::string_view text) {
  Reader r{text};
  SExpr out = r.read();
  r.skip_space();
  if (r.pos != text.size()) r.error("trailing input", r.pos);
  return out;
}

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader r{text};
  std::vector<SExpr> out;
  for (;;) {
    r.skip_space();
    if (r.pos >= text.size()) return out;
    out.push_back(r.read());
  }
}

Value value_from_sexpr(const SExpr& s) {
  if (s.is_atom) {
    if (s.atom == "star") return Value::star();
    if (s.atom == "refl") return Value::refl();
    fail(errc::parse, "unknown value '" + s.atom + "' at offset " + std::to_string(s.pos));
  }
  const std::string& head = head_of(s);
  if (head == "fin") {
    if (s.items.size() != 2) arity_error(s, head);
    return Value::fin(nat_atom(s.items[1], "a numeral"));
  }
  if (head == "nat") {
    if (s.items.size() != 2) arity_error(s, head);
    return Value::nat(nat_atom(s.items[1], "a numeral"));
  }
  if (head == "pair") {
    if (s.items.size() != 3) arity_error(s, head);
    return Value::pair(value_from_sexpr(s.items[1]), value_from_sexpr(s.items[2]));
  }
  if (head == "fun") {
    std::vector<std::pair<Value, Value>> entries;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
      const SExpr& e = s.items[i];
      if (e.is_atom || e.items.size() != 2)
        fail(errc::parse, "fun entry must be (key value) at offset " + std::to_string(e.pos));
      entries.emplace_back(value_from_sexpr(e.items[0]), value_from_sexpr(e.items[1]));
    }
    return Value::fun(std::move(entries));
  }
  if (head == "class") {
    if (s.items.size() != 2) arity_error(s, head);
    return Value::cls(value_from_sexpr(s.items[1]));
  }
  fail(errc::parse, "unknown value form '" + head + "' at offset " + std::to_string(s.pos));
}

namespace {

Family family_from_sexpr(const SExpr& s) {
  if (s.is_atom) fail(errc::parse, "expected a family at offset " + std::to_string(s.pos));
  const std::string& head = head_of(s);
  if (head == "const") {
    if (s.items.size() != 2) arity_error(s, head);
    return Family::constant(code_from_sexpr(s.items[1]));
  }
  if (head == "table") {
    std::vector<std::pair<Value, Code>> entries;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
      const SExpr& e = s.items[i];
      if (e.is_atom || e.items.size() != 2)
        fail(errc::parse, "table entry must be (value code) at offset " + std::to_string(e.pos));
      entries.emplace_back(value_from_sexpr(e.items[0]), code_from_sexpr(e.items[1]));
    }
    return Family::table(std::move(entries));
  }
  fail(errc::parse, "unknown family form '" + head + "' at offset " + std::to_string(s.pos));
}

RelFamily rel_from_sexpr(const SExpr& s) {
  if (s.is_atom || s.items.empty() || !s.items[0].is_atom || s.items[0].atom != "rel")
    fail(errc::parse, "expected (rel ...) at offset " + std::to_string(s.pos));
  std::vector<std::pair<Value, Value>> pairs;
  for (std::size_t i = 1; i < s.items.size(); ++i) {
    const SExpr& e = s.items[i];
    if (e.is_atom || e.items.size() != 2)
      fail(errc::parse, "rel entry must be (value value) at offset " + std::to_string(e.pos));
    pairs.emplace_back(value_from_sexpr(e.items[0]), value_from_sexpr(e.items[1]));
  }
  return RelFamily(std::move(pairs));
}

}  // namespace

Code code_from_sexpr(const SExpr& s) {
  if (s.is_atom) {
    if (s.atom == "*") return Code::star();
    if (s.atom == "Nat") return Code::nat();
    if (s.atom == "0") return Code::zero();
    fail(errc::parse, "unknown code '" + s.atom + "' at offset " + std::to_string(s.pos));
  }
  const std::string& head = head_of(s);
  if (head == "Fin") {
    if (s.items.size() != 2) arity_error(s, head);
    return Code::fin(nat_atom(s.items[1], "a numeral"));
  }
  if (head == "Pi" || head == "Sigma") {
    if (s.items.size() != 3) arity_error(s, head);
    Code domain = code_from_sexpr(s.items[1]);
    Family fam = family_from_sexpr(s.items[2]);
    return head == "Pi" ? Code::pi(domain, fam) : Code::sigma(domain, fam);
  }
  if (head == "Id") {
    if (s.items.size() != 4) arity_error(s, head);
    Code carrier = code_from_sexpr(s.items[1]);
    return Code::id(carrier, value_from_sexpr(s.items[2]), value_from_sexpr(s.items[3]));
  }
  if (head == "Quot") {
    if (s.items.size() != 3) arity_error(s, head);
    Code carrier = code_from_sexpr(s.items[1]);
    return Code::quot(carrier, rel_from_sexpr(s.items[2]));
  }
  fail(errc::parse, "unknown code form '" + head + "' at offset " + std::to_string(s.pos));
}

Code parse_code(std::string_view text) { return code_from_sexpr(read_sexpr(text)); }

Value parse_value(std::string_view text) { return value_from_sexpr(read_sexpr(text)); }

std::string print(const Value& v) {
  switch (v.tag()) {
    case Value::Tag::star:
      return "star";
    case Value::Tag::nat:
      return "(nat " + std::to_string(v.num()) + ")";
    case Value::Tag::fin:
      return "(fin " + std::to_string(v.num()) + ")";
    case Value::Tag::pair:
      return "(pair " + print(v.first()) + " " + print(v.second()) + ")";
    case Value::Tag::fun: {
      std::string out = "(fun";
      for (const auto& [k, val] : v.entries()) out += " (" + print(k) + " " + print(val) + ")";
      return out + ")";
    }
    case Value::Tag::refl:
      return "refl";
    case Value::Tag::cls:
      return "(class " + print(v.rep()) + ")";
  }
  return "";
}

std::string print(const Code& c) {
  switch (c.tag()) {
    case Code::Tag::star:
      return "*";
    case Code::Tag::nat:
      return "Nat";
    case Code::Tag::fin:
      return "(Fin " + std::to_string(c.fin_size()) + ")";
    case Code::Tag::zero:
      return "0";
    case Code::Tag::pi:
    case Code::Tag::sigma: {
      std::string out = c.tag() == Code::Tag::pi ? "(Pi " : "(Sigma ";
      out += print(c.child());
      const Family& fam = c.family();
      if (fam.is_constant()) {
        out += " (const " + print(fam.body()) + ")";
      } else {
        out += " (table";
        for (const auto& [k, fc] : fam.entries()) out += " (" + print(k) + " " + print(fc) + ")";
        out += ")";
      }
      return out + ")";
    }
    case Code::Tag::id:
      return "(Id " + print(c.child()) + " " + print(c.lhs()) + " " + print(c.rhs()) + ")";
    case Code::Tag::quot: {
      std::string out = "(Quot " + print(c.child()) + " (rel";
      for (const auto& [a, b] : c.rel().pairs()) out += " (" + print(a) + " " + print(b) + ")";
      return out + "))";
    }
  }
  return "";
}

}  // namespace ukern
