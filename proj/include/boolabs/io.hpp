// io.hpp -- text formats: the theory specification grammar (formula mode and
// literal-list mode), the Boolean specification document, and the run
// statistics record.

#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <boolabs/literals.hpp>
#include <boolabs/ltl.hpp>

namespace boolabs {

// ---------------------------------------------------------------------------
// Boolean specification documents.
// ---------------------------------------------------------------------------

struct BooleanSpecDocument {
  std::vector<std::string> inputs;   // decision propositions (environment)
  std::vector<std::string> outputs;  // literal propositions s<i> (system)
  // (proposition, literal text) pairs documenting what each s<i> replaced
  std::vector<std::pair<std::string, std::string>> literal_map;
  FormulaPtr formula;
};

// ---------------------------------------------------------------------------
// Tokenizer for formulas, terms and header lines.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  enum class Kind { Ident, Number, Op, String, End };
  Kind kind = Kind::End;
  std::string text;
  Rat number;
  int line = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text, int start_line = 1) {
    int line = start_line;
    size_t i = 0;
    auto push_op = [&](const char* op) {
      tokens_.push_back({Token::Kind::Op, op, Rat(0), line});
      i += std::char_traits<char>::length(op);
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == '\n') {
        ++line;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') {  // comment to end of line
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
          ++j;
        tokens_.push_back({Token::Kind::Ident, text.substr(i, j - i), Rat(0), line});
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        Rat value;
        try {
          long long ip = std::stoll(text.substr(i, j - i));
          value = Rat(ip);
          if (j + 1 < text.size() && text[j] == '.' &&
              std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
            size_t k = ++j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            std::string frac = text.substr(k, j - k);
            long long den = 1;
            for (size_t d = 0; d < frac.size(); ++d) den *= 10;
            value = Rat(ip) + Rat(std::stoll(frac), den);
          }
        } catch (const std::exception&) {
          throw ParseError("numeric constant out of range at line " + std::to_string(line));
        }
        tokens_.push_back({Token::Kind::Number, text.substr(i, j - i), value, line});
        i = j;
        continue;
      }
      if (c == '"') {
        size_t j = i + 1;
        while (j < text.size() && text[j] != '"') ++j;
        if (j >= text.size()) throw ParseError("unterminated string at line " + std::to_string(line));
        tokens_.push_back({Token::Kind::String, text.substr(i + 1, j - i - 1), Rat(0), line});
        i = j + 1;
        continue;
      }
      if (text.compare(i, 3, "<->") == 0) { push_op("<->"); continue; }
      if (text.compare(i, 2, "->") == 0) { push_op("->"); continue; }
      if (text.compare(i, 2, "<=") == 0) { push_op("<="); continue; }
      if (text.compare(i, 2, ">=") == 0) { push_op(">="); continue; }
      if (text.compare(i, 2, "!=") == 0) { push_op("!="); continue; }
      static const char singles[] = "()<>=!&|+-*/^:,.";
      if (std::char_traits<char>::find(singles, sizeof(singles) - 1, c)) {
        char buf[2] = {c, 0};
        push_op(buf);
        continue;
      }
      throw ParseError("unexpected character '" + std::string(1, c) + "' at line " +
                       std::to_string(line));
    }
    tokens_.push_back({Token::Kind::End, "", Rat(0), line});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  size_t mark() const { return pos_; }
  void rewind(size_t m) { pos_ = m; }

  bool accept_op(const char* op) {
    if (peek().kind == Token::Kind::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_op(const char* op) {
    if (!accept_op(op))
      throw ParseError("expected '" + std::string(op) + "' at line " +
                       std::to_string(peek().line) + ", got '" + peek().text + "'");
  }

  bool at_end() const { return peek().kind == Token::Kind::End; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

inline bool is_reserved_word(const std::string& s) {
  static const char* words[] = {"true", "false", "X", "G", "F", "U", "R",
                                "theory", "env", "sys", "spec", "lit", "Int", "Real"};
  for (const char* w : words)
    if (s == w) return true;
  return false;
}

// --- terms -----------------------------------------------------------------

inline TermPtr parse_term(Lexer& lx);

inline TermPtr parse_term_atom(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind == Token::Kind::Number) {
    lx.next();
    return mk_const(t.number);
  }
  if (t.kind == Token::Kind::Ident) {
    if (is_reserved_word(t.text))
      throw ParseError("unexpected keyword '" + t.text + "' in term at line " +
                       std::to_string(t.line));
    lx.next();
    return mk_var(t.text);
  }
  if (lx.accept_op("(")) {
    TermPtr inner = parse_term(lx);
    lx.expect_op(")");
    return inner;
  }
  throw ParseError("expected term at line " + std::to_string(t.line) + ", got '" + t.text + "'");
}

inline TermPtr parse_term_unary(Lexer& lx) {
  if (lx.accept_op("-")) return mk_neg(parse_term_unary(lx));
  TermPtr base = parse_term_atom(lx);
  if (lx.accept_op("^")) {
    const Token& e = lx.peek();
    if (e.kind != Token::Kind::Number || e.number.denominator() != 1 || e.number.numerator() < 0)
      throw ParseError("exponent must be a nonnegative integer at line " +
                       std::to_string(e.line));
    lx.next();
    long long k = e.number.numerator();
    if (k == 0) return mk_const(Rat(1));
    TermPtr acc = base;
    for (long long i = 1; i < k; ++i) acc = mk_binary(Term::Kind::Mul, acc, base);
    return acc;
  }
  return base;
}

inline TermPtr parse_term_mul(Lexer& lx) {
  TermPtr acc = parse_term_unary(lx);
  for (;;) {
    if (lx.accept_op("*"))
      acc = mk_binary(Term::Kind::Mul, acc, parse_term_unary(lx));
    else if (lx.accept_op("/"))
      acc = mk_binary(Term::Kind::Div, acc, parse_term_unary(lx));
    else
      return acc;
  }
}

inline TermPtr parse_term(Lexer& lx) {
  TermPtr acc = parse_term_mul(lx);
  for (;;) {
    if (lx.accept_op("+"))
      acc = mk_binary(Term::Kind::Add, acc, parse_term_mul(lx));
    else if (lx.accept_op("-"))
      acc = mk_binary(Term::Kind::Sub, acc, parse_term_mul(lx));
    else
      return acc;
  }
}

inline std::optional<Relop> peek_relop(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::Op) return std::nullopt;
  if (t.text == "<") return Relop::Lt;
  if (t.text == "<=") return Relop::Le;
  if (t.text == ">") return Relop::Gt;
  if (t.text == ">=") return Relop::Ge;
  if (t.text == "=") return Relop::Eq;
  if (t.text == "!=") return Relop::Ne;
  return std::nullopt;
}

inline Comparison parse_comparison(Lexer& lx) {
  Comparison c;
  c.lhs = parse_term(lx);
  auto op = peek_relop(lx);
  if (!op)
    throw ParseError("expected comparison operator at line " + std::to_string(lx.peek().line) +
                     ", got '" + lx.peek().text + "'");
  lx.next();
  c.op = *op;
  c.rhs = parse_term(lx);
  return c;
}

// --- formulas ---------------------------------------------------------------

inline FormulaPtr parse_formula_iff(Lexer& lx, bool boolean_mode);

// A primary is `true`/`false`, a parenthesized formula, a proposition
// (Boolean mode), or a comparison (theory mode).  '(' is ambiguous between
// subformula and parenthesized term, so a comparison parse is attempted
// first and rolled back if no relop follows.
inline FormulaPtr parse_formula_primary(Lexer& lx, bool boolean_mode) {
  const Token& t = lx.peek();
  if (t.kind == Token::Kind::Ident && t.text == "true") {
    lx.next();
    return mk_bool(true);
  }
  if (t.kind == Token::Kind::Ident && t.text == "false") {
    lx.next();
    return mk_bool(false);
  }
  if (!boolean_mode) {
    size_t m = lx.mark();
    try {
      Comparison c = parse_comparison(lx);
      Atom a;
      a.conjuncts.push_back(std::move(c));
      return mk_atom(std::move(a));
    } catch (const ParseError&) {
      lx.rewind(m);
    }
    if (lx.accept_op("(")) {
      FormulaPtr inner = parse_formula_iff(lx, boolean_mode);
      lx.expect_op(")");
      return inner;
    }
    throw ParseError("expected atom or subformula at line " + std::to_string(t.line) +
                     ", got '" + t.text + "'");
  }
  if (t.kind == Token::Kind::Ident) {
    if (is_reserved_word(t.text))
      throw ParseError("unexpected keyword '" + t.text + "' at line " + std::to_string(t.line));
    lx.next();
    return mk_prop(t.text);
  }
  if (lx.accept_op("(")) {
    FormulaPtr inner = parse_formula_iff(lx, boolean_mode);
    lx.expect_op(")");
    return inner;
  }
  throw ParseError("expected proposition or subformula at line " + std::to_string(t.line) +
                   ", got '" + t.text + "'");
}

inline FormulaPtr parse_formula_unary(Lexer& lx, bool boolean_mode) {
  const Token& t = lx.peek();
  if (t.kind == Token::Kind::Op && t.text == "!") {
    lx.next();
    return mk_not(parse_formula_unary(lx, boolean_mode));
  }
  if (t.kind == Token::Kind::Ident && t.text.size() == 1) {
    Formula::Kind k;
    switch (t.text[0]) {
      case 'X': k = Formula::Kind::Next; break;
      case 'G': k = Formula::Kind::Always; break;
      case 'F': k = Formula::Kind::Eventually; break;
      default: return parse_formula_primary(lx, boolean_mode);
    }
    lx.next();
    return mk_unary(k, parse_formula_unary(lx, boolean_mode));
  }
  return parse_formula_primary(lx, boolean_mode);
}

inline FormulaPtr parse_formula_ur(Lexer& lx, bool boolean_mode) {
  FormulaPtr lhs = parse_formula_unary(lx, boolean_mode);
  const Token& t = lx.peek();
  if (t.kind == Token::Kind::Ident && (t.text == "U" || t.text == "R")) {
    Formula::Kind k = t.text == "U" ? Formula::Kind::Until : Formula::Kind::Release;
    lx.next();
    return mk_binary(k, lhs, parse_formula_ur(lx, boolean_mode));
  }
  return lhs;
}

inline FormulaPtr parse_formula_and(Lexer& lx, bool boolean_mode) {
  FormulaPtr acc = parse_formula_ur(lx, boolean_mode);
  while (lx.accept_op("&")) acc = mk_and(acc, parse_formula_ur(lx, boolean_mode));
  return acc;
}

inline FormulaPtr parse_formula_or(Lexer& lx, bool boolean_mode) {
  FormulaPtr acc = parse_formula_and(lx, boolean_mode);
  while (lx.accept_op("|")) acc = mk_or(acc, parse_formula_and(lx, boolean_mode));
  return acc;
}

inline FormulaPtr parse_formula_imp(Lexer& lx, bool boolean_mode) {
  FormulaPtr lhs = parse_formula_or(lx, boolean_mode);
  if (lx.accept_op("->")) return mk_imp(lhs, parse_formula_imp(lx, boolean_mode));
  return lhs;
}

inline FormulaPtr parse_formula_iff(Lexer& lx, bool boolean_mode) {
  FormulaPtr lhs = parse_formula_imp(lx, boolean_mode);
  if (lx.accept_op("<->"))
    return mk_binary(Formula::Kind::Iff, lhs, parse_formula_iff(lx, boolean_mode));
  return lhs;
}

inline FormulaPtr parse_formula_text(const std::string& text, bool boolean_mode, int line) {
  Lexer lx(text, line);
  FormulaPtr f = parse_formula_iff(lx, boolean_mode);
  if (!lx.at_end())
    throw ParseError("trailing input after formula at line " + std::to_string(lx.peek().line) +
                     ": '" + lx.peek().text + "'");
  return f;
}

// A literal-list entry: one or more comparisons joined by '&', each
// optionally parenthesized.
inline Atom parse_atom_conj(const std::string& text, int line) {
  Lexer lx(text, line);
  Atom a;
  for (;;) {
    size_t m = lx.mark();
    if (lx.accept_op("(")) {
      try {
        Comparison c = parse_comparison(lx);
        lx.expect_op(")");
        a.conjuncts.push_back(std::move(c));
      } catch (const ParseError&) {
        lx.rewind(m);
        a.conjuncts.push_back(parse_comparison(lx));
      }
    } else {
      a.conjuncts.push_back(parse_comparison(lx));
    }
    if (lx.at_end()) return a;
    lx.expect_op("&");
  }
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

inline std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

inline bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::string first_word(const std::string& line) {
  size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  size_t j = i;
  while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
         line[j] != ':')
    ++j;
  return line.substr(i, j - i);
}

inline std::string ident_token(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::Ident)
    throw ParseError("expected identifier at line " + std::to_string(t.line) + ", got '" +
                     t.text + "'");
  lx.next();
  return t.text;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theory specification files.
//
//   theory LIA|LRA|NRA
//   env x:Int, n:Int
//   sys y:Int
//   spec: G(((x < 2) -> X (y > 1)) & ((x >= 2) -> (y < x)))
//
// or, in literal-list mode, `lit <n> : <comparisons>` lines instead of the
// `spec:` line; the implied formula is G of (l | !l) over all entries.
// ---------------------------------------------------------------------------

inline TheorySpec parse_theory_spec(const std::string& text) {
  using namespace detail;
  TheorySpec spec;
  bool have_theory = false;
  std::vector<Atom> lit_atoms;
  std::string formula_text;
  int formula_line = 0;
  bool have_formula = false;

  auto parse_decls = [&](const std::string& rest, Owner owner, int line) {
    Lexer lx(rest, line);
    for (;;) {
      std::string name = ident_token(lx);
      if (is_reserved_word(name))
        throw ParseError("variable name '" + name + "' is reserved (line " +
                         std::to_string(line) + ")");
      if (spec.find_var(name))
        throw ParseError("duplicate variable '" + name + "' (line " + std::to_string(line) + ")");
      lx.expect_op(":");
      std::string sort = ident_token(lx);
      VarSort vs;
      if (sort == "Int")
        vs = VarSort::Int;
      else if (sort == "Real")
        vs = VarSort::Real;
      else
        throw ParseError("unknown sort '" + sort + "' (line " + std::to_string(line) + ")");
      spec.vars.push_back({name, vs, owner});
      if (lx.at_end()) return;
      lx.expect_op(",");
    }
  };

  const auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    if (have_formula) break;  // `spec:` swallows the rest of the file
    std::string line = strip_comment(lines[ln]);
    if (blank(line)) continue;
    int lineno = static_cast<int>(ln + 1);
    std::string head = first_word(line);
    std::string rest = line.substr(line.find(head) + head.size());
    if (head == "theory") {
      if (have_theory) throw ParseError("duplicate theory line " + std::to_string(lineno));
      Lexer lx(rest, lineno);
      std::string name = ident_token(lx);
      if (name == "LIA")
        spec.theory = Theory::LIA;
      else if (name == "LRA")
        spec.theory = Theory::LRA;
      else if (name == "NRA")
        spec.theory = Theory::NRA;
      else
        throw ParseError("unknown theory '" + name + "' (line " + std::to_string(lineno) + ")");
      if (!lx.at_end()) throw ParseError("trailing input on theory line " + std::to_string(lineno));
      have_theory = true;
    } else if (head == "env" || head == "sys") {
      parse_decls(rest, head == "env" ? Owner::Env : Owner::Sys, lineno);
    } else if (head == "lit") {
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError("malformed lit line " + std::to_string(lineno));
      lit_atoms.push_back(parse_atom_conj(line.substr(colon + 1), lineno));
    } else if (head == "spec") {
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError("malformed spec line " + std::to_string(lineno));
      formula_text = line.substr(colon + 1);
      for (size_t k = ln + 1; k < lines.size(); ++k)
        formula_text += "\n" + strip_comment(lines[k]);
      formula_line = lineno;
      have_formula = true;
    } else {
      throw ParseError("unrecognized directive '" + head + "' at line " + std::to_string(lineno));
    }
  }

  if (!have_theory) throw ParseError("missing theory line");
  if (have_formula && !lit_atoms.empty())
    throw ParseError("spec: and lit lines cannot be mixed");
  if (have_formula) {
    spec.formula = detail::parse_formula_text(formula_text, /*boolean_mode=*/false, formula_line);
  } else if (!lit_atoms.empty()) {
    // Literal-list mode: the entries only pin down the literal table, so the
    // implied formula just mentions every literal tautologically.
    std::vector<FormulaPtr> parts;
    for (auto& a : lit_atoms) {
      FormulaPtr leaf = mk_atom(a);
      parts.push_back(mk_or(leaf, mk_not(leaf)));
    }
    spec.formula = mk_always(mk_conj(parts));
  } else {
    throw ParseError("missing spec: line or lit entries");
  }

  // Surface sort errors at parse time rather than first solver contact.
  collect_literals(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Boolean specification documents.
//
//   .inputs d0 d1
//   .outputs s0 s1 s2
//   .map s0 "x < 2"
//   spec: <propositional LTL formula>
// ---------------------------------------------------------------------------

inline BooleanSpecDocument parse_boolean_spec(const std::string& text) {
  using namespace detail;
  BooleanSpecDocument doc;
  bool have_inputs = false, have_outputs = false, have_formula = false;
  std::string formula_text;
  int formula_line = 0;

  const auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    if (have_formula) break;
    std::string line = strip_comment(lines[ln]);
    if (blank(line)) continue;
    int lineno = static_cast<int>(ln + 1);
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == ".inputs" || head == ".outputs") {
      auto& list = head == ".inputs" ? doc.inputs : doc.outputs;
      (head == ".inputs" ? have_inputs : have_outputs) = true;
      std::string name;
      while (ss >> name) list.push_back(name);
    } else if (head == ".map") {
      std::string prop;
      ss >> prop;
      size_t q1 = line.find('"');
      size_t q2 = line.rfind('"');
      if (prop.empty() || q1 == std::string::npos || q2 <= q1)
        throw ParseError("malformed .map line " + std::to_string(lineno));
      doc.literal_map.emplace_back(prop, line.substr(q1 + 1, q2 - q1 - 1));
    } else if (first_word(line) == "spec") {
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError("malformed spec line " + std::to_string(lineno));
      formula_text = line.substr(colon + 1);
      for (size_t k = ln + 1; k < lines.size(); ++k)
        formula_text += "\n" + strip_comment(lines[k]);
      formula_line = lineno;
      have_formula = true;
    } else {
      throw ParseError("unrecognized directive '" + head + "' at line " + std::to_string(lineno));
    }
  }
  if (!have_inputs || !have_outputs) throw ParseError("missing .inputs/.outputs header");
  if (!have_formula) throw ParseError("missing spec: line");
  doc.formula = parse_formula_text(formula_text, /*boolean_mode=*/true, formula_line);

  // Every proposition must be declared.
  std::set<std::string> declared(doc.inputs.begin(), doc.inputs.end());
  declared.insert(doc.outputs.begin(), doc.outputs.end());
  std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& f) {
    switch (f->kind) {
      case Formula::Kind::Prop:
        if (!declared.count(f->prop))
          throw ParseError("undeclared proposition '" + f->prop + "'");
        return;
      case Formula::Kind::True:
      case Formula::Kind::False: return;
      case Formula::Kind::Atom:
        throw ParseError("theory atom in Boolean document");
      case Formula::Kind::Not:
      case Formula::Kind::Next:
      case Formula::Kind::Always:
      case Formula::Kind::Eventually: walk(f->lhs); return;
      default:
        walk(f->lhs);
        walk(f->rhs);
        return;
    }
  };
  walk(doc.formula);
  return doc;
}

inline std::string emit_boolean_spec(const BooleanSpecDocument& doc) {
  std::string out = ".inputs";
  for (const auto& p : doc.inputs) out += " " + p;
  out += "\n.outputs";
  for (const auto& p : doc.outputs) out += " " + p;
  out += "\n";
  for (const auto& [prop, text] : doc.literal_map)
    out += ".map " + prop + " \"" + text + "\"\n";
  out += "spec: " + to_string(doc.formula) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Run statistics.
// ---------------------------------------------------------------------------

struct HeuristicSetup {
  int mxi = 10;
  int md = 2;
  int dc = 0;
  bool acore = true;
};

struct ClusterShape {
  int vars = 0;
  int lits = 0;
};

struct RunStats {
  std::string algorithm;  // "bf" | "sat" | "nested"
  std::vector<ClusterShape> clusters;
  std::uint64_t outer_queries = 0;
  std::uint64_t inner_queries = 0;
  double smt_ms = 0.0;
  double wall_ms = 0.0;
  std::uint64_t valid_reactions = 0;
  HeuristicSetup heuristics;
  std::uint64_t seed = 0;
};

inline std::string emit_stats(const RunStats& s) {
  nlohmann::json j;
  j["algorithm"] = s.algorithm;
  j["clusters"] = nlohmann::json::array();
  for (const auto& c : s.clusters) j["clusters"].push_back({{"vars", c.vars}, {"lits", c.lits}});
  j["outer_queries"] = s.outer_queries;
  j["inner_queries"] = s.inner_queries;
  j["smt_ms"] = s.smt_ms;
  j["wall_ms"] = s.wall_ms;
  j["valid_reactions"] = s.valid_reactions;
  j["heuristics"] = {{"mxi", s.heuristics.mxi},
                     {"md", s.heuristics.md},
                     {"dc", s.heuristics.dc},
                     {"acore", s.heuristics.acore}};
  j["seed"] = s.seed;
  return j.dump(2) + "\n";
}

inline RunStats parse_stats(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunStats s;
  s.algorithm = j.at("algorithm").get<std::string>();
  for (const auto& c : j.at("clusters"))
    s.clusters.push_back({c.at("vars").get<int>(), c.at("lits").get<int>()});
  s.outer_queries = j.at("outer_queries").get<std::uint64_t>();
  s.inner_queries = j.at("inner_queries").get<std::uint64_t>();
  s.smt_ms = j.at("smt_ms").get<double>();
  s.wall_ms = j.at("wall_ms").get<double>();
  s.valid_reactions = j.at("valid_reactions").get<std::uint64_t>();
  s.heuristics.mxi = j.at("heuristics").at("mxi").get<int>();
  s.heuristics.md = j.at("heuristics").at("md").get<int>();
  s.heuristics.dc = j.at("heuristics").at("dc").get<int>();
  s.heuristics.acore = j.at("heuristics").at("acore").get<bool>();
  s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

}  // namespace boolabs
