#include "fourval/parser.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "fourval/errors.hpp"

namespace fourval {
namespace {

enum class Tok {
  CapIdent,
  LowIdent,
  Integer,
  Variable,
  LParen,
  RParen,
  Comma,
  Dot,
  Equals,
  LArrow,
  Tilde,
  Amp,
  Pipe,
  OPlus,       // (+) exactly, no inner spaces
  OTimes,      // (x)
  ODotTok,     // (o)
  ImpFde,      // ->
  ImpMat,      // =>
  ImpHook,     // ~>
  ImpFdeStar,  // *->
  ImpHookStar, // *~>
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) break;
      out.push_back(next());
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  char at(std::size_t offset) const {
    std::size_t i = pos_ + offset;
    return i < text_.size() ? text_[i] : '\0';
  }

  Token make(Tok kind, std::size_t length, std::size_t line, std::size_t col) {
    Token t{kind, text_.substr(pos_, length), line, col};
    pos_ += length;
    col_ += length;
    return t;
  }

  Token next() {
    std::size_t line = line_;
    std::size_t col = col_;
    char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t n = 1;
      while (std::islower(static_cast<unsigned char>(at(n))) ||
             std::isdigit(static_cast<unsigned char>(at(n))) || at(n) == '_') {
        ++n;
      }
      return make(Tok::LowIdent, n, line, col);
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t n = 1;
      while (std::isalnum(static_cast<unsigned char>(at(n))) || at(n) == '_') ++n;
      return make(Tok::CapIdent, n, line, col);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 1;
      while (std::isdigit(static_cast<unsigned char>(at(n)))) ++n;
      return make(Tok::Integer, n, line, col);
    }
    switch (c) {
      case '?': {
        if (!std::isalpha(static_cast<unsigned char>(at(1)))) {
          fail("expected a variable name after '?'");
        }
        std::size_t n = 2;
        while (std::isalnum(static_cast<unsigned char>(at(n))) || at(n) == '_') ++n;
        Token t{Tok::Variable, text_.substr(pos_ + 1, n - 1), line, col};
        pos_ += n;
        col_ += n;
        return t;
      }
      case '(':
        // The three-character connectors win over '('; a sole atom
        // argument spelled x or o needs spaces, as in P( x ).
        if (at(2) == ')') {
          if (at(1) == '+') return make(Tok::OPlus, 3, line, col);
          if (at(1) == 'x') return make(Tok::OTimes, 3, line, col);
          if (at(1) == 'o') return make(Tok::ODotTok, 3, line, col);
        }
        return make(Tok::LParen, 1, line, col);
      case ')':
        return make(Tok::RParen, 1, line, col);
      case ',':
        return make(Tok::Comma, 1, line, col);
      case '.':
        return make(Tok::Dot, 1, line, col);
      case '&':
        return make(Tok::Amp, 1, line, col);
      case '|':
        return make(Tok::Pipe, 1, line, col);
      case '=':
        if (at(1) == '>') return make(Tok::ImpMat, 2, line, col);
        return make(Tok::Equals, 1, line, col);
      case '~':
        if (at(1) == '>') return make(Tok::ImpHook, 2, line, col);
        return make(Tok::Tilde, 1, line, col);
      case '-':
        if (at(1) == '>') return make(Tok::ImpFde, 2, line, col);
        fail("expected '->'");
      case '<':
        if (at(1) == '-') return make(Tok::LArrow, 2, line, col);
        fail("expected '<-'");
      case '*':
        if (at(1) == '-' && at(2) == '>') return make(Tok::ImpFdeStar, 3, line, col);
        if (at(1) == '~' && at(2) == '>') return make(Tok::ImpHookStar, 3, line, col);
        fail("expected '*->' or '*~>'");
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(Lexer(text).run()) {}

  Formula formula_only() {
    Formula f = parse_formula();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

  Database database() {
    Database db;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::LowIdent && peek().text == "rule") {
        db.rules.push_back(parse_rule());
      } else {
        parse_fact_into(db.extension);
      }
    }
    return db;
  }

  VPair vpair() {
    Token start = peek();
    Atom atom = parse_atom();
    if (!atom.is_ground()) {
      throw ParseError("fact contains a variable", start.line, start.col);
    }
    expect(Tok::Equals, "expected '=' after the fact");
    Token vt = expect(Tok::LowIdent, "expected a truth value");
    auto v = value_from_char(vt.text.size() == 1 ? vt.text[0] : '\0');
    if (!v) throw ParseError("expected one of t, b, n, f", vt.line, vt.col);
    expect(Tok::End, "trailing input after the assignment");
    return VPair{Fact(std::move(atom)), *v};
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok kind, const std::string& message) {
    if (peek().kind != kind) {
      throw ParseError(message, peek().line, peek().col);
    }
    return advance();
  }

  Formula parse_formula() {
    Formula lhs = parse_or();
    BinaryConnector op;
    switch (peek().kind) {
      case Tok::ImpFde: op = BinaryConnector::ImpFde; break;
      case Tok::ImpMat: op = BinaryConnector::ImpMat; break;
      case Tok::ImpHook: op = BinaryConnector::ImpHook; break;
      case Tok::ImpFdeStar: op = BinaryConnector::ImpFdeStar; break;
      case Tok::ImpHookStar: op = BinaryConnector::ImpHookStar; break;
      default:
        return lhs;
    }
    advance();
    return Formula::binary(op, std::move(lhs), parse_formula());
  }

  Formula parse_or() {
    Formula acc = parse_oplus();
    while (peek().kind == Tok::Pipe) {
      advance();
      acc = Formula::binary(BinaryConnector::Or, std::move(acc), parse_oplus());
    }
    return acc;
  }

  Formula parse_oplus() {
    Formula acc = parse_and();
    while (peek().kind == Tok::OPlus) {
      advance();
      acc = Formula::binary(BinaryConnector::KJoin, std::move(acc), parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_otimes();
    while (peek().kind == Tok::Amp) {
      advance();
      acc = Formula::binary(BinaryConnector::And, std::move(acc), parse_otimes());
    }
    return acc;
  }

  Formula parse_otimes() {
    Formula acc = parse_unary();
    while (peek().kind == Tok::OTimes || peek().kind == Tok::ODotTok) {
      BinaryConnector op = advance().kind == Tok::OTimes ? BinaryConnector::KMeet
                                                         : BinaryConnector::ODot;
      acc = Formula::binary(op, std::move(acc), parse_unary());
    }
    return acc;
  }

  Formula parse_call(UnaryConnector op, const Token& name) {
    if (peek().kind != Tok::LParen) {
      throw ParseError("'" + name.text + "' is a connector and needs '('",
                       name.line, name.col);
    }
    advance();
    Formula inner = parse_formula();
    expect(Tok::RParen, "expected ')'");
    return Formula::unary(op, std::move(inner));
  }

  Formula parse_unary() {
    const Token& tok = peek();
    if (tok.kind == Tok::Tilde) {
      advance();
      return Formula::unary(UnaryConnector::Neg, parse_unary());
    }
    if (tok.kind == Tok::LowIdent && tok.text == "conf") {
      advance();
      return Formula::unary(UnaryConnector::Conf, parse_unary());
    }
    if (tok.kind == Tok::LowIdent && tok.text == "compl") {
      advance();
      return Formula::unary(UnaryConnector::Compl, parse_unary());
    }
    if (tok.kind == Tok::LowIdent && tok.text == "inc") {
      Token name = advance();
      return parse_call(UnaryConnector::NonValid, name);
    }
    if (tok.kind == Tok::CapIdent && tok.text.size() == 1) {
      UnaryConnector op;
      switch (tok.text[0]) {
        case 'T': op = UnaryConnector::IsT; break;
        case 'B': op = UnaryConnector::IsB; break;
        case 'N': op = UnaryConnector::IsN; break;
        case 'F': op = UnaryConnector::IsF; break;
        default: return parse_primary();
      }
      Token name = advance();
      return parse_call(op, name);
    }
    return parse_primary();
  }

  Formula parse_primary() {
    if (peek().kind == Tok::LParen) {
      advance();
      Formula inner = parse_formula();
      expect(Tok::RParen, "expected ')'");
      return inner;
    }
    if (peek().kind == Tok::CapIdent) {
      return Formula::atom(parse_atom());
    }
    throw ParseError("expected a formula", peek().line, peek().col);
  }

  Term parse_term() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::LowIdent:
      case Tok::Integer:
        return Term::constant(advance().text);
      case Tok::Variable:
        return Term::variable(advance().text);
      default:
        throw ParseError("expected a constant or ?variable", tok.line, tok.col);
    }
  }

  Atom parse_atom() {
    Token name = expect(Tok::CapIdent, "expected a predicate name");
    if (name.text.size() == 1 &&
        (name.text == "T" || name.text == "B" || name.text == "N" ||
         name.text == "F")) {
      // Unreachable from parse_unary; guards direct atom contexts
      // such as rule heads and fact declarations.
      throw ParseError("'" + name.text + "' is reserved for a connector",
                       name.line, name.col);
    }
    Atom atom;
    atom.predicate = name.text;
    if (peek().kind == Tok::LParen) {
      advance();
      if (peek().kind != Tok::RParen) {
        atom.args.push_back(parse_term());
        while (peek().kind == Tok::Comma) {
          advance();
          atom.args.push_back(parse_term());
        }
      }
      expect(Tok::RParen, "expected ')'");
    }
    check_arity(atom, name);
    return atom;
  }

  void check_arity(const Atom& atom, const Token& at) {
    auto [it, inserted] = arity_.emplace(atom.predicate, atom.arity());
    if (!inserted && it->second != atom.arity()) {
      throw ParseError("predicate " + atom.predicate + " used with arity " +
                           std::to_string(atom.arity()) + " but previously " +
                           std::to_string(it->second),
                       at.line, at.col);
    }
  }

  void parse_fact_into(VSet& extension) {
    Token start = peek();
    Atom atom = parse_atom();
    if (!atom.is_ground()) {
      throw ParseError("fact contains a variable", start.line, start.col);
    }
    expect(Tok::Equals, "expected '=' after the fact");
    Token vt = expect(Tok::LowIdent, "expected a truth value");
    auto v = value_from_char(vt.text.size() == 1 ? vt.text[0] : '\0');
    if (!v) throw ParseError("expected one of t, b, f", vt.line, vt.col);
    if (*v == TruthValue::n) {
      throw ParseError("value n cannot be stored; an absent fact is already n",
                       vt.line, vt.col);
    }
    expect(Tok::Dot, "expected '.'");
    extension.insert_checked(Fact(std::move(atom)), *v);
  }

  Rule parse_rule() {
    Token start = advance();  // the 'rule' keyword
    bool negative = false;
    if (peek().kind == Tok::Tilde) {
      advance();
      negative = true;
    }
    Atom head = parse_atom();
    expect(Tok::LArrow, "expected '<-'");
    Formula body = parse_formula();
    expect(Tok::Dot, "expected '.'");
    try {
      return make_rule(negative, std::move(head), std::move(body));
    } catch (const RuleError& e) {
      throw ParseError(e.what(), start.line, start.col);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> arity_;
};

}  // namespace

Database parse_database(const std::string& text) {
  return Parser(text).database();
}

Formula parse_formula(const std::string& text) {
  return Parser(text).formula_only();
}

VPair parse_vpair(const std::string& text) { return Parser(text).vpair(); }

}  // namespace fourval
