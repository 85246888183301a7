#include "dbmend/parser.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "dbmend/errors.hpp"

namespace dbmend {

namespace {

enum class TokenKind {
  kLowerIdent,   // constant or predicate
  kUpperIdent,   // variable
  kLParen,
  kRParen,
  kComma,
  kDot,
  kSemicolon,
  kColonDash,    // :-
  kArrow,        // ->
  kEq,           // =
  kNeq,          // !=
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start_lower(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') {
        advance(1);
      }
      continue;
    }
    const std::size_t tok_line = line;
    const std::size_t tok_col = column;
    auto push = [&](TokenKind kind, std::string tok_text, std::size_t length) {
      tokens.push_back(Token{kind, std::move(tok_text), tok_line, tok_col});
      advance(length);
    };
    if (ident_start_lower(c) || (c >= 'A' && c <= 'Z')) {
      std::size_t end = i;
      while (end < text.size() && ident_char(text[end])) {
        ++end;
      }
      std::string word(text.substr(i, end - i));
      push(ident_start_lower(c) ? TokenKind::kLowerIdent : TokenKind::kUpperIdent,
           std::move(word), end - i);
      continue;
    }
    switch (c) {
      case '(':
        push(TokenKind::kLParen, "(", 1);
        continue;
      case ')':
        push(TokenKind::kRParen, ")", 1);
        continue;
      case ',':
        push(TokenKind::kComma, ",", 1);
        continue;
      case '.':
        push(TokenKind::kDot, ".", 1);
        continue;
      case ';':
        push(TokenKind::kSemicolon, ";", 1);
        continue;
      case '=':
        push(TokenKind::kEq, "=", 1);
        continue;
      case ':':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          push(TokenKind::kColonDash, ":-", 2);
          continue;
        }
        throw ParseError("expected ':-'", line, column);
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(TokenKind::kArrow, "->", 2);
          continue;
        }
        throw ParseError("expected '->'", line, column);
      case '!':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(TokenKind::kNeq, "!=", 2);
          continue;
        }
        throw ParseError("expected '!='", line, column);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
  }
  tokens.push_back(Token{TokenKind::kEnd, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Database parse() {
    Database db;
    while (peek().kind != TokenKind::kEnd) {
      statement(db);
    }
    return db;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

  const Token& expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) {
      fail(std::string("expected ") + what, peek());
    }
    return take();
  }

  void statement(Database& db) {
    const Token& t = peek();
    if (t.kind != TokenKind::kLowerIdent) {
      fail("expected a fact, constraint, or domain declaration", t);
    }
    if (t.text == "ic") {
      constraint(db);
      return;
    }
    if (t.text == "domain" && peek(1).kind == TokenKind::kLowerIdent) {
      domain_declaration(db);
      return;
    }
    fact(db);
  }

  void domain_declaration(Database& db) {
    take();  // 'domain'
    while (true) {
      const Token& c = expect(TokenKind::kLowerIdent, "a constant");
      db.declared_domain.insert(Constant{c.text});
      if (peek().kind == TokenKind::kComma) {
        take();
        continue;
      }
      break;
    }
    expect(TokenKind::kDot, "'.'");
  }

  void fact(Database& db) {
    const Token& name = take();
    GroundAtom atom{name.text, {}};
    if (peek().kind == TokenKind::kLParen) {
      take();
      while (true) {
        const Token& arg = peek();
        if (arg.kind == TokenKind::kUpperIdent) {
          fail("variable '" + arg.text + "' in a fact", arg);
        }
        expect(TokenKind::kLowerIdent, "a constant");
        atom.args.push_back(Constant{arg.text});
        if (peek().kind == TokenKind::kComma) {
          take();
          continue;
        }
        break;
      }
      expect(TokenKind::kRParen, "')'");
    }
    expect(TokenKind::kDot, "'.'");
    note_signature(atom.signature(), name);
    db.instance.insert(std::move(atom));
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == TokenKind::kLowerIdent) {
      take();
      return Constant{t.text};
    }
    if (t.kind == TokenKind::kUpperIdent) {
      take();
      return Variable{t.text};
    }
    fail("expected a term", t);
  }

  ConstraintLiteral literal() {
    const Token& t = peek();
    if (t.kind == TokenKind::kLowerIdent && peek(1).kind == TokenKind::kLParen) {
      AtomPattern atom{t.text, {}};
      take();
      take();  // '('
      while (true) {
        atom.args.push_back(term());
        if (peek().kind == TokenKind::kComma) {
          take();
          continue;
        }
        break;
      }
      expect(TokenKind::kRParen, "')'");
      note_signature(atom.signature(), t);
      return atom;
    }
    const Term lhs = term();
    if (peek().kind == TokenKind::kEq || peek().kind == TokenKind::kNeq) {
      const bool negated = take().kind == TokenKind::kNeq;
      return TermEquality{lhs, term(), negated};
    }
    if (is_variable(lhs)) {
      fail("expected '=' or '!=' after variable '" + t.text + "'", peek());
    }
    // A bare lowercase token is a 0-ary atom.
    AtomPattern atom{std::get<Constant>(lhs).name, {}};
    note_signature(atom.signature(), t);
    return atom;
  }

  void constraint(Database& db) {
    const Token& start = take();  // 'ic'
    std::vector<ConstraintLiteral> body;
    std::vector<ConstraintLiteral> head;

    const bool denial = peek().kind == TokenKind::kColonDash;
    if (denial) {
      take();
    }
    while (true) {
      body.push_back(literal());
      if (peek().kind == TokenKind::kComma) {
        take();
        continue;
      }
      break;
    }
    if (!denial) {
      expect(TokenKind::kArrow, "'->'");
      while (true) {
        head.push_back(literal());
        if (peek().kind == TokenKind::kSemicolon) {
          take();
          continue;
        }
        break;
      }
    }
    expect(TokenKind::kDot, "'.'");

    check_range_restriction(body, head, start);
    db.constraints.insert(Constraint(std::move(body), std::move(head)));
  }

  // Every variable must occur in some body atom; reported against the
  // user's variable names, before normalization.
  void check_range_restriction(const std::vector<ConstraintLiteral>& body,
                               const std::vector<ConstraintLiteral>& head,
                               const Token& at) const {
    std::set<std::string> bound;
    for (const ConstraintLiteral& lit : body) {
      if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
        for (const Term& t : atom->args) {
          if (const auto* v = std::get_if<Variable>(&t)) {
            bound.insert(v->name);
          }
        }
      }
    }
    auto check_term = [&](const Term& t, const char* where) {
      if (const auto* v = std::get_if<Variable>(&t)) {
        if (!bound.contains(v->name)) {
          fail("variable '" + v->name + "' in " + where + " does not occur in any body atom", at);
        }
      }
    };
    for (const ConstraintLiteral& lit : body) {
      if (const auto* eq = std::get_if<TermEquality>(&lit)) {
        check_term(eq->lhs, "a body equality");
        check_term(eq->rhs, "a body equality");
      }
    }
    for (const ConstraintLiteral& lit : head) {
      if (const auto* atom = std::get_if<AtomPattern>(&lit)) {
        for (const Term& t : atom->args) {
          check_term(t, "the head");
        }
      } else {
        const auto& eq = std::get<TermEquality>(lit);
        check_term(eq.lhs, "the head");
        check_term(eq.rhs, "the head");
      }
    }
  }

  void note_signature(const PredicateSignature& sig, const Token& at) {
    auto [it, inserted] = arities_.emplace(sig.name, sig.arity);
    if (!inserted && it->second != sig.arity) {
      fail("predicate '" + sig.name + "' used with arity " + std::to_string(sig.arity) +
               " but previously with arity " + std::to_string(it->second),
           at);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> arities_;
};

}  // namespace

Database parse_problem(std::string_view text) { return Parser(text).parse(); }

std::string print_problem(const Database& db) {
  std::string out;
  if (!db.declared_domain.empty()) {
    out += "domain ";
    bool first = true;
    for (const Constant& c : db.declared_domain) {
      if (!first) {
        out += ", ";
      }
      out += c.name;
      first = false;
    }
    out += ".\n";
  }
  for (const GroundAtom& atom : db.instance) {
    out += atom.to_string();
    out += ".\n";
  }
  for (const Constraint& c : db.constraints) {
    out += c.to_string();
    out += "\n";
  }
  return out;
}

}  // namespace dbmend
