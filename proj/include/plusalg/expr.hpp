#pragma once

// Expression trees of the identity language and their parser.
//
// Grammar (whitespace-insensitive):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := [rational ['*']] product
//   product := postfix (('*' | '@' | <juxtaposition>) postfix)*     left-assoc
//   postfix := primary ['^2']
//   primary := t<k> | a..h | '(' expr ')' | '[' expr ',' expr ']'
//            | 'A(' e ',' e ',' e ')' | 'J(' e ',' e ',' e ')'
//            | 'q{q=' rational '}(' e ',' e ')'
//            | name ['{q=' rational '}'] '(' e (',' e)* ')'
// Juxtaposition and '*' denote the ambient product, '@' the star product
// x@y = xy + yx. A run of letters a..h such as "aab" is the left-normed
// product of the variables a=t1, b=t2, ..., h=t8.

#include "plusalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plusalg {

enum class ExprKind { Var, Product, Star, Bracket, QProduct, Assoc, PlusAssoc, Macro, Scale, Sum };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  int var = 0;                    // Var
  mpq_class coeff = 0;            // Scale factor, QProduct parameter
  std::string name;               // Macro
  std::optional<mpq_class> param;  // Macro parameter q
  std::vector<ExprPtr> args;

  static ExprPtr variable(int k) {
    auto e = std::make_shared<Expr>(Expr{ExprKind::Var});
    e->var = k;
    return e;
  }
  static ExprPtr node(ExprKind kind, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>(Expr{kind});
    e->args = std::move(args);
    return e;
  }
  static ExprPtr scale(mpq_class c, ExprPtr inner) {
    auto e = std::make_shared<Expr>(Expr{ExprKind::Scale});
    e->coeff = std::move(c);
    e->args = {std::move(inner)};
    return e;
  }
  static ExprPtr qproduct(mpq_class q, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>(Expr{ExprKind::QProduct});
    e->coeff = std::move(q);
    e->args = {std::move(a), std::move(b)};
    return e;
  }
  static ExprPtr macro(std::string name, std::vector<ExprPtr> args, std::optional<mpq_class> param = {}) {
    auto e = std::make_shared<Expr>(Expr{ExprKind::Macro});
    e->name = std::move(name);
    e->args = std::move(args);
    e->param = std::move(param);
    return e;
  }

  /// Largest variable index occurring outside macro bodies.
  int max_var() const {
    int m = kind == ExprKind::Var ? var : 0;
    for (const auto& a : args) m = std::max(m, a->max_var());
    return m;
  }

  bool contains(ExprKind k) const {
    if (kind == k) return true;
    for (const auto& a : args) {
      if (a->contains(k)) return true;
    }
    return false;
  }

  /// Fully parenthesized rendering; parses back to an equal tree.
  std::string to_string() const {
    auto join = [&](const char* sep) {
      std::string s;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += sep;
        s += args[i]->to_string();
      }
      return s;
    };
    switch (kind) {
      case ExprKind::Var: return "t" + std::to_string(var);
      case ExprKind::Product: return "(" + args[0]->to_string() + " " + args[1]->to_string() + ")";
      case ExprKind::Star: return "(" + args[0]->to_string() + " @ " + args[1]->to_string() + ")";
      case ExprKind::Bracket: return "[" + join(", ") + "]";
      case ExprKind::QProduct: return "q{q=" + coeff.get_str() + "}(" + join(", ") + ")";
      case ExprKind::Assoc: return "A(" + join(", ") + ")";
      case ExprKind::PlusAssoc: return "J(" + join(", ") + ")";
      case ExprKind::Macro:
        return name + (param ? "{q=" + param->get_str() + "}" : std::string()) + "(" + join(", ") + ")";
      case ExprKind::Scale: return "(" + coeff.get_str() + " " + args[0]->to_string() + ")";
      case ExprKind::Sum: return "(" + join(" + ") + ")";
    }
    return {};
  }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Resolves macro names and arities during parsing.
class MacroResolver {
 public:
  virtual ~MacroResolver() = default;
  // Returns the canonical name, or nullopt when unknown.
  virtual std::optional<std::string> canonical(const std::string& name) const = 0;
  virtual int arity(const std::string& canonical_name) const = 0;
  virtual bool parametric(const std::string& canonical_name) const = 0;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const MacroResolver* macros) : s_(text), macros_(macros) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_number() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  mpq_class number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d == pos_) fail("malformed rational");
    }
    try {
      return parse_rational(std::string(s_.substr(start, pos_ - start)));
    } catch (const Error& e) {
      pos_ = start;
      fail(e.what());
    }
  }
  mpq_class signed_number() {
    bool neg = accept('-');
    if (!neg) accept('+');
    mpq_class q = number();
    return neg ? mpq_class(-q) : q;
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms;
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    terms.push_back(term(neg));
    while (true) {
      if (accept('+')) {
        terms.push_back(term(false));
      } else if (accept('-')) {
        terms.push_back(term(true));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms.front();
    return Expr::node(ExprKind::Sum, std::move(terms));
  }

  ExprPtr term(bool negate) {
    std::optional<mpq_class> c;
    if (at_number()) {
      c = number();
      accept('*');
    }
    ExprPtr p = product();
    mpq_class k = c.value_or(mpq_class(1));
    if (negate) k = -k;
    if (k == 1) return p;
    return Expr::scale(k, std::move(p));
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
  }

  ExprPtr product() {
    ExprPtr lhs = postfix();
    while (true) {
      if (accept('*')) {
        lhs = Expr::node(ExprKind::Product, {lhs, postfix()});
      } else if (accept('@')) {
        lhs = Expr::node(ExprKind::Star, {lhs, postfix()});
      } else if (starts_primary()) {
        lhs = Expr::node(ExprKind::Product, {lhs, postfix()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr postfix() {
    ExprPtr p = primary();
    if (accept('^')) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '2') fail("only the exponent 2 is supported");
      ++pos_;
      p = Expr::node(ExprKind::Product, {p, p});
    }
    return p;
  }

  std::vector<ExprPtr> arglist() {
    expect('(');
    std::vector<ExprPtr> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    return args;
  }

  std::optional<mpq_class> param_block() {
    if (!accept('{')) return std::nullopt;
    skip();
    if (pos_ >= s_.size() || s_[pos_] != 'q') fail("expected 'q=' in parameter block");
    ++pos_;
    expect('=');
    mpq_class q = signed_number();
    expect('}');
    return q;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string id(s_.substr(start, pos_ - start));
    // g_[3,1]^2 style names
    if (!id.empty() && id.back() == '_' && pos_ < s_.size() && s_[pos_] == '[') {
      std::size_t close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated '[' in macro name");
      for (std::size_t i = pos_; i <= close; ++i) {
        if (s_[i] != ' ') id += s_[i];
      }
      pos_ = close + 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        id += '^';
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) id += s_[pos_++];
      }
    }
    return id;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (accept('[')) {
      ExprPtr a = expr();
      expect(',');
      ExprPtr b = expr();
      expect(']');
      return Expr::node(ExprKind::Bracket, {a, b});
    }
    if (!std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected a factor");
    std::size_t id_pos = pos_;
    std::string id = identifier();

    if (id.size() >= 2 && id[0] == 't' && std::all_of(id.begin() + 1, id.end(), ::isdigit)) {
      int k = std::stoi(id.substr(1));
      if (k < 1 || k > 255) {
        pos_ = id_pos;
        fail("variable index out of range");
      }
      return Expr::variable(k);
    }
    if (id == "A" || id == "J") {
      auto args = arglist();
      if (args.size() != 3) {
        pos_ = id_pos;
        fail(id + "(...) takes 3 arguments");
      }
      return Expr::node(id == "A" ? ExprKind::Assoc : ExprKind::PlusAssoc, std::move(args));
    }
    if (id == "q" && peek('{')) {
      auto q = param_block();
      auto args = arglist();
      if (args.size() != 2) {
        pos_ = id_pos;
        fail("q-product takes 2 arguments");
      }
      return Expr::qproduct(*q, args[0], args[1]);
    }
    if (macros_) {
      if (auto canon = macros_->canonical(id)) {
        auto q = param_block();
        if (macros_->parametric(*canon) && !q) {
          pos_ = id_pos;
          fail("macro " + id + " requires a parameter block {q=...}");
        }
        if (!macros_->parametric(*canon) && q) {
          pos_ = id_pos;
          fail("macro " + id + " takes no parameter");
        }
        auto args = arglist();
        if (static_cast<int>(args.size()) != macros_->arity(*canon)) {
          pos_ = id_pos;
          fail("macro " + id + " expects " + std::to_string(macros_->arity(*canon)) + " arguments, got " +
               std::to_string(args.size()));
        }
        return Expr::macro(*canon, std::move(args), q);
      }
    }
    if (std::all_of(id.begin(), id.end(), [](char c) { return c >= 'a' && c <= 'h'; })) {
      ExprPtr e = Expr::variable(id[0] - 'a' + 1);
      for (std::size_t i = 1; i < id.size(); ++i) e = Expr::node(ExprKind::Product, {e, Expr::variable(id[i] - 'a' + 1)});
      return e;
    }
    pos_ = id_pos;
    fail("unknown macro or identifier '" + id + "'");
  }

  std::string_view s_;
  const MacroResolver* macros_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses DSL text; macro names are resolved against the given table.
inline ExprPtr parse_expr(std::string_view text, const MacroResolver* macros) {
  return detail::Parser(text, macros).parse_all();
}

}  // namespace plusalg
