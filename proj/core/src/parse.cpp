#include "qnss/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace qnss {

namespace {

enum class Tok { Number, Var, Unit, Plus, Minus, Star, Caret, Slash, LParen, RParen,
                 LBracket, RBracket, Comma, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) {
      if (text_[at_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++at_;
    }
    tok_.pos = {line_, col_};
    if (at_ >= text_.size()) {
      tok_ = {Tok::End, "", tok_.pos};
      return;
    }
    char c = text_[at_];
    auto single = [&](Tok k) {
      tok_ = {k, std::string(1, c), tok_.pos};
      ++at_;
      ++col_;
    };
    switch (c) {
      case '+': single(Tok::Plus); return;
      case '-': single(Tok::Minus); return;
      case '*': single(Tok::Star); return;
      case '^': single(Tok::Caret); return;
      case '/': single(Tok::Slash); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '[': single(Tok::LBracket); return;
      case ']': single(Tok::RBracket); return;
      case ',': single(Tok::Comma); return;
      case ';': single(Tok::Semicolon); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) {
        num += text_[at_++];
        ++col_;
      }
      tok_ = {Tok::Number, num, tok_.pos};
      return;
    }
    if (c == 'i' || c == 'j' || c == 'k') {
      // A unit letter, unless it begins a longer identifier.
      if (at_ + 1 >= text_.size() ||
          !std::isalnum(static_cast<unsigned char>(text_[at_ + 1]))) {
        single(Tok::Unit);
        return;
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (at_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_')) {
        name += text_[at_++];
        ++col_;
      }
      tok_ = {Tok::Var, name, tok_.pos};
      return;
    }
    throw ParseError(tok_.pos, std::string("unexpected character '") + c + "'", "");
  }

  const std::string& text_;
  std::size_t at_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

enum class Mode { Rational, Central, Free };

/// Recursive-descent parser producing NCPoly values; commutative modes
/// are lowered afterwards. Running everything through the free algebra
/// keeps one grammar; for central rings the canonical form makes the
/// order of factors immaterial.
class ExprParser {
 public:
  ExprParser(const std::string& text, int nvars, Mode mode)
      : lex_(text), nvars_(nvars), mode_(mode) {}

  NCPoly parse_expression() {
    NCPoly value = parse_expr();
    expect_end();
    return value;
  }

  NCPoly parse_expr() {
    bool negate = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      negate = true;
    } else if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    }
    NCPoly acc = parse_term();
    if (negate) acc = -acc;
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool minus = lex_.take().kind == Tok::Minus;
      NCPoly rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  QMat parse_qmatrix() {
    auto rows = parse_matrix_rows();
    std::vector<std::vector<QPoly>> entries;
    for (auto& row : rows) {
      std::vector<QPoly> out;
      for (auto& e : row) out.push_back(lower_central(e));
      entries.push_back(std::move(out));
    }
    return QMat(std::move(entries));
  }

  NCMat parse_ncmatrix() {
    auto rows = parse_matrix_rows();
    return NCMat(std::move(rows));
  }

  QPoly lower_central(const NCPoly& f) {
    // In the central ring every factor commutes, so the canonical
    // phi-image collapses: substitute y_{t,1} = x_t, y_{t,s>1} = 0.
    const QPoly& canon = f.canon();
    QPoly out(nvars_);
    for (int s = 1; s <= 4; ++s) {
      Poly comp(nvars_);
      for (const auto& [m, c] : canon.comp(s).terms()) {
        std::vector<std::pair<int, int>> exps;
        bool dead = false;
        for (const auto& [v, e] : m.exps()) {
          if (v % 4 != 0) {
            dead = true;
            break;
          }
          exps.emplace_back(v / 4, e);
        }
        if (!dead) comp.add_term(Monomial(std::move(exps)), c);
      }
      if (s == 1) {
        out += QPoly::from_poly(comp);
      } else {
        Quaternion unit = Quaternion::unit(s);
        out += QPoly::constant(nvars_, unit) * QPoly::from_poly(comp);
      }
    }
    return out;
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError(lex_.peek().pos, "trailing input", "end of expression");
  }

 private:
  std::vector<std::vector<NCPoly>> parse_matrix_rows() {
    if (lex_.peek().kind != Tok::LBracket)
      throw ParseError(lex_.peek().pos, "matrix literal must start with '['", "'['");
    lex_.take();
    std::vector<std::vector<NCPoly>> rows;
    std::vector<NCPoly> row;
    row.push_back(parse_expr());
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Comma) {
        lex_.take();
        row.push_back(parse_expr());
      } else if (k == Tok::Semicolon) {
        lex_.take();
        rows.push_back(std::move(row));
        row.clear();
        row.push_back(parse_expr());
      } else if (k == Tok::RBracket) {
        lex_.take();
        rows.push_back(std::move(row));
        break;
      } else {
        throw ParseError(lex_.peek().pos, "malformed matrix literal", "',', ';' or ']'");
      }
    }
    std::size_t width = rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != width)
        throw ParseError(lex_.peek().pos, "matrix rows have unequal length", "");
    }
    if (rows.size() != width)
      throw ParseError(lex_.peek().pos, "matrix literal must be square", "");
    expect_end();
    return rows;
  }

  NCPoly parse_term() {
    NCPoly acc = parse_factor();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        acc = acc * parse_factor();
      } else if (starts_factor(k)) {
        if (mode_ != Mode::Free) {
          throw ParseError(lex_.peek().pos,
                           "adjacent factors need an explicit '*' in a commutative ring",
                           "'*'");
        }
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  static bool starts_factor(Tok k) {
    return k == Tok::Number || k == Tok::Var || k == Tok::Unit || k == Tok::LParen;
  }

  NCPoly parse_factor() {
    NCPoly base = parse_primary();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token e = lex_.peek();
      if (e.kind != Tok::Number)
        throw ParseError(e.pos, "exponent must be a nonnegative integer", "integer");
      lex_.take();
      if (e.text.size() > 4) throw ParseError(e.pos, "exponent too large", "");
      long exp = std::stol(e.text);
      NCPoly acc = NCPoly::constant(nvars_, Quaternion::one());
      for (long t = 0; t < exp; ++t) acc = acc * base;
      return acc;
    }
    return base;
  }

  NCPoly parse_primary() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        lex_.take();
        Rat value(t.text, 10);
        if (lex_.peek().kind == Tok::Slash) {
          lex_.take();
          Token d = lex_.peek();
          if (d.kind != Tok::Number)
            throw ParseError(d.pos, "malformed rational literal", "integer denominator");
          lex_.take();
          Rat den(d.text, 10);
          if (rat_is_zero(den)) throw ParseError(d.pos, "zero denominator", "");
          value /= den;
        }
        value.canonicalize();
        return NCPoly::constant(nvars_, Quaternion(value));
      }
      case Tok::Unit: {
        if (mode_ == Mode::Rational)
          throw ParseError(t.pos, "quaternion unit in a rational expression",
                           "rational-only factor");
        lex_.take();
        Quaternion u = t.text == "i"   ? Quaternion::i()
                       : t.text == "j" ? Quaternion::j()
                                       : Quaternion::k();
        return NCPoly::constant(nvars_, u);
      }
      case Tok::Var: {
        lex_.take();
        return NCPoly::variable(nvars_, var_index(t));
      }
      case Tok::LParen: {
        lex_.take();
        NCPoly inner = parse_expr();
        if (lex_.peek().kind != Tok::RParen)
          throw ParseError(lex_.peek().pos, "unbalanced parenthesis", "')'");
        lex_.take();
        return inner;
      }
      default:
        throw ParseError(t.pos, "expected a factor",
                         "number, unit, variable or '('");
    }
  }

  int var_index(const Token& t) const {
    const std::string& name = t.text;
    if (name.size() < 2 || name[0] != 'x')
      throw ParseError(t.pos, "unknown identifier '" + name + "'", "variable x1..x" +
                                                                       std::to_string(nvars_));
    for (std::size_t p = 1; p < name.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(name[p])))
        throw ParseError(t.pos, "unknown identifier '" + name + "'", "variable x1..x" +
                                                                         std::to_string(nvars_));
    }
    if (name.size() > 7) throw ParseError(t.pos, "variable index too large", "");
    int idx = std::stoi(name.substr(1)) - 1;
    if (idx < 0 || idx >= nvars_)
      throw ParseError(t.pos, "variable '" + name + "' out of range", "index 1.." +
                                                                          std::to_string(nvars_));
    return idx;
  }

  Lexer lex_;
  int nvars_;
  Mode mode_;
};

}  // namespace

Poly parse_poly(const std::string& text, int nvars) {
  ExprParser p(text, nvars, Mode::Rational);
  QPoly q = p.lower_central(p.parse_expression());
  return q.comp(1);
}

QPoly parse_qpoly(const std::string& text, int nvars) {
  ExprParser p(text, nvars, Mode::Central);
  return p.lower_central(p.parse_expression());
}

NCPoly parse_ncpoly(const std::string& text, int nvars) {
  ExprParser p(text, nvars, Mode::Free);
  return p.parse_expression();
}

Quaternion parse_quaternion(const std::string& text) {
  // Dedicated literal grammar: signed terms, each a rational, a unit, or
  // a rational with a unit bound by '*' or juxtaposition.
  Lexer lex(text);
  Quaternion acc;
  bool first = true;
  while (true) {
    Tok k = lex.peek().kind;
    if (k == Tok::End) {
      if (first) throw ParseError(lex.peek().pos, "empty quaternion literal", "term");
      break;
    }
    bool negate = false;
    if (k == Tok::Plus || k == Tok::Minus) {
      negate = lex.take().kind == Tok::Minus;
    } else if (!first) {
      throw ParseError(lex.peek().pos, "terms must be joined by '+' or '-'", "'+' or '-'");
    }
    first = false;
    Rat coeff(1);
    bool have_coeff = false;
    if (lex.peek().kind == Tok::Number) {
      Token n = lex.take();
      coeff = Rat(n.text, 10);
      if (lex.peek().kind == Tok::Slash) {
        lex.take();
        Token d = lex.peek();
        if (d.kind != Tok::Number)
          throw ParseError(d.pos, "malformed rational literal", "integer denominator");
        lex.take();
        Rat den(d.text, 10);
        if (rat_is_zero(den)) throw ParseError(d.pos, "zero denominator", "");
        coeff /= den;
      }
      coeff.canonicalize();
      have_coeff = true;
    }
    int unit = 1;
    if (lex.peek().kind == Tok::Star) {
      lex.take();
      if (lex.peek().kind != Tok::Unit)
        throw ParseError(lex.peek().pos, "expected a unit after '*'", "i, j or k");
    }
    if (lex.peek().kind == Tok::Unit) {
      Token u = lex.take();
      unit = u.text == "i" ? 2 : u.text == "j" ? 3 : 4;
    } else if (!have_coeff) {
      throw ParseError(lex.peek().pos, "expected a quaternion term", "rational or unit");
    }
    if (negate) coeff = -coeff;
    acc += coeff * Quaternion::unit(unit);
  }
  return acc;
}

Rat parse_rational(const std::string& text) {
  Lexer lex(text);
  bool negate = false;
  if (lex.peek().kind == Tok::Minus) {
    lex.take();
    negate = true;
  } else if (lex.peek().kind == Tok::Plus) {
    lex.take();
  }
  Token n = lex.peek();
  if (n.kind != Tok::Number) throw ParseError(n.pos, "expected a rational", "integer");
  lex.take();
  Rat value(n.text, 10);
  if (lex.peek().kind == Tok::Slash) {
    lex.take();
    Token d = lex.peek();
    if (d.kind != Tok::Number)
      throw ParseError(d.pos, "malformed rational literal", "integer denominator");
    lex.take();
    Rat den(d.text, 10);
    if (rat_is_zero(den)) throw ParseError(d.pos, "zero denominator", "");
    value /= den;
  }
  if (lex.peek().kind != Tok::End)
    throw ParseError(lex.peek().pos, "trailing input", "end of literal");
  value.canonicalize();
  if (negate) value = -value;
  return value;
}

QMat parse_qmat(const std::string& text, int nvars, bool rational_entries) {
  ExprParser p(text, nvars, rational_entries ? Mode::Rational : Mode::Central);
  return p.parse_qmatrix();
}

NCMat parse_ncmat(const std::string& text, int nvars) {
  ExprParser p(text, nvars, Mode::Free);
  return p.parse_ncmatrix();
}

}  // namespace qnss
