#include "qmx/expr.hpp"

#include <cctype>

namespace qmx {

namespace {

enum class Tok { End, Int, Q, Name, LParen, RParen, LBracket, RBracket, Comma, Plus, Minus, Star, Slash, Caret };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  std::string src;
  std::vector<Token> toks;

  explicit Lexer(const std::string& s) : src(s) {
    size_t k = 0;
    while (k < src.size()) {
      char c = src[k];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++k;
        continue;
      }
      size_t start = k;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        toks.push_back({Tok::Int, src.substr(start, k - start), start});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        while (k < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_'))
          ++k;
        std::string name = src.substr(start, k - start);
        if (name == "q")
          toks.push_back({Tok::Q, name, start});
        else
          toks.push_back({Tok::Name, name, start});
        continue;
      }
      Tok t;
      switch (c) {
        case '(': t = Tok::LParen; break;
        case ')': t = Tok::RParen; break;
        case '[': t = Tok::LBracket; break;
        case ']': t = Tok::RBracket; break;
        case ',': t = Tok::Comma; break;
        case '+': t = Tok::Plus; break;
        case '-': t = Tok::Minus; break;
        case '*': t = Tok::Star; break;
        case '/': t = Tok::Slash; break;
        case '^': t = Tok::Caret; break;
        default:
          fail_parse("unexpected character '" + std::string(1, c) + "' at position " +
                     std::to_string(k));
      }
      toks.push_back({t, std::string(1, c), start});
      ++k;
    }
    toks.push_back({Tok::End, "", src.size()});
  }
};

struct Parser {
  const std::vector<Token>& toks;
  size_t pos = 0;
  Ambient amb;

  const Token& peek(size_t ahead = 0) const {
    size_t k = pos + ahead;
    return k < toks.size() ? toks[k] : toks.back();
  }
  const Token& next() { return toks[pos++]; }
  bool accept(Tok t) {
    if (peek().kind == t) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(Tok t, const std::string& what) {
    if (!accept(t))
      fail_parse("expected " + what + " at position " + std::to_string(peek().pos));
  }

  long long parse_uint() {
    if (peek().kind != Tok::Int) fail_parse("expected integer at position " + std::to_string(peek().pos));
    return std::stoll(next().text);
  }

  // ---- Q(q) scalar sublanguage -------------------------------------------

  // True when the parenthesized group starting at the current '(' contains
  // only scalar tokens (q, integers, arithmetic); such a group is a
  // coefficient literal, not a subexpression.
  bool paren_is_scalar() const {
    int depth = 0;
    for (size_t k = pos; k < toks.size(); ++k) {
      const Token& t = toks[k];
      if (t.kind == Tok::LParen) ++depth;
      if (t.kind == Tok::RParen) {
        if (--depth == 0) return true;
      }
      if (t.kind == Tok::Name || t.kind == Tok::LBracket) return false;
      if (t.kind == Tok::End) break;
    }
    return false;
  }

  QRat q_expr() {
    QRat v = q_term();
    while (true) {
      if (accept(Tok::Plus))
        v += q_term();
      else if (accept(Tok::Minus))
        v -= q_term();
      else
        return v;
    }
  }

  QRat q_term() {
    QRat v = q_factor();
    while (true) {
      if (accept(Tok::Star)) {
        v *= q_factor();
      } else if (accept(Tok::Slash)) {
        QRat d = q_factor();
        if (d.is_zero()) fail_parse("division by zero in scalar literal");
        v = v / d;
      } else if (peek().kind == Tok::Q || peek().kind == Tok::Int ||
                 peek().kind == Tok::LParen) {
        v *= q_factor();  // juxtaposition
      } else {
        return v;
      }
    }
  }

  QRat q_factor() {
    if (accept(Tok::Minus)) return -q_factor();
    if (peek().kind == Tok::Int) {
      QRat v{QPoly(BigInt(next().text))};
      return q_pow_suffix(v);
    }
    if (accept(Tok::Q)) {
      int e = 1;
      if (accept(Tok::Caret)) {
        bool neg = accept(Tok::Minus);
        e = static_cast<int>(parse_uint());
        if (neg) e = -e;
      }
      return QRat::q_power(e);
    }
    if (accept(Tok::LParen)) {
      QRat v = q_expr();
      expect(Tok::RParen, "')'");
      return q_pow_suffix(v);
    }
    fail_parse("expected scalar factor at position " + std::to_string(peek().pos));
  }

  QRat q_pow_suffix(QRat v) {
    if (accept(Tok::Caret)) {
      bool neg = accept(Tok::Minus);
      long long e = parse_uint();
      QRat r(1);
      for (long long k = 0; k < e; ++k) r *= v;
      return neg ? r.inv() : r;
    }
    return v;
  }

  // ---- noncommutative layer ----------------------------------------------

  GenId parse_atom() {
    const Token& t = next();
    if (t.kind != Tok::Name) fail_parse("expected generator at position " + std::to_string(t.pos));
    const std::string& name = t.text;
    auto bracket_pair = [&](int& x, int& y) {
      expect(Tok::LBracket, "'['");
      x = static_cast<int>(parse_uint());
      expect(Tok::Comma, "','");
      y = static_cast<int>(parse_uint());
      expect(Tok::RBracket, "']'");
    };
    auto check = [&](bool cond, const std::string& msg) {
      if (!cond) fail_parse(msg + " (at position " + std::to_string(t.pos) + ")");
    };
    if (name == "t" || name == "dt") {
      int a, alpha;
      bracket_pair(a, alpha);
      check(a >= 1 && (!amb.n || a <= *amb.n), "index a out of range in " + name);
      check(alpha >= 1 && (!amb.m || alpha <= *amb.m), "index alpha out of range in " + name);
      return name == "t" ? gen_t(a, alpha) : gen_dt(a, alpha);
    }
    if (name == "u") {
      int i, j;
      bracket_pair(i, j);
      check(i >= 1 && (!amb.N || i <= *amb.N), "index out of range in u");
      check(j >= 1 && (!amb.N || j <= *amb.N), "index out of range in u");
      return gen_u(i, j);
    }
    auto indexed = [&](const std::string& prefix) -> std::optional<int> {
      if (name.size() > prefix.size() + 0 && name.rfind(prefix, 0) == 0) {
        for (size_t k = prefix.size(); k < name.size(); ++k)
          if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
        return std::stoi(name.substr(prefix.size()));
      }
      return std::nullopt;
    };
    if (auto i = indexed("E_")) {
      check(*i >= 1 && (!amb.N || *i <= *amb.N - 1), "index out of range in E");
      return gen_E(*i);
    }
    if (auto i = indexed("F_")) {
      check(*i >= 1 && (!amb.N || *i <= *amb.N - 1), "index out of range in F");
      return gen_F(*i);
    }
    if (auto i = indexed("Ki_")) {
      check(*i >= 1 && (!amb.N || *i <= *amb.N - 1), "index out of range in Ki");
      return gen_Kinv(*i);
    }
    if (auto i = indexed("K_")) {
      check(*i >= 1 && (!amb.N || *i <= *amb.N - 1), "index out of range in K");
      return gen_K(*i);
    }
    fail_parse("unknown generator '" + name + "' at position " + std::to_string(t.pos));
  }

  bool at_factor_start() const {
    Tok k = peek().kind;
    if (k == Tok::Name) return true;
    if (k == Tok::LParen && !paren_is_scalar()) return true;
    return false;
  }

  // factor := atom ('^' uint)? | '(' expr ')'
  NCPoly parse_factor() {
    if (peek().kind == Tok::LParen) {
      expect(Tok::LParen, "'('");
      NCPoly p = parse_sum();
      expect(Tok::RParen, "')'");
      return p;
    }
    GenId g = parse_atom();
    long long e = 1;
    if (accept(Tok::Caret)) e = parse_uint();
    NCPoly p = NCPoly::one();
    for (long long k = 0; k < e; ++k) p = p * NCPoly::monomial(Word::single(g));
    return p;
  }

  // term := coeff? factor* (at least a coeff or one factor)
  NCPoly parse_term() {
    QRat coeff(1);
    bool have_coeff = false;
    if (peek().kind == Tok::Int) {
      coeff = QRat(QPoly(BigInt(next().text)));
      have_coeff = true;
    } else if (peek().kind == Tok::Q) {
      // bare q literal such as "q^-2 t[1,1]" (unparenthesized scalar head)
      coeff = q_factor();
      have_coeff = true;
    } else if (peek().kind == Tok::LParen && paren_is_scalar()) {
      expect(Tok::LParen, "'('");
      coeff = q_expr();
      expect(Tok::RParen, "')'");
      have_coeff = true;
    }
    NCPoly p = NCPoly::one().scale(coeff);
    bool have_factor = false;
    while (at_factor_start()) {
      p = p * parse_factor();
      have_factor = true;
    }
    if (!have_coeff && !have_factor)
      fail_parse("expected term at position " + std::to_string(peek().pos));
    return p;
  }

  NCPoly parse_sum() {
    bool neg = false;
    if (accept(Tok::Minus))
      neg = true;
    else
      accept(Tok::Plus);
    NCPoly p = parse_term();
    if (neg) p = -p;
    while (true) {
      if (accept(Tok::Plus))
        p += parse_term();
      else if (accept(Tok::Minus))
        p -= parse_term();
      else
        return p;
    }
  }
};

}  // namespace

NCPoly parse_expr(const std::string& src, const Ambient& ambient) {
  Lexer lex(src);
  Parser p{lex.toks, 0, ambient};
  NCPoly out = p.parse_sum();
  if (p.peek().kind != Tok::End)
    fail_parse("trailing input at position " + std::to_string(p.peek().pos));
  return out;
}

QRat parse_qrat(const std::string& src) {
  Lexer lex(src);
  Parser p{lex.toks, 0, {}};
  QRat v = p.q_expr();
  if (p.peek().kind != Tok::End)
    fail_parse("trailing input at position " + std::to_string(p.peek().pos));
  return v;
}

Word parse_word(const std::string& src, const Ambient& ambient) {
  NCPoly p = parse_expr(src, ambient);
  if (p.term_count() != 1 || !p.begin()->second.is_one())
    fail_parse("expected a plain word: " + src);
  return p.begin()->first;
}

std::string render(const NCPoly& p) { return p.str(); }

}  // namespace qmx
