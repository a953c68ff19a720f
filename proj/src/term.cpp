#include "mra/term.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "mra/fixpoint.hpp"

namespace mra {

namespace {

TermPtr mk(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr mk_var(std::string name, Sort s) {
  Term t{Term::Op::Var, std::move(name), s, ConstKind::Zero, nullptr, nullptr};
  return mk(std::move(t));
}

TermPtr mk_const(ConstKind k) {
  Term t{Term::Op::Const, "", Sort::General, k, nullptr, nullptr};
  return mk(std::move(t));
}

TermPtr mk1(Term::Op op, TermPtr a) {
  Term t{op, "", Sort::General, ConstKind::Zero, std::move(a), nullptr};
  return mk(std::move(t));
}

TermPtr mk2(Term::Op op, TermPtr a, TermPtr b) {
  Term t{op, "", Sort::General, ConstKind::Zero, std::move(a), std::move(b)};
  return mk(std::move(t));
}

struct Lexer {
  enum class Tok {
    End, Plus, Amp, Dot, Semi, ParPar, StarPf, OmegaPf, InfPf,
    LParen, RParen, Comma, Colon, Eq, Leq, Neq, Ident
  };

  explicit Lexer(const std::string& s) : text(s) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                ": " + msg + " in \"" + text + "\"");
  }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    ident.clear();
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    const char c = text[pos];
    switch (c) {
      case '+': tok = Tok::Plus; ++pos; return;
      case '&': tok = Tok::Amp; ++pos; return;
      case '.': tok = Tok::Dot; ++pos; return;
      case ';': tok = Tok::Semi; ++pos; return;
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case ',': tok = Tok::Comma; ++pos; return;
      case ':': tok = Tok::Colon; ++pos; return;
      case '=': tok = Tok::Eq; ++pos; return;
      case '|':
        if (pos + 1 < text.size() && text[pos + 1] == '|') {
          tok = Tok::ParPar;
          pos += 2;
          return;
        }
        fail("expected ||");
      case '<':
        if (pos + 1 < text.size() && text[pos + 1] == '=') {
          tok = Tok::Leq;
          pos += 2;
          return;
        }
        fail("expected <=");
      case '!':
        if (pos + 1 < text.size() && text[pos + 1] == '=') {
          tok = Tok::Neq;
          pos += 2;
          return;
        }
        fail("expected !=");
      case '^': {
        ++pos;
        if (pos < text.size() && text[pos] == '*') {
          tok = Tok::StarPf;
          ++pos;
          return;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string suffix = text.substr(start, pos - start);
        if (suffix == "w") { tok = Tok::OmegaPf; return; }
        if (suffix == "inf") { tok = Tok::InfPf; return; }
        fail("expected ^*, ^w or ^inf");
      }
      default:
        if (std::isalnum(static_cast<unsigned char>(c))) {
          std::size_t start = pos;
          while (pos < text.size() &&
                 (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
          tok = Tok::Ident;
          ident = text.substr(start, pos - start);
          return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
};

struct Parser {
  explicit Parser(const std::string& s) : lx(s) {}

  TermPtr parse_full_term() {
    TermPtr t = parse_union();
    if (lx.tok != Lexer::Tok::End) lx.fail("trailing input");
    return t;
  }

  Cond parse_full_cond() {
    TermPtr lhs = parse_union();
    Rel rel;
    switch (lx.tok) {
      case Lexer::Tok::Eq: rel = Rel::Eq; break;
      case Lexer::Tok::Leq: rel = Rel::Leq; break;
      case Lexer::Tok::Neq: rel = Rel::Neq; break;
      default: lx.fail("expected =, <= or !=");
    }
    lx.advance();
    TermPtr rhs = parse_union();
    if (lx.tok != Lexer::Tok::End) lx.fail("trailing input");
    return {std::move(lhs), rel, std::move(rhs)};
  }

 private:
  TermPtr parse_union() {
    TermPtr t = parse_meet();
    while (lx.tok == Lexer::Tok::Plus) {
      lx.advance();
      t = mk2(Term::Op::Union, std::move(t), parse_meet());
    }
    return t;
  }

  TermPtr parse_meet() {
    TermPtr t = parse_par();
    while (lx.tok == Lexer::Tok::Amp) {
      lx.advance();
      t = mk2(Term::Op::Meet, std::move(t), parse_par());
    }
    return t;
  }

  TermPtr parse_par() {
    TermPtr t = parse_seq();
    while (lx.tok == Lexer::Tok::ParPar) {
      lx.advance();
      t = mk2(Term::Op::Par, std::move(t), parse_seq());
    }
    return t;
  }

  TermPtr parse_seq() {
    TermPtr t = parse_postfix();
    while (lx.tok == Lexer::Tok::Dot || lx.tok == Lexer::Tok::Semi) {
      const bool parikh = lx.tok == Lexer::Tok::Semi;
      lx.advance();
      t = mk2(parikh ? Term::Op::Parikh : Term::Op::Seq, std::move(t), parse_postfix());
    }
    return t;
  }

  TermPtr parse_postfix() {
    TermPtr t = parse_primary();
    for (;;) {
      if (lx.tok == Lexer::Tok::StarPf) {
        lx.advance();
        t = mk1(Term::Op::Star, std::move(t));
      } else if (lx.tok == Lexer::Tok::OmegaPf) {
        lx.advance();
        t = mk1(Term::Op::Omega, std::move(t));
      } else if (lx.tok == Lexer::Tok::InfPf) {
        lx.advance();
        t = mk1(Term::Op::Infinity, std::move(t));
      } else {
        return t;
      }
    }
  }

  TermPtr parse_primary() {
    if (lx.tok == Lexer::Tok::LParen) {
      lx.advance();
      TermPtr t = parse_union();
      if (lx.tok != Lexer::Tok::RParen) lx.fail("expected )");
      lx.advance();
      return t;
    }
    if (lx.tok != Lexer::Tok::Ident) lx.fail("expected a term");
    const std::string name = lx.ident;
    lx.advance();

    if (name == "0") return mk_const(ConstKind::Zero);
    if (name == "1s") return mk_const(ConstKind::OneSigma);
    if (name == "1p") return mk_const(ConstKind::OnePi);
    if (name == "U") return mk_const(ConstKind::Univ);
    if (name == "n1p") return mk_const(ConstKind::CoOnePi);

    static const std::map<std::string, Term::Op> unary = {
        {"d", Term::Op::Dom},         {"tau", Term::Op::Tau},
        {"nu", Term::Op::Nu},         {"up", Term::Op::Up},
        {"nabla", Term::Op::Nabla},   {"compl", Term::Op::Compl},
        {"toterm", Term::Op::ToTerminal}, {"vec", Term::Op::Vectorize}};
    static const std::map<std::string, Term::Op> binary = {
        {"starb", Term::Op::StarB}, {"omegab", Term::Op::OmegaB}, {"dia", Term::Op::Diamond}};

    if (auto it = unary.find(name); it != unary.end()) {
      expect_lparen(name);
      TermPtr a = parse_union();
      expect_rparen(name);
      return mk1(it->second, std::move(a));
    }
    if (auto it = binary.find(name); it != binary.end()) {
      expect_lparen(name);
      TermPtr a = parse_union();
      if (lx.tok != Lexer::Tok::Comma) lx.fail("expected , in " + name + "(..)");
      lx.advance();
      TermPtr b = parse_union();
      expect_rparen(name);
      return mk2(it->second, std::move(a), std::move(b));
    }

    static const std::string vars = "xyzwpq";
    if (name.size() == 1 && vars.find(name[0]) != std::string::npos) {
      Sort s = Sort::General;
      if (lx.tok == Lexer::Tok::Colon) {
        lx.advance();
        if (lx.tok != Lexer::Tok::Ident) lx.fail("expected sort name after :");
        s = sort_from_name(lx.ident);
        lx.advance();
      }
      return mk_var(name, s);
    }
    lx.fail("unknown identifier '" + name + "'");
  }

  void expect_lparen(const std::string& f) {
    if (lx.tok != Lexer::Tok::LParen) lx.fail("expected ( after " + f);
    lx.advance();
  }

  void expect_rparen(const std::string& f) {
    if (lx.tok != Lexer::Tok::RParen) lx.fail("expected ) closing " + f);
    lx.advance();
  }

  Sort sort_from_name(const std::string& s) {
    if (s == "sub") return Sort::SeqSubid;
    if (s == "term") return Sort::Terminal;
    if (s == "vec") return Sort::Vector;
    if (s == "up") return Sort::UpClosed;
    if (s == "nonterm") return Sort::Nonterminal;
    lx.fail("unknown sort '" + s + "' (expected sub|term|vec|up|nonterm)");
  }

  Lexer lx;
};

int precedence(Term::Op op) {
  switch (op) {
    case Term::Op::Union: return 1;
    case Term::Op::Meet: return 2;
    case Term::Op::Par: return 3;
    case Term::Op::Seq:
    case Term::Op::Parikh: return 4;
    case Term::Op::Star:
    case Term::Op::Omega:
    case Term::Op::Infinity: return 5;
    default: return 6;
  }
}

void print(const TermPtr& t, std::ostream& os, int min_prec) {
  const int prec = precedence(t->op);
  const bool parens = prec < min_prec;
  if (parens) os << '(';
  switch (t->op) {
    case Term::Op::Var:
      os << t->var;
      switch (t->sort) {
        case Sort::General: break;
        case Sort::SeqSubid: os << ":sub"; break;
        case Sort::Terminal: os << ":term"; break;
        case Sort::Vector: os << ":vec"; break;
        case Sort::UpClosed: os << ":up"; break;
        case Sort::Nonterminal: os << ":nonterm"; break;
      }
      break;
    case Term::Op::Const:
      switch (t->k) {
        case ConstKind::Zero: os << '0'; break;
        case ConstKind::OneSigma: os << "1s"; break;
        case ConstKind::OnePi: os << "1p"; break;
        case ConstKind::Univ: os << 'U'; break;
        case ConstKind::CoOnePi: os << "n1p"; break;
      }
      break;
    case Term::Op::Union:
    case Term::Op::Meet:
    case Term::Op::Par:
    case Term::Op::Seq:
    case Term::Op::Parikh: {
      const char* sym = t->op == Term::Op::Union ? " + "
                        : t->op == Term::Op::Meet ? " & "
                        : t->op == Term::Op::Par  ? " || "
                        : t->op == Term::Op::Seq  ? " . "
                                                  : " ; ";
      print(t->a, os, prec);
      os << sym;
      print(t->b, os, prec + 1);
      break;
    }
    case Term::Op::Star:
    case Term::Op::Omega:
    case Term::Op::Infinity:
      print(t->a, os, prec + 1);
      os << (t->op == Term::Op::Star ? "^*" : t->op == Term::Op::Omega ? "^w" : "^inf");
      break;
    case Term::Op::Compl:
    case Term::Op::Dom:
    case Term::Op::Tau:
    case Term::Op::Nu:
    case Term::Op::Up:
    case Term::Op::ToTerminal:
    case Term::Op::Vectorize:
    case Term::Op::Nabla: {
      const char* f = t->op == Term::Op::Compl ? "compl"
                      : t->op == Term::Op::Dom ? "d"
                      : t->op == Term::Op::Tau ? "tau"
                      : t->op == Term::Op::Nu  ? "nu"
                      : t->op == Term::Op::Up  ? "up"
                      : t->op == Term::Op::ToTerminal ? "toterm"
                      : t->op == Term::Op::Vectorize  ? "vec"
                                                      : "nabla";
      os << f << '(';
      print(t->a, os, 0);
      os << ')';
      break;
    }
    case Term::Op::StarB:
    case Term::Op::OmegaB:
    case Term::Op::Diamond: {
      const char* f = t->op == Term::Op::StarB ? "starb"
                      : t->op == Term::Op::OmegaB ? "omegab"
                                                  : "dia";
      os << f << '(';
      print(t->a, os, 0);
      os << ", ";
      print(t->b, os, 0);
      os << ')';
      break;
    }
  }
  if (parens) os << ')';
}

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).parse_full_term(); }

Cond parse_cond(const std::string& text) { return Parser(text).parse_full_cond(); }

std::string to_string(const TermPtr& t) {
  std::ostringstream os;
  print(t, os, 0);
  return os.str();
}

const char* rel_symbol(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Leq: return "<=";
    case Rel::Neq: return "!=";
  }
  return "?";
}

std::string to_string(const Cond& c) {
  std::ostringstream os;
  os << to_string(c.lhs) << ' ' << rel_symbol(c.rel) << ' ' << to_string(c.rhs);
  return os.str();
}

Mrel eval_term(const TermPtr& t, const UniversePtr& u, const Env& env) {
  switch (t->op) {
    case Term::Op::Var: {
      auto it = env.find(t->var);
      if (it == env.end()) throw std::invalid_argument("unbound variable: " + t->var);
      if (!is_in_class(it->second, t->sort)) {
        throw std::invalid_argument("sort violation: binding of " + t->var +
                                    " is not in class " + class_name(t->sort));
      }
      return it->second;
    }
    case Term::Op::Const: return constant(u, t->k);
    case Term::Op::Union: return join(eval_term(t->a, u, env), eval_term(t->b, u, env));
    case Term::Op::Meet: return meet(eval_term(t->a, u, env), eval_term(t->b, u, env));
    case Term::Op::Seq: return seq(eval_term(t->a, u, env), eval_term(t->b, u, env));
    case Term::Op::Par: return par(eval_term(t->a, u, env), eval_term(t->b, u, env));
    case Term::Op::Parikh: return parikh(eval_term(t->a, u, env), eval_term(t->b, u, env));
    case Term::Op::Compl: return complement(eval_term(t->a, u, env));
    case Term::Op::Dom: return domain(eval_term(t->a, u, env));
    case Term::Op::Tau: return tau(eval_term(t->a, u, env));
    case Term::Op::Nu: return nu(eval_term(t->a, u, env));
    case Term::Op::Up: return up_closure(eval_term(t->a, u, env));
    case Term::Op::ToTerminal: return to_terminal(eval_term(t->a, u, env));
    case Term::Op::Vectorize: return vectorize(eval_term(t->a, u, env));
    case Term::Op::Star: return star(eval_term(t->a, u, env));
    case Term::Op::Omega: return omega(eval_term(t->a, u, env));
    case Term::Op::Infinity: return infinity(eval_term(t->a, u, env));
    case Term::Op::Nabla: return nabla(eval_term(t->a, u, env));
    case Term::Op::StarB: return star_binary(eval_term(t->a, u, env), eval_term(t->b, u, env));
    case Term::Op::OmegaB: return omega_binary(eval_term(t->a, u, env), eval_term(t->b, u, env));
    case Term::Op::Diamond: return diamond(eval_term(t->a, u, env), eval_term(t->b, u, env));
  }
  throw std::logic_error("unreachable term op");
}

bool eval_cond(const Cond& c, const UniversePtr& u, const Env& env) {
  const Mrel lhs = eval_term(c.lhs, u, env);
  const Mrel rhs = eval_term(c.rhs, u, env);
  switch (c.rel) {
    case Rel::Eq: return lhs == rhs;
    case Rel::Leq: return is_subset(lhs, rhs);
    case Rel::Neq: return !(lhs == rhs);
  }
  return false;
}

void collect_vars(const TermPtr& t, std::map<std::string, Sort>& out) {
  if (!t) return;
  if (t->op == Term::Op::Var) {
    auto [it, inserted] = out.emplace(t->var, t->sort);
    if (!inserted) {
      if (it->second == Sort::General) {
        it->second = t->sort;
      } else if (t->sort != Sort::General && t->sort != it->second) {
        throw std::invalid_argument("conflicting sorts for variable " + t->var);
      }
    }
    return;
  }
  collect_vars(t->a, out);
  collect_vars(t->b, out);
}

std::map<std::string, Sort> cond_vars(const Cond& c) {
  std::map<std::string, Sort> out;
  collect_vars(c.lhs, out);
  collect_vars(c.rhs, out);
  return out;
}

}  // namespace mra
