#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mra/structure.hpp"

namespace mra {

/// Variable sorts restrict enumeration and binding to one of the
/// multirelation classes.
using Sort = ClassTag;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Abstract syntax of algebra expressions.
///
/// Concrete syntax: infix `+` (union), `&` (meet), `.` (sequential), `||`
/// (parallel), `;` (Parikh sequential); postfix `^*`, `^w`, `^inf`; prefix
/// functions d(), tau(), nu(), up(), nabla(), compl(), toterm(), vec(),
/// starb(x,y), omegab(x,y), dia(x,p); constants `0 1s 1p U n1p`; variables
/// `x y z w p q` with an optional sort suffix such as `p:sub`
/// (sub|term|vec|up|nonterm). `.` and `;` share one precedence level and
/// associate to the left; `||` binds looser, then `&`, then `+`.
struct Term {
  enum class Op {
    Var, Const,
    Union, Meet, Seq, Par, Parikh,
    Compl, Dom, Tau, Nu, Up, ToTerminal, Vectorize,
    Star, Omega, Infinity, Nabla,
    StarB, OmegaB, Diamond
  };

  Op op;
  std::string var;                 // Op::Var
  Sort sort = Sort::General;       // Op::Var
  ConstKind k = ConstKind::Zero;   // Op::Const
  TermPtr a, b;
};

TermPtr parse_term(const std::string& text);
std::string to_string(const TermPtr& t);

enum class Rel { Eq, Leq, Neq };

/// A relational condition between two terms ("lhs = rhs", "lhs <= rhs",
/// "lhs != rhs").
struct Cond {
  TermPtr lhs;
  Rel rel;
  TermPtr rhs;
};

Cond parse_cond(const std::string& text);
std::string to_string(const Cond& c);
const char* rel_symbol(Rel r);

using Env = std::map<std::string, Mrel>;

/// Denotation of a term. Unbound variables, bindings violating their sort,
/// and universe mismatches throw std::invalid_argument.
Mrel eval_term(const TermPtr& t, const UniversePtr& u, const Env& env);

bool eval_cond(const Cond& c, const UniversePtr& u, const Env& env);

/// Free variables with their sorts; conflicting sort annotations throw.
void collect_vars(const TermPtr& t, std::map<std::string, Sort>& out);
std::map<std::string, Sort> cond_vars(const Cond& c);

}  // namespace mra
