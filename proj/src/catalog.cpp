#include "mra/catalog.hpp"

#include <stdexcept>

namespace mra {

namespace {

Law L(std::string name, std::string group, std::string anchor,
      std::vector<std::string> hyps, std::string concl, bool valid,
      std::optional<StoredWitness> witness = std::nullopt,
      Model model = Model::Multirelations) {
  Law law;
  law.name = std::move(name);
  law.group = std::move(group);
  law.anchor = std::move(anchor);
  law.hypotheses = std::move(hyps);
  law.conclusion = std::move(concl);
  law.expect_valid = valid;
  law.model = model;
  law.witness = std::move(witness);
  return law;
}

StoredWitness W(std::string universe, std::vector<std::pair<std::string, std::string>> bindings) {
  return {std::move(universe), std::move(bindings)};
}

std::vector<Law> build() {
  std::vector<Law> c;
  const bool VALID = true;
  const bool REFUTED = false;

  // --- basic structural laws of union and the two compositions ---
  c.push_back(L("union-assoc", "proto", "join semilattice", {}, "x + (y + z) = (x + y) + z", VALID));
  c.push_back(L("union-comm", "proto", "join semilattice", {}, "x + y = y + x", VALID));
  c.push_back(L("union-unit", "proto", "join semilattice", {}, "x + 0 = x", VALID));
  c.push_back(L("union-idem", "proto", "join semilattice", {}, "x + x = x", VALID));
  c.push_back(L("seq-subassoc", "proto", "sequential composition is sub-associative", {},
                "(x . y) . z <= x . (y . z)", VALID));
  c.push_back(L("seq-unit-left", "proto", "sequential unit", {}, "1s . x = x", VALID));
  c.push_back(L("seq-unit-right", "proto", "sequential unit", {}, "x . 1s = x", VALID));
  c.push_back(L("seq-subdist-left", "proto", "left subdistributivity of .", {},
                "x . y + x . z <= x . (y + z)", VALID));
  c.push_back(L("seq-dist-right", "proto", "right distributivity of .", {},
                "(x + y) . z = x . z + y . z", VALID));
  c.push_back(L("seq-zero-left", "proto", "left annihilation", {}, "0 . x = 0", VALID));
  c.push_back(L("par-assoc", "proto", "parallel monoid", {}, "x || (y || z) = (x || y) || z", VALID));
  c.push_back(L("par-comm", "proto", "parallel monoid", {}, "x || y = y || x", VALID));
  c.push_back(L("par-unit", "proto", "parallel monoid", {}, "1p || x = x", VALID));
  c.push_back(L("par-dist", "proto", "distributivity of || over +", {},
                "x || (y + z) = x || y + x || z", VALID));
  c.push_back(L("par-zero", "proto", "parallel annihilation", {}, "0 || x = 0", VALID));
  c.push_back(L("par-seq-sub", "proto", "sub-interchange of || and .", {},
                "(x || y) . z <= (x . z) || (y . z)", VALID));
  c.push_back(L("seq-assoc-subid-left", "proto", "associativity with a subidentity factor", {},
                "(p:sub . y) . z = p . (y . z)", VALID));
  c.push_back(L("seq-assoc-subid-mid", "proto", "associativity with a subidentity factor", {},
                "(x . p:sub) . z = x . (p . z)", VALID));
  c.push_back(L("seq-assoc-subid-right", "proto", "associativity with a subidentity factor", {},
                "(x . y) . p:sub = x . (y . p)", VALID));
  c.push_back(L("seq-dist-left-subid", "proto", "left distributivity under a subidentity", {},
                "p:sub . (y + z) = p . y + p . z", VALID));

  // --- idempotents of parallel composition ---
  c.push_back(L("par-idem-subid", "idempotents", "parallel idempotents", {},
                "p:sub || p = p", VALID));
  c.push_back(L("par-idem-term", "idempotents", "parallel idempotents", {},
                "z:term || z = z", VALID));
  c.push_back(L("par-idem-univ", "idempotents", "parallel idempotents", {}, "U || U = U", VALID));
  c.push_back(L("par-idem-cop", "idempotents", "parallel idempotents", {},
                "n1p || n1p = n1p", VALID));

  // --- interaction of sequential and parallel composition ---
  c.push_back(L("par-absorb-terminal", "interaction", "terminal part absorption", {},
                "(x . 1p) || x = x", VALID));
  c.push_back(L("par-seq-idem-cond", "interaction", "interchange under parallel idempotency",
                {"z || z <= z"}, "(x || y) . z = (x . z) || (y . z)", VALID));
  c.push_back(L("par-seq-subid", "interaction", "interchange at subidentities", {},
                "(x || y) . p:sub = (x . p) || (y . p)", VALID));
  c.push_back(L("par-seq-term", "interaction", "interchange at terminals", {},
                "(x || y) . z:term = (x . z) || (y . z)", VALID));
  c.push_back(L("par-seq-univ", "interaction", "interchange at the top", {},
                "(x || y) . U = (x . U) || (y . U)", VALID));
  c.push_back(L("par-seq-cop", "interaction", "interchange at the nonterminal top", {},
                "(x || y) . n1p = (x . n1p) || (y . n1p)", VALID));
  c.push_back(L("seq-par-sub", "interaction", "sub-distributivity of . over ||", {},
                "x . (y || z) <= (x . y) || (x . z)", VALID));
  c.push_back(L("seq-par-subid", "interaction", "distributivity under a subidentity", {},
                "p:sub . (x || y) = (p . x) || (p . y)", VALID));
  c.push_back(L("seq-assoc-term-left", "interaction", "associativity with a terminal factor", {},
                "(z:term . x) . y = z . (x . y)", VALID));
  c.push_back(L("seq-assoc-term-mid", "interaction", "associativity with a terminal factor", {},
                "(x . z:term) . y = x . (z . y)", VALID));
  c.push_back(L("seq-assoc-term-right", "interaction", "associativity with a terminal factor", {},
                "(x . y) . z:term = x . (y . z)", VALID));
  c.push_back(L("meet-seq-subid", "interaction", "meet distributes into . at subidentities", {},
                "(p:sub & q:sub) . z = p . z & q . z", VALID));

  // --- c-monoid axioms ---
  c.push_back(L("c1", "c-monoid", "c-monoid axiom (c1)", {}, "(x . 1p) || x = x", VALID));
  c.push_back(L("c2", "c-monoid", "c-monoid axiom (c2)", {},
                "((x . 1p) || 1s) . y = (x . 1p) || y", VALID));
  c.push_back(L("c3", "c-monoid", "c-monoid axiom (c3)", {},
                "(x || y) . 1p = (x . 1p) || (y . 1p)", VALID));
  c.push_back(L("c4", "c-monoid", "c-monoid axiom (c4)", {}, "(x . y) . 1p = x . (y . 1p)", VALID));
  c.push_back(L("c5", "c-monoid", "c-monoid axiom (c5)", {}, "1s || 1s = 1s", VALID));
  c.push_back(L("c6", "c-trioid", "c-trioid axiom (c6)", {}, "x . 1p <= 1p", VALID));

  // --- c-lattice axioms ---
  c.push_back(L("cl1", "c-lattice", "c-lattice axiom (cl1)", {}, "x . 1p + x . n1p = x . U", VALID));
  c.push_back(L("cl2", "c-lattice", "c-lattice axiom (cl2)", {}, "1p & (x + n1p) = x . 0", VALID));
  c.push_back(L("cl3", "c-lattice", "c-lattice axiom (cl3)", {},
                "x . (y || z) <= (x . y) || (x . z)", VALID));
  c.push_back(L("cl4", "c-lattice", "c-lattice axiom (cl4)", {"z || z <= z"},
                "(x || y) . z = (x . z) || (y . z)", VALID));
  c.push_back(L("cl5", "c-lattice", "c-lattice axiom (cl5)", {},
                "x . (y . (z . 0)) = (x . y) . (z . 0)", VALID));
  c.push_back(L("cl6", "c-lattice", "c-lattice axiom (cl6)", {}, "(x . 0) . y = x . (0 . y)", VALID));
  c.push_back(L("cl7", "c-lattice", "c-lattice axiom (cl7)", {}, "1s || 1s = 1s", VALID));
  c.push_back(L("cl8", "c-lattice", "c-lattice axiom (cl8)", {},
                "((x . 1p) || 1s) . y = (x . 1p) || y", VALID));
  c.push_back(L("cl9", "c-lattice", "c-lattice axiom (cl9)", {},
                "((x & 1s) . 1p) || 1s = x & 1s", VALID));
  c.push_back(L("cl10", "c-lattice", "c-lattice axiom (cl10)", {},
                "((x & n1p) . 1p) || 1s = 1s & (x & n1p) . n1p", VALID));
  c.push_back(L("cl11", "c-lattice", "c-lattice axiom (cl11)", {},
                "((x & n1p) . 1p) || n1p = (x & n1p) . n1p", VALID));

  // --- complementation facts ---
  c.push_back(L("compl-join", "complement", "units are complements", {}, "1p + n1p = U", VALID));
  c.push_back(L("compl-meet", "complement", "units are complements", {}, "1p & n1p = 0", VALID));
  c.push_back(L("compl-onep", "complement", "units are complements", {}, "compl(1p) = n1p", VALID));
  c.push_back(L("meet-onep", "complement", "terminal part as a meet", {}, "x & 1p = x . 0", VALID));

  // --- the subidentity/terminal/vector triangle ---
  c.push_back(L("tri-1", "triangle", "domain export", {},
                "((x . 1p) || 1s) . y = (x . 1p) || y", VALID));
  c.push_back(L("tri-2", "triangle", "terminals are below the parallel unit", {},
                "x . 1p <= 1p", VALID));
  c.push_back(L("tri-3", "triangle", "top split", {}, "x . 1p + x . n1p = x . U", VALID));
  c.push_back(L("tri-4", "triangle", "terminal part by complementation", {},
                "1p & (x + n1p) = x . 0", VALID));
  c.push_back(L("tri-5", "triangle", "subidentities are domain-fixed", {},
                "((x & 1s) . 1p) || 1s = x & 1s", VALID));
  c.push_back(L("tri-6", "triangle", "nonterminal domain description", {},
                "((x & n1p) . 1p) || 1s = 1s & (x & n1p) . n1p", VALID));
  c.push_back(L("tri-7", "triangle", "nonterminal vector description", {},
                "((x & n1p) . 1p) || n1p = (x & n1p) . n1p", VALID));

  // --- retractions ---
  c.push_back(L("dom-retract", "domain-retract", "d is a retraction", {}, "d(d(x)) = d(x)", VALID));
  c.push_back(L("term-retract", "domain-retract", "(.1p) is a retraction", {},
                "(x . 1p) . 1p = x . 1p", VALID));

  // --- auxiliary domain laws ---
  c.push_back(L("domaux-export", "domain-aux", "domain export", {}, "d(x) . y = (x . 1p) || y", VALID));
  c.push_back(L("domaux-export2", "domain-aux", "domain export", {},
                "d(x . 1p) . y = (x . 1p) || y", VALID));
  c.push_back(L("domaux-terminal", "domain-aux", "domain against terminals", {},
                "d(x) . 1p = x . 1p", VALID));
  c.push_back(L("domaux-stable", "domain-aux", "domain ignores target overwriting", {},
                "d(x . 1p) = d(x)", VALID));
  c.push_back(L("onep-seq-idem", "domain-aux", "parallel unit is a sequential idempotent", {},
                "1p . 1p = 1p", VALID));
  c.push_back(L("dom-onep", "domain-aux", "domain of the parallel unit", {}, "d(1p) = 1s", VALID));

  // --- domain axioms ---
  c.push_back(L("dom-par", "domain-axioms", "domain axiom: || additivity", {},
                "d(x || y) = d(x) || d(y)", VALID));
  c.push_back(L("dom-par-seq", "domain-axioms", "domain axiom: compositions agree", {},
                "d(x) || d(y) = d(x) . d(y)", VALID));
  c.push_back(L("dom-local", "domain-axioms", "domain axiom: locality", {}, "d(x) . x = x", VALID));
  c.push_back(L("dom-export-inner", "domain-axioms", "domain axiom: inner export", {},
                "d(x . d(y)) = d(x . y)", VALID));
  c.push_back(L("dom-export", "domain-axioms", "domain axiom: export", {},
                "d(d(x) . y) = d(x) . d(y)", VALID));
  c.push_back(L("dom-comm", "domain-axioms", "domain axiom: commutation", {},
                "d(x) . d(y) = d(y) . d(x)", VALID));
  c.push_back(L("dom-ones", "domain-axioms", "domain axiom: unit", {}, "d(1s) = 1s", VALID));
  c.push_back(L("dom-plus", "domain-axioms", "domain axiom: + additivity", {},
                "d(x + y) = d(x) + d(y)", VALID));
  c.push_back(L("dom-sub-ones", "domain-axioms", "domain axiom: bounded by the unit", {},
                "d(x) <= 1s", VALID));
  c.push_back(L("dom-zero", "domain-axioms", "domain axiom: strictness", {}, "d(0) = 0", VALID));

  // --- the subidentity lattice ---
  c.push_back(L("subid-meet-is-seq", "subid-lattice", "composition of subidentities is meet", {},
                "p:sub . q:sub = p & q", VALID));
  c.push_back(L("subid-absorb-1", "subid-lattice", "absorption", {}, "p:sub + p . q:sub = p", VALID));
  c.push_back(L("subid-absorb-2", "subid-lattice", "absorption", {}, "p:sub . (p + q:sub) = p", VALID));
  c.push_back(L("subid-distrib", "subid-lattice", "distributivity among subidentities", {},
                "x:sub + y:sub . z:sub = (x + y) . (x + z)", VALID));
  c.push_back(L("subid-below-cop", "subid-lattice", "subidentities are nonterminal", {},
                "p:sub <= n1p", VALID));

  // --- diamonds ---
  c.push_back(L("dia-plus", "cda", "diamond additivity", {},
                "dia(x + y, p:sub) = dia(x, p) + dia(y, p)", VALID));
  c.push_back(L("dia-seq", "cda", "diamond of a composition", {},
                "dia(x . y, p:sub) = dia(x, dia(y, p))", VALID));
  c.push_back(L("dia-subid", "cda", "diamond of a subidentity", {},
                "dia(p:sub, q:sub) = p . q", VALID));
  c.push_back(L("dia-par", "cda", "diamond of a parallel composition", {},
                "dia(x || y, p:sub) = dia(x, p) . dia(y, p)", VALID));
  c.push_back(L("star-unfold-le", "cda", "star unfold", {}, "1s + x . x^* <= x^*", VALID));
  c.push_back(L("star-induct", "cda", "star induction", {"p:sub + x . y <= y"},
                "x^* . p <= y", VALID));
  c.push_back(L("dia-star-unfold", "cda", "diamond star unfold", {},
                "p:sub + dia(x, dia(x^*, p)) = dia(x^*, p)", VALID));
  c.push_back(L("dia-star-induct", "cda", "diamond star induction", {"dia(x, p:sub) <= p"},
                "dia(x^*, p) <= p", VALID));

  // --- c-lattice consequences ---
  c.push_back(L("par-expanding", "c-lattice-basic", "parallel composition expands", {},
                "x <= x || x", VALID));
  c.push_back(L("meet-below-par", "c-lattice-basic", "meet is below parallel composition", {},
                "x & y <= x || y", VALID));
  c.push_back(L("terminal-split", "c-lattice-basic", "terminal/nonterminal split", {},
                "x = (x & n1p) + x . 0", VALID));
  c.push_back(L("termvec-meet-cop", "c-lattice-basic", "terminals meet no nonterminal", {},
                "(x . 1p) & n1p = 0", VALID));
  c.push_back(L("term-meet-cop", "c-lattice-basic", "terminals meet no nonterminal", {},
                "(x . 0) & n1p = 0", VALID));
  c.push_back(L("nonterm-zero", "c-lattice-basic", "nonterminal parts lose terminal products", {},
                "(x & n1p) . 0 = 0", VALID));
  c.push_back(L("onep-def", "c-lattice-basic", "parallel unit from the top", {}, "1p = U . 0", VALID));
  c.push_back(L("univ-seq-idem", "c-lattice-basic", "top idempotents", {}, "U . U = U", VALID));
  c.push_back(L("univ-seq-cop", "c-lattice-basic", "top idempotents", {}, "U . n1p = U", VALID));
  c.push_back(L("cop-seq-univ", "c-lattice-basic", "top idempotents", {}, "n1p . U = U", VALID));
  c.push_back(L("onep-left-zero", "c-lattice-basic", "parallel unit absorbs on the left", {},
                "1p . x = 1p", VALID));
  c.push_back(L("cop-seq-onep", "c-lattice-basic", "constants against the parallel unit", {},
                "n1p . 1p = 1p", VALID));
  c.push_back(L("univ-seq-onep", "c-lattice-basic", "constants against the parallel unit", {},
                "U . 1p = 1p", VALID));
  c.push_back(L("cop-par-univ", "c-lattice-basic", "nonterminal top absorbs the top", {},
                "U || n1p = n1p", VALID));
  c.push_back(L("cop-seq-idem", "c-lattice-basic", "nonterminal top idempotent", {},
                "n1p . n1p = n1p", VALID));
  c.push_back(L("seq-decompose", "c-lattice-basic", "composition by nonterminal part", {},
                "x . y = (x & n1p) . y + x . 0", VALID));
  c.push_back(L("subid-of-seq", "c-lattice-basic", "subidentity part of a composition", {},
                "1s & (x & n1p) . y = 1s & x . y", VALID));
  c.push_back(L("subid-of-cop", "c-lattice-basic", "subidentity part against the tops", {},
                "1s & x . n1p = 1s & x . U", VALID));
  c.push_back(L("subid-of-par-cop", "c-lattice-basic", "subidentity part against the tops", {},
                "1s & (x || n1p) = 1s & (x || U)", VALID));
  c.push_back(L("vec-cop-split", "c-lattice-basic", "vector split over the nonterminal top", {},
                "(x . 1p) || n1p = (x & n1p) . n1p + (x . 0) || n1p", VALID));
  c.push_back(L("vec-univ-split", "c-lattice-basic", "vector split over the top", {},
                "(x . 1p) || U = x . U + (x . 0) || U", VALID));

  // --- explicit domain descriptions ---
  c.push_back(L("dom-univ", "domain-explicit", "domain of the tops", {}, "d(U) = 1s", VALID));
  c.push_back(L("dom-cop", "domain-explicit", "domain of the tops", {}, "d(n1p) = 1s", VALID));
  c.push_back(L("domN-cop", "domain-explicit", "nonterminal domain description", {},
                "d(x & n1p) = 1s & x . n1p", VALID));
  c.push_back(L("domN-univ-restricted", "domain-explicit", "nonterminal domain description", {},
                "d(x & n1p) = 1s & (x & n1p) . U", VALID));
  c.push_back(L("domN-univ", "domain-explicit", "nonterminal domain description", {},
                "d(x & n1p) = 1s & x . U", VALID));
  c.push_back(L("domN-vec-cop", "domain-explicit", "nonterminal domain description", {},
                "d(x & n1p) = 1s & ((x & n1p) . 1p) || n1p", VALID));
  c.push_back(L("domN-vec-univ", "domain-explicit", "nonterminal domain description", {},
                "d(x & n1p) = 1s & ((x & n1p) . 1p) || U", VALID));
  c.push_back(L("dom-sum-form", "domain-explicit", "domain as a sum", {},
                "d(x) = (1s & x . U) + (x . 0) || 1s", VALID));
  c.push_back(L("dom-explicit-cop", "domain-explicit", "explicit domain description", {},
                "d(x) = 1s & (x . 1p) || n1p", VALID));
  c.push_back(L("dom-explicit-univ", "domain-explicit", "explicit domain description", {},
                "d(x) = 1s & (x . 1p) || U", VALID));
  c.push_back(L("dom-explicit-meet", "domain-explicit", "explicit domain description", {},
                "d(x) = (1p & x . U) || 1s", VALID));
  c.push_back(L("domprops-vecN", "domain-explicit", "nonterminal vector of the domain", {},
                "d(x & n1p) . U = (x & n1p) . U", VALID));
  c.push_back(L("domprops-cop", "domain-explicit", "vector of the domain, nonterminal top", {},
                "d(x) . n1p = (x & n1p) . n1p + (x . 0) || n1p", VALID));
  c.push_back(L("domprops-univ", "domain-explicit", "vector of the domain, top", {},
                "d(x) . U = (x & n1p) . U + (x . 0) || U", VALID));
  c.push_back(L("domprops-univ2", "domain-explicit", "vector of the domain, top", {},
                "d(x) . U = x . U + (x . 0) || U", VALID));
  c.push_back(L("domprops-cop-decomp", "domain-explicit", "product against the nonterminal top", {},
                "x . n1p = d(x & n1p) . n1p + x . 0", VALID));
  c.push_back(L("domprops-univ-decomp", "domain-explicit", "product against the top", {},
                "x . U = d(x & n1p) . U + x . 0", VALID));
  c.push_back(L("dom-of-univmul", "domain-explicit", "domain ignores top products", {},
                "d(x . U) = d(x)", VALID));
  c.push_back(L("dom-of-copmul", "domain-explicit", "domain ignores top products", {},
                "d(x . n1p) = d(x)", VALID));

  // --- subalgebra closure ---
  c.push_back(L("term-close-onep", "subalgebra", "terminals: closure", {}, "1p . 0 = 1p", VALID));
  c.push_back(L("term-close-plus", "subalgebra", "terminals: closure under +", {},
                "x . 0 + y . 0 = (x + y) . 0", VALID));
  c.push_back(L("term-close-meet", "subalgebra", "terminals: closure under &", {},
                "(x . 0) & (y . 0) = (x & y) . 0", VALID));
  c.push_back(L("term-close-par", "subalgebra", "terminals: closure under ||", {},
                "(x . 0) || (y . 0) = (x || y) . 0", VALID));
  c.push_back(L("term-close-seq", "subalgebra", "terminals: right units of .", {},
                "(x . 0) . (y . 0) = x . 0", VALID));
  c.push_back(L("nonterm-close-plus", "subalgebra", "nonterminals: closure under +", {},
                "(x:nonterm + y:nonterm) & n1p = x + y", VALID));
  c.push_back(L("nonterm-close-seq", "subalgebra", "nonterminals: closure under .", {},
                "(x:nonterm . y:nonterm) & n1p = x . y", VALID));
  c.push_back(L("nonterm-close-par", "subalgebra", "nonterminals absorb under ||", {},
                "(x:nonterm || y) & n1p = x || y", VALID));
  c.push_back(L("term-ideal-left", "subalgebra", "terminals absorb under .", {},
                "(z:term . y) . 1p = z . y", VALID));
  c.push_back(L("term-ideal-right", "subalgebra", "terminals absorb under .", {},
                "(y . z:term) . 1p = y . z", VALID));
  c.push_back(L("dom-plus-export", "subalgebra", "vectors: closure under +", {},
                "d(x) . z + d(y) . z = d(x + y) . z", VALID));
  c.push_back(L("vec-par-dom", "subalgebra", "vectors: closure under ||", {},
                "(d(x) . U) || (d(y) . U) = d(x || y) . U", VALID));
  c.push_back(L("tarski", "subalgebra", "Tarski rule variant", {"x & n1p != 0"},
                "n1p . ((x & n1p) . n1p) = n1p", VALID));
  c.push_back(L("vecN-product", "subalgebra", "products of nonterminal vectors",
                {"(x . 1p) || n1p = x", "(y . 1p) || n1p = y", "y != 0"}, "x . y = x", VALID));
  c.push_back(L("vecN-par-meet", "subalgebra", "parallel composition of nonterminal vectors",
                {"(x . 1p) || n1p = x", "(y . 1p) || n1p = y"}, "x || y = x & y", VALID));

  // --- up-closed multirelations and the second sequential composition ---
  c.push_back(L("upclosed-meet", "upclosed", "power union is meet", {},
                "(x || U) & (y || U) = (x || U) || (y || U)", VALID));
  c.push_back(L("upclosed-par-idem", "upclosed", "up-closures are parallel idempotents", {},
                "(x || U) || (x || U) = x || U", VALID));
  c.push_back(L("upclosed-interchange", "upclosed", "interchange at up-closed arguments", {},
                "(x || y) . (z || U) = (x . (z || U)) || (y . (z || U))", VALID));
  c.push_back(L("upclosed-par-is-meet", "upclosed", "power union is meet", {},
                "x:up || y:up = x & y", VALID));
  c.push_back(L("parikh-peleg", "parikh", "the two sequential compositions agree up-closed", {},
                "x ; (y || U) = (x . y) || U", VALID));
  c.push_back(L("parikh-preserves-up", "parikh", "Parikh composition preserves up-closure", {},
                "(x ; (y || U)) || U = x ; (y || U)", VALID));
  c.push_back(L("parikh-unit-left", "parikh", "left unit of Parikh composition", {},
                "1s ; x = x", VALID));
  c.push_back(L("parikh-simulates", "parikh", "Parikh composition via choice-function composition", {},
                "(x || U) ; (y || U) = ((x || U) . (y || U)) || U", VALID));
  c.push_back(L("peleg-up-violation", "upclosed",
                "choice-function composition does not preserve up-closure", {},
                "((x || U) . (y || U)) || U = (x || U) . (y || U)", REFUTED,
                W("a", {{"x", "{(a,{})}"}, {"y", "{}"}})));

  // --- round trips of the triangle maps ---
  c.push_back(L("iso-1", "iso-roundtrip", "subidentity -> vector -> subidentity", {},
                "d(d(x) . U) = d(x)", VALID));
  c.push_back(L("iso-2", "iso-roundtrip", "vector -> subidentity -> vector", {},
                "d((x . 1p) || U) . U = (x . 1p) || U", VALID));
  c.push_back(L("iso-3", "iso-roundtrip", "terminal -> vector -> terminal", {},
                "((x . 1p) || U) . 1p = x . 1p", VALID));
  c.push_back(L("iso-4", "iso-roundtrip", "vector -> terminal -> vector", {},
                "(((x . 1p) || U) . 1p) || U = (x . 1p) || U", VALID));
  c.push_back(L("iso-5", "iso-roundtrip", "subidentity -> terminal -> subidentity", {},
                "d(d(x) . 1p) = d(x)", VALID));
  c.push_back(L("iso-6", "iso-roundtrip", "terminal -> subidentity -> terminal", {},
                "d(x . 1p) . 1p = x . 1p", VALID));
  c.push_back(L("iso-7", "iso-roundtrip", "nonterminal: subidentity -> terminal -> subidentity", {},
                "d(d(x & n1p) . 1p) = d(x & n1p)", VALID));
  c.push_back(L("iso-8", "iso-roundtrip", "nonterminal: terminal -> subidentity -> terminal", {},
                "d((x & n1p) . 1p) . 1p = (x & n1p) . 1p", VALID));
  c.push_back(L("iso-9", "iso-roundtrip", "nonterminal: subidentity -> vector -> subidentity", {},
                "d(d(x & n1p) . n1p) = d(x & n1p)", VALID));
  c.push_back(L("iso-10", "iso-roundtrip", "nonterminal: vector -> subidentity -> vector", {},
                "d((x & n1p) . n1p) . n1p = (x & n1p) . n1p", VALID));
  c.push_back(L("iso-11", "iso-roundtrip", "nonterminal: terminal -> vector -> terminal", {},
                "(((x & n1p) . 1p) || n1p) . 1p = (x & n1p) . 1p", VALID));
  c.push_back(L("iso-12", "iso-roundtrip", "nonterminal: vector -> terminal -> vector", {},
                "(((x & n1p) . n1p) . 1p) || n1p = (x & n1p) . n1p", VALID));

  // --- structure preservation of the triangle maps ---
  c.push_back(L("pres-onep-plus", "preservation", "(.1p) preserves +", {},
                "(p:sub + q:sub) . 1p = p . 1p + q . 1p", VALID));
  c.push_back(L("pres-onep-meet", "preservation", "(.1p) preserves &", {},
                "(p:sub & q:sub) . 1p = (p . 1p) & (q . 1p)", VALID));
  c.push_back(L("pres-onep-par", "preservation", "(.1p) preserves ||", {},
                "(p:sub || q:sub) . 1p = (p . 1p) || (q . 1p)", VALID));
  c.push_back(L("pres-univ-plus", "preservation", "(.U) preserves +", {},
                "(p:sub + q:sub) . U = p . U + q . U", VALID));
  c.push_back(L("pres-vec-seq", "preservation", "(.1p) on vectors preserves .", {},
                "(x:vec . y:vec) . 1p = (x . 1p) . (y . 1p)", VALID));
  c.push_back(L("presref-subid-seq-onep", "preservation-refuted",
                "(.1p) on subidentities does not preserve .", {},
                "(p:sub . q:sub) . 1p = (p . 1p) . (q . 1p)", REFUTED,
                W("a", {{"p", "{(a,{a})}"}, {"q", "{}"}})));
  c.push_back(L("presref-subid-seq-univ", "preservation-refuted",
                "(.U) on subidentities does not preserve .", {},
                "(p:sub . q:sub) . U = (p . U) . (q . U)", REFUTED,
                W("a", {{"p", "{(a,{a})}"}, {"q", "{}"}})));
  c.push_back(L("presref-term-seq-dom", "preservation-refuted",
                "d on terminals does not preserve .", {},
                "d(x:term . y:term) = d(x) . d(y)", REFUTED,
                W("a", {{"x", "{(a,{})}"}, {"y", "{}"}})));
  c.push_back(L("presref-term-seq-up", "preservation-refuted",
                "(||U) on terminals does not preserve .", {},
                "(x:term . y:term) || U = (x || U) . (y || U)", REFUTED,
                W("a", {{"x", "{(a,{})}"}, {"y", "{}"}})));
  c.push_back(L("presref-vecN-seq-dom", "preservation-refuted",
                "d on nonterminal vectors does not preserve .",
                {"(x . 1p) || n1p = x", "(y . 1p) || n1p = y"}, "d(x . y) = d(x) . d(y)", REFUTED,
                W("a,b", {{"x", "{(a,{a}),(a,{b}),(a,{a,b})}"},
                          {"y", "{(b,{a}),(b,{b}),(b,{a,b})}"}})));

  // --- the terminal and nonterminal projections ---
  c.push_back(L("tau-def", "definitions", "terminal projection, two routes", {},
                "tau(x) = x . 0", VALID));
  c.push_back(L("nu-def", "definitions", "nonterminal projection, two routes", {},
                "nu(x) = x & n1p", VALID));
  c.push_back(L("dom-def", "definitions", "domain, two routes", {},
                "d(x) = (x . 1p) || 1s", VALID));
  c.push_back(L("up-def", "definitions", "up-closure, two routes", {}, "up(x) = x || U", VALID));
  c.push_back(L("toterm-def", "definitions", "target overwriting, two routes", {},
                "toterm(x) = x . 1p", VALID));
  c.push_back(L("vec-def", "definitions", "vectorization, two routes", {},
                "vec(x) = (x . 1p) || U", VALID));
  c.push_back(L("tau-decreasing", "projection-interior", "tau is an interior operator", {},
                "tau(x) <= x", VALID));
  c.push_back(L("tau-idem", "projection-interior", "tau is an interior operator", {},
                "tau(tau(x)) = tau(x)", VALID));
  c.push_back(L("tau-isotone", "projection-interior", "tau is an interior operator",
                {"x <= y"}, "tau(x) <= tau(y)", VALID));
  c.push_back(L("nu-decreasing", "projection-interior", "nu is an interior operator", {},
                "nu(x) <= x", VALID));
  c.push_back(L("nu-idem", "projection-interior", "nu is an interior operator", {},
                "nu(nu(x)) = nu(x)", VALID));
  c.push_back(L("nu-isotone", "projection-interior", "nu is an interior operator",
                {"x <= y"}, "nu(x) <= nu(y)", VALID));
  c.push_back(L("taunu-join", "projection-interior", "projections split every element", {},
                "tau(x) + nu(x) = x", VALID));
  c.push_back(L("taunu-meet", "projection-interior", "projections are disjoint", {},
                "tau(x) & nu(x) = 0", VALID));
  c.push_back(L("tau-nu-zero", "projection-interior", "projections annihilate each other", {},
                "tau(nu(x)) = 0", VALID));
  c.push_back(L("nu-tau-zero", "projection-interior", "projections annihilate each other", {},
                "nu(tau(x)) = 0", VALID));
  c.push_back(L("up-increasing", "projection-interior", "up-closure is a closure operator", {},
                "x <= up(x)", VALID));
  c.push_back(L("up-idem", "projection-interior", "up-closure is a closure operator", {},
                "up(up(x)) = up(x)", VALID));
  c.push_back(L("up-isotone", "projection-interior", "up-closure is a closure operator",
                {"x <= y"}, "up(x) <= up(y)", VALID));

  c.push_back(L("tau-zero", "projection-consts", "projections of the constants", {}, "tau(0) = 0", VALID));
  c.push_back(L("nu-zero", "projection-consts", "projections of the constants", {}, "nu(0) = 0", VALID));
  c.push_back(L("tau-ones", "projection-consts", "projections of the constants", {}, "tau(1s) = 0", VALID));
  c.push_back(L("nu-ones", "projection-consts", "projections of the constants", {}, "nu(1s) = 1s", VALID));
  c.push_back(L("tau-onep", "projection-consts", "projections of the constants", {}, "tau(1p) = 1p", VALID));
  c.push_back(L("nu-onep", "projection-consts", "projections of the constants", {}, "nu(1p) = 0", VALID));
  c.push_back(L("tau-cop", "projection-consts", "projections of the constants", {}, "tau(n1p) = 0", VALID));
  c.push_back(L("nu-cop", "projection-consts", "projections of the constants", {}, "nu(n1p) = n1p", VALID));
  c.push_back(L("tau-univ", "projection-consts",
                "terminal projection of the top; follows the defining equations U.0 = U & 1p", {},
                "tau(U) = 1p", VALID));
  c.push_back(L("nu-univ", "projection-consts", "projections of the constants", {},
                "nu(U) = n1p", VALID));

  c.push_back(L("tau-plus-hom", "projection-homs", "tau preserves +", {},
                "tau(x + y) = tau(x) + tau(y)", VALID));
  c.push_back(L("nu-plus-hom", "projection-homs", "nu preserves +", {},
                "nu(x + y) = nu(x) + nu(y)", VALID));
  c.push_back(L("tau-meet-hom", "projection-homs", "tau preserves &", {},
                "tau(x & y) = tau(x) & tau(y)", VALID));
  c.push_back(L("nu-meet-hom", "projection-homs", "nu preserves &", {},
                "nu(x & y) = nu(x) & nu(y)", VALID));
  c.push_back(L("tau-par-hom", "projection-homs", "tau preserves ||", {},
                "tau(x || y) = tau(x) || tau(y)", VALID));
  c.push_back(L("nu-par-expand", "projection-homs", "nu of a parallel composition", {},
                "nu(x || y) = d(tau(x)) . nu(y) + d(tau(y)) . nu(x) + nu(x) || nu(y)", VALID));
  c.push_back(L("tau-seq-expand", "projection-homs", "tau of a composition", {},
                "tau(x . y) = tau(x) + nu(x) . tau(y)", VALID));
  c.push_back(L("seq-decomp", "decomposition", "composition split by projections", {},
                "x . y = tau(x) + nu(x) . y", VALID));
  c.push_back(L("par-decomp", "decomposition", "parallel composition split by projections", {},
                "x || y = nu(x) || nu(y) + d(nu(x)) . tau(y) + d(nu(y)) . tau(x) + tau(x) || tau(y)",
                VALID));

  c.push_back(L("tauhom-seq", "projection-refuted", "tau does not preserve .", {},
                "tau(x . y) = tau(x) . tau(y)", REFUTED,
                W("a,b", {{"x", "{(a,{}),(b,{a})}"}, {"y", "{(a,{})}"}})));
  c.push_back(L("nuhom-seq", "projection-refuted", "nu does not preserve .", {},
                "nu(x . y) = nu(x) . nu(y)", REFUTED,
                W("a,b", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{}),(b,{a,b})}"}})));
  c.push_back(L("nuhom-par", "projection-refuted", "nu does not preserve ||", {},
                "nu(x || y) = nu(x) || nu(y)", REFUTED,
                W("a", {{"x", "{(a,{a})}"}, {"y", "{(a,{})}"}})));

  // --- precongruence properties of the projection preorders ---
  c.push_back(L("leqtau-plus", "precongruence", "tau preorder respects +",
                {"tau(x) <= tau(y)"}, "tau(x + z) <= tau(y + z)", VALID));
  c.push_back(L("leqtau-meet", "precongruence", "tau preorder respects &",
                {"tau(x) <= tau(y)"}, "tau(x & z) <= tau(y & z)", VALID));
  c.push_back(L("leqtau-par", "precongruence", "tau preorder respects ||",
                {"tau(x) <= tau(y)"}, "tau(x || z) <= tau(y || z)", VALID));
  c.push_back(L("leqtau-seq-left", "precongruence", "tau preorder respects left multiplication",
                {"tau(x) <= tau(y)"}, "tau(z . x) <= tau(z . y)", VALID));
  c.push_back(L("leqnu-plus", "precongruence", "nu preorder respects +",
                {"nu(x) <= nu(y)"}, "nu(x + z) <= nu(y + z)", VALID));
  c.push_back(L("leqnu-meet", "precongruence", "nu preorder respects &",
                {"nu(x) <= nu(y)"}, "nu(x & z) <= nu(y & z)", VALID));
  c.push_back(L("leqnu-seq-right", "precongruence", "nu preorder respects right multiplication",
                {"nu(x) <= nu(y)"}, "nu(x . z) <= nu(y . z)", VALID));
  c.push_back(L("leqtau-seq-right", "precongruence-refuted",
                "tau preorder does not respect right multiplication",
                {"tau(x) <= tau(y)"}, "tau(x . z) <= tau(y . z)", REFUTED,
                W("a", {{"x", "{(a,{a})}"}, {"y", "{}"}, {"z", "{(a,{})}"}})));
  c.push_back(L("leqnu-par", "precongruence-refuted", "nu preorder does not respect ||",
                {"nu(x) <= nu(y)"}, "nu(x || z) <= nu(y || z)", REFUTED,
                W("a", {{"x", "{(a,{})}"}, {"y", "{}"}, {"z", "{(a,{a})}"}})));
  c.push_back(L("leqnu-seq-left", "precongruence-refuted",
                "nu preorder does not respect left multiplication",
                {"nu(x) <= nu(y)"}, "nu(z . x) <= nu(z . y)", REFUTED,
                W("a,b", {{"x", "{(a,{}),(b,{b})}"}, {"y", "{(b,{b})}"}, {"z", "{(a,{a,b})}"}})));

  // --- order ideals ---
  c.push_back(L("nonterm-downclosed", "ideals", "nonterminals form an order ideal",
                {"y <= x:nonterm"}, "y & n1p = y", VALID));
  c.push_back(L("term-downclosed", "ideals", "terminals form an order ideal",
                {"y <= x:term"}, "y . 1p = y", VALID));
  c.push_back(L("idealref-term-seq", "ideals-refuted",
                "terminal times nonterminal can leave the nonterminals", {},
                "(x:term . y:nonterm) & n1p = x . y", REFUTED,
                W("a", {{"x", "{(a,{})}"}, {"y", "{(a,{a})}"}})));
  c.push_back(L("idealref-seq-term", "ideals-refuted",
                "nonterminal times terminal can leave the nonterminals", {},
                "(y:nonterm . x:term) & n1p = y . x", REFUTED,
                W("a", {{"x", "{(a,{})}"}, {"y", "{(a,{a})}"}})));
  c.push_back(L("idealref-par", "ideals-refuted",
                "terminal parallel nonterminal can leave the terminals", {},
                "(x:term || y:nonterm) . 1p = x || y", REFUTED,
                W("a", {{"x", "{(a,{})}"}, {"y", "{(a,{a})}"}})));

  // --- finite iteration ---
  c.push_back(L("star-unfold", "star", "star unfold", {}, "1s + x . x^* = x^*", VALID));
  c.push_back(L("starb-unfold", "star", "binary star unfold", {},
                "y + x . starb(x, y) = starb(x, y)", VALID));
  c.push_back(L("star-split", "star", "star split by projections", {},
                "x^* = nu(x)^* . (1s + tau(x))", VALID));
  c.push_back(L("star-tau", "star", "star of a terminal part", {},
                "tau(x)^* = 1s + tau(x)", VALID));
  c.push_back(L("star-tau-of", "star", "terminal part of a star", {},
                "tau(x^*) = nu(x^*) . tau(x)", VALID));
  c.push_back(L("star-nu-sub", "star", "nonterminal star under-approximates", {},
                "nu(x)^* <= nu(x^*)", VALID));
  c.push_back(L("star-nu-proj-tau", "star", "projections of a nonterminal star", {},
                "tau(nu(x)^*) = 0", VALID));
  c.push_back(L("star-nu-proj-nu", "star", "projections of a nonterminal star", {},
                "nu(nu(x)^*) = nu(x)^*", VALID));
  c.push_back(L("star-tau-proj-nu", "star", "projections of a terminal star", {},
                "nu(tau(x)^*) = 1s", VALID));
  c.push_back(L("star-tau-proj-tau", "star", "projections of a terminal star", {},
                "tau(tau(x)^*) = tau(x)", VALID));
  c.push_back(L("starref-nu", "star-refuted", "nonterminal star is a strict under-approximation",
                {}, "nu(x^*) <= nu(x)^*", REFUTED,
                W("a,b,c,d", {{"x", "{(a,{b,c}),(b,{}),(c,{d})}"}})));

  // --- infinite iteration ---
  c.push_back(L("omega-unfold", "omega", "omega unfold", {}, "x^w = x . x^w", VALID));
  c.push_back(L("omega-isotone", "omega", "omega is isotone", {"x <= y"}, "x^w <= y^w", VALID));
  c.push_back(L("omega-zero", "omega", "omega of the constants", {}, "0^w = 0", VALID));
  c.push_back(L("omega-onep", "omega", "omega of the constants", {}, "1p^w = 1p", VALID));
  c.push_back(L("omega-ones", "omega", "omega of the constants", {}, "1s^w = U", VALID));
  c.push_back(L("omega-cop", "omega", "omega of the constants", {}, "n1p^w = U", VALID));
  c.push_back(L("omega-univ", "omega", "omega of the constants", {}, "U^w = U", VALID));
  c.push_back(L("tau-below-omega", "omega", "terminal parts survive omega", {},
                "tau(x) <= tau(x^w)", VALID));
  c.push_back(L("tau-omega", "omega", "omega of a terminal part", {}, "tau(x)^w = tau(x)", VALID));
  c.push_back(L("tau-omega-below", "omega", "omega of a terminal part", {},
                "tau(x)^w <= tau(x^w)", VALID));
  c.push_back(L("omega-split-below", "omega", "omega split under-approximation", {},
                "nu(x)^w + nu(x)^* . tau(x) <= x^w", VALID));
  c.push_back(L("omegab-unfold", "omega", "binary omega unfold", {},
                "y + x . omegab(x, y) = omegab(x, y)", VALID));
  c.push_back(L("infty-unfold", "omega", "possibly-infinite iteration unfold", {},
                "1s + x . x^inf = x^inf", VALID));
  c.push_back(L("fusion-below", "omega", "omega with binary star under-approximates binary omega",
                {}, "x^w + starb(x, y) <= omegab(x, y)", VALID));
  c.push_back(L("fusion-eq", "omega-refuted", "the under-approximation is strict", {},
                "x^w + starb(x, y) = omegab(x, y)", REFUTED,
                W("a,b,c", {{"x", "{(a,{b,c}),(b,{a})}"}, {"y", "{(c,{a})}"}})));
  c.push_back(L("infty-vs-omegab", "omega-refuted",
                "binary omega is not a product with the possibly-infinite iteration", {},
                "omegab(x, y) = x^inf . y", REFUTED,
                W("a,b,c", {{"x", "{(a,{b,c}),(b,{a})}"}, {"y", "{(c,{a})}"}})));

  // --- nabla ---
  c.push_back(L("nabla-unfold", "nabla", "nabla is a diamond fixpoint", {},
                "nabla(x) = dia(x, nabla(x))", VALID));
  c.push_back(L("nabla-coinduct", "nabla", "nabla coinduction", {"p:sub <= dia(x, p)"},
                "p <= nabla(x)", VALID));
  c.push_back(L("nuomega-def", "nabla", "omega of a nonterminal part via nabla", {},
                "nu(x)^w = nabla(nu(x)) . U", VALID));
  c.push_back(L("nuomega-nu", "nabla", "nonterminal part of a nonterminal omega", {},
                "nu(nu(x)^w) = nabla(nu(x)) . n1p", VALID));
  c.push_back(L("nuomega-tau", "nabla", "terminal part of a nonterminal omega", {},
                "tau(nu(x)^w) = nabla(nu(x)) . 1p", VALID));
  c.push_back(L("nuomega-approx", "nabla", "omega under-approximation via nabla", {},
                "nabla(nu(x)) . U + nu(x)^* . tau(x) <= x^w", VALID));

  // --- refutations over multirelations ---
  c.push_back(L("mrc-par-idem", "counterexamples", "parallel composition is not contracting", {},
                "x || x <= x", REFUTED, W("a,b", {{"x", "{(a,{a}),(a,{b})}"}})));
  c.push_back(L("mrc-par-expanding", "counterexamples", "parallel composition is not expanding",
                {}, "x <= x || y", REFUTED,
                W("a,b", {{"x", "{(a,{a})}"}, {"y", "{(a,{a,b})}"}})));
  c.push_back(L("mrc-par-meet", "counterexamples", "|| does not subdistribute over &", {},
                "(x || y) & (x || z) <= x || (y & z)", REFUTED,
                W("a,b,c", {{"x", "{(a,{b,c})}"}, {"y", "{(a,{b})}"}, {"z", "{(a,{c})}"}})));
  c.push_back(L("mrc-seq-assoc", "counterexamples", "sequential composition is not associative",
                {}, "x . (y . z) <= (x . y) . z", REFUTED,
                W("a,b,c", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{c}),(b,{c})}"},
                            {"z", "{(c,{a}),(c,{b})}"}})));
  c.push_back(L("mrc-parseq-conv", "counterexamples", "the sub-interchange of || and . is strict",
                {}, "(x . z) || (y . z) <= (x || y) . z", REFUTED,
                W("a,b", {{"x", "{(a,{a})}"}, {"y", "{(a,{a})}"}, {"z", "{(a,{a}),(a,{b})}"}})));
  c.push_back(L("mrc-seqpar-conv", "counterexamples",
                "sub-distributivity of . over || is strict even for parallel idempotents",
                {"x || x <= x", "y || y <= y", "z || z <= z"},
                "(x . y) || (x . z) <= x . (y || z)", REFUTED,
                W("a", {{"x", "{(a,{}),(a,{a})}"}, {"y", "{(a,{a})}"}, {"z", "{}"}})));

  // --- interchange refutations ---
  c.push_back(L("ic1-le", "interchange-refuted", "no interchange law", {},
                "(w || x) . (y || z) <= (w . y) || (x . z)", REFUTED,
                W("a,b", {{"w", "{(a,{a}),(b,{a,b})}"}, {"x", "{(a,{b}),(b,{a})}"},
                          {"y", "{(a,{a}),(b,{a,b})}"}, {"z", "{(a,{b}),(b,{a})}"}})));
  c.push_back(L("ic1-ge", "interchange-refuted", "no interchange law", {},
                "(w . y) || (x . z) <= (w || x) . (y || z)", REFUTED,
                W("a,b", {{"w", "{(a,{a}),(b,{a,b})}"}, {"x", "{(a,{b}),(b,{a})}"},
                          {"y", "{(a,{a}),(b,{a,b})}"}, {"z", "{(a,{b}),(b,{a})}"}})));
  c.push_back(L("ic2-le", "interchange-refuted", "no small interchange law", {},
                "(x || y) . z <= x || (y . z)", REFUTED,
                W("a,b", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{a,b})}"},
                          {"z", "{(a,{a}),(b,{a})}"}})));
  c.push_back(L("ic2-ge", "interchange-refuted", "no small interchange law", {},
                "x || (y . z) <= (x || y) . z", REFUTED,
                W("a,b", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{a,b})}"},
                          {"z", "{(a,{a}),(b,{a})}"}})));
  c.push_back(L("ic3-le", "interchange-refuted", "no small interchange law", {},
                "x . (y || z) <= (x . y) || z", REFUTED,
                W("a,b", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{a}),(b,{a})}"},
                          {"z", "{(a,{a}),(b,{a,b})}"}})));
  c.push_back(L("ic3-ge", "interchange-refuted", "no small interchange law", {},
                "(x . y) || z <= x . (y || z)", REFUTED,
                W("a,b", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{a}),(b,{a})}"},
                          {"z", "{(a,{a}),(b,{a,b})}"}})));
  c.push_back(L("ic4-le", "interchange-refuted", "composition is not below parallel composition",
                {}, "x . y <= x || y", REFUTED,
                W("a,b", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{a}),(b,{a})}"}})));
  c.push_back(L("ic4-ge", "interchange-refuted", "parallel composition is not below composition",
                {}, "x || y <= x . y", REFUTED,
                W("a,b", {{"x", "{(a,{a,b})}"}, {"y", "{(a,{a}),(b,{a})}"}})));

  // --- refutations over the builtin algebra ---
  c.push_back(L("algref-par-seq-dom", "algebra-refuted",
                "interchange at domain elements fails abstractly", {},
                "(x || y) . d(z) = (x . d(z)) || (y . d(z))", REFUTED,
                W("", {{"x", "a"}, {"y", "1p"}, {"z", "0"}}), Model::Algebra));
  c.push_back(L("algref-assoc-dom", "algebra-refuted",
                "associativity at domain elements fails abstractly", {},
                "(x . y) . d(z) = x . (y . d(z))", REFUTED,
                W("", {{"x", "a"}, {"y", "1p"}, {"z", "0"}}), Model::Algebra));
  c.push_back(L("algref-dia-seq", "algebra-refuted",
                "the composition diamond law fails abstractly", {},
                "dia(x . y, p) = dia(x, dia(y, p))", REFUTED,
                W("", {{"x", "a"}, {"y", "1p"}, {"p", "0"}}), Model::Algebra));
  c.push_back(L("algref-dia-par", "algebra-refuted",
                "the parallel diamond law fails abstractly", {},
                "dia(x || y, p) = dia(x, p) . dia(y, p)", REFUTED,
                W("", {{"x", "a"}, {"y", "1p"}, {"p", "0"}}), Model::Algebra));
  c.push_back(L("algref-onep-left", "algebra-refuted",
                "left absorption by the parallel unit fails abstractly", {},
                "1p . x = 1p", REFUTED, W("", {{"x", "0"}}), Model::Algebra));

  return c;
}

}  // namespace

const std::vector<Law>& catalog() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> built = build();
    for (auto& law : built) {
      try {
        law.concl = parse_cond(law.conclusion);
        for (const auto& h : law.hypotheses) law.hyps.push_back(parse_cond(h));
        law.vars = cond_vars(law.concl);
        for (const auto& h : law.hyps) {
          std::map<std::string, Sort> hv;
          collect_vars(h.lhs, hv);
          collect_vars(h.rhs, hv);
          for (const auto& [name, sort] : hv) {
            auto [it, inserted] = law.vars.emplace(name, sort);
            if (!inserted) {
              if (it->second == Sort::General) it->second = sort;
              else if (sort != Sort::General && sort != it->second)
                throw std::invalid_argument("conflicting sorts for variable " + name);
            }
          }
        }
      } catch (const std::exception& e) {
        throw std::logic_error("catalog entry " + law.name + ": " + e.what());
      }
    }
    return built;
  }();
  return laws;
}

const Law& catalog_law(const std::string& name) {
  for (const auto& law : catalog())
    if (law.name == name) return law;
  throw std::invalid_argument("no catalog law named " + name);
}

std::vector<const Law*> catalog_group(const std::string& group) {
  std::vector<const Law*> out;
  for (const auto& law : catalog())
    if (law.group == group) out.push_back(&law);
  return out;
}

}  // namespace mra
