#include "mra/repro.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "mra/catalog.hpp"
#include "mra/fixpoint.hpp"
#include "mra/json_io.hpp"

namespace mra {

namespace {

struct Special {
  const char* name;
  const char* description;
  std::function<bool(std::ostream&)> run;
};

// The two-element-cycle relation with a side entry, the running example for
// the gap between binary omega and everything built from unary iteration.
struct CycleExample {
  UniversePtr u = make_universe({"a", "b", "c"});
  Mrel x = parse_mrel_literal(u, "{(a,{b,c}),(b,{a})}");
  Mrel y = parse_mrel_literal(u, "{(c,{a})}");
};

const std::vector<Special>& specials() {
  static const std::vector<Special> items = {
      {"omega-binary-strict",
       "x^w + starb(x,y) is strictly below omegab(x,y) at the cycle example",
       [](std::ostream& out) {
         CycleExample e;
         const Mrel om = omega(e.x);
         if (!om.is_empty()) {
           out << "    expected x^w = {}, got " << to_string(om) << '\n';
           return false;
         }
         const Mrel lo = join(om, star_binary(e.x, e.y));
         const Mrel hi = omega_binary(e.x, e.y);
         if (!(is_subset(lo, hi) && !(lo == hi))) {
           out << "    expected strict inclusion, got lower " << to_string(lo)
               << " vs upper " << to_string(hi) << '\n';
           return false;
         }
         return true;
       }},
      {"infinity-vs-omega-binary",
       "omegab(x,y) differs from x^inf . y at the cycle example",
       [](std::ostream& out) {
         CycleExample e;
         const Mrel lhs = omega_binary(e.x, e.y);
         const Mrel rhs = seq(infinity(e.x), e.y);
         if (lhs == rhs) {
           out << "    expected a difference, both are " << to_string(lhs) << '\n';
           return false;
         }
         return true;
       }},
      {"upclosed-peleg",
       "choice-function composition of up-closed arguments can leave the up-closed class",
       [](std::ostream& out) {
         const auto u = make_universe({"a"});
         const Mrel r = up_closure(parse_mrel_literal(u, "{(a,{})}"));
         const Mrel s = Mrel::empty(u);
         const Mrel product = seq(r, s);
         if (!(product == parse_mrel_literal(u, "{(a,{})}"))) {
           out << "    expected {(a,{})}, got " << to_string(product) << '\n';
           return false;
         }
         if (is_in_class(product, ClassTag::UpClosed)) {
           out << "    product unexpectedly up-closed\n";
           return false;
         }
         return true;
       }},
  };
  return items;
}

}  // namespace

std::vector<std::string> repro_names() {
  std::vector<std::string> names;
  for (const auto& law : catalog())
    if (law.witness) names.push_back("witness:" + law.name);
  for (const auto& s : specials()) names.push_back(s.name);
  return names;
}

bool run_repro(const std::string& name, std::ostream& out) {
  if (name.rfind("witness:", 0) == 0) {
    const Law& law = catalog_law(name.substr(8));
    std::string why;
    const bool ok = replay_witness(law, &why);
    out << (ok ? "PASS" : "FAIL") << ' ' << name;
    if (!ok) out << " (" << why << ')';
    out << '\n';
    return ok;
  }
  for (const auto& s : specials()) {
    if (name == s.name) {
      std::ostringstream detail;
      const bool ok = s.run(detail);
      out << (ok ? "PASS" : "FAIL") << ' ' << name << '\n' << detail.str();
      return ok;
    }
  }
  out << "FAIL " << name << " (unknown reproduction)\n";
  return false;
}

int run_all_repro(std::ostream& out) {
  int failures = 0;
  for (const auto& name : repro_names())
    if (!run_repro(name, out)) ++failures;
  return failures;
}

}  // namespace mra
