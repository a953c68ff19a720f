#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mra {

/// Names of all stored reproductions: one "witness:<law>" entry per catalog
/// law with a stored counterexample, plus the value-level reproductions of
/// the iteration and up-closure counterexamples.
std::vector<std::string> repro_names();

/// Replays one reproduction, printing PASS/FAIL with detail. Returns pass.
bool run_repro(const std::string& name, std::ostream& out);

/// Replays everything; returns the number of failures.
int run_all_repro(std::ostream& out);

}  // namespace mra
