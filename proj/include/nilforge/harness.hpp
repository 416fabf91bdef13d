#ifndef NILFORGE_HARNESS_HPP
#define NILFORGE_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nilforge/rewrite.hpp"

namespace nilforge {

struct Report {
  std::string name;
  std::string scope;
  enum Verdict { PASS, FAIL, UNKNOWN } verdict = PASS;
  std::string witness;
  long long millis = 0;
};

const char* verdict_str(Report::Verdict v);

// Structural laws: tile counts, the eight interior edges, EdgeLevels bridge,
// pasting corner law, distance laws.
std::vector<Report> cmd_verify_structure(int level);

std::vector<Report> cmd_verify_determinism(int level, int env_radius = 2);

// Nil property at desk scale: W^9 for closed-path words, seam factors for
// open ones.
std::vector<Report> cmd_nil_check(int level, int max_edges, long long budget);

// Two-adjacent-sides perimeter words per macrotile level: counts by length,
// bounded non-collapse, monotone inclusion.
std::vector<Report> cmd_growth_census(int level, long long budget);

// Serializes reports, one line each; returns the process exit code
// (0 all pass, 1 any fail, 2 unknowns only).
int write_reports(const std::vector<Report>& reports, std::ostream& os);

}  // namespace nilforge

#endif
