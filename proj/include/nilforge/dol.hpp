#ifndef NILFORGE_DOL_HPP
#define NILFORGE_DOL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilforge::dol {

// Level sequence of the interior nodes of an internal edge that has been
// subdivided k times: EdgeLevels(1)=1, EdgeLevels(k)=EdgeLevels(k-1) 3 EdgeLevels(k-1),
// with the twist that levels cap at 3. Length 2^k - 1.
std::vector<int> edge_levels(int k);

// Bumps every level (1->2, 2->3, 3->3) and interleaves fresh 1s at both ends
// and between all entries. Maps EdgeLevels(k) to EdgeLevels(k+1).
std::vector<int> renumber_step(const std::vector<int>& s);

// Letters of the substitution system used for the square-freeness argument.
enum class DolLetter : uint8_t { U1 = 0, L1 = 1, U = 2, L = 3 };

using DolWord = std::vector<DolLetter>;

// U1 -> U1 U L1,  L1 -> U1 L L1,  U -> U,  L -> L.
DolWord dol_step(const DolWord& w);

// n-fold iteration of dol_step on a single-letter seed.
DolWord dol_iterate(DolLetter seed, int n);

std::string to_string(const DolWord& w);
std::optional<DolWord> parse_dol(const std::string& s);

// Finds Q with QQ a factor of w, if any. Naive O(n^2) scan, adequate at the
// scales we run; there is also a linear-time path checked against this one.
std::optional<DolWord> has_adjacent_repeat(const DolWord& w);

// Main-and-divide square detector used as the fast path for long words.
// Oracle-checked against has_adjacent_repeat in the tests.
bool has_square_fast(const DolWord& w);

// True iff `needle` occurs as a factor of `hay`.
bool is_factor(const DolWord& hay, const DolWord& needle);

// True iff w occurs as a factor of f^n(U1) or f^n(L1) for the smallest n
// whose image is long enough to decide (images are factor-monotone).
bool is_dol_factor(const DolWord& w);

}  // namespace nilforge::dol

#endif
