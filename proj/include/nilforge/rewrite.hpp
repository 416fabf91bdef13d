#ifndef NILFORGE_REWRITE_HPP
#define NILFORGE_REWRITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilforge/presentation.hpp"

namespace nilforge {

struct RewriteStep {
  enum Kind : uint8_t { ZeroCat1 = 1, ZeroCat2 = 2, ZeroCat3 = 3, ZeroCat4 = 4, Flip = 5 };
  Kind kind = Flip;
  size_t pos = 0;
  size_t len = 0;       // matched factor length (zero steps)
  int32_t rel = -1;     // cat-5 relation index
  bool left_to_right = true;
};

struct Verdict {
  enum Kind { Zero, Irreducible, Unknown } kind = Unknown;
  std::vector<RewriteStep> trace;  // Zero: replayable from the input word
  Word final_word;                 // Irreducible: a fixed representative
  size_t frontier = 0;
  long long expansions = 0;
};

struct ZeroHit {
  RewriteStep::Kind cat;
  size_t pos, len;
};

// First monomial relation (categories 1..4) firing inside w, if any.
std::optional<ZeroHit> find_zero_factor(const Word& w, const Presentation& p);

// Applies one step. Zero steps return the zero word; flips splice the paired
// side in. Rejects steps whose pattern does not match.
std::optional<Word> apply(const Word& w, const RewriteStep& step, const Presentation& p);

// True iff replaying `trace` from w ends at zero using only relations of p.
bool replay_to_zero(const Word& w, const std::vector<RewriteStep>& trace, const Presentation& p);

// One-step successors; {zero} if any monomial relation fires.
std::vector<Word> neighbors(const Word& w, const Presentation& p);

enum class Strategy { Pipeline, Bfs };

Verdict reduces_to_zero(const Word& w, const Presentation& p, long long budget,
                        Strategy strategy = Strategy::Pipeline);

// Bracket projection per letter: '[' for outgoing non-main or pasting-entry
// letters, ']' for incoming non-main or pasting-exit letters.
struct BracketProjection {
  std::string brackets;        // over "[ ]"
  std::vector<size_t> source;  // positions in the word
};
BracketProjection bracket_structure(const Word& w, const Alphabet& ab);

// Rewrites the factor spanned by an adjacent "[ ]" pair to a form with fewer
// brackets, or reports Zero/Unknown. Outermost brackets are never consumed.
struct BracketResult {
  enum Kind { Rewritten, ZeroFound, Exhausted, NoPair } kind = NoPair;
  Word word;
  Verdict verdict;
  std::vector<RewriteStep> steps;  // whole-word frame, replayable
};
BracketResult eliminate_innermost_bracket_pair(const Word& w, const Presentation& p,
                                               long long budget);

struct RankDiagram {
  std::vector<int> ranks;      // one per node letter; 0 when not fixed by the word
  std::vector<bool> exact;
  bool consistent = true;      // levels form a factor of some EdgeLevels(k)
};
RankDiagram rank_diagram(const Word& w, const Alphabet& ab);

// Minimal centered dyadic factor around node i whose left end carries CUR
// and right end CDL in the pasted type; windows of 5, 9, 17, ... nodes.
struct WordRepResult {
  enum Kind { Found, ZeroCandidate, OutOfMargin, BadInput } kind = BadInput;
  Word factor;
  size_t node_letters = 0;
};
WordRepResult word_representative(const Word& w, size_t node_index, const Presentation& p);

// Either an embedding of a side-node main-edge word on the backing complex,
// a zero verdict, or Unknown.
struct RealizeResult {
  enum Kind { Embedded, ZeroFound, Unknown } kind = Unknown;
  std::optional<Path> embedding;
};
RealizeResult realize_edge_word(const Word& w, const Presentation& p, long long budget);

Verdict reduce_pipeline(const Word& w, const Presentation& p, long long budget);

// Exhaustive closure under neighbors, capped. Reports whether zero was
// reached and whether the closure was complete within the cap.
struct ClosureResult {
  bool reached_zero = false;
  bool complete = false;
  size_t states = 0;
};
ClosureResult neighbor_closure(const Word& w, const Presentation& p, size_t max_states);

}  // namespace nilforge

#endif
