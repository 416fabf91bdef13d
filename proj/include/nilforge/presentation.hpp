#ifndef NILFORGE_PRESENTATION_HPP
#define NILFORGE_PRESENTATION_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "nilforge/word.hpp"

namespace nilforge {

struct EqRel {
  Word left, right;
  bool operator<(const EqRel& o) const {
    if (!(left == o.left)) return left < o.left;
    return right < o.right;
  }
  bool operator==(const EqRel& o) const { return left == o.left && right == o.right; }
};

struct DeterminismReport {
  bool pass = true;
  bool vacuous = false;
  // On failure: the shared two-edge encoding and two distinct complements.
  Word key, complement_a, complement_b;
  size_t groups = 0;
};

struct PresentationOptions {
  int cat2_edges = 4;  // category-2 length bound, in path edges
  int env_radius = 2;
};

// Answers "is this word a coding of some path": exact when backed by a
// complex, factor-based when reloaded from a file.
class RealizabilityOracle {
 public:
  virtual ~RealizabilityOracle() = default;
  virtual bool realizable(const Word& w) const = 0;
};

class Presentation {
 public:
  Alphabet alphabet;
  int complex_level = 0;
  PresentationOptions opts;

  std::set<Word> realizable_words;  // Y...Y encodings, <= cat2_edges edges
  std::set<Word> cat3;
  std::set<Word> cat4;
  std::vector<EqRel> cat5;

  // Optional exact oracle (set when generated from a complex).
  std::shared_ptr<const Coloring> backing;

  bool is_cat1_zero(const Word& w) const;
  bool is_cat3_zero(const Word& w) const { return cat3.count(w) > 0; }
  bool is_cat4_zero(const Word& w) const { return cat4.count(w) > 0; }
  // Cat-2 test for whole words: short, well-formed, not realizable.
  bool is_cat2_zero(const Word& w) const;
  bool word_realizable(const Word& w) const;

  size_t edge_count(const Word& w) const;  // path edges covered by w

  std::set<size_t> cat3_lengths() const;
  std::set<size_t> cat4_lengths() const;
};

// Categories 1-4 plus the tile-flip equalities; aborts if the determinism
// check fails (category 5 is only sound under it).
Presentation generate_presentation(std::shared_ptr<const Coloring> col,
                                   PresentationOptions opts = {});

// The environment content is a stand-in for the one the paper defers to its
// second part, so the radius and boss-chain depth are searched: starting
// from the configured values, escalate until the determinism check passes.
struct ColoringSearch {
  std::shared_ptr<Coloring> coloring;
  int env_radius = 0;
  int info_depth = 0;
  bool pass = false;
};
ColoringSearch find_deterministic_coloring(std::shared_ptr<const Complex> cx,
                                           ColoringOptions base = {});

DeterminismReport determinism_check(const Coloring& col);
DeterminismReport determinism_check_serial(const Coloring& col);

std::set<Word> gen_cat3(const Coloring& col);
std::set<Word> gen_cat4(const Coloring& col);
std::vector<EqRel> gen_cat5(const Coloring& col, const std::set<Word>& cat4);

void export_presentation(const Presentation& p, std::ostream& os);

struct ImportError {
  int line = 0;
  std::string message;
};
// Parses what export_presentation wrote. On failure returns the offending
// line number.
std::optional<Presentation> import_presentation(std::istream& is, ImportError* err = nullptr);

}  // namespace nilforge

#endif
