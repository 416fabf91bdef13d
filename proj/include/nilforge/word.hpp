#ifndef NILFORGE_WORD_HPP
#define NILFORGE_WORD_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilforge/coloring.hpp"
#include "nilforge/dol.hpp"

namespace nilforge {

// A directed edge path. Vertices are implied by the edges plus `start`
// (which alone encodes a 0-edge path).
struct Path {
  Id start = kNone;
  std::vector<Complex::HalfEdge> edges;

  std::vector<Id> vertex_seq(const Complex& cx) const;
};

// A word over an Alphabet, or the distinguished zero.
struct Word {
  bool zero = false;
  std::vector<int32_t> letters;

  static Word make_zero() { return Word{true, {}}; }
  bool operator==(const Word& o) const { return zero == o.zero && letters == o.letters; }
  bool operator<(const Word& o) const {
    if (zero != o.zero) return zero < o.zero;
    return letters < o.letters;
  }
  size_t size() const { return letters.size(); }
};

std::string word_text(const Word& w, const Alphabet& ab);
std::string word_text(const Word& w, const Alphabet& ab, size_t max_chars);
std::optional<Word> parse_word(const std::string& text, Alphabet& ab);

// Alternation shape: positions 1,4,7,... (1-based) carry node letters.
bool well_formed(const Word& w, const Alphabet& ab);

// Word of length 3k+1 for a k-edge path: Y Z X Y ... Y.
Word encode(const Coloring& col, const Path& p);

// All paths whose encoding contains w as a factor in the proper alignment;
// for full Y...Y encodings this is exactly encode(p) == w. Words must be
// well-formed and nonzero.
std::vector<Path> embeddings(const Coloring& col, const Word& w, size_t limit = SIZE_MAX);

bool realizable(const Coloring& col, const Word& w);

// Encodings of all directed paths with at most max_edges edges.
std::set<Word> enumerate_words(const Coloring& col, int max_edges);
std::set<Word> enumerate_words_serial(const Coloring& col, int max_edges);

// Encodings of all directed closed paths (start == end) with exactly 2..max
// edges, reported with the final node letter dropped so that powers
// concatenate cleanly.
std::set<Word> enumerate_closed_words(const Coloring& col, int max_edges);

Word concat(const Word& a, const Word& b);
Word power(const Word& w, int n);

// Projects a side-node word onto the substitution alphabet: UL nodes to
// U/U1, LU nodes to L/L1 by level, edge letters dropped. Rejects words with
// node letters of any other type.
std::optional<dol::DolWord> project_edge_word(const Word& w, const Alphabet& ab);

// The two-adjacent-sides perimeter paths of a tile (one per starting
// corner), each covering two full sides.
std::vector<Path> two_side_paths(const Complex& cx, const Tile& tl);

}  // namespace nilforge

#endif
