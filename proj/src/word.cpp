#include "nilforge/word.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#ifdef NILFORGE_OPENMP
#include <omp.h>
#endif

namespace nilforge {

std::vector<Id> Path::vertex_seq(const Complex& cx) const {
  std::vector<Id> out{start};
  for (const auto& h : edges) out.push_back(cx.he_to(h));
  return out;
}

std::string word_text(const Word& w, const Alphabet& ab) {
  if (w.zero) return "0";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += ab.token(w.letters[i]);
  }
  return s;
}

std::string word_text(const Word& w, const Alphabet& ab, size_t max_chars) {
  std::string s = word_text(w, ab);
  if (s.size() > max_chars) {
    s.resize(max_chars);
    s += "...";
  }
  return s;
}

std::optional<Word> parse_word(const std::string& text, Alphabet& ab) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "0" && w.letters.empty()) {
      w.zero = true;
      return w;
    }
    try {
      w.letters.push_back(ab.intern(tok));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return w;
}

namespace {
// Family expected after f: Y -> Z -> X -> Y.
char next_family(char f) {
  switch (f) {
    case 'Y': return 'Z';
    case 'Z': return 'X';
    default: return 'Y';
  }
}
}  // namespace

bool well_formed(const Word& w, const Alphabet& ab) {
  if (w.zero) return false;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    char f = ab.meta(w.letters[i]).family;
    char g = ab.meta(w.letters[i + 1]).family;
    if (g != next_family(f)) return false;
  }
  return true;
}

Word encode(const Coloring& col, const Path& p) {
  const Complex& cx = col.complex();
  Word w;
  w.letters.push_back(col.vertex_letter(p.start));
  for (const auto& h : p.edges) {
    w.letters.push_back(col.edge_letter(h, true));
    w.letters.push_back(col.edge_letter(h, false));
    w.letters.push_back(col.vertex_letter(cx.he_to(h)));
  }
  return w;
}

std::vector<Path> embeddings(const Coloring& col, const Word& w, size_t limit) {
  std::vector<Path> out;
  if (w.zero || w.letters.empty()) return out;
  const Complex& cx = col.complex();
  const Alphabet& ab = col.alphabet();

  // Locate the first node letter; words without one ("Z", "Z X", "X") anchor
  // on the edge instead.
  int y0 = -1;
  for (int i = 0; i < static_cast<int>(w.letters.size()) && i < 3; ++i) {
    if (ab.meta(w.letters[i]).family == 'Y') {
      y0 = i;
      break;
    }
  }

  // Walks right from vertex v consuming letters [i..n); i points at the
  // letter right after the Y of v.
  std::function<void(Path&, Id, size_t)> walk = [&](Path& pref, Id v, size_t i) {
    if (out.size() >= limit) return;
    const size_t n = w.letters.size();
    if (i >= n) {
      out.push_back(pref);
      return;
    }
    for (const auto& h : cx.out_edges(v)) {
      if (col.edge_letter(h, true) != w.letters[i]) continue;
      if (i + 1 < n && col.edge_letter(h, false) != w.letters[i + 1]) continue;
      Id u = cx.he_to(h);
      if (i + 2 < n && col.vertex_letter(u) != w.letters[i + 2]) continue;
      pref.edges.push_back(h);
      walk(pref, u, i + 3);
      pref.edges.pop_back();
      if (out.size() >= limit) return;
    }
  };

  if (y0 < 0) {
    // Pure edge-letter fragment (at most "Z X" or "X"); anchor on all edges.
    for (const Carrier& c : cx.carriers) {
      for (int64_t seg = 0; seg < c.len(); ++seg) {
        for (bool fwd : {true, false}) {
          Complex::HalfEdge h{c.id, seg, fwd};
          const auto& m0 = ab.meta(w.letters[0]);
          bool ok = false;
          if (m0.family == 'Z' && col.edge_letter(h, true) == w.letters[0]) {
            ok = w.letters.size() < 2 || col.edge_letter(h, false) == w.letters[1];
          } else if (m0.family == 'X' && col.edge_letter(h, false) == w.letters[0]) {
            ok = w.letters.size() < 2;
          }
          if (ok) {
            out.push_back(Path{cx.he_from(h), {h}});
            if (out.size() >= limit) return out;
          }
        }
      }
    }
    return out;
  }

  for (Id v : col.vertices_with_letter(w.letters[y0])) {
    // Extend left over the ragged prefix (X before the Y, maybe Z before it).
    std::vector<std::vector<Complex::HalfEdge>> prefixes;
    if (y0 == 0) {
      prefixes.push_back({});
    } else {
      for (const auto& h : cx.out_edges(v)) {
        auto hr = cx.he_reverse(h);  // an edge arriving at v
        if (col.edge_letter(hr, false) != w.letters[y0 - 1]) continue;
        if (y0 >= 2 && col.edge_letter(hr, true) != w.letters[y0 - 2]) continue;
        prefixes.push_back({hr});
      }
    }
    for (const auto& pre : prefixes) {
      Path p;
      p.start = pre.empty() ? v : cx.he_from(pre[0]);
      p.edges = pre;
      walk(p, v, static_cast<size_t>(y0) + 1);
      if (out.size() >= limit) break;
    }
    if (out.size() >= limit) break;
  }
  return out;
}

bool realizable(const Coloring& col, const Word& w) {
  return !embeddings(col, w, 1).empty();
}

namespace {

void enum_from(const Coloring& col, Id start, int max_edges, std::set<Word>& acc) {
  const Complex& cx = col.complex();
  Word w;
  w.letters.push_back(col.vertex_letter(start));
  acc.insert(w);
  std::function<void(Id, Word&, int)> dfs = [&](Id v, Word& cur, int depth) {
    if (depth == max_edges) return;
    for (const auto& h : cx.out_edges(v)) {
      Id u = cx.he_to(h);
      cur.letters.push_back(col.edge_letter(h, true));
      cur.letters.push_back(col.edge_letter(h, false));
      cur.letters.push_back(col.vertex_letter(u));
      acc.insert(cur);
      dfs(u, cur, depth + 1);
      cur.letters.resize(cur.letters.size() - 3);
    }
  };
  dfs(start, w, 0);
}

}  // namespace

std::set<Word> enumerate_words_serial(const Coloring& col, int max_edges) {
  std::set<Word> acc;
  for (Id v = 0; v < static_cast<Id>(col.complex().vertices.size()); ++v) {
    enum_from(col, v, max_edges, acc);
  }
  return acc;
}

std::set<Word> enumerate_words(const Coloring& col, int max_edges) {
#ifdef NILFORGE_OPENMP
  int shards = 1;
#pragma omp parallel
  {
#pragma omp single
    shards = omp_get_num_threads();
  }
  if (shards <= 1) return enumerate_words_serial(col, max_edges);
  const int64_t n = static_cast<int64_t>(col.complex().vertices.size());
  std::vector<std::set<Word>> acc(shards);
#pragma omp parallel num_threads(shards)
  {
    int s = omp_get_thread_num();
    for (int64_t v = s; v < n; v += shards) {
      enum_from(col, static_cast<Id>(v), max_edges, acc[s]);
    }
  }
  std::set<Word>& out = acc[0];
  for (int s = 1; s < shards; ++s) out.merge(acc[s]);
  return std::move(out);
#else
  return enumerate_words_serial(col, max_edges);
#endif
}

std::set<Word> enumerate_closed_words(const Coloring& col, int max_edges) {
  const Complex& cx = col.complex();
  std::set<Word> acc;
  for (Id start = 0; start < static_cast<Id>(cx.vertices.size()); ++start) {
    Word w;
    w.letters.push_back(col.vertex_letter(start));
    std::function<void(Id, Word&, int)> dfs = [&](Id v, Word& cur, int depth) {
      if (depth >= max_edges) return;
      for (const auto& h : cx.out_edges(v)) {
        Id u = cx.he_to(h);
        cur.letters.push_back(col.edge_letter(h, true));
        cur.letters.push_back(col.edge_letter(h, false));
        if (u == start && depth + 1 >= 2) {
          acc.insert(cur);  // final node letter dropped: powers concatenate
        }
        cur.letters.push_back(col.vertex_letter(u));
        dfs(u, cur, depth + 1);
        cur.letters.resize(cur.letters.size() - 3);
      }
    };
    dfs(start, w, 0);
  }
  return acc;
}

Word concat(const Word& a, const Word& b) {
  if (a.zero || b.zero) return Word::make_zero();
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word power(const Word& w, int n) {
  Word out;
  if (w.zero) return Word::make_zero();
  for (int i = 0; i < n; ++i) out = concat(out, w);
  return out;
}

std::optional<dol::DolWord> project_edge_word(const Word& w, const Alphabet& ab) {
  dol::DolWord out;
  for (int32_t l : w.letters) {
    const LetterMeta& m = ab.meta(l);
    if (m.family != 'Y') continue;
    if (m.vkind != static_cast<uint8_t>(VKind::Side)) return std::nullopt;
    auto a = static_cast<SideLabel>(m.a), b = static_cast<SideLabel>(m.b);
    bool ul = a == SideLabel::U && b == SideLabel::L;
    bool lu = a == SideLabel::L && b == SideLabel::U;
    if (!ul && !lu) return std::nullopt;
    bool fresh = m.level == 1;
    out.push_back(ul ? (fresh ? dol::DolLetter::U1 : dol::DolLetter::U)
                     : (fresh ? dol::DolLetter::L1 : dol::DolLetter::L));
  }
  return out;
}

std::vector<Path> two_side_paths(const Complex& cx, const Tile& tl) {
  std::vector<Path> out;
  auto walk_side = [&](int k) {
    TileSide s = tl.side[k];
    int shift = cx.step - s.at_step;
    int64_t a = s.a << shift, b = s.b << shift;
    std::vector<Complex::HalfEdge> es;
    if (a < b) {
      for (int64_t q = a; q < b; ++q) es.push_back({s.carrier, q, true});
    } else {
      for (int64_t q = a; q > b; --q) es.push_back({s.carrier, q - 1, false});
    }
    return es;
  };
  for (int k = 0; k < 4; ++k) {
    Path p;
    p.start = tl.corner[k];
    auto e1 = walk_side(k);
    auto e2 = walk_side((k + 1) % 4);
    p.edges = e1;
    p.edges.insert(p.edges.end(), e2.begin(), e2.end());
    out.push_back(p);
  }
  return out;
}

}  // namespace nilforge
