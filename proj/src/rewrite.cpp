#include "nilforge/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "nilforge/dol.hpp"

namespace nilforge {

namespace {

char next_family(char f) {
  switch (f) {
    case 'Y': return 'Z';
    case 'Z': return 'X';
    default: return 'Y';
  }
}

struct WordHash {
  size_t operator()(const Word& w) const {
    return static_cast<size_t>(
        fnv1a(w.letters.data(), w.letters.size() * sizeof(int32_t), w.zero ? 7 : 11));
  }
};

bool slice_in(const std::set<Word>& s, const Word& w, size_t pos, size_t len) {
  Word f;
  f.letters.assign(w.letters.begin() + pos, w.letters.begin() + pos + len);
  return s.count(f) > 0;
}

}  // namespace

std::optional<ZeroHit> find_zero_factor(const Word& w, const Presentation& p) {
  if (w.zero || w.letters.empty()) return std::nullopt;
  const Alphabet& ab = p.alphabet;
  const size_t n = w.letters.size();

  // Category 1: alternation violations are two-letter factors.
  for (size_t i = 0; i + 1 < n; ++i) {
    if (ab.meta(w.letters[i + 1]).family != next_family(ab.meta(w.letters[i]).family)) {
      return ZeroHit{RewriteStep::ZeroCat1, i, 2};
    }
  }
  // Categories 3 and 4 are explicit factor sets.
  for (size_t len : p.cat3_lengths()) {
    for (size_t i = 0; i + len <= n; ++i) {
      if (slice_in(p.cat3, w, i, len)) return ZeroHit{RewriteStep::ZeroCat3, i, len};
    }
  }
  for (size_t len : p.cat4_lengths()) {
    for (size_t i = 0; i + len <= n; ++i) {
      if (slice_in(p.cat4, w, i, len)) return ZeroHit{RewriteStep::ZeroCat4, i, len};
    }
  }
  // Category 2: a minimal unrealizable factor within the edge bound. The
  // two-pointer works because factors of realizable words are realizable.
  const size_t max_letters = 3 * static_cast<size_t>(p.opts.cat2_edges) + 1;
  size_t j = 0;  // w[i..j) known realizable
  for (size_t i = 0; i < n; ++i) {
    if (j < i) j = i;
    while (j < n && j - i < max_letters + 1) {
      Word f;
      f.letters.assign(w.letters.begin() + i, w.letters.begin() + j + 1);
      if (!p.word_realizable(f)) break;
      ++j;
    }
    if (j < n && j - i < max_letters) {
      Word f;
      f.letters.assign(w.letters.begin() + i, w.letters.begin() + j + 1);
      if (p.edge_count(f) <= static_cast<size_t>(p.opts.cat2_edges)) {
        return ZeroHit{RewriteStep::ZeroCat2, i, j + 1 - i};
      }
    }
  }
  return std::nullopt;
}

std::optional<Word> apply(const Word& w, const RewriteStep& step, const Presentation& p) {
  if (w.zero) return std::nullopt;
  if (step.kind != RewriteStep::Flip) {
    if (step.pos + step.len > w.letters.size()) return std::nullopt;
    Word f;
    f.letters.assign(w.letters.begin() + step.pos, w.letters.begin() + step.pos + step.len);
    bool ok = false;
    switch (step.kind) {
      case RewriteStep::ZeroCat1: ok = p.is_cat1_zero(f); break;
      case RewriteStep::ZeroCat2: ok = p.is_cat2_zero(f); break;
      case RewriteStep::ZeroCat3: ok = p.is_cat3_zero(f); break;
      case RewriteStep::ZeroCat4: ok = p.is_cat4_zero(f); break;
      default: break;
    }
    if (!ok) return std::nullopt;
    return Word::make_zero();
  }
  if (step.rel < 0 || step.rel >= static_cast<int32_t>(p.cat5.size())) return std::nullopt;
  const EqRel& r = p.cat5[step.rel];
  const Word& from = step.left_to_right ? r.left : r.right;
  const Word& to = step.left_to_right ? r.right : r.left;
  if (step.pos + from.letters.size() > w.letters.size()) return std::nullopt;
  if (!std::equal(from.letters.begin(), from.letters.end(), w.letters.begin() + step.pos)) {
    return std::nullopt;
  }
  Word out = w;
  std::copy(to.letters.begin(), to.letters.end(), out.letters.begin() + step.pos);
  return out;
}

bool replay_to_zero(const Word& w, const std::vector<RewriteStep>& trace, const Presentation& p) {
  Word cur = w;
  for (const RewriteStep& s : trace) {
    auto next = apply(cur, s, p);
    if (!next) return false;
    cur = *next;
  }
  return cur.zero;
}

namespace {

struct Succ {
  Word word;
  RewriteStep step;
};

std::vector<Succ> successors(const Word& w, const Presentation& p) {
  std::vector<Succ> out;
  if (auto hit = find_zero_factor(w, p)) {
    RewriteStep s;
    s.kind = hit->cat;
    s.pos = hit->pos;
    s.len = hit->len;
    out.push_back({Word::make_zero(), s});
    return out;
  }
  for (int32_t r = 0; r < static_cast<int32_t>(p.cat5.size()); ++r) {
    for (int dir = 0; dir < 2; ++dir) {
      const Word& from = dir == 0 ? p.cat5[r].left : p.cat5[r].right;
      if (from.letters.empty() || from.letters.size() > w.letters.size()) continue;
      for (size_t i = 0; i + from.letters.size() <= w.letters.size(); ++i) {
        if (w.letters[i] != from.letters[0]) continue;
        if (!std::equal(from.letters.begin(), from.letters.end(), w.letters.begin() + i)) {
          continue;
        }
        RewriteStep s;
        s.kind = RewriteStep::Flip;
        s.rel = r;
        s.pos = i;
        s.left_to_right = dir == 0;
        Word nw = w;
        const Word& to = dir == 0 ? p.cat5[r].right : p.cat5[r].left;
        std::copy(to.letters.begin(), to.letters.end(), nw.letters.begin() + i);
        out.push_back({std::move(nw), s});
      }
    }
  }
  return out;
}

// Index category-5 sides by first letter to keep the scan linear-ish.
struct Cat5Index {
  std::unordered_map<int32_t, std::vector<std::pair<int32_t, bool>>> by_first;
  explicit Cat5Index(const Presentation& p) {
    for (int32_t r = 0; r < static_cast<int32_t>(p.cat5.size()); ++r) {
      if (!p.cat5[r].left.letters.empty()) {
        by_first[p.cat5[r].left.letters[0]].push_back({r, true});
      }
      if (!p.cat5[r].right.letters.empty()) {
        by_first[p.cat5[r].right.letters[0]].push_back({r, false});
      }
    }
  }
};

std::vector<Succ> successors_indexed(const Word& w, const Presentation& p, const Cat5Index& ix) {
  std::vector<Succ> out;
  if (auto hit = find_zero_factor(w, p)) {
    RewriteStep s;
    s.kind = hit->cat;
    s.pos = hit->pos;
    s.len = hit->len;
    out.push_back({Word::make_zero(), s});
    return out;
  }
  for (size_t i = 0; i < w.letters.size(); ++i) {
    auto it = ix.by_first.find(w.letters[i]);
    if (it == ix.by_first.end()) continue;
    for (auto [r, l2r] : it->second) {
      const Word& from = l2r ? p.cat5[r].left : p.cat5[r].right;
      const Word& to = l2r ? p.cat5[r].right : p.cat5[r].left;
      if (i + from.letters.size() > w.letters.size()) continue;
      if (!std::equal(from.letters.begin(), from.letters.end(), w.letters.begin() + i)) continue;
      RewriteStep s;
      s.kind = RewriteStep::Flip;
      s.rel = r;
      s.pos = i;
      s.left_to_right = l2r;
      Word nw = w;
      std::copy(to.letters.begin(), to.letters.end(), nw.letters.begin() + i);
      out.push_back({std::move(nw), s});
    }
  }
  return out;
}

size_t bracket_count(const Word& w, const Alphabet& ab) {
  size_t n = 0;
  for (int32_t l : w.letters) {
    const LetterMeta& m = ab.meta(l);
    if ((m.family == 'Z' || m.family == 'X') && !m.main) ++n;
  }
  return n;
}

Verdict search_zero(const Word& w0, const Presentation& p, long long budget, bool heuristic) {
  Verdict v;
  Cat5Index ix(p);
  struct Node {
    Word w;
    long long id;
  };
  // parent chain for trace reconstruction
  std::unordered_map<Word, std::pair<Word, RewriteStep>, WordHash> parent;
  std::unordered_set<Word, WordHash> seen;
  auto cost = [&](const Word& w) {
    return heuristic ? bracket_count(w, p.alphabet) : 0u;
  };
  using QE = std::pair<size_t, Word>;
  auto cmp = [](const QE& a, const QE& b) { return a.first > b.first; };
  std::priority_queue<QE, std::vector<QE>, decltype(cmp)> pq(cmp);
  std::deque<Word> fifo;
  if (heuristic) pq.push({cost(w0), w0});
  else fifo.push_back(w0);
  seen.insert(w0);
  long long used = 0;
  bool exhausted_cleanly = true;
  while ((heuristic && !pq.empty()) || (!heuristic && !fifo.empty())) {
    if (used >= budget) {
      exhausted_cleanly = false;
      break;
    }
    Word cur;
    if (heuristic) {
      cur = pq.top().second;
      pq.pop();
    } else {
      cur = fifo.front();
      fifo.pop_front();
    }
    ++used;
    for (Succ& s : successors_indexed(cur, p, ix)) {
      if (s.word.zero) {
        // reconstruct trace
        std::vector<RewriteStep> steps{s.step};
        Word at = cur;
        while (!(at == w0)) {
          auto it = parent.find(at);
          steps.push_back(it->second.second);
          at = it->second.first;
        }
        std::reverse(steps.begin(), steps.end());
        v.kind = Verdict::Zero;
        v.trace = std::move(steps);
        v.expansions = used;
        return v;
      }
      if (seen.insert(s.word).second) {
        parent.emplace(s.word, std::make_pair(cur, s.step));
        if (heuristic) pq.push({cost(s.word), s.word});
        else fifo.push_back(s.word);
      }
    }
  }
  v.kind = exhausted_cleanly ? Verdict::Irreducible : Verdict::Unknown;
  v.final_word = w0;
  v.frontier = heuristic ? pq.size() : fifo.size();
  v.expansions = used;
  return v;
}

}  // namespace

std::vector<Word> neighbors(const Word& w, const Presentation& p) {
  std::vector<Word> out;
  for (Succ& s : successors(w, p)) out.push_back(std::move(s.word));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict reduces_to_zero(const Word& w, const Presentation& p, long long budget,
                        Strategy strategy) {
  if (w.zero) {
    Verdict v;
    v.kind = Verdict::Zero;
    return v;
  }
  if (strategy == Strategy::Pipeline) return reduce_pipeline(w, p, budget);
  return search_zero(w, p, budget, false);
}

BracketProjection bracket_structure(const Word& w, const Alphabet& ab) {
  BracketProjection out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    const LetterMeta& m = ab.meta(w.letters[i]);
    if (m.family == 'Y' || m.main) continue;
    out.brackets += (m.family == 'Z') ? '[' : ']';
    out.source.push_back(i);
  }
  return out;
}

BracketResult eliminate_innermost_bracket_pair(const Word& w, const Presentation& p,
                                               long long budget) {
  BracketResult res;
  const Alphabet& ab = p.alphabet;
  BracketProjection bp = bracket_structure(w, ab);
  size_t open = std::string::npos;
  size_t close = std::string::npos;
  for (size_t i = 0; i + 1 < bp.brackets.size(); ++i) {
    if (bp.brackets[i] == '[' && bp.brackets[i + 1] == ']') {
      open = bp.source[i];
      close = bp.source[i + 1];
      break;
    }
  }
  if (open == std::string::npos) {
    res.kind = BracketResult::NoPair;
    return res;
  }
  // Factor runs from the node letter before the '[' to the node letter after
  // the ']'; the outer brackets stay outside the factor and are preserved.
  if (open == 0 || close + 1 >= w.letters.size()) {
    res.kind = BracketResult::NoPair;
    return res;
  }
  size_t lo = open - 1, hi = close + 1;  // node letters (well-formed words)
  Word factor;
  factor.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi + 1);

  // Search within the factor for an equivalent with fewer brackets.
  Cat5Index ix(p);
  std::unordered_set<Word, WordHash> seen{factor};
  std::unordered_map<Word, std::pair<Word, RewriteStep>, WordHash> parent;
  std::deque<Word> q{factor};
  size_t base = bracket_count(factor, ab);
  long long used = 0;
  while (!q.empty() && used < budget) {
    Word cur = q.front();
    q.pop_front();
    ++used;
    for (Succ& s : successors_indexed(cur, p, ix)) {
      if (s.word.zero) {
        res.kind = BracketResult::ZeroFound;
        res.verdict.kind = Verdict::Zero;
        std::vector<RewriteStep> steps{s.step};
        Word at = cur;
        while (!(at == factor)) {
          auto it = parent.find(at);
          steps.push_back(it->second.second);
          at = it->second.first;
        }
        std::reverse(steps.begin(), steps.end());
        for (RewriteStep& st : steps) st.pos += lo;  // back into whole-word frame
        res.verdict.trace = std::move(steps);
        return res;
      }
      if (bracket_count(s.word, ab) < base) {
        std::vector<RewriteStep> steps{s.step};
        Word at = cur;
        while (!(at == factor)) {
          auto it = parent.find(at);
          steps.push_back(it->second.second);
          at = it->second.first;
        }
        std::reverse(steps.begin(), steps.end());
        for (RewriteStep& st : steps) st.pos += lo;
        Word out = w;
        std::copy(s.word.letters.begin(), s.word.letters.end(), out.letters.begin() + lo);
        res.kind = BracketResult::Rewritten;
        res.word = std::move(out);
        res.steps = std::move(steps);
        return res;
      }
      if (seen.insert(s.word).second) {
        parent.emplace(s.word, std::make_pair(cur, s.step));
        q.push_back(s.word);
      }
    }
  }
  res.kind = BracketResult::Exhausted;
  res.verdict.kind = Verdict::Unknown;
  res.verdict.expansions = used;
  return res;
}

RankDiagram rank_diagram(const Word& w, const Alphabet& ab) {
  RankDiagram out;
  std::vector<int> levels;
  for (int32_t l : w.letters) {
    if (ab.meta(l).family == 'Y') levels.push_back(ab.meta(l).level);
  }
  const size_t n = levels.size();
  out.ranks.assign(n, 0);
  out.exact.assign(n, false);

  // Consistency: the level word must be a factor of a long EdgeLevels.
  {
    auto big = dol::edge_levels(std::min<int>(16, 2 + static_cast<int>(n < 4 ? 4 : 64 - __builtin_clzll(n))));
    while (big.size() < 2 * n + 2) big = dol::renumber_step(big);
    out.consistent =
        n == 0 || std::search(big.begin(), big.end(), levels.begin(), levels.end()) != big.end();
  }

  for (size_t i = 0; i < n; ++i) {
    if (levels[i] == 1) {
      out.ranks[i] = 1;
      out.exact[i] = true;
    } else if (levels[i] == 2) {
      out.ranks[i] = 2;
      out.exact[i] = true;
    }
  }
  // A regular word of rank m spans 2^m - 1 nodes with the dyadic rank
  // pattern; grow level-3 nodes while their window fits.
  std::function<bool(size_t, size_t, int)> regular = [&](size_t lo, size_t hi, int m) {
    // [lo, hi) must be the rank pattern of a full block of rank m
    if (m <= 0) return hi == lo;
    size_t len = hi - lo;
    if (len != (size_t{1} << m) - 1) return false;
    size_t mid = lo + len / 2;
    if (!(out.exact[mid] && out.ranks[mid] == m)) return false;
    if (m == 1) return true;
    return regular(lo, mid, m - 1) && regular(mid + 1, hi, m - 1);
  };
  // A node of rank n also satisfies the window predicate at every rank
  // between 3 and n, so later rounds upgrade earlier assignments; the rank
  // read off a word is the largest matching n.
  bool grew = true;
  int rank = 3;
  while (grew && rank < 30) {
    grew = false;
    size_t half = size_t{1} << (rank - 2);
    for (size_t i = 0; i < n; ++i) {
      if (levels[i] != 3) continue;
      if (i < half || i + half >= n) continue;
      bool l_ok = out.exact[i - half] && out.ranks[i - half] == rank - 1;
      bool r_ok = out.exact[i + half] && out.ranks[i + half] == rank - 1;
      if (l_ok && r_ok && regular(i - half + 1, i, rank - 2) &&
          regular(i + 1, i + half, rank - 2)) {
        out.ranks[i] = rank;
        out.exact[i] = true;
        grew = true;
      }
    }
    ++rank;
  }
  // Level-3 nodes whose window exceeds the word keep rank 0 with a lower
  // bound of 3 implied; callers treat exact=false as "at least 3".
  return out;
}

WordRepResult word_representative(const Word& w, size_t node_index, const Presentation& p) {
  WordRepResult res;
  const Alphabet& ab = p.alphabet;
  std::vector<size_t> node_pos;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (ab.meta(w.letters[i]).family == 'Y') node_pos.push_back(i);
  }
  if (node_index >= node_pos.size()) return res;
  const LetterMeta& cm = ab.meta(w.letters[node_pos[node_index]]);
  if (cm.level != 3) return res;
  if (node_index < 2 || node_index + 2 >= node_pos.size()) {
    res.kind = WordRepResult::OutOfMargin;
    return res;
  }
  RankDiagram rd = rank_diagram(w, ab);
  if (!rd.consistent) {
    res.kind = WordRepResult::ZeroCandidate;
    return res;
  }
  for (size_t half = 2;; half *= 2) {
    if (node_index < half || node_index + half >= node_pos.size()) {
      res.kind = WordRepResult::OutOfMargin;
      return res;
    }
    const LetterMeta& lm = ab.meta(w.letters[node_pos[node_index - half]]);
    const LetterMeta& rm = ab.meta(w.letters[node_pos[node_index + half]]);
    if (lm.p_cur && rm.p_cdl) {
      res.kind = WordRepResult::Found;
      res.node_letters = 2 * half + 1;
      res.factor.letters.assign(w.letters.begin() + node_pos[node_index - half],
                                w.letters.begin() + node_pos[node_index + half] + 1);
      return res;
    }
    // The paper's alternative at each doubling: CUR/CDL in the other order
    // means the rank is higher and the window doubles; anything else is not
    // realizable and the factor is a zero candidate.
    if (!(lm.p_cdl && rm.p_cur)) {
      res.kind = WordRepResult::ZeroCandidate;
      return res;
    }
  }
}

RealizeResult realize_edge_word(const Word& w, const Presentation& p, long long budget) {
  (void)budget;
  RealizeResult res;
  const Alphabet& ab = p.alphabet;
  // Hypotheses: node letters are side nodes sharing the information token,
  // edge letters all main.
  std::string info;
  bool first = true;
  for (int32_t l : w.letters) {
    const LetterMeta& m = ab.meta(l);
    if (m.family == 'Y') {
      if (m.vkind != static_cast<uint8_t>(VKind::Side)) return res;
      if (first) {
        info = m.info_token;
        first = false;
      } else if (m.info_token != info) {
        return res;
      }
    } else if (!m.main) {
      return res;
    }
  }
  RankDiagram rd = rank_diagram(w, ab);
  if (!rd.consistent) {
    res.kind = RealizeResult::ZeroFound;
    return res;
  }
  if (p.backing) {
    auto paths = embeddings(*p.backing, w, 1);
    if (!paths.empty()) {
      res.kind = RealizeResult::Embedded;
      res.embedding = paths[0];
      return res;
    }
    if (find_zero_factor(w, p)) {
      res.kind = RealizeResult::ZeroFound;
      return res;
    }
  }
  return res;
}

Verdict reduce_pipeline(const Word& w0, const Presentation& p, long long budget) {
  Verdict v;
  if (w0.zero) {
    v.kind = Verdict::Zero;
    return v;
  }
  Word cur = w0;
  std::vector<RewriteStep> trace;
  long long left = budget;

  for (int guard = 0; guard < 1024 && left > 0; ++guard) {
    // Stage 1: monomial relations terminate immediately.
    if (auto hit = find_zero_factor(cur, p)) {
      RewriteStep s;
      s.kind = hit->cat;
      s.pos = hit->pos;
      s.len = hit->len;
      trace.push_back(s);
      v.kind = Verdict::Zero;
      v.trace = std::move(trace);
      return v;
    }
    // Stage 2: strip inner bracket pairs until the projection is closes-then-
    // opens (the W1 W2 form).
    BracketResult br = eliminate_innermost_bracket_pair(cur, p, std::min<long long>(left, 20000));
    if (br.kind == BracketResult::ZeroFound) {
      for (const RewriteStep& s : br.verdict.trace) trace.push_back(s);
      v.kind = Verdict::Zero;
      v.trace = std::move(trace);
      return v;
    }
    if (br.kind == BracketResult::Rewritten) {
      for (const RewriteStep& s : br.steps) trace.push_back(s);
      left -= static_cast<long long>(br.steps.size()) + 1;
      cur = br.word;
      continue;
    }
    break;
  }

  // Stage 3/4: bounded search from the normalized word; the accumulated
  // bracket-elimination steps keep the whole trace replayable from w0.
  Verdict sv = search_zero(cur, p, left, true);
  if (sv.kind == Verdict::Zero) {
    for (const RewriteStep& s : sv.trace) trace.push_back(s);
    sv.trace = std::move(trace);
    return sv;
  }
  sv.final_word = cur;
  return sv;
}

ClosureResult neighbor_closure(const Word& w, const Presentation& p, size_t max_states) {
  ClosureResult res;
  Cat5Index ix(p);
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> q{w};
  while (!q.empty()) {
    if (seen.size() > max_states) {
      res.complete = false;
      res.states = seen.size();
      return res;
    }
    Word cur = q.front();
    q.pop_front();
    for (Succ& s : successors_indexed(cur, p, ix)) {
      if (s.word.zero) {
        res.reached_zero = true;
        res.states = seen.size();
        return res;
      }
      if (seen.insert(s.word).second) q.push_back(s.word);
    }
  }
  res.complete = true;
  res.states = seen.size();
  return res;
}

}  // namespace nilforge
