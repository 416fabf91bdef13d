#include "nilforge/harness.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "nilforge/dol.hpp"

namespace nilforge {

const char* verdict_str(Report::Verdict v) {
  switch (v) {
    case Report::PASS: return "PASS";
    case Report::FAIL: return "FAIL";
    default: return "UNKNOWN";
  }
}

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Report make_report(const std::string& name, const std::string& scope, bool pass,
                   const std::string& witness, const Timer& t) {
  Report r;
  r.name = name;
  r.scope = scope;
  r.verdict = pass ? Report::PASS : Report::FAIL;
  r.witness = pass ? "" : witness;
  r.millis = t.ms();
  return r;
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<Report> cmd_verify_structure(int level) {
  std::vector<Report> out;
  std::string scope = "level=" + std::to_string(level);
  BuildOptions opts;
  opts.max_level = max_level_cap();

  {
    Timer t;
    bool ok = true;
    std::string wit;
    for (int n = 1; n <= level; ++n) {
      Complex cx = build(n, opts);
      if (cx.count_base_tiles() != ipow(6, n - 1)) {
        ok = false;
        wit = "base tiles at level " + std::to_string(n);
        break;
      }
      for (const Tile& tile : cx.tiles) {
        if (tile.is_minimal()) continue;
        for (Id ic : tile.icarrier) {
          if (ic == kNone) {
            ok = false;
            wit = "macrotile " + std::to_string(tile.id) + " lacks an interior edge";
          }
        }
      }
    }
    out.push_back(make_report("subdivision-law", scope, ok, wit, t));
  }

  Complex cx = build(level, opts);

  {
    Timer t;
    bool ok = true;
    std::string wit;
    for (const Carrier& c : cx.carriers) {
      if (!carrier_is_internal(c.kind)) continue;
      int k = cx.step - c.birth_step;
      if (k < 1) continue;
      if (cx.carrier_levels(c.id) != dol::edge_levels(k)) {
        ok = false;
        wit = "carrier " + std::to_string(c.id);
        break;
      }
    }
    out.push_back(make_report("edge-levels-bridge", scope, ok, wit, t));
  }

  {
    Timer t;
    bool ok = true;
    std::string wit;
    for (const Pasting& p : cx.pastings) {
      const Tile& flap = cx.tiles[p.flap_tile];
      const Carrier& host = cx.carriers[p.host_carrier];
      int shift = cx.step - p.step;
      Id ur = host.verts[p.host_lo << shift];
      Id ul = host.verts[((p.host_lo + p.host_hi) / 2) << shift];
      Id dl = host.verts[p.host_hi << shift];
      if (flap.corner[1] != ur || flap.corner[0] != ul || flap.corner[3] != dl ||
          p.kernel != ul) {
        ok = false;
        wit = "pasting " + std::to_string(p.id);
        break;
      }
    }
    out.push_back(make_report("pasting-corner-law", scope, ok, wit, t));
  }

  {
    Timer t;
    bool ok = true;
    std::string wit;
    for (int m = 2; m <= level && ok; ++m) {
      auto ts = cx.macrotiles_of_level(m);
      size_t stride = std::max<size_t>(1, ts.size() / 8);
      for (size_t i = 0; i < ts.size(); i += stride) {
        const Tile& tl = cx.tiles[ts[i]];
        int64_t diag = cx.distance(tl.corner[0], tl.corner[2]);
        int64_t diag2 = cx.distance(tl.corner[1], tl.corner[3]);
        int64_t side = cx.distance(tl.corner[0], tl.corner[1]);
        if (diag != (int64_t{1} << m) || diag2 != (int64_t{1} << m) ||
            side != (int64_t{1} << (m - 1))) {
          ok = false;
          wit = "macrotile " + std::to_string(tl.id) + " level " + std::to_string(m);
          break;
        }
      }
    }
    out.push_back(make_report("corner-distance-law", scope, ok, wit, t));
  }

  {
    Timer t;
    bool ok = true;
    std::string wit;
    // For a pasted region of level n >= 2 attached strictly inside a
    // macrotile T, boundary-of-T vertices are at distance >= 2^{n-1} from
    // any vertex with an exit into that region.
    for (const Pasting& p : cx.pastings) {
      int flap_level = cx.tile_level(p.flap_tile);
      if (flap_level < 2) continue;
      int shift = cx.step - p.step;
      int64_t lo = p.host_lo << shift, hi = p.host_hi << shift;
      const Carrier& host = cx.carriers[p.host_carrier];
      if (!carrier_is_internal(host.kind)) continue;
      const Tile& owner = cx.tiles[host.creator_tile];
      // Host interval must avoid the owner's boundary; interior carriers
      // only touch it at their endpoints, so it is enough that the window
      // stays strictly inside the carrier.
      if (lo <= 0 || hi >= host.len()) continue;
      // Vertices with an exit into the pasted region: host vertices holding
      // a boundary/corner role there, kernel excluded (no interior edge).
      std::vector<Id> exits;
      for (int64_t q = lo; q <= hi; ++q) {
        Id v = host.verts[q];
        if (v == p.kernel) continue;
        exits.push_back(v);
      }
      std::vector<Id> boundary;
      for (int k = 0; k < 4; ++k) boundary.push_back(owner.corner[k]);
      for (int k = 0; k < 4; ++k) {
        if (owner.side_mid[k] != kNone) boundary.push_back(owner.side_mid[k]);
      }
      for (Id x : boundary) {
        for (Id y : exits) {
          if (cx.distance(x, y) < (int64_t{1} << (flap_level - 1))) {
            ok = false;
            wit = "pasting " + std::to_string(p.id) + " x=" + std::to_string(x) +
                  " y=" + std::to_string(y);
          }
        }
      }
      if (!ok) break;
    }
    out.push_back(make_report("pasting-distance-law", scope, ok, wit, t));
  }

  return out;
}

std::vector<Report> cmd_verify_determinism(int level, int env_radius) {
  std::vector<Report> out;
  Timer t;
  BuildOptions opts;
  opts.max_level = max_level_cap();
  auto cx = std::make_shared<const Complex>(build(level, opts));
  ColoringOptions copt;
  copt.env_radius = env_radius;
  ColoringSearch cs = find_deterministic_coloring(cx, copt);
  std::string wit;
  if (!cs.pass) {
    DeterminismReport rep = determinism_check(*cs.coloring);
    wit = "key=" + word_text(rep.key, cs.coloring->alphabet(), 160);
  }
  out.push_back(make_report("determinism",
                            "level=" + std::to_string(level) +
                                " env_radius=" + std::to_string(cs.env_radius) +
                                " info_depth=" + std::to_string(cs.info_depth),
                            cs.pass, wit, t));
  return out;
}

std::vector<Report> cmd_nil_check(int level, int max_edges, long long budget) {
  std::vector<Report> out;
  std::string scope = "level=" + std::to_string(level) + " max_edges=" +
                      std::to_string(max_edges) + " budget=" + std::to_string(budget);
  BuildOptions opts;
  opts.max_level = max_level_cap();
  ColoringSearch cs =
      find_deterministic_coloring(std::make_shared<const Complex>(build(level, opts)));
  auto col = std::shared_ptr<const Coloring>(cs.coloring);
  Presentation pres = generate_presentation(col);

  {
    Timer t;
    bool ok = true;
    size_t unknowns = 0;
    std::string wit;
    std::set<Word> closed = enumerate_closed_words(*col, max_edges);
    for (const Word& w : closed) {
      Word w9 = power(w, 9);
      Verdict v = reduces_to_zero(w9, pres, budget);
      if (v.kind == Verdict::Unknown) {
        ++unknowns;
        wit = "unknown: " + word_text(w, pres.alphabet);
      } else if (v.kind != Verdict::Zero) {
        ok = false;
        wit = "irreducible ninth power: " + word_text(w, pres.alphabet);
        break;
      } else if (!replay_to_zero(w9, v.trace, pres)) {
        ok = false;
        wit = "trace replay failed: " + word_text(w, pres.alphabet);
        break;
      }
    }
    Report r = make_report("nil-closed-ninth-power",
                           scope + " closed_words=" + std::to_string(closed.size()), ok, wit, t);
    if (ok && unknowns > 0) {
      r.verdict = Report::UNKNOWN;
      r.witness = std::to_string(unknowns) + " unknown verdicts";
    }
    out.push_back(r);
  }

  {
    Timer t;
    bool ok = true;
    std::string wit;
    // Open-path words are full encodings; concatenating them breaks the
    // alternation at the seam, so the square must die on a category-1 or -2
    // factor there.
    size_t checked = 0, seamless = 0;
    for (const Word& w : enumerate_words(*col, max_edges)) {
      if (pres.edge_count(w) == 0) continue;
      Word ww = concat(w, w);
      ++checked;
      auto hit = find_zero_factor(ww, pres);
      if (!hit || (hit->cat != RewriteStep::ZeroCat1 && hit->cat != RewriteStep::ZeroCat2)) {
        ++seamless;
        if (wit.empty()) wit = "no cat-1/2 seam factor: " + word_text(w, pres.alphabet, 120);
      }
    }
    ok = seamless == 0;
    out.push_back(make_report(
        "nil-open-seam", scope + " open_words=" + std::to_string(checked), ok, wit, t));
  }

  return out;
}

std::vector<Report> cmd_growth_census(int level, long long budget) {
  std::vector<Report> out;
  std::string scope = "level=" + std::to_string(level);
  BuildOptions opts;
  opts.max_level = max_level_cap();
  ColoringSearch cs =
      find_deterministic_coloring(std::make_shared<const Complex>(build(level, opts)));
  auto col = std::shared_ptr<const Coloring>(cs.coloring);
  Presentation pres = generate_presentation(col);
  const Complex& cx = col->complex();

  Timer t;
  std::map<size_t, std::set<Word>> census;  // edge length -> distinct survivors
  bool ok = true;
  std::string wit;
  for (int m = 1; m <= level; ++m) {
    auto ts = cx.macrotiles_of_level(m, true);
    if (ts.empty()) continue;
    size_t stride = std::max<size_t>(1, ts.size() / 4);
    for (size_t i = 0; i < ts.size(); i += stride) {
      for (const Path& p : two_side_paths(cx, cx.tiles[ts[i]])) {
        Word w = encode(*col, p);
        size_t edges = p.edges.size();
        if (find_zero_factor(w, pres)) {
          ok = false;
          wit = "perimeter word zeroed at level " + std::to_string(m);
          continue;
        }
        census[edges].insert(w);
      }
    }
  }
  size_t expect = static_cast<size_t>(level);
  if (census.size() < expect) {
    ok = false;
    wit = "census lengths " + std::to_string(census.size()) + " < " + std::to_string(expect);
  }
  // Lengths must be strictly increasing powers 2*2^{m-1}.
  {
    size_t want = 2;
    for (int m = 1; m <= level; ++m, want *= 2) {
      if (!census.count(want)) {
        ok = false;
        wit = "missing perimeter length " + std::to_string(want);
      }
    }
  }
  std::ostringstream counts;
  for (auto& [len, words] : census) counts << " len" << len << "=" << words.size();
  Report r = make_report("growth-census", scope + counts.str(), ok, wit, t);
  out.push_back(r);

  {
    Timer t2;
    bool nz = true;
    std::string wit2;
    // Bounded non-collapse of the level-2..4 perimeter words.
    for (int m = 2; m <= std::min(level, 4); ++m) {
      auto ts = cx.macrotiles_of_level(m, true);
      if (ts.empty()) continue;
      const Tile& tl = cx.tiles[ts[0]];
      Path p = two_side_paths(cx, tl)[0];
      Word w = encode(*col, p);
      ClosureResult cr = neighbor_closure(w, pres, static_cast<size_t>(budget));
      if (cr.reached_zero) {
        nz = false;
        wit2 = "level-" + std::to_string(m) + " perimeter reached zero";
        break;
      }
    }
    out.push_back(make_report("non-collapse", scope + " cap=" + std::to_string(budget), nz,
                              wit2, t2));
  }

  return out;
}

int write_reports(const std::vector<Report>& reports, std::ostream& os) {
  bool any_fail = false, any_unknown = false;
  for (const Report& r : reports) {
    os << "check=" << r.name << " scope=\"" << r.scope << "\" verdict=" << verdict_str(r.verdict)
       << " ms=" << r.millis;
    if (!r.witness.empty()) os << " witness=\"" << r.witness << "\"";
    os << "\n";
    any_fail |= r.verdict == Report::FAIL;
    any_unknown |= r.verdict == Report::UNKNOWN;
  }
  if (any_fail) return 1;
  if (any_unknown) return 2;
  return 0;
}

}  // namespace nilforge
