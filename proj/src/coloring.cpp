#include "nilforge/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <stdexcept>

namespace nilforge {

namespace {

uint64_t role_hash(const RoleRec& r) {
  uint64_t v = static_cast<uint64_t>(r.kind);
  v = hash_combine(v, (static_cast<uint64_t>(r.a) << 8) | r.b);
  return v;
}

std::vector<std::string> pasted_tokens_sorted(const Vertex& v) {
  std::vector<std::string> toks;
  for (const RoleRec& r : v.pasted) toks.push_back(role_str(r));
  std::sort(toks.begin(), toks.end());
  toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
  return toks;
}

uint64_t shallow_color(const Complex& cx, Id v) {
  uint64_t h = role_hash(cx.vertices[v].base);
  h = hash_combine(h, static_cast<uint64_t>(cx.vertex_level(v)));
  std::vector<uint64_t> ps;
  for (const std::string& t : pasted_tokens_sorted(cx.vertices[v])) ps.push_back(fnv1a(t));
  std::sort(ps.begin(), ps.end());
  return hash_combine(h, hash_u64s(ps));
}

// One refinement round: the multiset of (edge context, neighbor color).
std::vector<uint64_t> refine_round(const Complex& cx, const std::vector<uint64_t>& cur,
                                   bool parallel) {
  const int64_t n = static_cast<int64_t>(cx.vertices.size());
  std::vector<uint64_t> next(n);
#ifdef NILFORGE_OPENMP
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
#endif
  for (int64_t v = 0; v < n; ++v) {
    std::vector<uint64_t> nb;
    for (const Complex::HalfEdge& h : cx.out_edges(v)) {
      uint64_t e = static_cast<uint64_t>(cx.carriers[h.carrier].kind);
      e = hash_combine(e, cx.main_at(h, v) ? 1 : 0);
      e = hash_combine(e, h.fwd ? 1 : 0);
      nb.push_back(hash_combine(e, cur[cx.he_to(h)]));
    }
    std::sort(nb.begin(), nb.end());
    next[v] = hash_combine(cur[v], hash_u64s(nb));
  }
  return next;
}

// Boss-enriched seeds. Each vertex contributes its bare color plus one
// bounded layer of boss data (the bosses' radius-1 pictures); `depth` adds
// further bounded ancestry layers. Everything here has bounded reach, so
// the code alphabet saturates as the complexes grow.
std::vector<uint64_t> enriched_seeds(const Complex& cx, int depth, bool parallel) {
  const int64_t n = static_cast<int64_t>(cx.vertices.size());
  std::vector<uint64_t> seed(n);
  for (int64_t v = 0; v < n; ++v) seed[v] = shallow_color(cx, v);
  std::vector<uint64_t> ball1 = refine_round(cx, seed, parallel);
  std::vector<uint64_t> boss_part(n);
  for (int64_t v = 0; v < n; ++v) boss_part[v] = hash_combine(seed[v], ball1[v]);
  std::vector<uint64_t> cur(n);
  for (int k = 0; k < std::max(1, depth); ++k) {
    for (int64_t v = 0; v < n; ++v) {
      uint64_t h = seed[v];
      for (Id b : cx.vertices[v].boss) {
        h = hash_combine(h, b == kNone ? 5 : boss_part[b]);
      }
      cur[v] = h;
    }
    if (k + 1 < std::max(1, depth)) {
      for (int64_t v = 0; v < n; ++v) boss_part[v] = hash_combine(cur[v], ball1[v]);
    }
  }
  return cur;
}

// The per-boss digest shown in the information component.
std::vector<uint64_t> boss_digests(const Complex& cx, bool parallel) {
  const int64_t n = static_cast<int64_t>(cx.vertices.size());
  std::vector<uint64_t> seed(n);
  for (int64_t v = 0; v < n; ++v) seed[v] = shallow_color(cx, v);
  return refine_round(cx, seed, parallel);
}

std::vector<uint64_t> env_from(const Complex& cx, int radius, int depth, bool parallel) {
  std::vector<uint64_t> cur = enriched_seeds(cx, depth, parallel);
  for (int round = 0; round < radius; ++round) cur = refine_round(cx, cur, parallel);
  return cur;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::vector<uint64_t> refined_codes_serial(const Complex& cx, int radius, int depth) {
  return env_from(cx, radius, depth, false);
}
std::vector<uint64_t> refined_codes_parallel(const Complex& cx, int radius, int depth) {
  return env_from(cx, radius, depth, true);
}

int32_t Alphabet::intern(const std::string& token) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  int32_t id = static_cast<int32_t>(tokens_.size());
  tokens_.push_back(token);
  meta_.push_back(parse_letter_token(token));
  index_.emplace(token, id);
  return id;
}

int32_t Alphabet::find(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> Alphabet::sorted_tokens() const {
  std::vector<std::string> out = tokens_;
  std::sort(out.begin(), out.end());
  return out;
}

LetterMeta parse_letter_token(const std::string& t) {
  LetterMeta m;
  if (t.empty()) throw std::invalid_argument("empty letter token");
  auto field = [&](const char* key) -> std::string {
    std::string pat = std::string(key) + "=";
    size_t p = t.find(pat);
    if (p == std::string::npos) return "";
    p += pat.size();
    size_t e = t.find_first_of(";}", p);
    return t.substr(p, e - p);
  };
  if (t[0] == 'Y') {
    m.family = 'Y';
    std::string r = field("r");
    if (r.empty()) throw std::invalid_argument("node token without role: " + t);
    if (r[0] == 'C') {
      m.vkind = static_cast<uint8_t>(VKind::Corner);
      std::string c = r.substr(1);
      const char* names[] = {"UL", "UR", "DR", "DL"};
      for (int i = 0; i < 4; ++i)
        if (c == names[i]) m.a = static_cast<uint8_t>(i);
    } else if (r[0] == 'B') {
      m.vkind = static_cast<uint8_t>(VKind::Boundary);
      m.a = static_cast<uint8_t>(std::string("URDL").find(r[2]));
    } else if (r[0] == 'S') {
      m.vkind = static_cast<uint8_t>(VKind::Side);
      m.a = static_cast<uint8_t>(std::string("URDL").find(r[2]));
      m.b = static_cast<uint8_t>(std::string("URDL").find(r[3]));
    } else if (r[0] == 'I') {
      m.vkind = static_cast<uint8_t>(VKind::Inner);
      m.a = static_cast<uint8_t>(std::string("ABC").find(r[2]));
    }
    std::string l = field("l");
    m.level = l.empty() ? 0 : std::atoi(l.c_str());
    std::string p = field("p");
    m.p_cur = p.find("CUR") != std::string::npos;
    m.p_cul = p.find("CUL") != std::string::npos;
    m.p_cdl = p.find("CDL") != std::string::npos;
    size_t ip = t.find(";i=");
    if (ip != std::string::npos) m.info_token = t.substr(ip + 3, t.size() - ip - 4);
  } else if (t[0] == 'Z' || t[0] == 'X') {
    m.family = t[0];
    std::string c = field("c");
    if (c == "bU") m.carrier_kind = static_cast<uint8_t>(CarrierKind::BU);
    else if (c == "bR") m.carrier_kind = static_cast<uint8_t>(CarrierKind::BR);
    else if (c == "bD") m.carrier_kind = static_cast<uint8_t>(CarrierKind::BD);
    else if (c == "bL") m.carrier_kind = static_cast<uint8_t>(CarrierKind::BL);
    else if (c == "pD") m.carrier_kind = static_cast<uint8_t>(CarrierKind::PD);
    else if (c == "pR") m.carrier_kind = static_cast<uint8_t>(CarrierKind::PR);
    else if (!c.empty() && c[0] == 'i') m.carrier_kind = static_cast<uint8_t>(std::atoi(c.c_str() + 1));
    m.sign_pos = field("d") == "+";
    m.main = field("m") == "1";
    std::string f = field("f");
    if (f == "pin") m.flag = 1;
    else if (f == "pout") m.flag = 2;
    else if (f == "sin") m.flag = 3;
    else if (f == "sout") m.flag = 4;
  } else {
    throw std::invalid_argument("bad letter token: " + t);
  }
  return m;
}

Coloring::Coloring(std::shared_ptr<const Complex> cx, ColoringOptions opt)
    : Coloring(*cx, opt) {
  owned_ = std::move(cx);
}

Coloring::Coloring(const Complex& cx, ColoringOptions opt) : cx_(&cx), opt_(opt) {
  compute_env();
  compute_letters();
  compute_edge_letters();
  by_letter_.resize(ab_.size());
  for (Id v = 0; v < static_cast<Id>(vletter_.size()); ++v) {
    by_letter_[vletter_[v]].push_back(v);
  }
}

void Coloring::compute_env() {
  const size_t n = cx_->vertices.size();
  env_.assign(n, 0);
  info_digest_.assign(n, 0);
  if (!opt_.use_env || opt_.env_radius <= 0) return;
  env_ = env_from(*cx_, opt_.env_radius, opt_.info_depth, opt_.parallel);
  if (opt_.use_info) info_digest_ = boss_digests(*cx_, opt_.parallel);
}

void Coloring::compute_letters() {
  const Complex& cx = *cx_;
  const int64_t n = static_cast<int64_t>(cx.vertices.size());
  vletter_.assign(n, -1);

  // The information component of a vertex is the (type, level, environment)
  // of its bosses, not of the vertex itself.
  auto boss_part = [&](Id b) -> std::string {
    if (b == kNone) return "-";
    const Vertex& w = cx.vertices[b];
    std::string s = "{r=" + role_str(w.base);
    if (opt_.use_pasted) {
      s += ";p=";
      auto toks = pasted_tokens_sorted(w);
      for (size_t i = 0; i < toks.size(); ++i) {
        if (i) s += '+';
        s += toks[i];
      }
    }
    s += ";l=" + std::to_string(cx.vertex_level(b));
    if (opt_.use_env) s += ";e=" + hex64(info_digest_.empty() ? 0 : info_digest_[b]);
    s += "}";
    return s;
  };

  std::vector<std::string> texts(n);
#ifdef NILFORGE_OPENMP
#pragma omp parallel for schedule(dynamic, 256) if (opt_.parallel)
#endif
  for (int64_t v = 0; v < n; ++v) {
    const Vertex& vx = cx.vertices[v];
    std::string s = "Y{r=" + role_str(vx.base);
    s += ";l=" + std::to_string(cx.vertex_level(v));
    if (opt_.use_pasted) {
      s += ";p=";
      auto toks = pasted_tokens_sorted(vx);
      for (size_t i = 0; i < toks.size(); ++i) {
        if (i) s += '+';
        s += toks[i];
      }
    }
    if (opt_.use_env) s += ";e=" + hex64(env_[v]);
    if (opt_.use_info) {
      s += ";i=" + boss_part(vx.boss[0]) + boss_part(vx.boss[1]) + boss_part(vx.boss[2]);
    }
    s += "}";
    texts[v] = std::move(s);
  }
  for (int64_t v = 0; v < n; ++v) vletter_[v] = ab_.intern(texts[v]);
}

uint32_t Coloring::edge_key(const Complex::HalfEdge& h, bool outgoing) const {
  const Complex& cx = *cx_;
  Id at = outgoing ? cx.he_from(h) : cx.he_to(h);
  bool main = cx.main_at(h, at);
  uint32_t flag = 0;
  if (!main) {
    bool cross = cx.he_region(h) != cx.vertices[at].base_region;
    if (cross) flag = outgoing ? 1 : 2;
    else flag = outgoing ? 3 : 4;
  }
  uint32_t k = static_cast<uint32_t>(cx.carriers[h.carrier].kind);
  return (k << 8) | (h.fwd ? 128 : 0) | (outgoing ? 64 : 0) | (main ? 32 : 0) | flag;
}

void Coloring::compute_edge_letters() {
  const Complex& cx = *cx_;
  for (const Carrier& c : cx.carriers) {
    for (int64_t seg = 0; seg < c.len(); ++seg) {
      for (bool fwd : {true, false}) {
        for (bool outgoing : {true, false}) {
          Complex::HalfEdge h{c.id, seg, fwd};
          uint32_t key = edge_key(h, outgoing);
          if (eletter_.count(key)) continue;
          Id at = outgoing ? cx.he_from(h) : cx.he_to(h);
          bool main = cx.main_at(h, at);
          // Entries into a pasted region and into a subtile look alike at a
          // host path (the flap clones the base tile there); the letter must
          // not tell them apart or tile-flip determinism breaks.
          std::string f = "-";
          if (!main) f = outgoing ? "in" : "out";
          std::string s(1, outgoing ? 'Z' : 'X');
          s += "{c=" + carrier_kind_str(c.kind);
          s += ";d=";
          s += h.fwd ? '+' : '-';
          s += ";m=";
          s += main ? '1' : '0';
          s += ";f=" + f + "}";
          eletter_.emplace(key, ab_.intern(s));
        }
      }
    }
  }
}

int32_t Coloring::edge_letter(const Complex::HalfEdge& h, bool outgoing) const {
  return eletter_.at(edge_key(h, outgoing));
}

const std::vector<Id>& Coloring::vertices_with_letter(int32_t letter) const {
  static const std::vector<Id> empty;
  if (letter < 0 || letter >= static_cast<int32_t>(by_letter_.size())) return empty;
  return by_letter_[letter];
}

}  // namespace nilforge
