#include "nilforge/complex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>

namespace nilforge {

std::string role_str(const RoleRec& r) {
  switch (r.kind) {
    case VKind::Corner: return std::string("C") + corner_str(static_cast<CornerCode>(r.a));
    case VKind::Boundary: return std::string("B:") + side_char(static_cast<SideLabel>(r.a));
    case VKind::Side:
      return std::string("S:") + side_char(static_cast<SideLabel>(r.a)) +
             side_char(static_cast<SideLabel>(r.b));
    case VKind::Inner: return std::string("I:") + inner_char(static_cast<InnerCode>(r.a));
  }
  return "?";
}

SubdivisionRule SubdivisionRule::standard() {
  // Calibrated; see the orientation sweep in tests/test_complex.cpp.
  // rot6=2 also satisfies the local invariants but creates tiles whose
  // upper and left sides straighten onto one carrier; a pasting whose host
  // meets such a tile clones it, and no coloring then separates the two
  // complements of the shared corner path. rot6=0 avoids the shape.
  return SubdivisionRule{0, 0, true, false};
}

int max_level_cap() {
  if (const char* e = std::getenv("NILFORGE_LEVEL_MAX")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  return 7;
}

namespace {

// Symbolic corners of the six faces of one subdivision.
enum Sym : uint8_t { PUL, PUR, PDR, PDL, MU, MR, MD, ML, IA_, IB_, IC_ };

constexpr Sym kFaceCycle[6][4] = {
    {PUL, MU, IA_, ML},    // top-left
    {MU, PUR, MR, IB_},    // top-right
    {IA_, MU, IB_, IC_},   // center
    {ML, IA_, IC_, PDL},   // bottom-left
    {IC_, IB_, MR, PDR},   // right
    {PDL, IC_, PDR, MD},   // bottom
};

// Endpoints of the eight interior carriers, in reading order.
constexpr Sym kInternalEnds[8][2] = {
    {MU, IA_}, {MU, IB_}, {ML, IA_}, {IA_, IC_},
    {IC_, IB_}, {IB_, MR}, {PDL, IC_}, {PDR, IC_},
};

// Face on the A (left) flank of each interior carrier.
constexpr int kLeftFace[8] = {2, 1, 0, 2, 2, 1, 3, 5};

std::vector<FlankEntry>& row_ref(Carrier& c, int row) {
  if (row == 0) return c.left;
  if (row == 1) return c.right;
  return c.flaps[row - 2].row;
}

int64_t row_base(const Carrier& c, int row, int step) {
  if (row < 2) return 0;
  const FlapRow& f = c.flaps[row - 2];
  return f.lo << (step - f.born);
}

Id new_vertex(Complex& cx, int birth, Id region, RoleRec base) {
  Vertex v;
  v.id = static_cast<Id>(cx.vertices.size());
  v.birth_step = birth;
  v.base_region = region;
  v.base = base;
  v.base.region = region;
  cx.vertices.push_back(std::move(v));
  return cx.vertices.back().id;
}

Id new_carrier(Complex& cx, Id region, CarrierKind kind, int birth, Id creator,
               bool boundary, std::vector<Id> verts) {
  Carrier c;
  c.id = static_cast<Id>(cx.carriers.size());
  c.region = region;
  c.kind = kind;
  c.birth_step = birth;
  c.creator_tile = creator;
  c.boundary = boundary;
  c.verts = std::move(verts);
  size_t segs = c.verts.size() - 1;
  c.left.resize(boundary ? 0 : segs);
  c.right.resize(segs);
  for (size_t i = 0; i < c.verts.size(); ++i) {
    cx.vertices[c.verts[i]].stations.push_back({c.id, static_cast<int64_t>(i), birth});
  }
  cx.carriers.push_back(std::move(c));
  return cx.carriers.back().id;
}

void set_side_bosses(Complex& cx, Id vid, const Carrier& k) {
  if (!carrier_is_internal(k.kind)) return;
  const Tile& t = cx.tiles[k.creator_tile];
  Vertex& v = cx.vertices[vid];
  v.boss[0] = t.side_mid[static_cast<int>(SideLabel::U)];
  int idx = static_cast<int>(k.kind);  // 1..8
  if (idx == 2 || idx == 5 || idx == 6) {
    v.boss[1] = t.corner[static_cast<int>(CornerCode::DR)];
  } else if (idx == 7 || idx == 8) {
    v.boss[1] = t.corner[static_cast<int>(CornerCode::DL)];
    v.boss[2] = t.corner[static_cast<int>(CornerCode::DR)];
  }
}

// Splits every segment of carrier `cid`, creating the new midpoint vertices
// with the roles dictated by the current flank rows.
void subdivide_carrier(Complex& cx, Id cid, int new_step) {
  Carrier& c0 = cx.carriers[cid];
  const int64_t L = c0.len();
  std::vector<Id> old_verts = c0.verts;
  std::vector<FlankEntry> old_left = c0.left, old_right = c0.right;

  std::vector<Id> fresh(L, kNone);
  for (int64_t j = 0; j < L; ++j) {
    RoleRec base;
    if (cx.carriers[cid].boundary) {
      base = RoleRec{cx.carriers[cid].region, VKind::Boundary,
                     static_cast<uint8_t>(old_right[j].label), 0};
    } else {
      base = RoleRec{cx.carriers[cid].region, VKind::Side,
                     static_cast<uint8_t>(old_left[j].label),
                     static_cast<uint8_t>(old_right[j].label)};
    }
    Id vid = new_vertex(cx, new_step, cx.carriers[cid].region, base);
    Vertex& v = cx.vertices[vid];
    v.birth_carrier = cid;
    v.creator_tile = cx.carriers[cid].creator_tile;
    set_side_bosses(cx, vid, cx.carriers[cid]);
    // Roles in pasted regions whose host interval covers this segment.
    for (const FlapRow& f : cx.carriers[cid].flaps) {
      int64_t lo = f.lo << (new_step - 1 - f.born);
      int64_t hi = f.hi << (new_step - 1 - f.born);
      if (j >= lo && j < hi) {
        v.pasted.push_back(
            RoleRec{f.region, VKind::Boundary, static_cast<uint8_t>(f.row[j - lo].label), 0});
      }
    }
    v.stations.push_back({cid, 2 * j + 1, new_step});
    fresh[j] = vid;
  }

  Carrier& c = cx.carriers[cid];
  c.verts.assign(2 * L + 1, kNone);
  for (int64_t i = 0; i <= L; ++i) c.verts[2 * i] = old_verts[i];
  for (int64_t j = 0; j < L; ++j) c.verts[2 * j + 1] = fresh[j];
  auto dbl = [](std::vector<FlankEntry>& row) {
    std::vector<FlankEntry> out(row.size() * 2);
    for (size_t j = 0; j < row.size(); ++j) out[2 * j] = out[2 * j + 1] = row[j];
    row = std::move(out);
  };
  dbl(c.left);
  dbl(c.right);
  for (FlapRow& f : c.flaps) dbl(f.row);
}

// Subdivides one minimal tile into six, per the orientation rule.
void subdivide_tile(Complex& cx, Id tid, int new_step) {
  const SubdivisionRule& rule = cx.opts.rule;
  const int rots[6] = {0, 1, rule.rot3, 3, 3, rule.rot6};

  // Rescale sides to the new step (carriers have already been subdivided).
  {
    Tile& t = cx.tiles[tid];
    for (auto& s : t.side) {
      int shift = new_step - s.at_step;
      s.a <<= shift;
      s.b <<= shift;
      s.at_step = new_step;
    }
  }

  std::array<Id, 4> mid{};
  for (int k = 0; k < 4; ++k) {
    const TileSide& s = cx.tiles[tid].side[k];
    mid[k] = cx.carriers[s.carrier].verts[(s.a + s.b) / 2];
  }

  const Id region = cx.tiles[tid].region;
  std::array<Id, 3> inner{};
  for (int i = 0; i < 3; ++i) {
    inner[i] = new_vertex(cx, new_step, region,
                          RoleRec{region, VKind::Inner, static_cast<uint8_t>(i), 0});
    Vertex& v = cx.vertices[inner[i]];
    v.creator_tile = tid;
    v.boss[0] = mid[static_cast<int>(SideLabel::U)];
    if (static_cast<InnerCode>(i) == InnerCode::C) {
      v.boss[1] = cx.tiles[tid].corner[static_cast<int>(CornerCode::DL)];
      v.boss[2] = cx.tiles[tid].corner[static_cast<int>(CornerCode::DR)];
    }
  }

  auto resolve = [&](Sym s) -> Id {
    switch (s) {
      case PUL: return cx.tiles[tid].corner[0];
      case PUR: return cx.tiles[tid].corner[1];
      case PDR: return cx.tiles[tid].corner[2];
      case PDL: return cx.tiles[tid].corner[3];
      case MU: return mid[0];
      case MR: return mid[1];
      case MD: return mid[2];
      case ML: return mid[3];
      case IA_: return inner[0];
      case IB_: return inner[1];
      case IC_: return inner[2];
    }
    return kNone;
  };

  std::array<Id, 8> icar{};
  for (int i = 0; i < 8; ++i) {
    icar[i] = new_carrier(cx, region, static_cast<CarrierKind>(i + 1), new_step, tid,
                          false, {resolve(kInternalEnds[i][0]), resolve(kInternalEnds[i][1])});
  }

  // Map oriented vertex pairs to side descriptors.
  struct SideDesc {
    Id carrier;
    int64_t a, b;
    int row;  // -1: decide per face for interior carriers
    int iedge;
  };
  std::map<std::pair<Id, Id>, SideDesc> seg;
  for (int i = 0; i < 8; ++i) {
    Id va = resolve(kInternalEnds[i][0]), vb = resolve(kInternalEnds[i][1]);
    seg[{va, vb}] = {icar[i], 0, 1, -1, i};
    seg[{vb, va}] = {icar[i], 1, 0, -1, i};
  }
  for (int k = 0; k < 4; ++k) {
    const TileSide& s = cx.tiles[tid].side[k];
    Id c0 = cx.tiles[tid].corner[k];
    Id c1 = cx.tiles[tid].corner[(k + 1) % 4];
    int64_t m = (s.a + s.b) / 2;
    seg[{c0, mid[k]}] = {s.carrier, s.a, m, s.row, -1};
    seg[{mid[k], c0}] = {s.carrier, m, s.a, s.row, -1};
    seg[{mid[k], c1}] = {s.carrier, m, s.b, s.row, -1};
    seg[{c1, mid[k]}] = {s.carrier, s.b, m, s.row, -1};
  }

  std::array<Id, 6> child{};
  for (int f = 0; f < 6; ++f) {
    Tile nt;
    nt.id = static_cast<Id>(cx.tiles.size());
    nt.birth_step = new_step;
    nt.region = region;
    nt.parent = tid;
    for (int k = 0; k < 4; ++k) nt.corner[k] = resolve(kFaceCycle[f][(rots[f] + k) % 4]);
    for (int k = 0; k < 4; ++k) {
      Id va = nt.corner[k], vb = nt.corner[(k + 1) % 4];
      auto it = seg.find({va, vb});
      if (it == seg.end()) throw std::logic_error("subdivide_tile: bad face cycle");
      const SideDesc& d = it->second;
      int row = d.row;
      if (row < 0) {
        bool left = kLeftFace[d.iedge] == f;
        // The A flank of edges 7/8 is a pinned convention, not derivable
        // from the text; see the calibration sweep.
        if ((d.iedge == 6 && rule.aside7) || (d.iedge == 7 && rule.aside8)) left = !left;
        row = left ? 0 : 1;
      }
      nt.side[k] = TileSide{d.carrier, d.a, d.b, new_step, row};
      Carrier& car = cx.carriers[d.carrier];
      int64_t s0 = std::min(d.a, d.b) - row_base(car, row, new_step);
      row_ref(car, row)[s0] = FlankEntry{nt.id, static_cast<SideLabel>(k)};
    }
    child[f] = nt.id;
    cx.tiles.push_back(std::move(nt));
  }

  Tile& t = cx.tiles[tid];
  t.child = child;
  t.inner = inner;
  t.icarrier = icar;
  t.side_mid = mid;
}

bool paste_at_impl(Complex& cx, Id kc, int64_t p) {
  const int s = cx.step;
  Id kernel = cx.carriers[kc].verts[p];
  for (const RoleRec& r : cx.vertices[kernel].pasted) {
    if (r.kind == VKind::Corner && static_cast<CornerCode>(r.a) == CornerCode::UL) {
      return false;  // one pasting per kernel
    }
  }
  Id urHost = cx.carriers[kc].verts[p - 2];
  Id umHost = cx.carriers[kc].verts[p - 1];
  Id lmHost = cx.carriers[kc].verts[p + 1];
  Id dlHost = cx.carriers[kc].verts[p + 2];

  Id pid = static_cast<Id>(cx.pastings.size());
  Id rid = static_cast<Id>(cx.regions.size());
  cx.regions.push_back(Region{rid, pid, kNone});

  Id drNew = new_vertex(cx, s, rid,
                        RoleRec{rid, VKind::Corner, static_cast<uint8_t>(CornerCode::DR), 0});
  cx.vertices[drNew].boss[0] = dlHost;  // CDR's boss is the CDL node

  Id flapT = static_cast<Id>(cx.tiles.size());
  Id rightC = new_carrier(cx, rid, CarrierKind::PR, s - 1, flapT, true, {urHost, drNew});
  Id bottomC = new_carrier(cx, rid, CarrierKind::PD, s - 1, flapT, true, {drNew, dlHost});
  cx.carriers[rightC].right[0] = FlankEntry{flapT, SideLabel::R};
  cx.carriers[bottomC].right[0] = FlankEntry{flapT, SideLabel::D};

  int flapRowIdx = static_cast<int>(cx.carriers[kc].flaps.size());
  {
    FlapRow f;
    f.pasting = pid;
    f.region = rid;
    f.lo = p - 2;
    f.hi = p + 2;
    f.born = s;
    f.row.resize(4);
    cx.carriers[kc].flaps.push_back(std::move(f));
  }

  {
    Tile t;
    t.id = flapT;
    t.birth_step = s - 1;
    t.region = rid;
    t.parent = kNone;
    t.corner = {kernel, urHost, drNew, dlHost};
    t.side[static_cast<int>(SideLabel::U)] = TileSide{kc, p / 2, p / 2 - 1, s - 1, 2 + flapRowIdx};
    t.side[static_cast<int>(SideLabel::R)] = TileSide{rightC, 0, 1, s - 1, 1};
    t.side[static_cast<int>(SideLabel::D)] = TileSide{bottomC, 0, 1, s - 1, 1};
    t.side[static_cast<int>(SideLabel::L)] = TileSide{kc, p / 2 + 1, p / 2, s - 1, 2 + flapRowIdx};
    cx.tiles.push_back(std::move(t));
  }
  cx.regions[rid].root_tile = flapT;

  auto add_pasted = [&](Id v, VKind k, uint8_t a) {
    cx.vertices[v].pasted.push_back(RoleRec{rid, k, a, 0});
  };
  add_pasted(urHost, VKind::Corner, static_cast<uint8_t>(CornerCode::UR));
  add_pasted(kernel, VKind::Corner, static_cast<uint8_t>(CornerCode::UL));
  add_pasted(dlHost, VKind::Corner, static_cast<uint8_t>(CornerCode::DL));
  add_pasted(umHost, VKind::Boundary, static_cast<uint8_t>(SideLabel::U));
  add_pasted(lmHost, VKind::Boundary, static_cast<uint8_t>(SideLabel::L));

  subdivide_carrier(cx, rightC, s);
  subdivide_carrier(cx, bottomC, s);
  subdivide_tile(cx, flapT, s);
  for (Id ch : cx.tiles[flapT].child) cx.leaves.push_back(ch);

  cx.pastings.push_back(Pasting{pid, s, kernel, kc, p - 2, p + 2, rid, flapT});
  return true;
}

}  // namespace

std::vector<HostPath> pasting_sites(const Complex& cx) {
  std::vector<HostPath> out;
  for (const Carrier& c : cx.carriers) {
    if (!carrier_is_internal(c.kind)) continue;
    for (int64_t q = 1; q < static_cast<int64_t>(c.verts.size()) - 1; ++q) {
      Id v = c.verts[q];
      const Vertex& vx = cx.vertices[v];
      if (vx.birth_carrier == c.id && cx.step - vx.birth_step == 2) {
        out.push_back(HostPath{c.id, q, v});
      }
    }
  }
  return out;
}

void advance(Complex& cx) {
  if (cx.level + 1 > cx.opts.max_level) {
    throw std::runtime_error("advance: level cap exceeded (NILFORGE_LEVEL_MAX)");
  }
  const int new_step = cx.step + 1;
  const size_t ncar = cx.carriers.size();
  for (size_t c = 0; c < ncar; ++c) subdivide_carrier(cx, static_cast<Id>(c), new_step);

  std::vector<Id> old_leaves = std::move(cx.leaves);
  cx.leaves.clear();
  for (Id t : old_leaves) {
    subdivide_tile(cx, t, new_step);
    for (Id ch : cx.tiles[t].child) cx.leaves.push_back(ch);
  }
  cx.step = new_step;
  cx.level = new_step + 1;

  if (cx.opts.pastings) {
    for (const HostPath& site : pasting_sites(cx)) {
      paste_at_impl(cx, site.carrier, site.center);
    }
  }
}

Complex build(int n, const BuildOptions& opts) {
  if (n < 1) throw std::invalid_argument("build: level must be >= 1");
  if (n > opts.max_level) throw std::runtime_error("build: level cap exceeded (NILFORGE_LEVEL_MAX)");
  Complex cx;
  cx.opts = opts;
  cx.level = 1;
  cx.step = 0;
  cx.regions.push_back(Region{0, kNone, 0});

  auto corner = [&](CornerCode c) {
    return new_vertex(cx, 0, 0, RoleRec{0, VKind::Corner, static_cast<uint8_t>(c), 0});
  };
  Id ul = corner(CornerCode::UL), ur = corner(CornerCode::UR);
  Id dr = corner(CornerCode::DR), dl = corner(CornerCode::DL);
  cx.vertices[dr].boss[0] = dl;

  Id bu = new_carrier(cx, 0, CarrierKind::BU, 0, 0, true, {ul, ur});
  Id br = new_carrier(cx, 0, CarrierKind::BR, 0, 0, true, {ur, dr});
  Id bd = new_carrier(cx, 0, CarrierKind::BD, 0, 0, true, {dr, dl});
  Id bl = new_carrier(cx, 0, CarrierKind::BL, 0, 0, true, {dl, ul});

  Tile t;
  t.id = 0;
  t.birth_step = 0;
  t.region = 0;
  t.corner = {ul, ur, dr, dl};
  t.side[0] = TileSide{bu, 0, 1, 0, 1};
  t.side[1] = TileSide{br, 0, 1, 0, 1};
  t.side[2] = TileSide{bd, 0, 1, 0, 1};
  t.side[3] = TileSide{bl, 0, 1, 0, 1};
  cx.tiles.push_back(std::move(t));
  cx.carriers[bu].right[0] = FlankEntry{0, SideLabel::U};
  cx.carriers[br].right[0] = FlankEntry{0, SideLabel::R};
  cx.carriers[bd].right[0] = FlankEntry{0, SideLabel::D};
  cx.carriers[bl].right[0] = FlankEntry{0, SideLabel::L};
  cx.leaves = {0};

  for (int i = 1; i < n; ++i) advance(cx);
  return cx;
}

bool paste_at(Complex& cx, const HostPath& site) {
  return paste_at_impl(cx, site.carrier, site.center);
}

int Complex::vertex_level(Id v) const {
  return std::min(3, step - vertices[v].birth_step + 1);
}
int Complex::vertex_rank(Id v) const {
  return step - vertices[v].birth_step + 1;
}

Id Complex::he_from(const HalfEdge& h) const {
  return carriers[h.carrier].verts[h.fwd ? h.seg : h.seg + 1];
}
Id Complex::he_to(const HalfEdge& h) const {
  return carriers[h.carrier].verts[h.fwd ? h.seg + 1 : h.seg];
}

std::vector<Complex::HalfEdge> Complex::out_edges(Id v) const {
  std::vector<HalfEdge> out;
  for (const Station& s : vertices[v].stations) {
    int64_t pos = s.pos << (step - s.at_step);
    const Carrier& c = carriers[s.carrier];
    if (pos > 0) out.push_back(HalfEdge{s.carrier, pos - 1, false});
    if (pos < c.len()) out.push_back(HalfEdge{s.carrier, pos, true});
  }
  return out;
}

std::vector<Id> Complex::neighbors(Id v) const {
  std::vector<Id> out;
  for (const HalfEdge& h : out_edges(v)) out.push_back(he_to(h));
  return out;
}

bool Complex::main_at(const HalfEdge& h, Id x) const {
  const Vertex& vx = vertices[x];
  if (vx.birth_carrier == h.carrier) return true;
  if (vx.base.kind == VKind::Inner && vx.creator_tile != kNone &&
      carriers[h.carrier].creator_tile == vx.creator_tile &&
      carrier_is_internal(carriers[h.carrier].kind)) {
    return true;
  }
  return false;
}

bool Complex::vertex_on_region_boundary(Id v, Id region) const {
  const Vertex& vx = vertices[v];
  if (vx.base_region == region &&
      (vx.base.kind == VKind::Corner || vx.base.kind == VKind::Boundary)) {
    return true;
  }
  for (const RoleRec& r : vx.pasted) {
    if (r.region == region) return true;
  }
  return false;
}

int64_t Complex::distance(Id a, Id b) const {
  if (a == b) return 0;
  std::vector<int64_t> dist(vertices.size(), -1);
  std::deque<Id> q{a};
  dist[a] = 0;
  while (!q.empty()) {
    Id v = q.front();
    q.pop_front();
    if (v == b) return dist[v];
    for (Id u : neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  return -1;
}

std::vector<Id> Complex::macrotiles_of_level(int lvl, bool base_only) const {
  std::vector<Id> out;
  for (const Tile& t : tiles) {
    if (base_only && t.region != 0) continue;
    if (tile_level(t.id) == lvl && (lvl == 1 ? t.is_minimal() : !t.is_minimal())) {
      out.push_back(t.id);
    }
  }
  return out;
}

int64_t Complex::count_base_tiles() const {
  int64_t n = 0;
  for (Id t : leaves) {
    if (tiles[t].region == 0) ++n;
  }
  return n;
}

std::vector<int> Complex::carrier_levels(Id c) const {
  std::vector<int> out;
  const Carrier& car = carriers[c];
  for (int64_t i = 1; i < static_cast<int64_t>(car.verts.size()) - 1; ++i) {
    out.push_back(vertex_level(car.verts[i]));
  }
  return out;
}

void Complex::dump(std::ostream& os) const {
  os << "nilforge-complex level=" << level << " step=" << step
     << " vertices=" << vertices.size() << " carriers=" << carriers.size()
     << " tiles=" << tiles.size() << " pastings=" << pastings.size() << "\n";
  for (const Vertex& v : vertices) {
    os << "V " << v.id << " birth=" << v.birth_step << " region=" << v.base_region
       << " role=" << role_str(v.base) << " level=" << vertex_level(v.id);
    os << " boss=";
    for (int i = 0; i < 3; ++i) {
      if (i) os << ",";
      os << v.boss[i];
    }
    if (!v.pasted.empty()) {
      os << " pasted=";
      for (size_t i = 0; i < v.pasted.size(); ++i) {
        if (i) os << ",";
        os << v.pasted[i].region << ":" << role_str(v.pasted[i]);
      }
    }
    os << "\n";
  }
  for (const Carrier& c : carriers) {
    os << "K " << c.id << " kind=" << carrier_kind_str(c.kind) << " region=" << c.region
       << " birth=" << c.birth_step << " creator=" << c.creator_tile << " verts=";
    for (size_t i = 0; i < c.verts.size(); ++i) {
      if (i) os << ",";
      os << c.verts[i];
    }
    os << "\n";
    for (int64_t j = 0; j < c.len(); ++j) {
      os << "H " << c.verts[j] << " " << c.verts[j + 1] << " carrier=" << c.id
         << " seg=" << j << "\n";
      os << "H " << c.verts[j + 1] << " " << c.verts[j] << " carrier=" << c.id
         << " seg=" << j << "\n";
    }
  }
  for (const Tile& t : tiles) {
    os << "T " << t.id << " birth=" << t.birth_step << " region=" << t.region
       << " parent=" << t.parent << " corners=" << t.corner[0] << "," << t.corner[1]
       << "," << t.corner[2] << "," << t.corner[3]
       << (t.is_minimal() ? " minimal" : " subdivided") << "\n";
  }
  for (const Pasting& p : pastings) {
    os << "P " << p.id << " step=" << p.step << " kernel=" << p.kernel
       << " carrier=" << p.host_carrier << " host=[" << p.host_lo << "," << p.host_hi
       << "] region=" << p.region << "\n";
  }
}

}  // namespace nilforge
