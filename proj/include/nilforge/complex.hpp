#ifndef NILFORGE_COMPLEX_HPP
#define NILFORGE_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nilforge/core.hpp"

namespace nilforge {

// A vertex role within one planar region. Side roles carry the ordered pair
// (label on the A flank, label on the B flank) of the carrier segment the
// vertex was born on; Boundary roles a single label; Corner/Inner their code.
struct RoleRec {
  Id region = kNone;
  VKind kind = VKind::Corner;
  uint8_t a = 0;
  uint8_t b = 0;

  bool same_content(const RoleRec& o) const {
    return kind == o.kind && a == o.a && b == o.b;
  }
};

std::string role_str(const RoleRec& r);

struct Station {
  Id carrier = kNone;
  int64_t pos = 0;  // position at scale `at_step`
  int at_step = 0;
};

struct Vertex {
  Id id = kNone;
  int birth_step = 0;
  Id base_region = kNone;
  RoleRec base;
  Id birth_carrier = kNone;   // carrier whose subdivision created it
  Id creator_tile = kNone;    // tile whose subdivision created it (side+inner)
  std::array<Id, 3> boss{kNone, kNone, kNone};
  std::vector<RoleRec> pasted;  // roles acquired in pasted regions
  std::vector<Station> stations;
};

// One planar flank entry: which tile currently presents which of its sides
// to a given carrier segment.
struct FlankEntry {
  Id tile = kNone;
  SideLabel label = SideLabel::U;
};

// Extra flank row contributed by one pasting along its host interval.
struct FlapRow {
  Id pasting = kNone;
  Id region = kNone;
  int64_t lo = 0, hi = 0;  // host interval at scale `born`
  int born = 0;
  std::vector<FlankEntry> row;  // size hi-lo at current scale
};

struct Carrier {
  Id id = kNone;
  Id region = kNone;
  CarrierKind kind = CarrierKind::BU;
  int birth_step = 0;
  Id creator_tile = kNone;  // subdivided tile (internal) or region root (boundary)
  bool boundary = false;    // true: no left flank, nodes are Boundary kind
  std::vector<Id> verts;    // position-indexed, current scale
  std::vector<FlankEntry> left, right;  // per segment; left is the A side
  std::vector<FlapRow> flaps;

  int64_t len() const { return static_cast<int64_t>(verts.size()) - 1; }
};

// Side descriptor: traversing the side in its intrinsic direction
// (U: UL->UR, R: UR->DR, D: DR->DL, L: DL->UL) runs from carrier position
// `a` to `b` at scale `at_step`. `row` says which flank row the tile
// occupies on that carrier: 0 left, 1 right, 2+k flap row k.
struct TileSide {
  Id carrier = kNone;
  int64_t a = 0, b = 0;
  int at_step = 0;
  int row = 1;
};

struct Tile {
  Id id = kNone;
  int birth_step = 0;
  Id region = kNone;
  Id parent = kNone;
  std::array<Id, 4> corner{kNone, kNone, kNone, kNone};  // UL UR DR DL
  std::array<TileSide, 4> side{};                        // U R D L
  // Filled when the tile is subdivided and becomes a macrotile.
  std::array<Id, 6> child{kNone, kNone, kNone, kNone, kNone, kNone};
  std::array<Id, 3> inner{kNone, kNone, kNone};
  std::array<Id, 8> icarrier{kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone};
  std::array<Id, 4> side_mid{kNone, kNone, kNone, kNone};

  bool is_minimal() const { return child[0] == kNone; }
};

struct Region {
  Id id = kNone;
  Id pasting = kNone;  // kNone for the base plane
  Id root_tile = kNone;
};

struct Pasting {
  Id id = kNone;
  int step = 0;
  Id kernel = kNone;
  Id host_carrier = kNone;
  int64_t host_lo = 0, host_hi = 0;  // at scale `step`
  Id region = kNone;
  Id flap_tile = kNone;  // root macrotile of the pasted region
};

// Orientation of the six subdivision faces. Faces f3 (center) and f6
// (bottom) are not pinned by the text alone; their rotations were fixed by
// the calibration sweep in tests/test_complex.cpp against the emergent
// invariants (distinct side-type pairs, UL/LU stretch structure,
// determinism). See SubdivisionRule::standard().
struct SubdivisionRule {
  int rot3 = 0;
  int rot6 = 0;
  bool aside7 = false;  // put the A flank of interior edge 7 on the right
  bool aside8 = false;  // same for edge 8
  static SubdivisionRule standard();
};

struct BuildOptions {
  int max_level = 7;  // capacity bound, overridable via NILFORGE_LEVEL_MAX
  bool pastings = true;
  SubdivisionRule rule = SubdivisionRule::standard();
};

class Complex {
 public:
  int level = 1;  // build(level); step = level-1 rounds applied
  int step = 0;
  BuildOptions opts;

  std::vector<Vertex> vertices;
  std::vector<Carrier> carriers;
  std::vector<Tile> tiles;
  std::vector<Region> regions;
  std::vector<Pasting> pastings;
  std::vector<Id> leaves;  // current minimal tiles

  // --- queries ---
  int vertex_level(Id v) const;  // 1..3
  int vertex_rank(Id v) const;   // uncapped age+1
  int64_t station_pos(const Station& s) const { return s.pos << (step - s.at_step); }

  struct HalfEdge {
    Id carrier = kNone;
    int64_t seg = 0;  // segment [seg, seg+1]
    bool fwd = true;  // true: from seg to seg+1 (with the carrier reading)
  };
  Id he_from(const HalfEdge& h) const;
  Id he_to(const HalfEdge& h) const;
  HalfEdge he_reverse(const HalfEdge& h) const { return {h.carrier, h.seg, !h.fwd}; }

  std::vector<HalfEdge> out_edges(Id v) const;
  std::vector<Id> neighbors(Id v) const;

  // True if h continues along the carrier the path is already on at x, i.e.
  // not a move into a macrotile interior or a pasted region.
  bool main_at(const HalfEdge& h, Id x) const;
  // Region of the carrier h lies on.
  Id he_region(const HalfEdge& h) const { return carriers[h.carrier].region; }

  bool vertex_on_region_boundary(Id v, Id region) const;

  int tile_level(Id t) const { return step - tiles[t].birth_step + 1; }

  // Graph distance over all edges, pastings included.
  int64_t distance(Id a, Id b) const;

  // All macrotiles (subdivided tiles) of a given level, optionally only in
  // the base plane.
  std::vector<Id> macrotiles_of_level(int lvl, bool base_only = false) const;

  int64_t count_base_tiles() const;

  void dump(std::ostream& os) const;

  // Interior node level sequence of a carrier (positions 1..len-1).
  std::vector<int> carrier_levels(Id c) const;
};

// Builds the level-n complex: level-1 square, then n-1 rounds of
// subdivision plus pastings over all fresh rank-3 windows.
Complex build(int n, const BuildOptions& opts = BuildOptions{});

// One round: subdivide everything, then paste. Exposed for tests.
void advance(Complex& cx);

// Pasting sites found on `cx` in its current state: 5-vertex host windows
// centered at side nodes that just reached rank 3.
struct HostPath {
  Id carrier = kNone;
  int64_t center = 0;
  Id kernel = kNone;
};
std::vector<HostPath> pasting_sites(const Complex& cx);

// Attaches a fresh level-2 macrotile along the host window. Returns false if
// the kernel already carries a pasting.
bool paste_at(Complex& cx, const HostPath& site);

int max_level_cap();

}  // namespace nilforge

#endif
