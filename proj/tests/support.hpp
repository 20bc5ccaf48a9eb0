#pragma once

#include "pasting/glue.hpp"
#include "pasting/io.hpp"
#include "pasting/orders.hpp"
#include "pasting/scheme.hpp"
#include "pasting/terms.hpp"
#include "pasting/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

using namespace pasting;

inline std::string fixture(const std::string &name) {
  return std::string(PASTING_FIXTURE_DIR) + "/" + name;
}

inline RawScheme rawFixture(const std::string &name) {
  return loadScheme(fixture(name + ".json"));
}

inline PastingScheme schemeFixture(const std::string &name) {
  return requireValid(rawFixture(name));
}

inline Labelling labFixture(const std::string &name) {
  return loadLabelling(fixture(name + ".lab.json"));
}

/// Every committed valid scheme fixture.
inline const std::vector<std::string> &schemeFixtureNames() {
  static const std::vector<std::string> names{
      "stacked-bigons", "running", "series",     "row2",
      "row3",           "row4",    "double-stack", "motivating",
      "golden/row1-glued", "golden/row2-glued", "golden/row3-glued",
      "golden/row4-glued", "golden/motivating-glued"};
  return names;
}

inline const std::vector<std::string> &labFixtureNames() {
  static const std::vector<std::string> names{
      "stacked-bigons", "running", "series", "row2",
      "row3",           "row4",    "double-stack", "motivating"};
  return names;
}

// ---------------------------------------------------------------------------
// Oracles computed from the raw description only.

/// Direct relation: tau_F and sigma_G share an edge.
inline std::vector<std::vector<bool>> oracleTriangle(const RawScheme &raw,
                                                     std::vector<FaceId> &ids) {
  ids.clear();
  for (const auto &f : raw.faces)
    ids.push_back(f.id);
  std::vector<std::vector<bool>> tri(ids.size(),
                                     std::vector<bool>(ids.size(), false));
  for (std::size_t a = 0; a < raw.faces.size(); ++a)
    for (std::size_t b = 0; b < raw.faces.size(); ++b) {
      const auto &tau = raw.faces[a].bottom;
      const auto &sigma = raw.faces[b].top;
      for (const auto &e : tau)
        if (std::find(sigma.begin(), sigma.end(), e) != sigma.end())
          tri[a][b] = true;
    }
  return tri;
}

/// Floyd-Warshall closure.
inline std::vector<std::vector<bool>>
oracleClosure(std::vector<std::vector<bool>> m) {
  std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][k] && m[k][j])
          m[i][j] = true;
  return m;
}

/// All permutations of the faces that respect the direct relation, sorted.
inline std::vector<std::vector<FaceId>> oracleOrders(const RawScheme &raw) {
  std::vector<FaceId> ids;
  auto tri = oracleTriangle(raw, ids);
  std::vector<std::size_t> perm(ids.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  std::vector<std::vector<FaceId>> out;
  do {
    std::vector<std::size_t> pos(ids.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
      pos[perm[k]] = k;
    bool ok = true;
    for (std::size_t a = 0; a < ids.size() && ok; ++a)
      for (std::size_t b = 0; b < ids.size() && ok; ++b)
        if (tri[a][b] && pos[a] >= pos[b])
          ok = false;
    if (ok) {
      std::vector<FaceId> o;
      for (auto k : perm)
        o.push_back(ids[k]);
      out.push_back(o);
    }
  } while (std::next_permutation(perm.begin(), perm.end(),
                                 [&](std::size_t a, std::size_t b) {
                                   return ids[a] < ids[b];
                                 }));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<FaceId>>
asLists(const std::vector<CompOrder> &orders) {
  std::vector<std::vector<FaceId>> out;
  for (const auto &o : orders)
    out.push_back(o.faces);
  return out;
}

/// True when some oracle order has f immediately before g.
inline bool oracleAdjacent(const RawScheme &raw, const FaceId &f,
                           const FaceId &g) {
  for (const auto &o : oracleOrders(raw))
    for (std::size_t k = 0; k + 1 < o.size(); ++k)
      if (o[k] == f && o[k + 1] == g)
        return true;
  return false;
}

// ---------------------------------------------------------------------------
// Single-element mutations of valid fixtures with the error class each must
// raise.

struct Mutation {
  std::string name;
  RawScheme raw;
  SchemeErrorKind expected;
};

inline Face &faceOf(RawScheme &raw, const std::string &id) {
  return *std::find_if(raw.faces.begin(), raw.faces.end(),
                       [&](const Face &f) { return f.id == id; });
}

inline Edge &edgeOf(RawScheme &raw, const std::string &id) {
  return *std::find_if(raw.edges.begin(), raw.edges.end(),
                       [&](const Edge &e) { return e.id == id; });
}

inline std::vector<Mutation> mutations() {
  using K = SchemeErrorKind;
  const RawScheme running = rawFixture("running");
  const RawScheme stacked = rawFixture("stacked-bigons");
  const RawScheme series = rawFixture("series");
  std::vector<Mutation> out;
  auto add = [&](std::string name, RawScheme raw, K k, auto change) {
    change(raw);
    out.push_back({std::move(name), std::move(raw), k});
  };

  add("back edge closes a cycle", running, K::CycleDetected,
      [](RawScheme &r) { r.edges.push_back({"back", "T", "S"}); });
  add("loop edge", running, K::CycleDetected,
      [](RawScheme &r) { r.edges.push_back({"loop", "B", "B"}); });
  add("reversed outer edge", running, K::CycleDetected,
      [](RawScheme &r) { std::swap(edgeOf(r, "p").src, edgeOf(r, "p").tgt); });
  add("duplicate edge id", running, K::MalformedInput,
      [](RawScheme &r) { r.edges.push_back({"a", "A", "B"}); });
  add("duplicate vertex", running, K::MalformedInput,
      [](RawScheme &r) { r.vertices.push_back("A"); });
  add("duplicate face id", running, K::MalformedInput, [](RawScheme &r) {
    r.faces.push_back({"alpha", {"a"}, {"a'"}});
  });
  add("face names an unknown edge", running, K::MalformedInput,
      [](RawScheme &r) { faceOf(r, "alpha").bottom = {"zz"}; });
  add("edge names an unknown vertex", running, K::MalformedInput,
      [](RawScheme &r) { edgeOf(r, "h").tgt = "Q"; });
  add("empty face path", running, K::MalformedInput,
      [](RawScheme &r) { faceOf(r, "beta").top.clear(); });
  add("empty outer path", running, K::MalformedInput,
      [](RawScheme &r) { r.bottom.clear(); });
  add("second source", running, K::MultipleSources, [](RawScheme &r) {
    r.vertices.push_back("Z");
    r.edges.push_back({"z", "Z", "A"});
  });
  add("second sink", running, K::MultipleSinks, [](RawScheme &r) {
    r.vertices.push_back("Z");
    r.edges.push_back({"z", "A", "Z"});
  });
  add("isolated vertex", running, K::UnreachableVertex,
      [](RawScheme &r) { r.vertices.push_back("Z"); });
  add("face path out of order", running, K::BadFaceBoundary,
      [](RawScheme &r) { faceOf(r, "psi").top = {"h", "b'", "g", "a'", "f"}; });
  add("face with equal paths", running, K::BadFaceBoundary,
      [](RawScheme &r) { faceOf(r, "alpha").bottom = {"a"}; });
  add("face paths end apart", running, K::BadFaceBoundary,
      [](RawScheme &r) { faceOf(r, "alpha").bottom = {"a'", "g"}; });
  add("edge dropped from a face path", running, K::BadFaceBoundary,
      [](RawScheme &r) { faceOf(r, "phi").bottom.pop_back(); });
  add("reversed inner edge", running, K::BadFaceBoundary,
      [](RawScheme &r) { std::swap(edgeOf(r, "g").src, edgeOf(r, "g").tgt); });
  add("face paths share an edge", series, K::BadFaceBoundary,
      [](RawScheme &r) {
        faceOf(r, "H").top = {"b0", "g"};
        faceOf(r, "H").bottom = {"b1", "g"};
      });
  add("outer path stops early", running, K::BadOuterBoundary,
      [](RawScheme &r) { r.top = {"f", "a"}; });
  add("duplicated face role", running, K::RolePartitionViolation,
      [](RawScheme &r) { r.faces.push_back({"alpha2", {"a"}, {"a'"}}); });
  add("lower path reused", stacked, K::RolePartitionViolation,
      [](RawScheme &r) { faceOf(r, "F").bottom = {"e2"}; });
  add("outer paths exchanged", stacked, K::RolePartitionViolation,
      [](RawScheme &r) { std::swap(r.top, r.bottom); });
  add("face removed", running, K::EulerViolation, [](RawScheme &r) {
    std::erase_if(r.faces, [](const Face &f) { return f.id == "beta"; });
  });
  add("unused parallel edge", stacked, K::EulerViolation,
      [](RawScheme &r) { r.edges.push_back({"e3", "S", "T"}); });
  return out;
}

inline bool reports(const ValidationResult &r, SchemeErrorKind k) {
  return std::any_of(r.errors.begin(), r.errors.end(),
                     [&](const SchemeError &e) { return e.kind == k; });
}

// ---------------------------------------------------------------------------
// Random move words.

/// Applicable moves at the end of w: swaps of independent neighbours with
/// either sign and the declared 1-to-1 cells.
inline std::vector<Move> applicableMoves(const Labelling &lab,
                                         const VertWord &w) {
  std::vector<Move> out;
  for (std::size_t i = 0; i + 1 < w.cells.size(); ++i)
    if (swapOrientation(w, i) != 0) {
      out.push_back(Move::swap(i, +1));
      out.push_back(Move::swap(i, -1));
    }
  for (const auto &d : lab.decls())
    if (d->kind == ThreeCellDecl::Kind::OneToOne)
      for (std::size_t i = 0; i < w.cells.size(); ++i)
        if (w.cells[i].gen == d->sources[0])
          out.push_back(Move::gen3(i, d));
  return out;
}

inline MoveWord randomWord(const Labelling &lab, const VertWord &source,
                           std::size_t length, std::mt19937_64 &rng) {
  MoveWord w{source, {}};
  VertWord cur = source;
  for (std::size_t k = 0; k < length; ++k) {
    auto moves = applicableMoves(lab, cur);
    if (moves.empty())
      break;
    Move m = moves[std::uniform_int_distribution<std::size_t>(
        0, moves.size() - 1)(rng)];
    cur = applyMove(cur, m);
    w.moves.push_back(m);
  }
  return w;
}

} // namespace testing_support
