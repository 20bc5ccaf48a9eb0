#include "pasting/glue.hpp"

#include "pasting/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pasting {

namespace {

Path concat(std::initializer_list<const Path *> parts) {
  Path out;
  for (const Path *p : parts)
    out.insert(out.end(), p->begin(), p->end());
  return out;
}

Path slice(const Path &p, std::size_t from, std::size_t to) {
  return Path(p.begin() + static_cast<long>(from),
              p.begin() + static_cast<long>(to));
}

// Position of the contiguous block `block` inside `path`.
std::optional<std::size_t> find(const Path &path, const Path &block) {
  if (block.size() > path.size())
    return std::nullopt;
  for (std::size_t pos = 0; pos + block.size() <= path.size(); ++pos)
    if (std::equal(block.begin(), block.end(),
                   path.begin() + static_cast<long>(pos)))
      return pos;
  return std::nullopt;
}

std::vector<VertexId> interior(const PastingScheme &s, const Face &f) {
  std::vector<VertexId> out;
  for (const Path *p : {&f.top, &f.bottom})
    for (std::size_t k = 0; k + 1 < p->size(); ++k)
      out.push_back(s.edge((*p)[k]).tgt);
  return out;
}

} // namespace

bool adjacentOrderExists(const PastingScheme &scheme, const FaceId &f,
                         const FaceId &g) {
  scheme.faceIndex(f);
  scheme.faceIndex(g);
  for (const auto &o : enumerateOrders(scheme))
    for (std::size_t i = 0; i + 1 < o.size(); ++i)
      if (o[i] == f && o[i + 1] == g)
        return true;
  return false;
}

Composability classifyComposable(const PastingScheme &scheme, const FaceId &f,
                                 const FaceId &g) {
  if (f == g)
    throw Error(ErrorKind::UnknownFace, "a face cannot be glued to itself");
  FaceRelations rel(scheme);
  if (!rel.below(f, g) && !rel.below(g, f))
    return {Composability::Kind::CaseA, std::nullopt};
  if (rel.below(g, f))
    return {Composability::Kind::NotComposable, std::nullopt};
  for (const auto &u : rel.faceIds())
    if (u != f && u != g && rel.below(f, u) && rel.below(u, g))
      return {Composability::Kind::NotComposable, std::nullopt};

  const Face &F = scheme.face(f);
  const Face &G = scheme.face(g);
  std::set<EdgeId> sigmaG(G.top.begin(), G.top.end());
  std::vector<std::size_t> shared;
  for (std::size_t k = 0; k < F.bottom.size(); ++k)
    if (sigmaG.count(F.bottom[k]))
      shared.push_back(k);
  if (shared.empty() || shared.back() - shared.front() + 1 != shared.size())
    throw Error(ErrorKind::DisconnectedOverlap,
                "overlap of '" + f + "' and '" + g + "' is not a path in the "
                "bottom of '" + f + "'");
  Path r = slice(F.bottom, shared.front(), shared.back() + 1);
  auto inSigma = find(G.top, r);
  if (!inSigma)
    throw Error(ErrorKind::DisconnectedOverlap,
                "overlap of '" + f + "' and '" + g + "' is not a path in the "
                "top of '" + g + "'");

  Path tauPre = slice(F.bottom, 0, shared.front());
  Path tauPost = slice(F.bottom, shared.back() + 1, F.bottom.size());
  Path sigmaPre = slice(G.top, 0, *inSigma);
  Path sigmaPost = slice(G.top, *inSigma + r.size(), G.top.size());
  bool sF = tauPre.empty(), tF = tauPost.empty();
  bool sG = sigmaPre.empty(), tG = sigmaPost.empty();

  ShapeCase shape;
  shape.overlap = r;
  if (sF && tF)
    shape = {1, sigmaPre, sigmaPost, r};
  else if (sF && tG)
    shape = {2, sigmaPre, tauPost, r};
  else if (sG && tF)
    shape = {3, tauPre, sigmaPost, r};
  else if (sG && tG)
    shape = {4, tauPre, tauPost, r};
  else
    throw Error(ErrorKind::DisconnectedOverlap,
                "overlap of '" + f + "' and '" + g +
                    "' matches none of the four shapes");
  return {Composability::Kind::CaseB, shape};
}

CellType mergedBoundary(const ShapeCase &s, const CellType &upper,
                        const CellType &lower) {
  switch (s.row) {
  case 1: return {concat({&s.left, &upper.dom, &s.right}), lower.cod};
  case 2: return {concat({&s.left, &upper.dom}), concat({&lower.cod, &s.right})};
  case 3: return {concat({&upper.dom, &s.right}), concat({&s.left, &lower.cod})};
  case 4: return {upper.dom, concat({&s.left, &lower.cod, &s.right})};
  }
  throw Error(ErrorKind::ShapeMismatch, "shape row " + std::to_string(s.row));
}

GluedScheme buildGlued(const PastingScheme &scheme, const FaceId &f,
                       const FaceId &g) {
  auto c = classifyComposable(scheme, f, g);
  if (c.kind != Composability::Kind::CaseB)
    throw Error(ErrorKind::NotCaseB, "'" + f + "' and '" + g +
                                         "' do not form a stacked pair");
  const Face &F = scheme.face(f);
  const Face &G = scheme.face(g);
  CellType merged = mergedBoundary(*c.shape, {F.top, F.bottom}, {G.top, G.bottom});

  std::set<EdgeId> edgesF, edgesG;
  for (const Path *p : {&F.top, &F.bottom})
    edgesF.insert(p->begin(), p->end());
  for (const Path *p : {&G.top, &G.bottom})
    edgesG.insert(p->begin(), p->end());
  auto innerF = interior(scheme, F);
  auto innerG = interior(scheme, G);
  std::set<VertexId> dropV;
  for (const auto &v : innerF)
    if (std::find(innerG.begin(), innerG.end(), v) != innerG.end())
      dropV.insert(v);

  RawScheme raw;
  for (const auto &v : scheme.vertices())
    if (!dropV.count(v))
      raw.vertices.push_back(v);
  for (const auto &e : scheme.edges())
    if (!(edgesF.count(e.id) && edgesG.count(e.id)))
      raw.edges.push_back(e);
  for (const auto &face : scheme.faces())
    if (face.id != f && face.id != g)
      raw.faces.push_back(face);
  FaceId mergedId = f + "#" + g;
  if (scheme.hasFace(mergedId))
    throw Error(ErrorKind::InvalidScheme, "face id '" + mergedId + "' taken");
  raw.faces.push_back({mergedId, merged.dom, merged.cod});
  raw.top = scheme.top();
  raw.bottom = scheme.bottom();

  // The merged boundary must be the symmetric difference of the two faces.
  std::set<EdgeId> sym;
  std::set_symmetric_difference(edgesF.begin(), edgesF.end(), edgesG.begin(),
                                edgesG.end(), std::inserter(sym, sym.end()));
  std::set<EdgeId> boundary(merged.dom.begin(), merged.dom.end());
  boundary.insert(merged.cod.begin(), merged.cod.end());
  if (sym != boundary)
    throw std::logic_error("merged boundary of " + mergedId +
                           " is not the symmetric difference");

  return {requireValid(raw), mergedId, f, g, *c.shape, scheme};
}

CompOrder sFunctorOb(const GluedScheme &g, const CompOrder &glued) {
  if (!isValidOrder(FaceRelations(g.glued), glued))
    throw Error(ErrorKind::InvalidOrder, toString(glued));
  CompOrder out;
  for (const auto &face : glued.faces) {
    if (face == g.merged) {
      out.faces.push_back(g.originF);
      out.faces.push_back(g.originG);
    } else {
      out.faces.push_back(face);
    }
  }
  if (!isValidOrder(FaceRelations(g.origin), out))
    throw std::logic_error("expanded order " + toString(out) + " is invalid");
  return out;
}

std::vector<GenMove> sFunctorMove(const GluedScheme &g, const GenMove &m) {
  FaceRelations rel(g.glued);
  if (!isValidOrder(rel, m.at) || m.index + 1 >= m.at.size() ||
      rel.comparable(m.at[m.index], m.at[m.index + 1]))
    throw Error(ErrorKind::InvalidMove,
                toString(m.at) + " at " + std::to_string(m.index));
  CompOrder start = sFunctorOb(g, m.at);
  std::size_t k = m.at.position(g.merged);
  std::vector<std::size_t> indices;
  if (m.index == k)
    indices = {m.index + 1, m.index}; // (F#G, K): move K past G, then past F
  else if (m.index + 1 == k)
    indices = {m.index, m.index + 1}; // (H, F#G): move H past F, then past G
  else
    indices = {m.index < k ? m.index : m.index + 1};
  std::vector<GenMove> out;
  CompOrder cur = start;
  FaceRelations orig(g.origin);
  for (auto i : indices) {
    if (orig.comparable(cur[i], cur[i + 1]))
      throw std::logic_error("expanded move is not a generator");
    out.push_back({cur, i});
    cur = out.back().result();
  }
  return out;
}

std::string toString(JChoice c) {
  switch (c) {
  case JChoice::PullLower: return "pull-lower";
  case JChoice::PushUpper: return "push-upper";
  case JChoice::FirstGlued: return "first-glued";
  }
  return "?";
}

CompOrder pseudoInverse(const GluedScheme &g, const CompOrder &o,
                        JChoice choice) {
  FaceRelations rel(g.origin);
  if (!isValidOrder(rel, o))
    throw Error(ErrorKind::InvalidOrder, toString(o));
  CompOrder out;
  if (choice == JChoice::FirstGlued) {
    out = enumerateOrders(g.glued).front();
  } else {
    std::size_t pf = o.position(g.originF), pg = o.position(g.originG);
    std::vector<FaceId> before, after;
    for (std::size_t k = pf + 1; k < pg; ++k) {
      bool early = choice == JChoice::PullLower ? rel.below(o[k], g.originG)
                                                : !rel.below(g.originF, o[k]);
      (early ? before : after).push_back(o[k]);
    }
    out.faces.assign(o.faces.begin(), o.faces.begin() + static_cast<long>(pf));
    out.faces.insert(out.faces.end(), before.begin(), before.end());
    out.faces.push_back(g.merged);
    out.faces.insert(out.faces.end(), after.begin(), after.end());
    out.faces.insert(out.faces.end(), o.faces.begin() + static_cast<long>(pg) + 1,
                     o.faces.end());
  }
  if (!isValidOrder(FaceRelations(g.glued), out))
    throw std::logic_error("pseudo-inverse produced " + toString(out));
  return out;
}

PastedLabel pasteLabel(const ShapeCase &s, const FaceLabel &upper,
                       const CellType &upperType, const FaceLabel &lower,
                       const CellType &lowerType) {
  static const Path none;
  const Path *whiskers[5][4] = {
      {},
      {&s.left, &s.right, &none, &none},
      {&s.left, &none, &none, &s.right},
      {&none, &s.right, &s.left, &none},
      {&none, &none, &s.left, &s.right},
  };
  if (s.row < 1 || s.row > 4)
    throw Error(ErrorKind::ShapeMismatch, "shape row " + std::to_string(s.row));
  const auto &w = whiskers[s.row];
  PastedLabel out{{PastedPart{*w[0], upper, upperType, *w[1]},
                   PastedPart{*w[2], lower, lowerType, *w[3]}}};

  CellType merged = mergedBoundary(s, upperType, lowerType);
  Path cur = merged.dom;
  for (const auto &part : out.parts) {
    if (concat({&part.pre, &part.type.dom, &part.post}) != cur)
      throw Error(ErrorKind::ShapeMismatch,
                  "factors do not chain for shape row " +
                      std::to_string(s.row));
    cur = concat({&part.pre, &part.type.cod, &part.post});
  }
  if (cur != merged.cod)
    throw Error(ErrorKind::ShapeMismatch,
                "factors do not end at the merged bottom");
  return out;
}

Labelling gluedLabelling(const Labelling &lab, const GluedScheme &g) {
  if (!(lab.scheme() == g.origin))
    throw Error(ErrorKind::InvalidLabelling,
                "labelling does not label the glued scheme's origin");
  for (const auto &d : lab.decls())
    if (d->kind == ThreeCellDecl::Kind::OneToOne &&
        (d->faces[0] == g.originF || d->faces[0] == g.originG))
      throw Error(ErrorKind::LabelOnMergedFace,
                  "3-cell '" + d->name + "' lives on '" + d->faces[0] + "'");
  const Face &F = g.origin.face(g.originF);
  const Face &G = g.origin.face(g.originG);
  std::map<FaceId, FaceLabel> labels;
  for (const auto &face : g.glued.faces())
    if (face.id != g.merged)
      labels[face.id] = lab.label(face.id);
  labels[g.merged].pasted = std::make_shared<PastedLabel>(
      pasteLabel(g.shape, lab.label(g.originF), {F.top, F.bottom},
                 lab.label(g.originG), {G.top, G.bottom}));
  return Labelling(g.glued, std::move(labels), lab.generators(), lab.decls());
}

DeclRef declarePair(Labelling &lab, const std::string &name, const FaceId &f,
                    const FaceId &g, const std::string &target,
                    const std::optional<CellType> &declared) {
  auto c = classifyComposable(lab.scheme(), f, g);
  if (c.kind != Composability::Kind::CaseB)
    throw Error(ErrorKind::NotCaseB, "3-cell '" + name + "' on '" + f +
                                         "', '" + g + "'");
  const Face &F = lab.scheme().face(f);
  const Face &G = lab.scheme().face(g);
  CellType boundary =
      mergedBoundary(*c.shape, {F.top, F.bottom}, {G.top, G.bottom});
  if (declared && *declared != boundary)
    throw Error(ErrorKind::InvalidLabelling,
                "declared boundary of '" + target + "' differs from " + f +
                    "#" + g);
  return lab.declareTwoToOne(name, f, g, target, boundary);
}

MoveWord inducedNat2(const Labelling &lab, const GluedScheme &g,
                     const ThreeCellDecl &decl, const CompOrder &o,
                     JChoice choice) {
  if (decl.kind != ThreeCellDecl::Kind::TwoToOne ||
      decl.faces != std::vector<FaceId>{g.originF, g.originG})
    throw Error(ErrorKind::InvalidMove,
                "'" + decl.name + "' is not declared on this pair");
  CompOrder target = sFunctorOb(g, pseudoInverse(g, o, choice));
  MoveWord w = gammaWord(lab, o, connectOrders(g.origin, o, target));
  return extend(std::move(w), {Move::gen3Pair(target.position(g.originF),
                                              lab.decl(decl.name))});
}

} // namespace pasting
