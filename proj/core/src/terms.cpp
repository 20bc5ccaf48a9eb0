#include "pasting/terms.hpp"

#include "pasting/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pasting {

bool FaceLabel::operator==(const FaceLabel &other) const {
  if (generator != other.generator || isPasted() != other.isPasted())
    return false;
  return !isPasted() || *pasted == *other.pasted;
}

bool Move::operator==(const Move &other) const {
  if (kind != other.kind || index != other.index || sign != other.sign)
    return false;
  if (!decl || !other.decl)
    return decl == other.decl;
  return decl->name == other.decl->name;
}

namespace {

Path concat(const Path &a, const Path &b) {
  Path out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Path concat(const Path &a, const Path &b, const Path &c) {
  return concat(concat(a, b), c);
}

Path slice(const Path &p, std::size_t from, std::size_t to) {
  return Path(p.begin() + static_cast<long>(from),
              p.begin() + static_cast<long>(to));
}

std::size_t cellCount(const FaceLabel &label) {
  if (!label.isPasted())
    return 1;
  return cellCount(label.pasted->parts[0].label) +
         cellCount(label.pasted->parts[1].label);
}

[[noreturn]] void notApplicable(const Move &m, const std::string &why) {
  throw Error(ErrorKind::MoveNotApplicable, toString(m) + ": " + why);
}

// The cell rewriting type.dom found at position pos of path.
std::optional<WhiskCell> cellAt(const Path &path, std::size_t pos,
                                const std::string &gen, const CellType &type) {
  if (pos + type.dom.size() > path.size())
    return std::nullopt;
  if (!std::equal(type.dom.begin(), type.dom.end(),
                  path.begin() + static_cast<long>(pos)))
    return std::nullopt;
  return WhiskCell{slice(path, 0, pos), gen, type,
                   slice(path, pos + type.dom.size(), path.size())};
}

} // namespace

// ---------------------------------------------------------------------------
// Labelling

Labelling::Labelling(PastingScheme scheme)
    : Labelling(std::move(scheme), std::map<FaceId, std::string>{}) {}

Labelling::Labelling(PastingScheme scheme,
                     const std::map<FaceId, std::string> &names)
    : scheme_(std::move(scheme)) {
  for (const auto &[face, name] : names)
    if (!scheme_.hasFace(face))
      throw Error(ErrorKind::UnknownFace, "label given for '" + face + "'");
  for (const auto &f : scheme_.faces()) {
    auto it = names.find(f.id);
    std::string name = it == names.end() ? f.id : it->second;
    addGenerator(name, CellType{f.top, f.bottom});
    labels_[f.id] = FaceLabel::plain(name);
  }
}

Labelling::Labelling(PastingScheme scheme, std::map<FaceId, FaceLabel> labels,
                     std::map<std::string, CellType> generators,
                     std::vector<DeclRef> decls)
    : scheme_(std::move(scheme)), labels_(std::move(labels)),
      generators_(std::move(generators)), decls_(std::move(decls)) {
  for (const auto &f : scheme_.faces()) {
    auto it = labels_.find(f.id);
    if (it == labels_.end())
      throw Error(ErrorKind::InvalidLabelling, "face '" + f.id + "' unlabelled");
    if (!it->second.isPasted() &&
        generator(it->second.generator) != CellType{f.top, f.bottom})
      throw Error(ErrorKind::InvalidLabelling,
                  "generator '" + it->second.generator +
                      "' does not match the boundary of face '" + f.id + "'");
  }
  if (labels_.size() != scheme_.faces().size())
    throw Error(ErrorKind::InvalidLabelling, "labels for unknown faces");
}

void Labelling::addGenerator(const std::string &name, const CellType &type) {
  if (!generators_.emplace(name, type).second)
    throw Error(ErrorKind::InvalidLabelling,
                "generator name '" + name + "' is not fresh");
}

const FaceLabel &Labelling::label(const FaceId &face) const {
  auto it = labels_.find(face);
  if (it == labels_.end())
    throw Error(ErrorKind::UnknownFace, "no face '" + face + "'");
  return it->second;
}

const CellType &Labelling::generator(const std::string &name) const {
  auto it = generators_.find(name);
  if (it == generators_.end())
    throw Error(ErrorKind::InvalidLabelling, "no generator '" + name + "'");
  return it->second;
}

DeclRef Labelling::decl(const std::string &name) const {
  for (const auto &d : decls_)
    if (d->name == name)
      return d;
  throw Error(ErrorKind::InvalidLabelling, "no 3-cell '" + name + "'");
}

DeclRef Labelling::declareOneToOne(const std::string &name, const FaceId &face,
                                   const std::string &target) {
  for (const auto &d : decls_)
    if (d->name == name)
      throw Error(ErrorKind::InvalidLabelling, "duplicate 3-cell '" + name + "'");
  const FaceLabel &l = label(face);
  if (l.isPasted())
    throw Error(ErrorKind::InvalidLabelling,
                "3-cell '" + name + "' on pasted face '" + face + "'");
  CellType type = generator(l.generator);
  addGenerator(target, type);
  auto d = std::make_shared<ThreeCellDecl>(
      ThreeCellDecl{name, ThreeCellDecl::Kind::OneToOne, {face},
                    {l.generator}, target, type});
  decls_.push_back(d);
  return d;
}

DeclRef Labelling::declareTwoToOne(const std::string &name,
                                   const FaceId &upper, const FaceId &lower,
                                   const std::string &target,
                                   const CellType &boundary) {
  for (const auto &d : decls_)
    if (d->name == name)
      throw Error(ErrorKind::InvalidLabelling, "duplicate 3-cell '" + name + "'");
  const FaceLabel &lu = label(upper);
  const FaceLabel &ll = label(lower);
  if (lu.isPasted() || ll.isPasted())
    throw Error(ErrorKind::InvalidLabelling,
                "3-cell '" + name + "' on a pasted face");
  addGenerator(target, boundary);
  auto d = std::make_shared<ThreeCellDecl>(ThreeCellDecl{
      name, ThreeCellDecl::Kind::TwoToOne, {upper, lower},
      {lu.generator, ll.generator}, target, boundary});
  decls_.push_back(d);
  return d;
}

Labelling Labelling::modified(const ThreeCellDecl &decl) const {
  Labelling out = *this;
  if (decl.kind == ThreeCellDecl::Kind::OneToOne) {
    const FaceId &face = decl.faces.at(0);
    const FaceLabel &l = label(face);
    if (l.isPasted() || l.generator != decl.sources.at(0))
      throw Error(ErrorKind::InvalidLabelling,
                  "face '" + face + "' is not labelled by '" +
                      decl.sources.at(0) + "'");
    out.labels_[face] = FaceLabel::plain(decl.target);
  } else {
    FaceId merged = decl.faces.at(0) + "#" + decl.faces.at(1);
    const Face &f = scheme_.face(merged);
    if (CellType{f.top, f.bottom} != decl.boundary)
      throw Error(ErrorKind::InvalidLabelling,
                  "boundary of '" + decl.target + "' differs from face '" +
                      merged + "'");
    out.labels_[merged] = FaceLabel::plain(decl.target);
  }
  if (!generators_.count(decl.target))
    out.generators_[decl.target] = decl.boundary;
  return out;
}

std::map<std::string, std::string> Labelling::primedNames() const {
  std::map<std::string, std::string> out;
  for (const auto &d : decls_)
    if (d->kind == ThreeCellDecl::Kind::OneToOne)
      out[d->sources.at(0)] = d->target;
  return out;
}

bool Labelling::operator==(const Labelling &other) const {
  if (!(scheme_ == other.scheme_) || labels_ != other.labels_ ||
      generators_ != other.generators_ || decls_.size() != other.decls_.size())
    return false;
  for (std::size_t i = 0; i < decls_.size(); ++i)
    if (!(*decls_[i] == *other.decls_[i]))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Words

Path WhiskCell::input() const { return concat(pre, type.dom, post); }
Path WhiskCell::output() const { return concat(pre, type.cod, post); }

Path VertWord::target() const {
  return cells.empty() ? source : cells.back().output();
}

namespace {

void expand(const Labelling &lab, const FaceLabel &label, const CellType &type,
            const Path &pre, const Path &post, std::vector<WhiskCell> &out) {
  if (!label.isPasted()) {
    out.push_back({pre, label.generator, lab.generator(label.generator), post});
    return;
  }
  for (const auto &part : label.pasted->parts)
    expand(lab, part.label, part.type, concat(pre, part.pre),
           concat(part.post, post), out);
  (void)type;
}

} // namespace

VertWord evalOrder(const Labelling &lab, const CompOrder &o) {
  const PastingScheme &scheme = lab.scheme();
  if (!isValidOrder(FaceRelations(scheme), o))
    throw Error(ErrorKind::InvalidOrder, toString(o));
  VertWord w{scheme.top(), {}};
  Path cur = scheme.top();
  for (const auto &id : o.faces) {
    const Face &f = scheme.face(id);
    std::optional<std::size_t> found;
    for (std::size_t pos = 0; pos + f.top.size() <= cur.size(); ++pos) {
      if (!std::equal(f.top.begin(), f.top.end(),
                      cur.begin() + static_cast<long>(pos)))
        continue;
      if (found)
        throw Error(ErrorKind::SigmaNotFound,
                    "top of '" + id + "' occurs twice in the current path");
      found = pos;
    }
    if (!found)
      throw Error(ErrorKind::SigmaNotFound,
                  "top of '" + id + "' is not in the current path");
    Path pre = slice(cur, 0, *found);
    Path post = slice(cur, *found + f.top.size(), cur.size());
    expand(lab, lab.label(id), CellType{f.top, f.bottom}, pre, post, w.cells);
    cur = concat(pre, f.bottom, post);
  }
  if (w.target() != cur || cur != scheme.bottom())
    throw Error(ErrorKind::SigmaNotFound,
                "evaluation of " + toString(o) + " does not end at the bottom");
  return w;
}

int swapOrientation(const VertWord &w, std::size_t i) {
  if (i + 1 >= w.cells.size())
    return 0;
  const WhiskCell &c1 = w.cells[i];
  const WhiskCell &c2 = w.cells[i + 1];
  std::size_t a = c1.pre.size(), b = c2.pre.size();
  if (a + c1.type.cod.size() <= b)
    return +1;
  if (b + c2.type.dom.size() <= a)
    return -1;
  return 0;
}

VertWord applyMove(const VertWord &w, const Move &m) {
  VertWord out = w;
  switch (m.kind) {
  case Move::Kind::Swap: {
    if (m.sign != 1 && m.sign != -1)
      notApplicable(m, "sign must be +1 or -1");
    int orient = swapOrientation(w, m.index);
    if (orient == 0)
      notApplicable(m, "cells are not independent");
    const WhiskCell &c1 = w.cells[m.index];
    const WhiskCell &c2 = w.cells[m.index + 1];
    const Path start = c1.input();
    std::size_t a = c1.pre.size(), b = c2.pre.size();
    std::size_t first =
        orient > 0 ? b - c1.type.cod.size() + c1.type.dom.size() : b;
    auto n1 = cellAt(start, first, c2.gen, c2.type);
    if (!n1)
      notApplicable(m, "second cell cannot be moved first");
    const Path mid = n1->output();
    std::size_t second =
        orient > 0 ? a : a - c2.type.dom.size() + c2.type.cod.size();
    auto n2 = cellAt(mid, second, c1.gen, c1.type);
    if (!n2)
      notApplicable(m, "first cell cannot be moved second");
    out.cells[m.index] = std::move(*n1);
    out.cells[m.index + 1] = std::move(*n2);
    break;
  }
  case Move::Kind::Gen3: {
    if (!m.decl || m.decl->kind != ThreeCellDecl::Kind::OneToOne)
      notApplicable(m, "not a 1-to-1 cell");
    if (m.index >= w.cells.size())
      notApplicable(m, "index out of range");
    WhiskCell &c = out.cells[m.index];
    if (c.gen != m.decl->sources.at(0) || c.type != m.decl->boundary)
      notApplicable(m, "cell carries '" + c.gen + "'");
    c.gen = m.decl->target;
    break;
  }
  case Move::Kind::Gen3Pair: {
    if (!m.decl || m.decl->kind != ThreeCellDecl::Kind::TwoToOne)
      notApplicable(m, "not a 2-to-1 cell");
    if (m.index + 1 >= w.cells.size())
      notApplicable(m, "index out of range");
    const WhiskCell &c1 = w.cells[m.index];
    const WhiskCell &c2 = w.cells[m.index + 1];
    if (c1.gen != m.decl->sources.at(0) || c2.gen != m.decl->sources.at(1))
      notApplicable(m, "cells carry '" + c1.gen + "', '" + c2.gen + "'");
    const Path before = c1.input();
    const Path after = c2.output();
    std::size_t limit = std::min(before.size(), after.size());
    std::size_t lcp = 0;
    while (lcp < limit && before[lcp] == after[lcp])
      ++lcp;
    std::size_t lcs = 0;
    while (lcs < limit - lcp &&
           before[before.size() - 1 - lcs] == after[after.size() - 1 - lcs])
      ++lcs;
    CellType merged{slice(before, lcp, before.size() - lcs),
                    slice(after, lcp, after.size() - lcs)};
    if (merged != m.decl->boundary)
      notApplicable(m, "merged boundary differs from '" + m.decl->target + "'");
    // Both factors must lie inside the merged region.
    if (c1.pre.size() < lcp || c1.post.size() < lcs || c2.pre.size() < lcp ||
        c2.post.size() < lcs)
      notApplicable(m, "factor outside the merged region");
    WhiskCell cell{slice(before, 0, lcp), m.decl->target, merged,
                   slice(before, before.size() - lcs, before.size())};
    out.cells.erase(out.cells.begin() + static_cast<long>(m.index) + 1);
    out.cells[m.index] = std::move(cell);
    break;
  }
  }
  return out;
}

VertWord applyMoves(const MoveWord &w) {
  VertWord cur = w.source;
  for (std::size_t k = 0; k < w.moves.size(); ++k) {
    try {
      cur = applyMove(cur, w.moves[k]);
    } catch (const Error &e) {
      throw Error(ErrorKind::MoveNotApplicable,
                  "move " + std::to_string(k) + " " + e.what());
    }
  }
  return cur;
}

std::vector<Move> swapMoves(const VertWord &w, const std::vector<GenMove> &path) {
  std::vector<Move> moves;
  VertWord cur = w;
  for (const auto &g : path) {
    int orient = swapOrientation(cur, g.index);
    if (orient == 0)
      throw Error(ErrorKind::SwapNotIndependent,
                  "cells " + std::to_string(g.index) + " and " +
                      std::to_string(g.index + 1) + " at order " +
                      toString(g.at));
    moves.push_back(Move::swap(g.index, orient));
    cur = applyMove(cur, moves.back());
  }
  return moves;
}

MoveWord gammaWord(const Labelling &lab, const CompOrder &from,
                   const std::vector<GenMove> &path) {
  for (const auto &[face, label] : lab.labels())
    if (label.isPasted())
      throw Error(ErrorKind::UnsupportedConfiguration,
                  "interchanger words over the pasted face '" + face + "'");
  CompOrder cur = from;
  for (const auto &g : path) {
    if (g.at != cur)
      throw Error(ErrorKind::InvalidMove,
                  "path does not chain at " + toString(cur));
    cur = g.result();
  }
  MoveWord w{evalOrder(lab, from), {}};
  w.moves = swapMoves(w.source, path);
  return w;
}

MoveWord inducedNat1(const Labelling &lab, const ThreeCellDecl &decl,
                     const CompOrder &o) {
  if (decl.kind != ThreeCellDecl::Kind::OneToOne)
    throw Error(ErrorKind::InvalidMove, "'" + decl.name + "' is not 1-to-1");
  std::size_t pos = o.position(decl.faces.at(0));
  std::size_t index = 0;
  for (std::size_t k = 0; k < pos; ++k)
    index += cellCount(lab.label(o[k]));
  MoveWord w{evalOrder(lab, o), {}};
  return extend(std::move(w),
                {Move::gen3(index, lab.decl(decl.name))});
}

MoveWord extend(MoveWord w, const std::vector<Move> &moves) {
  VertWord cur = applyMoves(w);
  for (const auto &m : moves) {
    cur = applyMove(cur, m);
    w.moves.push_back(m);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

std::vector<VertWord> trace(const VertWord &source,
                            const std::vector<Move> &moves) {
  std::vector<VertWord> words{source};
  words.reserve(moves.size() + 1);
  for (const auto &m : moves)
    words.push_back(applyMove(words.back(), m));
  return words;
}

bool isSwap(const Move &m) { return m.kind == Move::Kind::Swap; }
bool isGen3(const Move &m) { return m.kind == Move::Kind::Gen3; }
bool isPair(const Move &m) { return m.kind == Move::Kind::Gen3Pair; }

Move at(Move m, std::size_t index) {
  m.index = index;
  return m;
}

// Two consecutive moves with disjoint supports, commuted.
std::optional<std::array<Move, 2>> commuted(const Move &m1, const Move &m2) {
  std::size_t x1 = m1.index, x2 = m2.index;
  if (x2 >= x1 + m1.widthOut())
    return std::array<Move, 2>{at(m2, x2 - m1.widthOut() + m1.widthIn()), m1};
  if (x2 + m2.widthIn() <= x1)
    return std::array<Move, 2>{m2, at(m1, x1 - m2.widthIn() + m2.widthOut())};
  return std::nullopt;
}

struct Candidate {
  Rule rule;
  std::size_t length;
  std::vector<Move> replacement;
};

std::vector<Candidate> candidatesAt(const std::vector<Move> &m, std::size_t k) {
  std::vector<Candidate> out;
  const std::size_t n = m.size();
  if (k + 1 < n) {
    const Move &a = m[k], &b = m[k + 1];
    if (isSwap(a) && isSwap(b) && a.index == b.index && a.sign == -b.sign)
      out.push_back({Rule::R1, 2, {}});
    if (auto c = commuted(a, b))
      out.push_back({Rule::R2, 2, {(*c)[0], (*c)[1]}});
    if (isGen3(a) && isSwap(b) && a.index == b.index)
      out.push_back({Rule::R4, 2, {b, at(a, a.index + 1)}});
    if (isSwap(a) && isGen3(b) && b.index == a.index + 1)
      out.push_back({Rule::R4, 2, {at(b, a.index), a}});
    if (isGen3(a) && isSwap(b) && a.index == b.index + 1)
      out.push_back({Rule::R5, 2, {b, at(a, b.index)}});
    if (isSwap(a) && isGen3(b) && b.index == a.index)
      out.push_back({Rule::R5, 2, {at(b, a.index + 1), a}});
    if (isPair(a) && isSwap(b) && b.index == a.index)
      out.push_back({Rule::R6, 2,
                     {Move::swap(a.index + 1, b.sign),
                      Move::swap(a.index, b.sign), at(a, a.index + 1)}});
    if (isPair(a) && isSwap(b) && a.index >= 1 && b.index + 1 == a.index)
      out.push_back({Rule::R6, 2,
                     {Move::swap(a.index - 1, b.sign),
                      Move::swap(a.index, b.sign), at(a, a.index - 1)}});
  }
  if (k + 2 < n) {
    const Move &a = m[k], &b = m[k + 1], &c = m[k + 2];
    if (isSwap(a) && isSwap(b) && isSwap(c) && a.index == c.index &&
        (b.index == a.index + 1 || b.index + 1 == a.index))
      out.push_back({Rule::R3, 3,
                     {Move::swap(b.index, c.sign), Move::swap(a.index, b.sign),
                      Move::swap(b.index, a.sign)}});
    // Reverse pair transport.
    if (isSwap(a) && isSwap(b) && isPair(c) && a.sign == b.sign) {
      if (a.index == b.index + 1 && c.index == a.index)
        out.push_back({Rule::R6, 3,
                       {at(c, b.index), Move::swap(b.index, a.sign)}});
      if (b.index == a.index + 1 && c.index == a.index)
        out.push_back({Rule::R6, 3,
                       {at(c, b.index), Move::swap(a.index, a.sign)}});
    }
  }
  return out;
}

} // namespace

std::vector<std::pair<RewriteStep, std::vector<Move>>>
rewrites(const VertWord &source, const std::vector<Move> &moves) {
  std::vector<std::pair<RewriteStep, std::vector<Move>>> out;
  const auto words = trace(source, moves);
  for (std::size_t k = 0; k < moves.size(); ++k) {
    for (auto &cand : candidatesAt(moves, k)) {
      // Local replay: the replacement must apply and reach the same word.
      VertWord cur = words[k];
      try {
        for (const auto &r : cand.replacement)
          cur = applyMove(cur, r);
      } catch (const Error &) {
        continue;
      }
      if (!(cur == words[k + cand.length]))
        throw std::logic_error("rule " + toString(cand.rule) +
                               " changed the word at move " + std::to_string(k));
      std::vector<Move> next(moves.begin(), moves.begin() + static_cast<long>(k));
      next.insert(next.end(), cand.replacement.begin(), cand.replacement.end());
      next.insert(next.end(), moves.begin() + static_cast<long>(k + cand.length),
                  moves.end());
      out.push_back({RewriteStep{cand.rule, k}, std::move(next)});
    }
  }
  return out;
}

namespace {

std::string key(const std::vector<Move> &moves) {
  std::string out;
  for (const auto &m : moves) {
    out += isSwap(m) ? 'S' : isGen3(m) ? 'G' : 'P';
    out += std::to_string(m.index);
    out += m.sign > 0 ? '+' : '-';
    if (m.decl)
      out += m.decl->name;
    out += ';';
  }
  return out;
}

} // namespace

EqualityResult equalUpTo(const MoveWord &a, const MoveWord &b,
                         const EqualityOptions &options) {
  if (!(a.source == b.source))
    throw Error(ErrorKind::InvalidMove, "move words have different sources");
  const VertWord endpoint = applyMoves(a);
  if (!(endpoint == applyMoves(b)))
    return {Verdict::DistinctEndpoints, {}, 0};

  struct Node {
    std::vector<Move> moves;
    int parent;
    RewriteStep step;
  };
  std::array<std::vector<Node>, 2> nodes;
  std::array<std::unordered_map<std::string, int>, 2> seen;
  std::array<std::vector<int>, 2> frontier;
  const std::array<const MoveWord *, 2> roots{&a, &b};
  for (int side = 0; side < 2; ++side) {
    nodes[side].push_back({roots[side]->moves, -1, {Rule::R1, 0}});
    seen[side][key(roots[side]->moves)] = 0;
    frontier[side] = {0};
  }

  auto stepsTo = [&](int side, int node) {
    std::vector<RewriteStep> steps;
    for (int n = node; nodes[side][n].parent >= 0; n = nodes[side][n].parent)
      steps.push_back(nodes[side][n].step);
    std::reverse(steps.begin(), steps.end());
    return steps;
  };
  auto proofVia = [&](int side, int node, int other) {
    auto left = stepsTo(side, node);
    auto right = stepsTo(1 - side, other);
    if (side == 1)
      std::swap(left, right);
    // right is read from b back to the meeting point.
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  };

  if (seen[0].count(key(b.moves)))
    return {Verdict::Equal, {}, 1};

  std::size_t visited = 2;
  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side = frontier[1].empty() ||
                       (!frontier[0].empty() &&
                        frontier[0].size() <= frontier[1].size())
                   ? 0
                   : 1;
    std::vector<int> next;
    for (int id : frontier[side]) {
      auto succ = rewrites(roots[side]->source, nodes[side][id].moves);
      for (auto &[step, moves] : succ) {
        std::string k = key(moves);
        if (seen[side].count(k))
          continue;
        if (options.checkSteps) {
          MoveWord probe{roots[side]->source, moves};
          if (!(applyMoves(probe) == endpoint))
            throw std::logic_error("rewrite " + toString(step.rule) +
                                   " moved the endpoint");
        }
        int node = static_cast<int>(nodes[side].size());
        nodes[side].push_back({std::move(moves), id, step});
        seen[side][k] = node;
        next.push_back(node);
        ++visited;
        auto hit = seen[1 - side].find(k);
        if (hit != seen[1 - side].end())
          return {Verdict::Equal, proofVia(side, node, hit->second), visited};
        if (visited >= options.budget)
          return {Verdict::Unknown, {}, visited};
      }
    }
    frontier[side] = std::move(next);
  }
  return {Verdict::Unknown, {}, visited};
}

// ---------------------------------------------------------------------------
// Printing

std::string toString(Rule r) {
  static const char *names[] = {"R1", "R2", "R3", "R4", "R5", "R6"};
  return names[static_cast<int>(r)];
}

std::string toString(Verdict v) {
  switch (v) {
  case Verdict::Equal: return "Equal";
  case Verdict::Unknown: return "Unknown";
  case Verdict::DistinctEndpoints: return "DistinctEndpoints";
  }
  return "?";
}

std::string toString(const Move &m) {
  switch (m.kind) {
  case Move::Kind::Swap:
    return "Swap(" + std::to_string(m.index) + "," + (m.sign > 0 ? "+" : "-") +
           ")";
  case Move::Kind::Gen3:
    return "Gen3(" + std::to_string(m.index) + "," +
           (m.decl ? m.decl->name : "?") + ")";
  case Move::Kind::Gen3Pair:
    return "Gen3Pair(" + std::to_string(m.index) + "," +
           (m.decl ? m.decl->name : "?") + ")";
  }
  return "?";
}

std::string toString(const std::vector<Move> &moves) {
  std::string out = "[";
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i)
      out += ", ";
    out += toString(moves[i]);
  }
  return out + "]";
}

std::string compositionString(const Path &p) {
  if (p.empty())
    return "1";
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it != p.rbegin())
      out += "·";
    out += *it;
  }
  return out;
}

std::string toString(const WhiskCell &c) {
  return compositionString(c.post) + " ∘ " + c.gen + " ∘ " +
         compositionString(c.pre);
}

} // namespace pasting
