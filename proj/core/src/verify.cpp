#include "pasting/verify.hpp"

#include "pasting/error.hpp"
#include "pasting/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace pasting {

namespace {

using Clock = std::chrono::steady_clock;
using WordPair = std::pair<MoveWord, MoveWord>;

std::vector<Move> gammaMoves(const Labelling &lab, const CompOrder &from,
                             const CompOrder &to) {
  return gammaWord(lab, from, connectOrders(lab.scheme(), from, to)).moves;
}

std::vector<Move> operator+(std::vector<Move> a, const std::vector<Move> &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Runner {
public:
  Runner(std::string name, const CheckOptions &options)
      : options_(options), start_(Clock::now()) {
    report_.checkName = std::move(name);
  }

  void compare(std::string instance, std::string tag,
               const PastingScheme &scheme,
               const std::vector<CompOrder> &orders,
               const std::function<WordPair()> &build) {
    InstanceOutcome out;
    out.instance = std::move(instance);
    out.tag = std::move(tag);
    std::optional<WordPair> words;
    try {
      words = build();
      EqualityOptions eo{options_.budget, options_.checkSteps};
      EqualityResult r = equalUpTo(words->first, words->second, eo);
      if (r.verdict == Verdict::Unknown && options_.retryFactor > 1) {
        eo.budget = options_.budget * options_.retryFactor;
        r = equalUpTo(words->first, words->second, eo);
      }
      out.proof = r.proof;
      out.visited = r.visited;
      if (r.verdict == Verdict::Equal) {
        out.outcome = Outcome::Equal;
      } else if (r.verdict == Verdict::Unknown) {
        out.outcome = Outcome::Unknown;
        out.detail = "search budget exhausted";
      } else {
        out.outcome = Outcome::Failed;
        out.detail = "endpoints differ";
      }
    } catch (const std::exception &e) {
      out.outcome = Outcome::Failed;
      out.detail = e.what();
    }
    if (out.outcome != Outcome::Equal) {
      out.witness.scheme = writeScheme(scheme.raw());
      for (const auto &o : orders)
        out.witness.orders.push_back(toString(o));
      if (words) {
        out.witness.left = toString(words->first.moves);
        out.witness.right = toString(words->second.moves);
      }
    }
    report_.outcomes.push_back(std::move(out));
  }

  /// A structural comparison without a rewriting search.
  void structural(std::string instance, const PastingScheme &scheme,
                  const std::function<bool()> &holds) {
    InstanceOutcome out;
    out.instance = std::move(instance);
    out.tag = "structural";
    try {
      if (!holds()) {
        out.outcome = Outcome::Failed;
        out.detail = "structures differ";
      }
    } catch (const std::exception &e) {
      out.outcome = Outcome::Failed;
      out.detail = e.what();
    }
    if (out.outcome != Outcome::Equal)
      out.witness.scheme = writeScheme(scheme.raw());
    report_.outcomes.push_back(std::move(out));
  }

  VerdictReport finish() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        Clock::now() - start_);
    return std::move(report_);
  }

private:
  CheckOptions options_;
  Clock::time_point start_;
  VerdictReport report_;
};

/// The labelling without the 1-to-1 cells living on the given faces.
Labelling dropOneToOneOn(const Labelling &lab, const std::set<FaceId> &faces) {
  std::vector<DeclRef> kept;
  for (const auto &d : lab.decls())
    if (d->kind != ThreeCellDecl::Kind::OneToOne || !faces.count(d->faces[0]))
      kept.push_back(d);
  return Labelling(lab.scheme(), lab.labels(), lab.generators(), kept);
}

std::string pathString(const std::vector<GenMove> &path) {
  std::string out;
  for (const auto &m : path)
    out += (out.empty() ? "" : " ") + std::to_string(m.index);
  return "[" + out + "]";
}

// ---------------------------------------------------------------------------
// Random schemes

class Grower {
public:
  explicit Grower(std::uint64_t seed) : rng_(seed) {
    raw_.vertices = {"s", "t"};
    EdgeId e = newEdge("s", "t");
    raw_.top = {e};
    raw_.bottom = {e};
  }

  RawScheme grow(std::size_t maxFaces, const std::array<double, 3> &weights) {
    std::size_t target =
        std::uniform_int_distribution<std::size_t>(0, maxFaces)(rng_);
    if (weights[1] <= 0 && weights[2] <= 0)
      target = 0;
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    std::size_t subdivisions = 0;
    while (raw_.faces.size() < target) {
      int op = pick(rng_);
      if (op == 0) {
        if (subdivisions++ < 2 * maxFaces + 2)
          subdivide();
      } else if (op == 1) {
        split();
      } else {
        stack();
      }
    }
    return raw_;
  }

private:
  VertexId newVertex() {
    VertexId v = "v" + std::to_string(++vertices_);
    raw_.vertices.push_back(v);
    return v;
  }

  EdgeId newEdge(const VertexId &u, const VertexId &v) {
    EdgeId e = "e" + std::to_string(edges_++);
    raw_.edges.push_back({e, u, v});
    return e;
  }

  FaceId newFace() { return "F" + std::to_string(++faces_); }

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  static void replace(Path &path, const EdgeId &e, const Path &with) {
    auto it = std::find(path.begin(), path.end(), e);
    if (it == path.end())
      return;
    it = path.erase(it);
    path.insert(it, with.begin(), with.end());
  }

  void subdivide() {
    Edge e = raw_.edges[below(raw_.edges.size())];
    VertexId w = newVertex();
    Path with{newEdge(e.src, w), newEdge(w, e.tgt)};
    replace(raw_.top, e.id, with);
    replace(raw_.bottom, e.id, with);
    for (auto &f : raw_.faces) {
      replace(f.top, e.id, with);
      replace(f.bottom, e.id, with);
    }
    raw_.edges.erase(std::find(raw_.edges.begin(), raw_.edges.end(), e));
  }

  void split() {
    Edge e = raw_.edges[below(raw_.edges.size())];
    EdgeId twin = newEdge(e.src, e.tgt);
    // The twin takes over the role below e.
    replace(raw_.bottom, e.id, {twin});
    for (auto &f : raw_.faces)
      replace(f.top, e.id, {twin});
    raw_.faces.push_back({newFace(), {e.id}, {twin}});
  }

  const Edge &edge(const EdgeId &id) const {
    return *std::find_if(raw_.edges.begin(), raw_.edges.end(),
                         [&](const Edge &e) { return e.id == id; });
  }

  void stack() {
    std::size_t host = below(raw_.faces.size() + 1);
    Path &path = host == 0 ? raw_.top : raw_.faces[host - 1].bottom;
    std::size_t i = below(path.size());
    std::size_t j = i + below(path.size() - i);
    Path segment(path.begin() + i, path.begin() + j + 1);
    VertexId x = edge(segment.front()).src, y = edge(segment.back()).tgt;
    Path over;
    if (below(2) == 0) {
      over = {newEdge(x, y)};
    } else {
      VertexId w = newVertex();
      over = {newEdge(x, w), newEdge(w, y)};
    }
    // path may be invalidated by the pushes below.
    Path &again = host == 0 ? raw_.top : raw_.faces[host - 1].bottom;
    again.erase(again.begin() + i, again.begin() + j + 1);
    again.insert(again.begin() + i, over.begin(), over.end());
    raw_.faces.push_back({newFace(), over, segment});
  }

  std::mt19937_64 rng_;
  RawScheme raw_;
  std::size_t vertices_ = 0, edges_ = 0, faces_ = 0;
};

// ---------------------------------------------------------------------------
// Special case helpers

std::optional<std::size_t> find(const Path &path, const Path &sub) {
  if (sub.empty() || sub.size() > path.size())
    return std::nullopt;
  auto it = std::search(path.begin(), path.end(), sub.begin(), sub.end());
  if (it == path.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - path.begin());
}

std::string joined(const Path &p) {
  std::string out;
  for (const auto &e : p)
    out += (out.empty() ? "" : ".") + e;
  return out;
}

Path concat(std::initializer_list<Path> parts) {
  Path out;
  for (const auto &p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

Path slice(const Path &p, std::size_t from, std::size_t to) {
  return Path(p.begin() + from, p.begin() + to);
}

/// Removes the edges of a path together with its interior vertices.
void erasePath(RawScheme &raw, const Path &path) {
  std::set<VertexId> interior;
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    for (const auto &e : raw.edges)
      if (e.id == path[k])
        interior.insert(e.tgt);
  std::set<EdgeId> gone(path.begin(), path.end());
  std::erase_if(raw.edges, [&](const Edge &e) { return gone.count(e.id) > 0; });
  std::erase_if(raw.vertices,
                [&](const VertexId &v) { return interior.count(v) > 0; });
}

} // namespace

// ---------------------------------------------------------------------------
// Corpus

PastingScheme generateScheme(const SchemeGrammar &grammar) {
  Grower g(grammar.seed);
  return requireValid(g.grow(grammar.maxFaces, grammar.weights));
}

std::vector<PastingScheme> corpus(std::size_t count, std::size_t maxFaces,
                                  std::uint64_t firstSeed) {
  std::vector<PastingScheme> out;
  for (std::size_t k = 0; k < count; ++k) {
    SchemeGrammar g;
    g.seed = firstSeed + k;
    g.maxFaces = maxFaces;
    out.push_back(generateScheme(g));
  }
  return out;
}

Labelling corpusLabelling(const PastingScheme &scheme) {
  Labelling lab(scheme);
  for (const auto &f : scheme.faces())
    lab.declareOneToOne("Theta_" + f.id, f.id, f.id + "'");
  return lab;
}

std::size_t VerdictReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(),
                    [&](const InstanceOutcome &i) { return i.outcome == o; }));
}

// ---------------------------------------------------------------------------
// Checks

VerdictReport checkContractibility(const Labelling &lab,
                                   const CheckOptions &options,
                                   ContractibilityMode mode,
                                   std::size_t maxLength) {
  const PastingScheme &s = lab.scheme();
  if (s.faces().size() > 5)
    throw Error(ErrorKind::UnsupportedConfiguration,
                "contractibility is checked on schemes with at most 5 faces");
  FaceRelations rel(s);
  Runner run("contractibility", options);
  auto compare = [&](const CompOrder &a, const std::vector<GenMove> &lhs,
                     const std::vector<GenMove> &rhs, const CompOrder &end) {
    run.compare(toString(a) + " -> " + toString(end) + " " + pathString(lhs) +
                    " vs " + pathString(rhs),
                "", s, {a, end}, [&] {
                  return WordPair{gammaWord(lab, a, lhs),
                                  gammaWord(lab, a, rhs)};
                });
  };

  for (const auto &a : enumerateOrders(rel)) {
    if (mode == ContractibilityMode::Inductive) {
      if (maxLength == 0)
        continue;
      std::map<CompOrder, std::size_t> dist{{a, 0}};
      std::vector<CompOrder> ball{a};
      for (std::size_t k = 0; k < ball.size(); ++k) {
        CompOrder x = ball[k];
        std::size_t d = dist[x];
        if (d + 1 >= maxLength)
          continue;
        for (const auto &m : genMoves(rel, x)) {
          CompOrder y = m.result();
          if (dist.emplace(y, d + 1).second)
            ball.push_back(y);
        }
      }
      for (const auto &x : ball) {
        auto toX = connectOrders(rel, a, x);
        for (const auto &m : genMoves(rel, x)) {
          CompOrder y = m.result();
          auto lhs = toX;
          lhs.push_back(m);
          auto rhs = connectOrders(rel, a, y);
          if (lhs != rhs)
            compare(a, lhs, rhs, y);
        }
      }
    } else {
      std::vector<GenMove> path;
      std::function<void(const CompOrder &)> walk = [&](const CompOrder &x) {
        auto canonical = connectOrders(rel, a, x);
        if (path != canonical)
          compare(a, path, canonical, x);
        if (path.size() == maxLength)
          return;
        for (const auto &m : genMoves(rel, x)) {
          path.push_back(m);
          walk(m.result());
          path.pop_back();
        }
      };
      walk(a);
    }
  }
  return run.finish();
}

VerdictReport checkNaturality1(const Labelling &lab, const ThreeCellDecl &decl,
                               const CheckOptions &options) {
  if (decl.kind != ThreeCellDecl::Kind::OneToOne)
    throw Error(ErrorKind::InvalidMove, "'" + decl.name + "' is not 1-to-1");
  const PastingScheme &s = lab.scheme();
  FaceRelations rel(s);
  Labelling primed = lab.modified(decl);
  const FaceId &face = decl.faces[0];
  Runner run("naturality[" + decl.name + "]", options);
  for (const auto &o : enumerateOrders(rel)) {
    std::size_t p = o.position(face);
    for (const auto &m : genMoves(rel, o)) {
      std::string tag = m.index == p       ? "first"
                        : m.index + 1 == p ? "second"
                                           : "disjoint";
      CompOrder y = m.result();
      run.compare(toString(o) + " swap " + std::to_string(m.index), tag, s,
                  {o, y}, [&] {
                    MoveWord top = inducedNat1(lab, decl, o);
                    top = extend(std::move(top),
                                 gammaWord(primed, o, {m}).moves);
                    MoveWord bottom = gammaWord(lab, o, {m});
                    bottom = extend(std::move(bottom),
                                    inducedNat1(lab, decl, y).moves);
                    return WordPair{top, bottom};
                  });
    }
  }
  return run.finish();
}

VerdictReport checkCommute1to1(const Labelling &lab, const ThreeCellDecl &first,
                               const ThreeCellDecl &second,
                               const CheckOptions &options) {
  if (first.kind != ThreeCellDecl::Kind::OneToOne ||
      second.kind != ThreeCellDecl::Kind::OneToOne)
    throw Error(ErrorKind::InvalidMove, "commute expects 1-to-1 cells");
  if (first.faces[0] == second.faces[0])
    throw Error(ErrorKind::InvalidMove,
                "'" + first.name + "' and '" + second.name +
                    "' live on the same face");
  const PastingScheme &s = lab.scheme();
  Labelling afterFirst = lab.modified(first);
  Labelling afterSecond = lab.modified(second);
  Runner run("commute[" + first.name + "," + second.name + "]", options);
  for (const auto &o : enumerateOrders(s)) {
    run.compare(toString(o), "", s, {o}, [&] {
      MoveWord a = extend(inducedNat1(lab, first, o),
                          inducedNat1(afterFirst, second, o).moves);
      MoveWord b = extend(inducedNat1(lab, second, o),
                          inducedNat1(afterSecond, first, o).moves);
      return WordPair{a, b};
    });
  }
  return run.finish();
}

std::vector<HeptagonOrders> heptagonAssignments(const PastingScheme &scheme,
                                                std::size_t limit,
                                                std::uint64_t seed) {
  auto orders = enumerateOrders(scheme);
  std::size_t n = orders.size();
  std::size_t total = 1;
  bool small = true;
  for (int k = 0; k < 6 && small; ++k) {
    total *= n;
    small = total <= limit;
  }
  std::vector<HeptagonOrders> out;
  auto at = [&](std::array<std::size_t, 6> ix) {
    return HeptagonOrders{orders[ix[0]], orders[ix[1]], orders[ix[2]],
                          orders[ix[3]], orders[ix[4]], orders[ix[5]]};
  };
  if (small) {
    for (std::size_t code = 0; code < total; ++code) {
      std::array<std::size_t, 6> ix{};
      std::size_t c = code;
      for (auto &i : ix) {
        i = c % n;
        c /= n;
      }
      out.push_back(at(ix));
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < limit; ++k) {
    std::array<std::size_t, 6> ix{};
    for (auto &i : ix)
      i = pick(rng);
    out.push_back(at(ix));
  }
  out.push_back(at({0, 0, 0, 0, 0, 0}));
  return out;
}

VerdictReport checkHeptagon(const Labelling &lab, const ThreeCellDecl &first,
                            const ThreeCellDecl &second,
                            const std::vector<HeptagonOrders> &assignments,
                            const CheckOptions &options) {
  if (first.faces[0] == second.faces[0])
    throw Error(ErrorKind::InvalidMove,
                "'" + first.name + "' and '" + second.name +
                    "' live on the same face");
  const PastingScheme &s = lab.scheme();
  const Labelling &L = lab;
  Labelling La = L.modified(first);
  Labelling Lb = L.modified(second);
  Labelling Lab = La.modified(second);
  auto nat = [](const Labelling &l, const ThreeCellDecl &d,
                const CompOrder &o) { return inducedNat1(l, d, o).moves; };

  Runner run("heptagon[" + first.name + "," + second.name + "]", options);
  for (std::size_t n = 0; n < assignments.size(); ++n) {
    const auto &[X, A, B, C, D, Y] = assignments[n];
    std::vector<CompOrder> all{X, A, B, C, D, Y};
    std::string name = "#" + std::to_string(n) + " ";
    auto check = [&](const std::string &tag, const Labelling &l,
                     const CompOrder &from,
                     const std::function<std::vector<Move>()> &left,
                     const std::function<std::vector<Move>()> &right) {
      run.compare(name + tag, tag, s, all, [&] {
        VertWord src = evalOrder(l, from);
        return WordPair{extend({src, {}}, left()), extend({src, {}}, right())};
      });
    };
    check("(1)", L, X,
          [&] {
            return gammaMoves(L, X, A) + gammaMoves(L, A, B) +
                   gammaMoves(L, B, D) + gammaMoves(L, D, C);
          },
          [&] { return gammaMoves(L, X, C); });
    check("(2)", L, A,
          [&] { return nat(L, first, A) + gammaMoves(La, A, B); },
          [&] { return gammaMoves(L, A, B) + nat(L, first, B); });
    check("(3)", L, B,
          [&] { return nat(L, first, B) + gammaMoves(La, B, D); },
          [&] { return gammaMoves(L, B, D) + nat(L, first, D); });
    check("(4)", La, B,
          [&] { return nat(La, second, B) + gammaMoves(Lab, B, D); },
          [&] { return gammaMoves(La, B, D) + nat(La, second, D); });
    check("(5)", Lab, B, [&] { return gammaMoves(Lab, B, Y); },
          [&] { return gammaMoves(Lab, B, D) + gammaMoves(Lab, D, Y); });
    check("(6)", L, D,
          [&] { return nat(L, first, D) + nat(La, second, D); },
          [&] { return nat(L, second, D) + nat(Lb, first, D); });
    check("(7)", L, D,
          [&] {
            return gammaMoves(L, D, C) + nat(L, second, C) +
                   gammaMoves(Lb, C, D);
          },
          [&] { return nat(L, second, D); });
    check("outer", L, X,
          [&] {
            return gammaMoves(L, X, A) + nat(L, first, A) +
                   gammaMoves(La, A, B) + nat(La, second, B) +
                   gammaMoves(Lab, B, Y);
          },
          [&] {
            return gammaMoves(L, X, C) + nat(L, second, C) +
                   gammaMoves(Lb, C, D) + nat(Lb, first, D) +
                   gammaMoves(Lab, D, Y);
          });
  }
  return run.finish();
}

VerdictReport checkGlueCompat(const Labelling &lab, const GluedScheme &g,
                              const ThreeCellDecl &decl,
                              const CheckOptions &options) {
  if (decl.kind != ThreeCellDecl::Kind::OneToOne)
    throw Error(ErrorKind::InvalidMove, "'" + decl.name + "' is not 1-to-1");
  if (decl.faces[0] == g.originF || decl.faces[0] == g.originG)
    throw Error(ErrorKind::LabelOnMergedFace,
                "'" + decl.name + "' lives on a glued face");
  Labelling L = dropOneToOneOn(lab, {g.originF, g.originG});
  Labelling primed = L.modified(decl);
  const PastingScheme &s = g.origin;
  Runner run("glue-compat[" + g.merged + "," + decl.name + "]", options);
  run.structural("modify and glue commute", s, [&] {
    return gluedLabelling(primed, g) == gluedLabelling(L, g).modified(decl);
  });
  for (const auto &K : enumerateOrders(s)) {
    CompOrder target = sFunctorOb(g, pseudoInverse(g, K));
    run.compare(toString(K), K == target ? "fixed" : "moved", s, {K, target},
                [&] {
                  MoveWord a = extend(inducedNat1(L, decl, K),
                                      gammaMoves(primed, K, target));
                  MoveWord b = extend(gammaWord(L, K, connectOrders(s, K, target)),
                                      inducedNat1(L, decl, target).moves);
                  return WordPair{a, b};
                });
  }
  return run.finish();
}

VerdictReport checkNaturality2(const Labelling &lab, const GluedScheme &g,
                               const ThreeCellDecl &decl, JChoice choice,
                               const CheckOptions &options) {
  Labelling L = dropOneToOneOn(lab, {g.originF, g.originG});
  Labelling glued = gluedLabelling(L, g).modified(decl);
  const PastingScheme &s = g.origin;
  FaceRelations rel(s);
  Runner run("naturality2[" + decl.name + "," + toString(choice) + "]",
             options);
  for (const auto &K : enumerateOrders(rel)) {
    for (const auto &m : genMoves(rel, K)) {
      CompOrder K2 = m.result();
      run.compare(toString(K) + " swap " + std::to_string(m.index), "", s,
                  {K, K2}, [&] {
                    MoveWord a = extend(gammaWord(L, K, {m}),
                                        inducedNat2(L, g, decl, K2, choice).moves);
                    MoveWord b = extend(
                        inducedNat2(L, g, decl, K, choice),
                        gammaMoves(glued, pseudoInverse(g, K, choice),
                                   pseudoInverse(g, K2, choice)));
                    return WordPair{a, b};
                  });
    }
  }
  return run.finish();
}

VerdictReport checkOctagon(const Labelling &lab, const ThreeCellDecl &first,
                           const ThreeCellDecl &second,
                           const std::vector<JChoice> &choices,
                           const CheckOptions &options) {
  if (first.kind != ThreeCellDecl::Kind::TwoToOne ||
      second.kind != ThreeCellDecl::Kind::TwoToOne)
    throw Error(ErrorKind::InvalidMove, "octagon expects 2-to-1 cells");
  std::set<FaceId> faces{first.faces[0], first.faces[1], second.faces[0],
                         second.faces[1]};
  if (faces.size() != 4)
    throw Error(ErrorKind::PairsNotDisjoint,
                "'" + first.name + "' and '" + second.name + "' share a face");
  const PastingScheme &s = lab.scheme();
  GluedScheme gF = buildGlued(s, first.faces[0], first.faces[1]);
  GluedScheme gS = buildGlued(s, second.faces[0], second.faces[1]);
  GluedScheme gFS = buildGlued(gF.glued, second.faces[0], second.faces[1]);
  GluedScheme gSF = buildGlued(gS.glued, first.faces[0], first.faces[1]);

  Labelling L = dropOneToOneOn(lab, faces);
  Labelling LF = gluedLabelling(L, gF).modified(first);
  Labelling LS = gluedLabelling(L, gS).modified(second);
  Labelling LFS = gluedLabelling(LF, gFS).modified(second);
  Labelling LSF = gluedLabelling(LS, gSF).modified(first);

  Runner run("octagon[" + first.name + "," + second.name + "]", options);
  run.structural("glued schemes agree", s,
                 [&] { return gFS.glued == gSF.glued; });
  run.structural("glued labellings agree", s, [&] { return LFS == LSF; });
  run.structural("expansions agree", s, [&] {
    for (const auto &o : enumerateOrders(gFS.glued))
      if (sFunctorOb(gF, sFunctorOb(gFS, o)) != sFunctorOb(gS, sFunctorOb(gSF, o)))
        return false;
    return true;
  });
  if (!(gFS.glued == gSF.glued))
    return run.finish();

  for (JChoice choice : choices) {
    for (const auto &K : enumerateOrders(s)) {
      run.compare(toString(K) + " " + toString(choice), toString(choice), s,
                  {K}, [&] {
                    MoveWord top = inducedNat2(L, gF, first, K, choice);
                    CompOrder K1 = pseudoInverse(gF, K, choice);
                    top = extend(std::move(top),
                                 inducedNat2(LF, gFS, second, K1, choice).moves);
                    CompOrder topEnd = pseudoInverse(gFS, K1, choice);

                    MoveWord bottom = inducedNat2(L, gS, second, K, choice);
                    CompOrder M1 = pseudoInverse(gS, K, choice);
                    bottom = extend(std::move(bottom),
                                    inducedNat2(LS, gSF, first, M1, choice).moves);
                    CompOrder bottomEnd = pseudoInverse(gSF, M1, choice);
                    bottom = extend(std::move(bottom),
                                    gammaMoves(LSF, bottomEnd, topEnd));
                    return WordPair{top, bottom};
                  });
    }
  }
  return run.finish();
}

// ---------------------------------------------------------------------------
// Special case

std::vector<SpecialCandidate> specialCaseStrategy(const PastingScheme &scheme,
                                                  const FaceId &f,
                                                  const FaceId &g) {
  auto c = classifyComposable(scheme, f, g);
  if (c.kind != Composability::Kind::CaseA)
    throw Error(ErrorKind::NotCaseA, "'" + f + "' and '" + g + "'");
  FaceRelations rel(scheme);
  FaceId l = f, r = g;
  if (!rel.precedes(l, r))
    std::swap(l, r);
  auto unsupported = [&](const std::string &why) {
    return Error(ErrorKind::UnsupportedConfiguration,
                 "'" + f + "' and '" + g + "': " + why);
  };
  if (!rel.precedes(l, r))
    throw unsupported("the faces are not in series");

  const Face &L = scheme.face(l);
  const Face &R = scheme.face(r);
  const Path &p = scheme.top();
  const Path &q = scheme.bottom();
  auto lp = find(p, L.top), rp = find(p, R.top);
  auto lq = find(q, L.bottom), rq = find(q, R.bottom);
  if (!lp || !rp || !lq || !rq)
    throw unsupported("each face must span its own segment of the boundary");
  std::size_t lpEnd = *lp + L.top.size(), lqEnd = *lq + L.bottom.size();
  std::size_t rpEnd = *rp + R.top.size(), rqEnd = *rq + R.bottom.size();
  if (lpEnd > *rp || lqEnd > *rq)
    throw unsupported("the faces overlap along the boundary");
  Path pMid = slice(p, lpEnd, *rp), qMid = slice(q, lqEnd, *rq);

  std::vector<FaceId> middle;
  for (const auto &face : scheme.faces())
    if (face.id != l && face.id != r && rel.precedes(l, face.id) &&
        rel.precedes(face.id, r))
      middle.push_back(face.id);
  auto inducing = [&](bool contextFirst) {
    for (const auto &o : enumerateOrders(rel)) {
      std::size_t pl = o.position(l), pr = o.position(r);
      if (pr != pl + 1)
        continue;
      bool ok = std::all_of(middle.begin(), middle.end(), [&](const FaceId &m) {
        return contextFirst ? o.position(m) < pl : o.position(m) > pr;
      });
      if (ok)
        return o;
    }
    throw unsupported("no order places the faces next to each other");
  };

  FaceId merged = f + "#" + g;
  VertexId from = scheme.edge(L.top.front()).src;
  VertexId to = scheme.edge(R.top.back()).tgt;
  std::vector<SpecialCandidate> out;
  for (bool contextFirst : {true, false}) {
    RawScheme raw = scheme.raw();
    std::erase_if(raw.faces,
                  [&](const Face &x) { return x.id == l || x.id == r; });
    Path collapsed = contextFirst ? concat({L.bottom, qMid, R.bottom})
                                  : concat({L.top, pMid, R.top});
    EdgeId id = joined(collapsed);
    while (scheme.hasEdge(id))
      id += "'";
    if (contextFirst) {
      erasePath(raw, L.bottom);
      erasePath(raw, R.bottom);
      raw.faces.push_back({merged, concat({L.top, qMid, R.top}), {id}});
      raw.bottom = concat({slice(q, 0, *lq), {id}, slice(q, rqEnd, q.size())});
    } else {
      erasePath(raw, L.top);
      erasePath(raw, R.top);
      raw.faces.push_back({merged, {id}, concat({L.bottom, pMid, R.bottom})});
      raw.top = concat({slice(p, 0, *lp), {id}, slice(p, rpEnd, p.size())});
    }
    raw.edges.push_back({id, from, to});
    out.push_back({requireValid(raw), merged, inducing(contextFirst),
                   contextFirst});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Driver

const std::vector<std::string> &checkNames() {
  static const std::vector<std::string> names{
      "contractibility", "naturality",  "commute", "heptagon",
      "glue-compat",     "naturality2", "octagon", "all"};
  return names;
}

std::vector<VerdictReport> runChecks(const Labelling &lab,
                                     const std::string &check,
                                     const CheckOptions &options) {
  const auto &names = checkNames();
  if (std::find(names.begin(), names.end(), check) == names.end())
    throw Error(ErrorKind::UnsupportedConfiguration,
                "unknown check '" + check + "'");
  auto wants = [&](const char *name) { return check == "all" || check == name; };
  std::vector<DeclRef> ones, twos;
  for (const auto &d : lab.decls())
    (d->kind == ThreeCellDecl::Kind::OneToOne ? ones : twos).push_back(d);
  const PastingScheme &s = lab.scheme();

  std::vector<VerdictReport> out;
  if (wants("contractibility") &&
      (check != "all" || s.faces().size() <= 5))
    out.push_back(checkContractibility(lab, options));
  if (wants("naturality"))
    for (const auto &d : ones)
      out.push_back(checkNaturality1(lab, *d, options));
  for (std::size_t i = 0; i < ones.size(); ++i)
    for (std::size_t j = i + 1; j < ones.size(); ++j) {
      if (ones[i]->faces[0] == ones[j]->faces[0])
        continue;
      if (wants("commute"))
        out.push_back(checkCommute1to1(lab, *ones[i], *ones[j], options));
      if (wants("heptagon"))
        out.push_back(checkHeptagon(lab, *ones[i], *ones[j],
                                    heptagonAssignments(s, 64, options.seed),
                                    options));
    }
  for (const auto &pair : twos) {
    if (!wants("glue-compat") && !wants("naturality2"))
      break;
    GluedScheme g = buildGlued(s, pair->faces[0], pair->faces[1]);
    if (wants("glue-compat"))
      for (const auto &d : ones)
        if (d->faces[0] != g.originF && d->faces[0] != g.originG)
          out.push_back(checkGlueCompat(lab, g, *d, options));
    if (wants("naturality2"))
      out.push_back(checkNaturality2(lab, g, *pair, JChoice::PullLower, options));
  }
  if (wants("octagon"))
    for (std::size_t i = 0; i < twos.size(); ++i)
      for (std::size_t j = i + 1; j < twos.size(); ++j) {
        std::set<FaceId> f{twos[i]->faces[0], twos[i]->faces[1],
                           twos[j]->faces[0], twos[j]->faces[1]};
        if (f.size() == 4)
          out.push_back(checkOctagon(
              lab, *twos[i], *twos[j],
              {JChoice::PullLower, JChoice::PushUpper, JChoice::FirstGlued},
              options));
      }
  return out;
}

std::string toString(Outcome o) {
  switch (o) {
  case Outcome::Equal:
    return "Equal";
  case Outcome::Unknown:
    return "Unknown";
  case Outcome::Failed:
    return "Failed";
  }
  return "?";
}

std::string toJsonLines(const VerdictReport &report, bool withTiming) {
  std::ostringstream out;
  for (const auto &i : report.outcomes) {
    nlohmann::ordered_json j;
    j["check"] = report.checkName;
    j["instance"] = i.instance;
    if (!i.tag.empty())
      j["tag"] = i.tag;
    j["outcome"] = toString(i.outcome);
    std::vector<std::string> proof;
    for (const auto &step : i.proof)
      proof.push_back(toString(step.rule) + "@" + std::to_string(step.position));
    j["proof"] = proof;
    j["visited"] = i.visited;
    if (!i.detail.empty())
      j["detail"] = i.detail;
    if (i.outcome != Outcome::Equal)
      j["witness"] = {{"scheme", i.witness.scheme},
                      {"orders", i.witness.orders},
                      {"left", i.witness.left},
                      {"right", i.witness.right}};
    out << j.dump() << "\n";
  }
  if (withTiming) {
    nlohmann::ordered_json j;
    j["check"] = report.checkName;
    j["elapsed_ms"] = report.elapsed.count();
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string summaryTable(const std::vector<VerdictReport> &reports) {
  std::size_t width = 5;
  for (const auto &r : reports)
    width = std::max(width, r.checkName.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "check"
      << std::right << std::setw(11) << "instances" << std::setw(8) << "equal"
      << std::setw(9) << "unknown" << std::setw(8) << "failed" << "\n";
  for (const auto &r : reports)
    out << std::left << std::setw(static_cast<int>(width)) << r.checkName
        << std::right << std::setw(11) << r.instances() << std::setw(8)
        << r.count(Outcome::Equal) << std::setw(9) << r.count(Outcome::Unknown)
        << std::setw(8) << r.count(Outcome::Failed) << "\n";
  return out.str();
}

} // namespace pasting
