#include "pasting/scheme.hpp"

#include "pasting/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace pasting {

std::string_view toString(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::UnknownFace: return "UnknownFace";
  case ErrorKind::InvalidScheme: return "InvalidScheme";
  case ErrorKind::InvalidOrder: return "InvalidOrder";
  case ErrorKind::InvalidMove: return "InvalidMove";
  case ErrorKind::InvalidLabelling: return "InvalidLabelling";
  case ErrorKind::SigmaNotFound: return "SigmaNotFound";
  case ErrorKind::SwapNotIndependent: return "SwapNotIndependent";
  case ErrorKind::MoveNotApplicable: return "MoveNotApplicable";
  case ErrorKind::FaceAbsent: return "FaceAbsent";
  case ErrorKind::DisconnectedOverlap: return "DisconnectedOverlap";
  case ErrorKind::NotCaseA: return "NotCaseA";
  case ErrorKind::NotCaseB: return "NotCaseB";
  case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  case ErrorKind::LabelOnMergedFace: return "LabelOnMergedFace";
  case ErrorKind::PairsNotDisjoint: return "PairsNotDisjoint";
  case ErrorKind::UnsupportedConfiguration: return "UnsupportedConfiguration";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view toString(SchemeErrorKind kind) {
  switch (kind) {
  case SchemeErrorKind::MalformedInput: return "MalformedInput";
  case SchemeErrorKind::CycleDetected: return "CycleDetected";
  case SchemeErrorKind::MultipleSources: return "MultipleSources";
  case SchemeErrorKind::MultipleSinks: return "MultipleSinks";
  case SchemeErrorKind::UnreachableVertex: return "UnreachableVertex";
  case SchemeErrorKind::BadFaceBoundary: return "BadFaceBoundary";
  case SchemeErrorKind::BadOuterBoundary: return "BadOuterBoundary";
  case SchemeErrorKind::RolePartitionViolation: return "RolePartitionViolation";
  case SchemeErrorKind::EulerViolation: return "EulerViolation";
  }
  return "Unknown";
}

const Edge &PastingScheme::edge(const EdgeId &id) const {
  auto it = edgeIndex_.find(id);
  if (it == edgeIndex_.end())
    throw Error(ErrorKind::InvalidScheme, "no edge '" + id + "'");
  return edges_[it->second];
}

const Face &PastingScheme::face(const FaceId &id) const {
  return faces_[faceIndex(id)];
}

std::size_t PastingScheme::faceIndex(const FaceId &id) const {
  auto it = faceIndex_.find(id);
  if (it == faceIndex_.end())
    throw Error(ErrorKind::UnknownFace, "no face '" + id + "'");
  return it->second;
}

RawScheme PastingScheme::raw() const {
  return RawScheme{vertices_, edges_, faces_, top_, bottom_};
}

struct SchemeBuilder {
  static PastingScheme build(const RawScheme &raw, const VertexId &s,
                             const VertexId &t) {
    PastingScheme scheme;
    scheme.vertices_ = raw.vertices;
    std::sort(scheme.vertices_.begin(), scheme.vertices_.end());
    scheme.edges_ = raw.edges;
    std::sort(scheme.edges_.begin(), scheme.edges_.end(),
              [](const Edge &a, const Edge &b) { return a.id < b.id; });
    scheme.faces_ = raw.faces;
    std::sort(scheme.faces_.begin(), scheme.faces_.end(),
              [](const Face &a, const Face &b) { return a.id < b.id; });
    scheme.top_ = raw.top;
    scheme.bottom_ = raw.bottom;
    scheme.source_ = s;
    scheme.sink_ = t;
    for (std::size_t i = 0; i < scheme.edges_.size(); ++i)
      scheme.edgeIndex_[scheme.edges_[i].id] = i;
    for (std::size_t i = 0; i < scheme.faces_.size(); ++i)
      scheme.faceIndex_[scheme.faces_[i].id] = i;
    return scheme;
  }
};

namespace {

class Validator {
public:
  explicit Validator(const RawScheme &raw) : raw_(raw) {}

  ValidationResult run() {
    checkReferences();
    if (!errors_.empty())
      return {std::nullopt, errors_};

    for (const auto &v : raw_.vertices) {
      out_[v];
      in_[v];
    }
    for (const auto &e : raw_.edges) {
      edges_[e.id] = &e;
      if (e.src == e.tgt) {
        add(SchemeErrorKind::CycleDetected, "edge '" + e.id + "' is a loop",
            {e.id});
        continue;
      }
      out_[e.src].push_back(e.tgt);
      in_[e.tgt].push_back(e.src);
    }

    checkAcyclic();
    checkEndpoints();
    for (const auto &f : raw_.faces)
      checkFace(f);
    checkOuter(raw_.top, "top");
    checkOuter(raw_.bottom, "bottom");
    checkRoles();
    checkEuler();

    if (!errors_.empty())
      return {std::nullopt, errors_};
    return {SchemeBuilder::build(raw_, *source_, *sink_), {}};
  }

private:
  void add(SchemeErrorKind kind, std::string message,
           std::vector<std::string> witnesses) {
    errors_.push_back({kind, std::move(message), std::move(witnesses)});
  }

  void checkReferences() {
    std::set<std::string> seen;
    for (const auto &v : raw_.vertices)
      if (!seen.insert(v).second)
        add(SchemeErrorKind::MalformedInput, "duplicate vertex '" + v + "'",
            {v});
    std::set<std::string> vertices(raw_.vertices.begin(), raw_.vertices.end());

    std::set<std::string> edgeIds;
    for (const auto &e : raw_.edges) {
      if (!edgeIds.insert(e.id).second)
        add(SchemeErrorKind::MalformedInput, "duplicate edge '" + e.id + "'",
            {e.id});
      for (const auto *end : {&e.src, &e.tgt})
        if (!vertices.count(*end))
          add(SchemeErrorKind::MalformedInput,
              "edge '" + e.id + "' references unknown vertex '" + *end + "'",
              {e.id, *end});
    }

    auto checkPath = [&](const Path &path, const std::string &owner) {
      if (path.empty())
        add(SchemeErrorKind::MalformedInput, owner + " has an empty path",
            {owner});
      for (const auto &id : path)
        if (!edgeIds.count(id))
          add(SchemeErrorKind::MalformedInput,
              owner + " references unknown edge '" + id + "'", {owner, id});
    };

    std::set<std::string> faceIds;
    for (const auto &f : raw_.faces) {
      if (!faceIds.insert(f.id).second)
        add(SchemeErrorKind::MalformedInput, "duplicate face '" + f.id + "'",
            {f.id});
      checkPath(f.top, "face '" + f.id + "' top");
      checkPath(f.bottom, "face '" + f.id + "' bottom");
    }
    checkPath(raw_.top, "scheme top");
    checkPath(raw_.bottom, "scheme bottom");
  }

  void checkAcyclic() {
    // Depth-first search with colours; the first back edge yields a witness.
    std::map<VertexId, int> colour;
    std::vector<VertexId> stack;
    std::function<bool(const VertexId &)> visit = [&](const VertexId &v) {
      colour[v] = 1;
      stack.push_back(v);
      for (const auto &w : out_[v]) {
        if (colour[w] == 1) {
          auto from = std::find(stack.begin(), stack.end(), w);
          std::vector<std::string> cycle(from, stack.end());
          cycle.push_back(w);
          add(SchemeErrorKind::CycleDetected, "directed cycle", cycle);
          return true;
        }
        if (colour[w] == 0 && visit(w))
          return true;
      }
      stack.pop_back();
      colour[v] = 2;
      return false;
    };
    for (const auto &v : raw_.vertices)
      if (colour[v] == 0 && visit(v))
        return;
  }

  void checkEndpoints() {
    std::vector<std::string> sources, sinks;
    for (const auto &v : raw_.vertices) {
      if (in_[v].empty())
        sources.push_back(v);
      if (out_[v].empty())
        sinks.push_back(v);
    }
    if (sources.size() != 1)
      add(SchemeErrorKind::MultipleSources,
          "expected exactly one source, found " +
              std::to_string(sources.size()),
          sources);
    else
      source_ = sources.front();
    if (sinks.size() != 1)
      add(SchemeErrorKind::MultipleSinks,
          "expected exactly one sink, found " + std::to_string(sinks.size()),
          sinks);
    else
      sink_ = sinks.front();

    auto reach = [](const VertexId &from,
                    std::map<VertexId, std::vector<VertexId>> &adj) {
      std::set<VertexId> seen{from};
      std::vector<VertexId> todo{from};
      while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (const auto &w : adj[v])
          if (seen.insert(w).second)
            todo.push_back(w);
      }
      return seen;
    };
    std::vector<std::string> unreachable;
    std::set<VertexId> fromS, toT;
    // Without a unique source or sink, the outer boundary supplies the anchor.
    auto from = source_, to = sink_;
    if (!from && !raw_.top.empty() && edges_.count(raw_.top.front()))
      from = edges_.at(raw_.top.front())->src;
    if (!to && !raw_.top.empty() && edges_.count(raw_.top.back()))
      to = edges_.at(raw_.top.back())->tgt;
    if (from)
      fromS = reach(*from, out_);
    if (to)
      toT = reach(*to, in_);
    for (const auto &v : raw_.vertices)
      if ((from && !fromS.count(v)) || (to && !toT.count(v)))
        unreachable.push_back(v);
    if (!unreachable.empty())
      add(SchemeErrorKind::UnreachableVertex,
          "vertices not on a path from source to sink", unreachable);
  }

  // Returns the vertex sequence of a chained path, or nothing if it breaks.
  std::optional<std::vector<VertexId>> walk(const Path &path) const {
    std::vector<VertexId> vs{edges_.at(path.front())->src};
    for (const auto &id : path) {
      const Edge &e = *edges_.at(id);
      if (e.src != vs.back())
        return std::nullopt;
      vs.push_back(e.tgt);
    }
    return vs;
  }

  void checkFace(const Face &f) {
    auto top = walk(f.top);
    auto bottom = walk(f.bottom);
    if (!top || !bottom) {
      add(SchemeErrorKind::BadFaceBoundary,
          "face '" + f.id + "' has a " + (top ? "bottom" : "top") +
              " that is not a directed path",
          {f.id});
      return;
    }
    if (top->front() != bottom->front() || top->back() != bottom->back()) {
      add(SchemeErrorKind::BadFaceBoundary,
          "face '" + f.id + "' top and bottom have different endpoints",
          {f.id, top->front(), top->back(), bottom->front(), bottom->back()});
      return;
    }
    if (top->front() == top->back()) {
      add(SchemeErrorKind::BadFaceBoundary,
          "face '" + f.id + "' has equal start and end", {f.id});
      return;
    }
    std::set<EdgeId> topEdges(f.top.begin(), f.top.end());
    for (const auto &id : f.bottom)
      if (topEdges.count(id))
        add(SchemeErrorKind::BadFaceBoundary,
            "face '" + f.id + "' top and bottom share edge '" + id + "'",
            {f.id, id});
    std::set<VertexId> inner(top->begin() + 1, top->end() - 1);
    for (auto it = bottom->begin() + 1; it + 1 < bottom->end(); ++it)
      if (inner.count(*it))
        add(SchemeErrorKind::BadFaceBoundary,
            "face '" + f.id + "' top and bottom meet at vertex '" + *it + "'",
            {f.id, *it});
  }

  void checkOuter(const Path &path, const std::string &which) {
    auto vs = walk(path);
    if (!vs) {
      add(SchemeErrorKind::BadOuterBoundary,
          "scheme " + which + " is not a directed path", {which});
      return;
    }
    if ((source_ && vs->front() != *source_) ||
        (sink_ && vs->back() != *sink_))
      add(SchemeErrorKind::BadOuterBoundary,
          "scheme " + which + " does not run from source to sink",
          {which, vs->front(), vs->back()});
  }

  void checkRoles() {
    auto partition = [&](const char *role, const Path &outer, bool useTau) {
      std::map<EdgeId, int> count;
      for (const auto &e : raw_.edges)
        count[e.id] = 0;
      for (const auto &id : outer)
        ++count[id];
      for (const auto &f : raw_.faces)
        for (const auto &id : useTau ? f.bottom : f.top)
          ++count[id];
      for (const auto &[id, n] : count)
        if (n != 1)
          add(SchemeErrorKind::RolePartitionViolation,
              std::string(role) + " role of edge '" + id + "' is taken " +
                  std::to_string(n) + " times",
              {id});
    };
    partition("above", raw_.top, true);
    partition("below", raw_.bottom, false);
  }

  void checkEuler() {
    long v = static_cast<long>(raw_.vertices.size());
    long e = static_cast<long>(raw_.edges.size());
    long f = static_cast<long>(raw_.faces.size()) + 1;
    if (v - e + f != 2)
      add(SchemeErrorKind::EulerViolation,
          "V - E + F = " + std::to_string(v - e + f) + ", expected 2",
          {std::to_string(v), std::to_string(e), std::to_string(f)});
  }

  const RawScheme &raw_;
  std::vector<SchemeError> errors_;
  std::map<VertexId, std::vector<VertexId>> out_, in_;
  std::map<EdgeId, const Edge *> edges_;
  std::optional<VertexId> source_, sink_;
};

} // namespace

ValidationResult validateScheme(const RawScheme &raw) {
  return Validator(raw).run();
}

PastingScheme requireValid(const RawScheme &raw) {
  auto result = validateScheme(raw);
  if (!result.ok()) {
    std::string message;
    for (const auto &e : result.errors) {
      if (!message.empty())
        message += "; ";
      message += std::string(toString(e.kind)) + " (" + e.message + ")";
    }
    throw Error(ErrorKind::InvalidScheme, message);
  }
  return std::move(*result.scheme);
}

FaceBoundary facePaths(const PastingScheme &scheme, const FaceId &id) {
  const Face &f = scheme.face(id);
  return {f.top, f.bottom, scheme.pathSource(f.top),
          scheme.pathTarget(f.top)};
}

} // namespace pasting
