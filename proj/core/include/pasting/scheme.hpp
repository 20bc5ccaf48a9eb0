#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pasting {

using VertexId = std::string;
using EdgeId = std::string;
using FaceId = std::string;

/// A sequence of edge ids in traversal order (source first).
using Path = std::vector<EdgeId>;

struct Edge {
  EdgeId id;
  VertexId src;
  VertexId tgt;

  bool operator==(const Edge &) const = default;
};

struct Face {
  FaceId id;
  Path top;    // uppermost path
  Path bottom; // lowermost path

  bool operator==(const Face &) const = default;
};

/// Unvalidated scheme description, as read from a file or assembled by a
/// construction.
struct RawScheme {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  Path top;
  Path bottom;

  bool operator==(const RawScheme &) const = default;
};

enum class SchemeErrorKind {
  MalformedInput,
  CycleDetected,
  MultipleSources,
  MultipleSinks,
  UnreachableVertex,
  BadFaceBoundary,
  BadOuterBoundary,
  RolePartitionViolation,
  EulerViolation,
};

std::string_view toString(SchemeErrorKind kind);

struct SchemeError {
  SchemeErrorKind kind;
  std::string message;
  std::vector<std::string> witnesses;
};

struct FaceBoundary {
  Path sigma;
  Path tau;
  VertexId source;
  VertexId target;
};

/// A validated pasting scheme. Vertices, edges and faces are kept sorted by
/// id, which is the canonical order used for every enumeration.
class PastingScheme {
public:
  const std::vector<VertexId> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Face> &faces() const { return faces_; }
  const Path &top() const { return top_; }
  const Path &bottom() const { return bottom_; }
  const VertexId &source() const { return source_; }
  const VertexId &sink() const { return sink_; }

  bool hasEdge(const EdgeId &id) const { return edgeIndex_.count(id) != 0; }
  bool hasFace(const FaceId &id) const { return faceIndex_.count(id) != 0; }
  const Edge &edge(const EdgeId &id) const;
  const Face &face(const FaceId &id) const;
  std::size_t faceIndex(const FaceId &id) const;

  VertexId pathSource(const Path &path) const { return edge(path.front()).src; }
  VertexId pathTarget(const Path &path) const { return edge(path.back()).tgt; }

  /// Back to the plain description (sorted canonically).
  RawScheme raw() const;

  bool operator==(const PastingScheme &other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           faces_ == other.faces_ && top_ == other.top_ &&
           bottom_ == other.bottom_;
  }

private:
  friend struct SchemeBuilder;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  Path top_;
  Path bottom_;
  VertexId source_;
  VertexId sink_;
  std::map<EdgeId, std::size_t> edgeIndex_;
  std::map<FaceId, std::size_t> faceIndex_;
};

struct ValidationResult {
  std::optional<PastingScheme> scheme;
  std::vector<SchemeError> errors;

  bool ok() const { return scheme.has_value(); }
};

/// Checks every scheme invariant and reports all violations found.
ValidationResult validateScheme(const RawScheme &raw);

/// Like validateScheme but throws Error(InvalidScheme) listing the violations.
PastingScheme requireValid(const RawScheme &raw);

FaceBoundary facePaths(const PastingScheme &scheme, const FaceId &face);

} // namespace pasting
