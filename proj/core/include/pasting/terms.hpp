#pragma once

#include "pasting/orders.hpp"
#include "pasting/scheme.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pasting {

/// Domain and codomain 1-cells of a 2-cell, as edge paths.
struct CellType {
  Path dom;
  Path cod;

  bool operator==(const CellType &) const = default;
};

struct ThreeCellDecl {
  enum class Kind { OneToOne, TwoToOne };

  std::string name;
  Kind kind = Kind::OneToOne;
  /// {F} for a 1-to-1 cell, {F, G} (F over G) for a 2-to-1 cell.
  std::vector<FaceId> faces;
  /// Generators the cell consumes, in the same order as faces.
  std::vector<std::string> sources;
  std::string target;
  /// Boundary of the target generator.
  CellType boundary;

  bool operator==(const ThreeCellDecl &) const = default;
};

using DeclRef = std::shared_ptr<const ThreeCellDecl>;

struct PastedLabel;

/// The label of a face: a generator name, or the pasted composite of two
/// labels once the face results from gluing.
struct FaceLabel {
  std::string generator;
  std::shared_ptr<const PastedLabel> pasted;

  static FaceLabel plain(std::string name) { return {std::move(name), {}}; }
  bool isPasted() const { return pasted != nullptr; }
  bool operator==(const FaceLabel &other) const;
};

/// One whiskered factor of a pasted label; whiskers are relative to the
/// merged face's uppermost path.
struct PastedPart {
  Path pre;
  FaceLabel label;
  CellType type;
  Path post;

  bool operator==(const PastedPart &) const = default;
};

/// Two factors in application order.
struct PastedLabel {
  std::array<PastedPart, 2> parts;

  bool operator==(const PastedLabel &) const = default;
};

/// Assignment of generators to the faces of a scheme together with the
/// 3-cells declared over it.
class Labelling {
public:
  /// Every face labelled by a generator named after the face.
  explicit Labelling(PastingScheme scheme);
  /// Faces listed in names use the given generator name.
  Labelling(PastingScheme scheme, const std::map<FaceId, std::string> &names);
  Labelling(PastingScheme scheme, std::map<FaceId, FaceLabel> labels,
            std::map<std::string, CellType> generators,
            std::vector<DeclRef> decls);

  const PastingScheme &scheme() const { return scheme_; }
  const FaceLabel &label(const FaceId &face) const;
  const std::map<FaceId, FaceLabel> &labels() const { return labels_; }
  const std::map<std::string, CellType> &generators() const {
    return generators_;
  }
  const CellType &generator(const std::string &name) const;
  const std::vector<DeclRef> &decls() const { return decls_; }
  DeclRef decl(const std::string &name) const;

  /// Registers a 1-to-1 cell on face, from its current generator to a fresh
  /// parallel generator named target.
  DeclRef declareOneToOne(const std::string &name, const FaceId &face,
                          const std::string &target);
  /// Registers a 2-to-1 cell; boundary must be the merged face boundary
  /// (computed by the glue module).
  DeclRef declareTwoToOne(const std::string &name, const FaceId &upper,
                          const FaceId &lower, const std::string &target,
                          const CellType &boundary);

  /// The labelling with the decl's target substituted on its face (for a
  /// 2-to-1 cell, on the merged face "F#G" of a glued scheme).
  Labelling modified(const ThreeCellDecl &decl) const;

  /// Generator to primed generator, for every declared 1-to-1 cell.
  std::map<std::string, std::string> primedNames() const;

  bool operator==(const Labelling &other) const;

private:
  void addGenerator(const std::string &name, const CellType &type);

  PastingScheme scheme_;
  std::map<FaceId, FaceLabel> labels_;
  std::map<std::string, CellType> generators_;
  std::vector<DeclRef> decls_;
};

/// A generator whiskered by 1-cell paths; pre is the traversal prefix (the
/// right whisker in composition notation) and post the traversal suffix.
struct WhiskCell {
  Path pre;
  std::string gen;
  CellType type;
  Path post;

  Path input() const;
  Path output() const;
  bool operator==(const WhiskCell &) const = default;
};

struct VertWord {
  Path source;
  std::vector<WhiskCell> cells;

  Path target() const;
  bool operator==(const VertWord &) const = default;
};

struct Move {
  enum class Kind { Swap, Gen3, Gen3Pair };

  Kind kind = Kind::Swap;
  std::size_t index = 0;
  int sign = +1;
  DeclRef decl;

  static Move swap(std::size_t i, int sign) { return {Kind::Swap, i, sign, {}}; }
  static Move gen3(std::size_t i, DeclRef d) {
    return {Kind::Gen3, i, +1, std::move(d)};
  }
  static Move gen3Pair(std::size_t i, DeclRef d) {
    return {Kind::Gen3Pair, i, +1, std::move(d)};
  }

  std::size_t widthIn() const { return kind == Kind::Gen3 ? 1 : 2; }
  std::size_t widthOut() const { return kind == Kind::Swap ? 2 : 1; }

  bool operator==(const Move &other) const;
};

struct MoveWord {
  VertWord source;
  std::vector<Move> moves;
};

VertWord evalOrder(const Labelling &lab, const CompOrder &o);

/// +1 when cell i rewrites a range left of cell i+1's, -1 when right of it,
/// 0 when the two cells are not independent.
int swapOrientation(const VertWord &w, std::size_t i);

VertWord applyMove(const VertWord &w, const Move &m);
VertWord applyMoves(const MoveWord &w);

/// Swap moves realising a path of generating moves starting at word w, each
/// signed by the orientation of the pair it exchanges.
std::vector<Move> swapMoves(const VertWord &w, const std::vector<GenMove> &path);

MoveWord gammaWord(const Labelling &lab, const CompOrder &from,
                   const std::vector<GenMove> &path);

MoveWord inducedNat1(const Labelling &lab, const ThreeCellDecl &decl,
                     const CompOrder &o);

/// Appends moves, checking they apply to the current endpoint.
MoveWord extend(MoveWord w, const std::vector<Move> &moves);

enum class Rule { R1, R2, R3, R4, R5, R6 };
enum class Verdict { Equal, Unknown, DistinctEndpoints };

struct RewriteStep {
  Rule rule;
  std::size_t position;

  bool operator==(const RewriteStep &) const = default;
};

struct EqualityOptions {
  std::size_t budget = 100000;
  /// Replays every rewrite step against the full endpoint.
  bool checkSteps = false;
};

struct EqualityResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<RewriteStep> proof;
  std::size_t visited = 0;
};

EqualityResult equalUpTo(const MoveWord &a, const MoveWord &b,
                         const EqualityOptions &options = {});

/// Every single-step rewrite of a move list, as produced by the search.
std::vector<std::pair<RewriteStep, std::vector<Move>>>
rewrites(const VertWord &source, const std::vector<Move> &moves);

std::string toString(Rule r);
std::string toString(Verdict v);
std::string toString(const Move &m);
std::string toString(const std::vector<Move> &moves);
/// Composition notation: "post ∘ gen ∘ pre", paths written right to left.
std::string toString(const WhiskCell &c);
std::string compositionString(const Path &p);

} // namespace pasting
