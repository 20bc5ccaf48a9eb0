#pragma once

#include "pasting/orders.hpp"
#include "pasting/scheme.hpp"
#include "pasting/terms.hpp"

#include <optional>
#include <vector>

namespace pasting {

/// How the merged boundary of an upper face F and a lower face G looks.
/// The numbering follows the rows of the pasting table:
///   1: tau_F is the overlap, sigma_G = i.r.j     -> aG . (j o aF o i)
///   2: s_F starts the overlap, t_G ends it       -> (j o aG) . (aF o i)
///   3: s_G starts the overlap, t_F ends it       -> (aG o i) . (j o aF)
///   4: sigma_G is the overlap, tau_F = i.r.j     -> (j o aG o i) . aF
/// Stubs are traversal-order paths; i lies before the overlap, j after it.
struct ShapeCase {
  int row = 1;
  Path left;  // i
  Path right; // j
  Path overlap;

  bool operator==(const ShapeCase &) const = default;
};

struct Composability {
  enum class Kind { CaseA, CaseB, NotComposable };

  Kind kind = Kind::NotComposable;
  std::optional<ShapeCase> shape;
};

struct GluedScheme {
  PastingScheme glued;
  FaceId merged;
  FaceId originF;
  FaceId originG;
  ShapeCase shape;
  PastingScheme origin;
};

/// Brute-force oracle: some linear extension has f immediately before g.
bool adjacentOrderExists(const PastingScheme &scheme, const FaceId &f,
                         const FaceId &g);

Composability classifyComposable(const PastingScheme &scheme, const FaceId &f,
                                 const FaceId &g);

/// Boundary of the merged face for an upper face with boundary (sigmaF,
/// tauF) and a lower face with (sigmaG, tauG).
CellType mergedBoundary(const ShapeCase &shape, const CellType &upper,
                        const CellType &lower);

GluedScheme buildGlued(const PastingScheme &scheme, const FaceId &f,
                       const FaceId &g);

CompOrder sFunctorOb(const GluedScheme &g, const CompOrder &glued);
std::vector<GenMove> sFunctorMove(const GluedScheme &g, const GenMove &m);

enum class JChoice {
  /// Pull the lower face leftwards next to the upper one (canonical).
  PullLower,
  /// Push the upper face rightwards next to the lower one.
  PushUpper,
  /// Send every order to the first order of the glued scheme.
  FirstGlued,
};

std::string toString(JChoice c);

CompOrder pseudoInverse(const GluedScheme &g, const CompOrder &o,
                        JChoice choice = JChoice::PullLower);

/// The two whiskered factors of the pasted composite, relative to the merged
/// face's uppermost path; ShapeMismatch if the factors do not chain.
PastedLabel pasteLabel(const ShapeCase &shape, const FaceLabel &upper,
                       const CellType &upperType, const FaceLabel &lower,
                       const CellType &lowerType);

/// The labelling of the glued scheme: untouched faces keep their labels and
/// the merged face carries the pasted composite.
Labelling gluedLabelling(const Labelling &lab, const GluedScheme &g);

/// Declares a 2-to-1 cell on (f, g) with the merged boundary computed here;
/// a supplied boundary must agree with it.
DeclRef declarePair(Labelling &lab, const std::string &name, const FaceId &f,
                    const FaceId &g, const std::string &target,
                    const std::optional<CellType> &declared = std::nullopt);

/// Component at o of the transformation induced by a 2-to-1 cell: the
/// interchanger to the adjacent order S(J(o)) followed by the merge.
MoveWord inducedNat2(const Labelling &lab, const GluedScheme &g,
                     const ThreeCellDecl &decl, const CompOrder &o,
                     JChoice choice = JChoice::PullLower);

} // namespace pasting
