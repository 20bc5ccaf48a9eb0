#pragma once

#include "pasting/glue.hpp"
#include "pasting/orders.hpp"
#include "pasting/scheme.hpp"
#include "pasting/terms.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace pasting {

/// Random pasting schemes grown from a single edge.
struct SchemeGrammar {
  std::uint64_t seed = 1;
  std::size_t maxFaces = 6;
  /// Relative weights of: serial subdivision of an edge, parallel split of
  /// an edge into a bigon, stacking a new face under part of an upper path.
  std::array<double, 3> weights{1.0, 1.0, 1.0};
};

PastingScheme generateScheme(const SchemeGrammar &grammar);

/// count schemes from consecutive seeds starting at firstSeed.
std::vector<PastingScheme> corpus(std::size_t count, std::size_t maxFaces,
                                  std::uint64_t firstSeed = 1);

/// Labelling with one 1-to-1 cell per face, named "Theta_F" with target "F'".
Labelling corpusLabelling(const PastingScheme &scheme);

enum class Outcome { Equal, Unknown, Failed };

struct Witness {
  std::string scheme; // scheme document
  std::vector<std::string> orders;
  std::string left;
  std::string right;
};

struct InstanceOutcome {
  std::string instance;
  /// Which case of an argument the instance exercises, when meaningful.
  std::string tag;
  Outcome outcome = Outcome::Equal;
  std::vector<RewriteStep> proof;
  std::size_t visited = 0;
  std::string detail;
  Witness witness; // filled unless Equal
};

struct VerdictReport {
  std::string checkName;
  std::vector<InstanceOutcome> outcomes;
  std::chrono::milliseconds elapsed{0};

  std::size_t instances() const { return outcomes.size(); }
  std::size_t count(Outcome o) const;
  bool allEqual() const { return count(Outcome::Equal) == instances(); }
};

struct CheckOptions {
  std::size_t budget = 100000;
  /// An Unknown verdict is retried once with budget * retryFactor.
  std::size_t retryFactor = 10;
  bool checkSteps = false;
  std::uint64_t seed = 1;
};

enum class ContractibilityMode {
  /// Compares c(a,x)·m with c(a, m(x)) for every order x within
  /// maxLength - 1 moves of a; by induction this covers every path of length
  /// at most maxLength.
  Inductive,
  /// Enumerates every path up to maxLength and compares it with the
  /// canonical path between its endpoints.
  AllPaths,
};

VerdictReport checkContractibility(
    const Labelling &lab, const CheckOptions &options = {},
    ContractibilityMode mode = ContractibilityMode::Inductive,
    std::size_t maxLength = 6);

VerdictReport checkNaturality1(const Labelling &lab, const ThreeCellDecl &decl,
                               const CheckOptions &options = {});

VerdictReport checkCommute1to1(const Labelling &lab, const ThreeCellDecl &first,
                               const ThreeCellDecl &second,
                               const CheckOptions &options = {});

struct HeptagonOrders {
  CompOrder x, a, b, c, d, y;
  bool operator==(const HeptagonOrders &) const = default;
};

VerdictReport checkHeptagon(const Labelling &lab, const ThreeCellDecl &first,
                            const ThreeCellDecl &second,
                            const std::vector<HeptagonOrders> &assignments,
                            const CheckOptions &options = {});

/// All assignments when there are at most `limit` of them, otherwise a
/// seeded sample of `limit` plus the degenerate assignment x = a = c.
std::vector<HeptagonOrders> heptagonAssignments(const PastingScheme &scheme,
                                                std::size_t limit,
                                                std::uint64_t seed);

VerdictReport checkGlueCompat(const Labelling &lab, const GluedScheme &g,
                              const ThreeCellDecl &decl,
                              const CheckOptions &options = {});

/// Naturality of the transformation induced by a 2-to-1 cell.
VerdictReport checkNaturality2(const Labelling &lab, const GluedScheme &g,
                               const ThreeCellDecl &decl,
                               JChoice choice = JChoice::PullLower,
                               const CheckOptions &options = {});

VerdictReport checkOctagon(const Labelling &lab, const ThreeCellDecl &first,
                           const ThreeCellDecl &second,
                           const std::vector<JChoice> &choices,
                           const CheckOptions &options = {});

/// A replacement scheme for a pair of faces that are not stacked, obtained by
/// collapsing the context between them into one of the merged face's paths.
struct SpecialCandidate {
  PastingScheme scheme;
  FaceId merged;
  /// Order of the original scheme the candidate corresponds to.
  CompOrder order;
  /// True when the faces between the pair are composed before it.
  bool contextFirst = false;
};

std::vector<SpecialCandidate> specialCaseStrategy(const PastingScheme &scheme,
                                                  const FaceId &f,
                                                  const FaceId &g);

/// Runs the named check ("all" for every applicable one) over the 3-cells
/// declared in the labelling.
std::vector<VerdictReport> runChecks(const Labelling &lab,
                                     const std::string &check,
                                     const CheckOptions &options = {});

const std::vector<std::string> &checkNames();

std::string toString(Outcome o);
std::string toJsonLines(const VerdictReport &report, bool withTiming = false);
std::string summaryTable(const std::vector<VerdictReport> &reports);

} // namespace pasting
