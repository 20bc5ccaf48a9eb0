#include "support.hpp"

#include "pasting/error.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace pasting;
using namespace testing_support;

namespace {

void expectAllEqual(const VerdictReport &r) {
  EXPECT_EQ(r.count(Outcome::Equal), r.instances()) << r.checkName;
  for (const auto &i : r.outcomes)
    EXPECT_EQ(i.outcome, Outcome::Equal)
        << r.checkName << " " << i.instance << " " << i.detail;
}

} // namespace

TEST(Verify, GeneratorIsDeterministic) {
  SchemeGrammar g;
  g.seed = 42;
  EXPECT_EQ(generateScheme(g), generateScheme(g));
  auto a = corpus(10, 6, 3), b = corpus(10, 6, 3);
  EXPECT_EQ(a, b);
  for (const auto &s : a)
    EXPECT_LE(s.faces().size(), 6u);
}

TEST(Verify, GeneratorCoversEveryOperation) {
  std::size_t multiEdgePaths = 0, faces = 0;
  for (const auto &s : corpus(100, 6, 1)) {
    faces += s.faces().size();
    for (const auto &f : s.faces())
      if (f.top.size() > 1 || f.bottom.size() > 1)
        ++multiEdgePaths;
  }
  EXPECT_GT(faces, 200u);
  EXPECT_GT(multiEdgePaths, 20u);
}

TEST(Verify, ContractibilityOnFixtures) {
  auto bigons = checkContractibility(labFixture("stacked-bigons"));
  EXPECT_EQ(bigons.instances(), 0u);

  auto running = checkContractibility(labFixture("running"));
  expectAllEqual(running);

  auto series = checkContractibility(labFixture("series"));
  expectAllEqual(series);
  bool braid = false;
  for (const auto &i : series.outcomes)
    for (const auto &s : i.proof)
      braid = braid || s.rule == Rule::R3;
  EXPECT_TRUE(braid);

  auto literal = checkContractibility(labFixture("series"), {},
                                      ContractibilityMode::AllPaths, 6);
  expectAllEqual(literal);
  EXPECT_GT(literal.instances(), series.instances());
}

TEST(Verify, ContractibilityRejectsLargeSchemes) {
  SchemeGrammar g;
  for (g.seed = 1;; ++g.seed) {
    auto s = generateScheme(g);
    if (s.faces().size() == 6) {
      EXPECT_THROW(checkContractibility(Labelling(s)), Error);
      break;
    }
  }
}

TEST(Verify, NaturalityProofCases) {
  Labelling lab = labFixture("running");
  std::map<std::string, Rule> expected{{"first", Rule::R4},
                                       {"second", Rule::R5},
                                       {"disjoint", Rule::R2}};
  std::set<std::string> seen;
  for (const char *name : {"Gamma", "Delta", "Phi"}) {
    auto r = checkNaturality1(lab, *lab.decl(name));
    expectAllEqual(r);
    for (const auto &i : r.outcomes) {
      seen.insert(i.tag);
      ASSERT_EQ(i.proof.size(), 1u);
      EXPECT_EQ(i.proof[0].rule, expected.at(i.tag));
    }
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Verify, CommuteOnStackedBigonsIsOneExchange) {
  Labelling lab = labFixture("stacked-bigons");
  auto r = checkCommute1to1(lab, *lab.decl("Gamma"), *lab.decl("Delta"));
  ASSERT_EQ(r.instances(), 1u);
  expectAllEqual(r);
  ASSERT_EQ(r.outcomes[0].proof.size(), 1u);
  EXPECT_EQ(r.outcomes[0].proof[0].rule, Rule::R2);
  EXPECT_THROW(checkCommute1to1(lab, *lab.decl("Gamma"), *lab.decl("Gamma")),
               Error);
}

TEST(Verify, Heptagon) {
  Labelling running = labFixture("running");
  auto all = heptagonAssignments(running.scheme(), 64, 1);
  EXPECT_EQ(all.size(), 64u);
  expectAllEqual(checkHeptagon(running, *running.decl("Gamma"),
                               *running.decl("Delta"), all));

  Labelling series = labFixture("series");
  auto sample = heptagonAssignments(series.scheme(), 64, 5);
  EXPECT_EQ(sample.size(), 65u);
  EXPECT_EQ(sample, heptagonAssignments(series.scheme(), 64, 5));
  expectAllEqual(checkHeptagon(series, *series.decl("Gamma"),
                               *series.decl("Delta"), sample));

  auto o = parseOrder("F,H,G");
  auto degenerate = checkHeptagon(series, *series.decl("Gamma"),
                                  *series.decl("Delta"), {{o, o, o, o, o, o}});
  expectAllEqual(degenerate);
}

TEST(Verify, GlueCompatibility) {
  for (auto [name, f, g] : {std::tuple{"row2", "F", "G"},
                            std::tuple{"row3", "G", "F"}}) {
    Labelling lab = labFixture(name);
    GluedScheme gl = buildGlued(lab.scheme(), f, g);
    auto r = checkGlueCompat(lab, gl, *lab.decl("Theta"));
    expectAllEqual(r);
    EXPECT_EQ(r.outcomes[0].tag, "structural");
  }
  Labelling corpusLab = corpusLabelling(schemeFixture("double-stack"));
  GluedScheme gl = buildGlued(corpusLab.scheme(), "F", "G");
  auto r = checkGlueCompat(corpusLab, gl, *corpusLab.decl("Theta_H"));
  expectAllEqual(r);
  EXPECT_GT(r.instances(), 2u);
  EXPECT_THROW(checkGlueCompat(corpusLab, gl, *corpusLab.decl("Theta_F")),
               Error);
}

TEST(Verify, NaturalityOfPairCells) {
  Labelling lab = labFixture("double-stack");
  GluedScheme g = buildGlued(lab.scheme(), "F", "G");
  for (JChoice j : {JChoice::PullLower, JChoice::PushUpper, JChoice::FirstGlued}) {
    auto r = checkNaturality2(lab, g, *lab.decl("Pi"), j);
    EXPECT_GT(r.instances(), 0u);
    expectAllEqual(r);
  }
}

TEST(Verify, Octagon) {
  Labelling lab = labFixture("double-stack");
  std::vector<JChoice> choices{JChoice::PullLower, JChoice::PushUpper,
                               JChoice::FirstGlued};
  auto r = checkOctagon(lab, *lab.decl("Pi"), *lab.decl("Omega"), choices);
  expectAllEqual(r);
  EXPECT_EQ(r.instances(), 3u + 6u * 3u);
  auto swapped = checkOctagon(lab, *lab.decl("Omega"), *lab.decl("Pi"), choices);
  expectAllEqual(swapped);

  Labelling same = labFixture("double-stack");
  EXPECT_THROW(checkOctagon(same, *same.decl("Pi"), *same.decl("Pi"), choices),
               Error);
}

TEST(Verify, SpecialCaseSeries) {
  auto s = schemeFixture("series");
  auto out = specialCaseStrategy(s, "F", "G");
  ASSERT_EQ(out.size(), 2u);

  const auto &first = out[0];
  EXPECT_TRUE(first.contextFirst);
  EXPECT_EQ(first.order, parseOrder("H,F,G"));
  const Face &m1 = first.scheme.face("F#G");
  EXPECT_EQ(m1.top, (Path{"a0", "f", "b1", "g", "c0"}));
  EXPECT_EQ(m1.bottom, Path{"a1.f.b1.g.c1"});
  EXPECT_EQ(first.scheme.face("H").bottom, Path{"b1"});
  EXPECT_EQ(first.scheme.bottom(), Path{"a1.f.b1.g.c1"});

  const auto &last = out[1];
  EXPECT_FALSE(last.contextFirst);
  EXPECT_EQ(last.order, parseOrder("F,G,H"));
  const Face &m2 = last.scheme.face("F#G");
  EXPECT_EQ(m2.top, Path{"a0.f.b0.g.c0"});
  EXPECT_EQ(m2.bottom, (Path{"a1", "f", "b0", "g", "c1"}));
  EXPECT_EQ(last.scheme.top(), Path{"a0.f.b0.g.c0"});

  for (const auto &c : out) {
    EXPECT_EQ(c.scheme.faces().size(), 2u);
    EXPECT_EQ(enumerateOrders(c.scheme).size(), 1u);
  }

  auto fh = specialCaseStrategy(s, "F", "H");
  EXPECT_EQ(fh.size(), 2u);
  auto gf = specialCaseStrategy(s, "G", "F");
  EXPECT_EQ(gf[0].merged, "G#F");

  try {
    specialCaseStrategy(schemeFixture("stacked-bigons"), "F", "G");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCaseA);
  }
}

TEST(Verify, SpecialCaseOutsideTheSeriesFamily) {
  // alpha and beta sit side by side inside the running scheme, not on its
  // outer paths.
  try {
    specialCaseStrategy(schemeFixture("running"), "alpha", "beta");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedConfiguration);
  }
}

TEST(Verify, CorpusChecks) {
  for (const auto &s : corpus(30, 4, 700)) {
    Labelling lab = corpusLabelling(s);
    for (const auto &r : runChecks(lab, "naturality"))
      expectAllEqual(r);
    for (const auto &r : runChecks(lab, "commute"))
      expectAllEqual(r);
  }
}

TEST(Verify, ReportSerialisation) {
  Labelling lab = labFixture("running");
  auto reports = runChecks(lab, "naturality");
  ASSERT_EQ(reports.size(), 3u);
  std::string lines = toJsonLines(reports[0]);
  std::istringstream in(lines);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["outcome"], "Equal");
    EXPECT_TRUE(j.contains("proof"));
    ++n;
  }
  EXPECT_EQ(n, reports[0].instances());
  EXPECT_EQ(toJsonLines(reports[0]), toJsonLines(runChecks(lab, "naturality")[0]));
  EXPECT_NE(summaryTable(reports).find("naturality[Gamma]"), std::string::npos);
  EXPECT_THROW(runChecks(lab, "nonsense"), Error);
}

TEST(Verify, FailedInstancesCarryWitnesses) {
  // A budget of one state with no retry cannot close the braid instances.
  CheckOptions tight;
  tight.budget = 1;
  tight.retryFactor = 1;
  auto r = checkContractibility(labFixture("series"), tight);
  ASSERT_GT(r.count(Outcome::Unknown), 0u);
  for (const auto &i : r.outcomes)
    if (i.outcome != Outcome::Equal) {
      EXPECT_FALSE(i.witness.scheme.empty());
      EXPECT_FALSE(i.witness.left.empty());
      EXPECT_EQ(i.witness.orders.size(), 2u);
    }
}
