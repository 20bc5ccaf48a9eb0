#include "support.hpp"

#include "pasting/error.hpp"

#include <gtest/gtest.h>

using namespace pasting;
using namespace testing_support;

namespace {

using Kind = Composability::Kind;

std::string canonical(const PastingScheme &s) { return writeScheme(s.raw()); }

ErrorKind kindOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

} // namespace

TEST(Glue, AdjacentOrderExamples) {
  auto stacked = schemeFixture("stacked-bigons");
  EXPECT_TRUE(adjacentOrderExists(stacked, "F", "G"));
  EXPECT_FALSE(adjacentOrderExists(stacked, "G", "F"));
  EXPECT_TRUE(adjacentOrderExists(schemeFixture("series"), "F", "G"));
  EXPECT_THROW(adjacentOrderExists(stacked, "F", "Q"), Error);
}

TEST(Glue, ClassifyFixtures) {
  auto c = classifyComposable(schemeFixture("stacked-bigons"), "F", "G");
  ASSERT_EQ(c.kind, Kind::CaseB);
  EXPECT_EQ(c.shape->row, 1);
  EXPECT_TRUE(c.shape->left.empty() && c.shape->right.empty());
  EXPECT_EQ(c.shape->overlap, Path{"e1"});

  EXPECT_EQ(classifyComposable(schemeFixture("series"), "F", "G").kind,
            Kind::CaseA);
  EXPECT_EQ(classifyComposable(schemeFixture("stacked-bigons"), "G", "F").kind,
            Kind::NotComposable);
  EXPECT_EQ(classifyComposable(schemeFixture("running"), "phi", "psi").kind,
            Kind::NotComposable);

  c = classifyComposable(schemeFixture("row2"), "F", "G");
  ASSERT_EQ(c.kind, Kind::CaseB);
  EXPECT_EQ(c.shape->row, 1);
  EXPECT_TRUE(c.shape->left.empty());
  EXPECT_EQ(c.shape->right, Path{"zw"});

  c = classifyComposable(schemeFixture("row3"), "G", "F");
  ASSERT_EQ(c.kind, Kind::CaseB);
  EXPECT_EQ(c.shape->row, 2);
  EXPECT_EQ(c.shape->left, Path{"xy"});
  EXPECT_EQ(c.shape->right, Path{"zw"});

  c = classifyComposable(schemeFixture("motivating"), "alpha1", "alpha2");
  ASSERT_EQ(c.kind, Kind::CaseB);
  EXPECT_EQ(c.shape->row, 3);
  EXPECT_EQ(c.shape->left, Path{"g1"});
  EXPECT_EQ(c.shape->right, Path{"p2"});
  EXPECT_EQ(c.shape->overlap, Path{"f"});

  c = classifyComposable(schemeFixture("row4"), "F", "G");
  ASSERT_EQ(c.kind, Kind::CaseB);
  EXPECT_EQ(c.shape->row, 4);
  EXPECT_EQ(c.shape->left, Path{"i"});
  EXPECT_EQ(c.shape->right, Path{"j"});

  c = classifyComposable(schemeFixture("running"), "phi", "alpha");
  ASSERT_EQ(c.kind, Kind::CaseB);
  EXPECT_EQ(c.shape->row, 4);
  EXPECT_EQ(c.shape->left, Path{"f"});
  EXPECT_EQ(c.shape->right, (Path{"g", "b", "h"}));
}

TEST(Glue, ClassificationMatchesOracleOnCorpus) {
  std::size_t caseB = 0;
  for (const auto &s : corpus(100, 6, 1)) {
    RawScheme raw = s.raw();
    for (const auto &f : s.faces())
      for (const auto &g : s.faces()) {
        if (f.id == g.id)
          continue;
        auto c = classifyComposable(s, f.id, g.id);
        bool oracle = oracleAdjacent(raw, f.id, g.id);
        EXPECT_EQ(c.kind != Kind::NotComposable, oracle) << f.id << " " << g.id;
        EXPECT_EQ(adjacentOrderExists(s, f.id, g.id), oracle);
        if (c.kind == Kind::CaseB) {
          ++caseB;
          ASSERT_TRUE(c.shape);
          EXPECT_GE(c.shape->row, 1);
          EXPECT_LE(c.shape->row, 4);
          const Path &r = c.shape->overlap;
          auto within = [&](const Path &p) {
            return std::search(p.begin(), p.end(), r.begin(), r.end()) != p.end();
          };
          EXPECT_TRUE(within(f.bottom) && within(g.top));
        }
      }
  }
  EXPECT_GT(caseB, 50u);
}

TEST(Glue, GoldenGluedSchemes) {
  struct Case {
    const char *scheme, *f, *g, *golden;
  };
  for (auto c : {Case{"stacked-bigons", "F", "G", "golden/row1-glued"},
                 Case{"row2", "F", "G", "golden/row2-glued"},
                 Case{"row3", "G", "F", "golden/row3-glued"},
                 Case{"row4", "F", "G", "golden/row4-glued"},
                 Case{"motivating", "alpha1", "alpha2",
                      "golden/motivating-glued"}}) {
    auto g = buildGlued(schemeFixture(c.scheme), c.f, c.g);
    EXPECT_EQ(canonical(g.glued), canonical(schemeFixture(c.golden))) << c.scheme;
    EXPECT_EQ(g.merged, std::string(c.f) + "#" + c.g);
  }
}

TEST(Glue, BuildGluedRejectsCaseA) {
  EXPECT_EQ(kindOf([] { buildGlued(schemeFixture("series"), "F", "G"); }),
            ErrorKind::NotCaseB);
}

TEST(Glue, GluedCorpusSchemesAreSmaller) {
  for (const auto &s : corpus(60, 6, 300))
    for (const auto &f : s.faces())
      for (const auto &g : s.faces()) {
        if (f.id == g.id ||
            classifyComposable(s, f.id, g.id).kind != Kind::CaseB)
          continue;
        GluedScheme gl = buildGlued(s, f.id, g.id);
        EXPECT_EQ(gl.glued.faces().size() + 1, s.faces().size());
        auto glued = enumerateOrders(gl.glued);
        EXPECT_LE(glued.size(), enumerateOrders(s).size());
        FaceRelations rel(s);
        for (const auto &o : glued) {
          CompOrder up = sFunctorOb(gl, o);
          EXPECT_TRUE(isValidOrder(rel, up));
          EXPECT_EQ(pseudoInverse(gl, up), o);
          for (const auto &m : genMoves(gl.glued, o)) {
            auto image = sFunctorMove(gl, m);
            CompOrder cur = up;
            for (const auto &step : image) {
              EXPECT_EQ(step.at, cur);
              cur = step.result();
            }
            EXPECT_EQ(cur, sFunctorOb(gl, m.result()));
          }
        }
        for (const auto &o : enumerateOrders(s))
          for (JChoice j : {JChoice::PullLower, JChoice::PushUpper,
                            JChoice::FirstGlued}) {
            CompOrder down = pseudoInverse(gl, o, j);
            EXPECT_TRUE(std::find(glued.begin(), glued.end(), down) !=
                        glued.end());
          }
      }
}

TEST(Glue, FunctorExamples) {
  auto ds = schemeFixture("double-stack");
  GluedScheme g = buildGlued(ds, "F", "G");
  EXPECT_EQ(sFunctorOb(g, parseOrder("F#G,H,K")), parseOrder("F,G,H,K"));
  EXPECT_EQ(sFunctorOb(g, parseOrder("H,F#G,K")), parseOrder("H,F,G,K"));

  auto image = sFunctorMove(g, GenMove{parseOrder("F#G,H,K"), 0});
  ASSERT_EQ(image.size(), 2u);
  EXPECT_EQ(image[0].index, 1u);
  EXPECT_EQ(image[1].index, 0u);
  image = sFunctorMove(g, GenMove{parseOrder("H,F#G,K"), 0});
  ASSERT_EQ(image.size(), 2u);
  EXPECT_EQ(image[0].index, 0u);
  EXPECT_EQ(image[1].index, 1u);

  GluedScheme r2 = buildGlued(schemeFixture("row2"), "F", "G");
  EXPECT_EQ(sFunctorOb(r2, parseOrder("H,F#G")), parseOrder("H,F,G"));
  GluedScheme st = buildGlued(schemeFixture("stacked-bigons"), "F", "G");
  EXPECT_EQ(sFunctorOb(st, parseOrder("F#G")), parseOrder("F,G"));
}

TEST(Glue, PseudoInverseChoices) {
  GluedScheme g = buildGlued(schemeFixture("double-stack"), "F", "G");
  auto o = parseOrder("F,H,G,K");
  EXPECT_EQ(pseudoInverse(g, o, JChoice::PullLower), parseOrder("F#G,H,K"));
  EXPECT_EQ(pseudoInverse(g, o, JChoice::PushUpper), parseOrder("H,F#G,K"));
  EXPECT_EQ(pseudoInverse(g, o, JChoice::FirstGlued), parseOrder("F#G,H,K"));
  EXPECT_EQ(pseudoInverse(g, parseOrder("H,K,F,G")), parseOrder("H,K,F#G"));
  EXPECT_EQ(toString(JChoice::PushUpper), "push-upper");
}

TEST(Glue, PastedLabelsExpandToTheOriginalWord) {
  struct Case {
    const char *lab, *f, *g;
  };
  for (auto c : {Case{"row2", "F", "G"}, Case{"row3", "G", "F"},
                 Case{"row4", "F", "G"}, Case{"motivating", "alpha1", "alpha2"},
                 Case{"double-stack", "F", "G"}, Case{"double-stack", "H", "K"}}) {
    Labelling lab = labFixture(c.lab);
    std::vector<DeclRef> kept;
    for (const auto &d : lab.decls())
      if (d->kind == ThreeCellDecl::Kind::TwoToOne)
        kept.push_back(d);
    Labelling plain(lab.scheme(), lab.labels(), lab.generators(), kept);
    GluedScheme g = buildGlued(lab.scheme(), c.f, c.g);
    Labelling gl = gluedLabelling(plain, g);
    EXPECT_TRUE(gl.label(g.merged).isPasted());
    for (const auto &o : enumerateOrders(g.glued))
      EXPECT_EQ(evalOrder(gl, o), evalOrder(plain, sFunctorOb(g, o))) << c.lab;
  }
}

TEST(Glue, PasteLabelRejectsMismatchedFactors) {
  ShapeCase row1{1, {}, {}, {"m"}};
  EXPECT_EQ(kindOf([&] {
              pasteLabel(row1, FaceLabel::plain("a"), {{"x"}, {"m"}},
                         FaceLabel::plain("b"), {{"y"}, {"z"}});
            }),
            ErrorKind::ShapeMismatch);
  auto ok = pasteLabel(row1, FaceLabel::plain("a"), {{"x"}, {"m"}},
                       FaceLabel::plain("b"), {{"m"}, {"z"}});
  EXPECT_EQ(ok.parts[0].label.generator, "a");
  EXPECT_EQ(ok.parts[1].label.generator, "b");
}

TEST(Glue, LabelOnMergedFace) {
  Labelling lab = labFixture("stacked-bigons");
  GluedScheme g = buildGlued(lab.scheme(), "F", "G");
  EXPECT_EQ(kindOf([&] { gluedLabelling(lab, g); }),
            ErrorKind::LabelOnMergedFace);
}

TEST(Glue, ModifyAndGlueCommute) {
  for (auto [name, f, g] : {std::tuple{"row2", "F", "G"},
                            std::tuple{"row3", "G", "F"}}) {
    Labelling lab = labFixture(name);
    GluedScheme gl = buildGlued(lab.scheme(), f, g);
    const auto &theta = *lab.decl("Theta");
    EXPECT_EQ(gluedLabelling(lab.modified(theta), gl),
              gluedLabelling(lab, gl).modified(theta));
  }
}

TEST(Glue, DeclarePairChecksBoundary) {
  Labelling lab(schemeFixture("row2"));
  EXPECT_EQ(kindOf([&] {
              declarePair(lab, "Pi", "F", "G", "pi",
                          CellType{{"xy", "yz"}, {"xw"}});
            }),
            ErrorKind::InvalidLabelling);
  auto d = declarePair(lab, "Pi", "F", "G", "pi");
  EXPECT_EQ(d->boundary, (CellType{{"xy", "yz", "zw"}, {"xw"}}));
  Labelling series(schemeFixture("series"));
  EXPECT_EQ(kindOf([&] { declarePair(series, "Pi", "F", "G", "pi"); }),
            ErrorKind::NotCaseB);
}

TEST(Glue, InducedNat2Examples) {
  Labelling st = labFixture("double-stack");
  const auto &pi = *st.decl("Pi");
  GluedScheme g = buildGlued(st.scheme(), "F", "G");
  EXPECT_EQ(toString(inducedNat2(st, g, pi, parseOrder("F,G,H,K")).moves),
            "[Gen3Pair(0,Pi)]");
  auto w = inducedNat2(st, g, pi, parseOrder("F,H,G,K"));
  ASSERT_EQ(w.moves.size(), 2u);
  EXPECT_EQ(w.moves[0].kind, Move::Kind::Swap);
  EXPECT_EQ(w.moves[0].index, 1u);
  EXPECT_EQ(w.moves[1].kind, Move::Kind::Gen3Pair);
  EXPECT_EQ(w.moves[1].index, 0u);

  Labelling bigons = labFixture("stacked-bigons");
  GluedScheme gb = buildGlued(bigons.scheme(), "F", "G");
  EXPECT_EQ(toString(inducedNat2(bigons, gb, *bigons.decl("Pi"),
                                 parseOrder("F,G")).moves),
            "[Gen3Pair(0,Pi)]");
}

TEST(Glue, GluingDisjointPairsCommutes) {
  auto ds = schemeFixture("double-stack");
  GluedScheme fg = buildGlued(ds, "F", "G");
  GluedScheme hk = buildGlued(ds, "H", "K");
  GluedScheme fgHk = buildGlued(fg.glued, "H", "K");
  GluedScheme hkFg = buildGlued(hk.glued, "F", "G");
  EXPECT_EQ(fgHk.glued, hkFg.glued);
  for (const auto &o : enumerateOrders(fgHk.glued))
    EXPECT_EQ(sFunctorOb(fg, sFunctorOb(fgHk, o)),
              sFunctorOb(hk, sFunctorOb(hkFg, o)));
}
