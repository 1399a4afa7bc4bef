#include <gtest/gtest.h>

#include "mcan/errors.hpp"
#include "mcan/harness.hpp"
#include "mcan/kb.hpp"
#include "support.hpp"

using namespace mcan;
using mcan::testing::fixtureKb;
using mcan::testing::individuals;

TEST(Term, EqualityIsByKindAndName) {
  EXPECT_EQ(Term::individual("Alice"), Term::individual("Alice"));
  EXPECT_NE(Term::individual("Alice"), Term::individual("Bob"));
  EXPECT_TRUE(Term::anonymous("_:Alice|r").isAnonymous());
  EXPECT_EQ(Term::fromString("_:Alice|r"), Term::anonymous("_:Alice|r"));
  EXPECT_EQ(Term::fromString("12345"), Term::individual("12345"));
}

TEST(Term, RejectsMalformedNames) {
  EXPECT_THROW(Term::individual("_x"), std::invalid_argument);
  EXPECT_THROW(Term::individual(""), std::invalid_argument);
  EXPECT_THROW(Term::individual("a-b"), std::invalid_argument);
  EXPECT_THROW(Term::anonymous("Alice"), std::invalid_argument);
}

TEST(ParseKb, DriverExample) {
  KnowledgeBase kb = parseKb("TBOX: Driver [= exists hasLicense . ABOX: Driver(Alice) .");
  ASSERT_EQ(kb.tbox().size(), 1u);
  const auto& ci = std::get<ConceptInclusion>(*kb.tbox().begin());
  EXPECT_EQ(ci.lhs, BasicConcept::atomic("Driver"));
  EXPECT_EQ(ci.rhs, BasicConcept::exists(RoleExpr{"hasLicense", false}));
  EXPECT_EQ(kb.abox(), (std::set<Atom>{Atom::conceptAtom("Driver", Term::individual("Alice"))}));
}

TEST(ParseKb, EmptySections) {
  KnowledgeBase kb = parseKb("TBOX: ABOX:");
  EXPECT_TRUE(kb.tbox().empty());
  EXPECT_TRUE(kb.abox().empty());
  EXPECT_TRUE(activeDomain(kb).empty());
  EXPECT_EQ(parseKb("ABOX:"), kb);
}

TEST(ParseKb, ArityMismatchIsAnError) {
  EXPECT_THROW(parseKb("ABOX: Driver(Alice, Bob) ."), ParseError);
  EXPECT_THROW(parseKb("ABOX: hasLicense(Alice) ."), ParseError);
}

TEST(ParseKb, ReservedVocabularyIsRejected) {
  EXPECT_THROW(parseKb("TBOX: Driver [= exists type . ABOX:"), ParseError);
  EXPECT_THROW(parseKb("TBOX: Thing [= Driver . ABOX:"), ParseError);
}

TEST(ParseKb, ErrorsCarryPositions) {
  try {
    parseKb("ABOX:\n  A(c)\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);
  }
  try {
    parseKb("TBOX: Driver [= exists type .");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 24u);
  }
}

TEST(ParseKb, UnsupportedAxiomForms) {
  EXPECT_THROW(parseKb("TBOX: r [= not s . ABOX:"), ParseError);
  EXPECT_THROW(parseKb("TBOX: A [= not A . ABOX:"), ParseError);
  EXPECT_THROW(parseKb("TBOX: A [= r . ABOX:"), ParseError);
  EXPECT_THROW(parseKb("ABOX: A(_:x) ."), ParseError);
}

TEST(ParseKb, CommentsAndInverseRoles) {
  KnowledgeBase kb = parseKb(
      "# teachers\nTBOX:\nTeacher [= exists teachesTo . # inline\nteachesTo [= inv(hasTeacher) .\n"
      "exists inv(hasTeacher) [= not Student .\nABOX:\nTeacher(Alice) .\n");
  EXPECT_EQ(kb.tbox().size(), 3u);
  EXPECT_TRUE(kb.tbox().count(TBoxAxiom{RoleInclusion{{"teachesTo", false}, {"hasTeacher", true}}}));
  EXPECT_TRUE(kb.tbox().count(
      TBoxAxiom{ConceptDisjointness{BasicConcept::exists({"hasTeacher", true}), BasicConcept::atomic("Student")}}));
}

TEST(ActiveDomain, Examples) {
  EXPECT_EQ(activeDomain(fixtureKb("ex1")), individuals({"Alice"}));
  EXPECT_EQ(activeDomain(fixtureKb("ex3")), individuals({"Alice", "Bob", "Carol", "Dan"}));
  EXPECT_EQ(activeDomain(KnowledgeBase{}), TermSet{});
}

TEST(SerializeKb, CanonicalText) {
  EXPECT_EQ(serializeKb(KnowledgeBase{}), "TBOX:\nABOX:\n");
  EXPECT_EQ(serializeKb(fixtureKb("ex1")), "TBOX:\nDriver [= exists hasLicense .\nABOX:\nDriver(Alice) .\n");
  EXPECT_EQ(serializeKb(parseKb("ABOX: r(b,a) . A(z) . r(a,b) .")), "TBOX:\nABOX:\nA(z) .\nr(a,b) .\nr(b,a) .\n");
}

TEST(SerializeKb, RoundTripsTeacherExample) {
  KnowledgeBase kb = fixtureKb("ex7");
  EXPECT_EQ(parseKb(serializeKb(kb)), kb);
}

TEST(KnowledgeBase, RejectsAnonymousAboxTerms) {
  std::set<Atom> abox{Atom::conceptAtom("A", Term::anonymous("_:w"))};
  EXPECT_THROW(KnowledgeBase({}, abox), std::invalid_argument);
}

TEST(KnowledgeBase, NamesAndTBoxRemoval) {
  KnowledgeBase kb = fixtureKb("ex7");
  EXPECT_EQ(conceptNames(kb), (std::set<std::string>{"Teacher"}));
  EXPECT_EQ(roleNames(kb), (std::set<std::string>{"hasTeacher", "teachesTo"}));
  EXPECT_TRUE(kb.withoutTBox().tbox().empty());
  EXPECT_EQ(kb.withoutTBox().abox(), kb.abox());
}

TEST(KbProperties, GeneratedKbsRoundTripAndActiveDomainIsMonotone) {
  InstanceGenerator gen(101);
  for (int i = 0; i < 200; ++i) {
    Instance inst = gen.next();
    const KnowledgeBase& kb = inst.kb;
    ASSERT_EQ(parseKb(serializeKb(kb)), kb) << inst.id;
    for (const Atom& atom : kb.abox()) {
      for (const Term& t : atom.args) ASSERT_TRUE(t.isIndividual()) << inst.id;
    }
    const TermSet before = activeDomain(kb);
    std::set<Atom> grown = kb.abox();
    grown.insert(Atom::roleAtom("fresh", Term::individual("n1"), Term::individual("n2")));
    std::set<TBoxAxiom> tbox = kb.tbox();
    tbox.insert(ConceptInclusion{BasicConcept::atomic("Fresh"), BasicConcept::exists({"fresh", false})});
    const TermSet after = activeDomain(KnowledgeBase(tbox, grown));
    ASSERT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end())) << inst.id;
  }
}
