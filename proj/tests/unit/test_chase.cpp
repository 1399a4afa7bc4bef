#include <functional>
#include <map>

#include <gtest/gtest.h>

#include "mcan/chase.hpp"
#include "mcan/errors.hpp"
#include "mcan/harness.hpp"
#include "support.hpp"

using namespace mcan;
using mcan::testing::fixtureKb;
using mcan::testing::fixtureQuery;

namespace {

Graph graphOf(const char* facts) { return Graph::fromAbox(parseKb(std::string("ABOX: ") + facts)); }

Term anon(const char* name) { return Term::anonymous(name); }
Term ind(const char* name) { return Term::individual(name); }

// Backtracking search for a map of anonymous terms into `model` that fixes
// individuals and sends every atom of `source` to an atom of `model`.
bool homomorphismExists(const Graph& source, const Graph& model) {
  std::map<Term, Term> assignment;
  const auto& atoms = source.atoms();
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == atoms.size()) return true;
    const Atom& atom = atoms[i];
    for (const Atom& target : model.atoms()) {
      if (target.predicate != atom.predicate || target.args.size() != atom.args.size()) continue;
      std::vector<Term> bound;
      bool ok = true;
      for (std::size_t k = 0; k < atom.args.size() && ok; ++k) {
        const Term& from = atom.args[k];
        if (from.isIndividual()) {
          ok = from == target.args[k];
        } else if (auto it = assignment.find(from); it != assignment.end()) {
          ok = it->second == target.args[k];
        } else {
          assignment.emplace(from, target.args[k]);
          bound.push_back(from);
        }
      }
      if (ok && extend(i + 1)) return true;
      for (const Term& t : bound) assignment.erase(t);
    }
    return false;
  };
  return extend(0);
}

}  // namespace

TEST(Saturate, ExistentialOnlyAddsReflexiveEntries) {
  SaturatedTBox sat = saturate(fixtureKb("ex1").tbox());
  const BasicConcept driver = BasicConcept::atomic("Driver");
  const BasicConcept hasLicense = BasicConcept::exists({"hasLicense", false});
  EXPECT_EQ(sat.conceptClosure.at(driver), (std::set<BasicConcept>{driver, hasLicense}));
  EXPECT_EQ(sat.conceptClosure.at(hasLicense), std::set<BasicConcept>{hasLicense});
  EXPECT_EQ(sat.superRoles({"hasLicense", false}), (std::set<RoleExpr>{{"hasLicense", false}}));
  EXPECT_TRUE(sat.disjoint.empty());
}

TEST(Saturate, RoleInclusionWithInverse) {
  SaturatedTBox sat = saturate(parseKb("TBOX: teachesTo [= inv(hasTeacher) . ABOX:").tbox());
  const auto existsTeaches = BasicConcept::exists({"teachesTo", false});
  const auto existsTeachesInv = BasicConcept::exists({"teachesTo", true});
  EXPECT_TRUE(sat.conceptClosure.at(existsTeaches).count(BasicConcept::exists({"hasTeacher", true})));
  EXPECT_TRUE(sat.conceptClosure.at(existsTeachesInv).count(BasicConcept::exists({"hasTeacher", false})));
  EXPECT_EQ(sat.superRoles({"teachesTo", true}), (std::set<RoleExpr>{{"teachesTo", true}, {"hasTeacher", false}}));
}

TEST(Saturate, EmptyTBoxIsIdentity) {
  SaturatedTBox sat = saturate({});
  EXPECT_TRUE(sat.conceptClosure.empty());
  EXPECT_TRUE(sat.roleClosure.empty());
  EXPECT_EQ(sat.entailed({BasicConcept::atomic("A")}), std::set<BasicConcept>{BasicConcept::atomic("A")});
}

TEST(Saturate, DisjointnessPropagatesDownwards) {
  SaturatedTBox sat = saturate(parseKb("TBOX: A [= B . B [= not C . r [= s . exists s [= C . ABOX:").tbox());
  EXPECT_TRUE(sat.clashes({BasicConcept::atomic("A"), BasicConcept::exists({"r", false})}));
  EXPECT_FALSE(sat.clashes({BasicConcept::atomic("A")}));
}

TEST(Chase, DriverExampleAtBoundOne) {
  ChaseGraph can = chase(fixtureKb("ex1"), 1);
  EXPECT_EQ(can.graph, Graph({Atom::conceptAtom("Driver", ind("Alice")),
                              Atom::roleAtom("hasLicense", ind("Alice"), anon("_:Alice|hasLicense"))}));
  EXPECT_EQ(can.depthOf.at(anon("_:Alice|hasLicense")), 1);
  EXPECT_EQ(can.bound, 1);
  EXPECT_EQ(can.activeDomain, TermSet{ind("Alice")});
}

TEST(Chase, TeacherExampleAtBoundOne) {
  ChaseGraph can = chase(fixtureKb("ex7"), 1);
  EXPECT_EQ(can.graph, Graph({Atom::conceptAtom("Teacher", ind("Alice")),
                              Atom::roleAtom("teachesTo", ind("Alice"), anon("_:Alice|teachesTo")),
                              Atom::roleAtom("hasTeacher", anon("_:Alice|teachesTo"), ind("Alice"))}));
}

TEST(Chase, EmptyTBoxLeavesTheAbox) {
  KnowledgeBase kb = fixtureKb("ex3");
  ChaseGraph can = chase(kb, 5);
  EXPECT_EQ(can.graph, Graph::fromAbox(kb));
  EXPECT_TRUE(can.depthOf.empty());
}

TEST(Chase, BoundZeroSaturatesIndividuals) {
  ChaseGraph can = chase(parseKb("TBOX: r [= s . exists r [= A . ABOX: r(a,b) ."), 0);
  EXPECT_EQ(can.graph, graphOf("r(a,b) . s(a,b) . A(a) ."));
}

TEST(Chase, WitnessChainsThroughInverses) {
  KnowledgeBase kb = parseKb("TBOX: A [= exists r . exists inv(r) [= exists s . ABOX: A(c) .");
  ChaseGraph can = chase(kb, 3);
  EXPECT_EQ(can.graph, Graph({Atom::conceptAtom("A", ind("c")), Atom::roleAtom("r", ind("c"), anon("_:c|r")),
                              Atom::roleAtom("s", anon("_:c|r"), anon("_:c|r|s"))}));
  EXPECT_EQ(can.depthOf.at(anon("_:c|r|s")), 2);
}

TEST(Chase, ExistingSuccessorBlocksWitness) {
  ChaseGraph can = chase(parseKb("TBOX: A [= exists r . ABOX: A(c) . r(c,d) ."), 4);
  EXPECT_TRUE(can.depthOf.empty());
}

TEST(Chase, SubRoleSatisfiesSuperRoleExistential) {
  ChaseGraph can = chase(parseKb("TBOX: A [= exists r . A [= exists s . r [= s . ABOX: A(c) ."), 2);
  EXPECT_EQ(can.graph, Graph({Atom::conceptAtom("A", ind("c")), Atom::roleAtom("r", ind("c"), anon("_:c|r")),
                              Atom::roleAtom("s", ind("c"), anon("_:c|r"))}));
}

TEST(Chase, RejectsUnsatisfiableKb) {
  EXPECT_THROW(chase(parseKb("TBOX: A [= not B . ABOX: A(c) . B(c) ."), 2), UnsatisfiableKbError);
}

TEST(DefaultBound, Examples) {
  EXPECT_EQ(defaultBound(fixtureKb("ex1"), fixtureQuery("ex1")), 4);
  EXPECT_EQ(defaultBound(fixtureKb("ex7"), fixtureQuery("ex7")), 8);
  EXPECT_EQ(defaultBound(fixtureKb("ex3"), fixtureQuery("ex3")), 3);
}

TEST(EntailedAbox, Examples) {
  EXPECT_EQ(entailedAbox(fixtureKb("ex7")), graphOf("Teacher(Alice) ."));
  KnowledgeBase plain = fixtureKb("ex3");
  EXPECT_EQ(entailedAbox(plain), Graph::fromAbox(plain));
  Graph entailed = entailedAbox(parseKb("TBOX: r [= s . ABOX: r(a,b) ."));
  EXPECT_TRUE(entailed.contains(Atom::roleAtom("r", ind("a"), ind("b"))));
  EXPECT_TRUE(entailed.contains(Atom::roleAtom("s", ind("a"), ind("b"))));
}

TEST(IsSatisfiable, Examples) {
  EXPECT_TRUE(isSatisfiable(fixtureKb("ex7")));
  EXPECT_FALSE(isSatisfiable(parseKb("TBOX: A [= not B . ABOX: A(c) . B(c) .")));
  EXPECT_FALSE(isSatisfiable(parseKb("TBOX: A [= exists r . exists inv(r) [= B . B [= not C . "
                                     "exists inv(r) [= C . ABOX: A(c) .")));
  EXPECT_FALSE(isSatisfiable(parseKb("TBOX: A [= exists r . exists inv(r) [= exists s . exists inv(s) [= B . "
                                     "B [= not C . exists inv(s) [= C . ABOX: A(c) .")));
  EXPECT_TRUE(isSatisfiable(parseKb("TBOX: A [= not B . A [= exists r . exists inv(r) [= B . ABOX: A(c) .")));
}

TEST(Chase, HomomorphismIntoHandBuiltModels) {
  EXPECT_TRUE(homomorphismExists(chase(fixtureKb("ex1"), 4).graph,
                                 graphOf("Driver(Alice) . hasLicense(Alice,L1) .")));
  EXPECT_TRUE(homomorphismExists(chase(fixtureKb("ex7"), 8).graph,
                                 graphOf("Teacher(Alice) . teachesTo(Alice,Bob) . hasTeacher(Bob,Alice) .")));
  EXPECT_TRUE(homomorphismExists(chase(fixtureKb("ex7"), 8).graph,
                                 graphOf("Teacher(Alice) . teachesTo(Alice,Alice) . hasTeacher(Alice,Alice) .")));
  EXPECT_FALSE(homomorphismExists(chase(fixtureKb("ex7"), 8).graph, graphOf("Teacher(Alice) . teachesTo(Alice,Bob) .")));
}

TEST(ChaseProperties, GeneratedKbs) {
  InstanceGenerator gen(53);
  for (int i = 0; i < 200; ++i) {
    Instance inst = gen.next();
    const int bound = defaultBound(inst.kb, inst.query);
    ChaseGraph can = chase(inst.kb, bound);
    ChaseGraph again = chase(inst.kb, bound);
    ASSERT_EQ(can.graph, again.graph) << inst.id;

    SaturatedTBox sat = saturate(inst.kb.tbox());
    ASSERT_EQ(saturate(closureAxioms(sat)), sat) << inst.id;

    Graph individualPart = can.individualPart();
    for (const Atom& atom : inst.kb.abox()) ASSERT_TRUE(individualPart.contains(atom)) << inst.id;
    ASSERT_EQ(individualPart, entailedAbox(inst.kb)) << inst.id;

    std::map<std::pair<Term, std::string>, int> witnessesPerRole;
    for (const auto& [term, depth] : can.depthOf) {
      const std::string& name = term.name();
      ASSERT_EQ(static_cast<int>(std::count(name.begin(), name.end(), '|')), depth) << name;
      ASSERT_LE(depth, bound);
      ASSERT_GE(depth, 1);
      const auto cut = name.rfind('|');
      const std::string parent = name.substr(0, cut);
      const Term parentTerm = depth == 1 ? Term::individual(parent.substr(2)) : Term::anonymous(parent);
      ASSERT_TRUE(depth == 1 || can.depthOf.count(parentTerm)) << name;
      ASSERT_EQ(++witnessesPerRole[std::make_pair(parentTerm, name.substr(cut + 1))], 1) << name;
    }
  }
}
