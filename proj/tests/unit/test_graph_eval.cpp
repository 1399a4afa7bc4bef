#include <gtest/gtest.h>

#include "mcan/chase.hpp"
#include "mcan/errors.hpp"
#include "mcan/graph.hpp"
#include "mcan/harness.hpp"
#include "support.hpp"

using namespace mcan;
using mcan::testing::fixtureKb;
using mcan::testing::fixtureQuery;
using mcan::testing::mappings;

namespace {

Graph graphOf(const char* abox) { return Graph::fromAbox(parseKb(std::string("ABOX: ") + abox)); }

// An instance where an answer to the whole query comes from neither branch:
// the inner OPT keeps d(a,k1) via e and d(a,k2) via f, so neither side of the
// UNION alone removes the compatible left mapping.
const char* kUncoveredQuery = "OPT(JOIN(g1(?x,?y),g2(?x,?z)),OPT(d(?x,?u),UNION(e(?u,?y),f(?u,?z))))";
const char* kUncoveredAbox = "g1(a,e9) . g2(a,f9) . d(a,k1) . d(a,k2) . e(k1,e1) . f(k2,f1) .";

}  // namespace

TEST(Graph, IndexesAndDeduplicates) {
  Graph g = graphOf("r(a,b) . r(a,c) . A(a) . r(b,c) .");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.withPredicate("r").size(), 3u);
  EXPECT_EQ(g.withArgument("r", 0, Term::individual("a")).size(), 2u);
  EXPECT_EQ(g.withArgument("r", 1, Term::individual("c")).size(), 2u);
  EXPECT_TRUE(g.withPredicate("s").empty());
  EXPECT_TRUE(g.contains(Atom::roleAtom("r", Term::individual("b"), Term::individual("c"))));
  EXPECT_EQ(g.terms().size(), 3u);
  EXPECT_EQ(g.toString(), "A(a) .\nr(a,b) .\nr(a,c) .\nr(b,c) .\n");
  EXPECT_EQ(Graph(std::vector<Atom>(2, g.atoms()[0])).size(), 1u);
}

TEST(MatchPattern, ConstantsAndRepeatedVariables) {
  Graph g = graphOf("r(a,a) . r(a,b) . r(b,a) .");
  EXPECT_EQ(matchPattern(parseQuery("r(?x,?x)"), g), mappings({{{"x", "a"}}}));
  EXPECT_EQ(matchPattern(parseQuery("r(a,?y)"), g), mappings({{{"y", "a"}}, {{"y", "b"}}}));
  EXPECT_EQ(matchPattern(parseQuery("r(b,a)"), g), MappingSet::unit());
  EXPECT_EQ(matchPattern(parseQuery("r(b,b)"), g), MappingSet{});
}

TEST(SparqlAns, PersonExample) {
  Query q = fixtureQuery("ex2");
  EXPECT_EQ(sparqlAns(q, Graph::fromAbox(fixtureKb("ex2"))), mappings({{{"x", "Alice"}}}));
  EXPECT_EQ(sparqlAns(q, Graph::fromAbox(fixtureKb("ex2b"))), mappings({{{"x", "Alice"}, {"y", "12345"}}}));
}

TEST(SparqlAns, TeachesToExample) {
  EXPECT_EQ(sparqlAns(fixtureQuery("ex3"), Graph::fromAbox(fixtureKb("ex3"))),
            mappings({{{"x", "Alice"}, {"z", "Carol"}}, {{"x", "Alice"}}}));
}

TEST(SparqlAnsBranch, Examples) {
  Query q = parseQuery("UNION(A(?x),r(?x,?y))");
  Graph g = graphOf("A(a) . r(a,b) .");
  EXPECT_EQ(sparqlAnsBranch(q, g, parseQuery("A(?x)")), mappings({{{"x", "a"}}}));
  Query u = fixtureQuery("ex3");
  Graph g3 = Graph::fromAbox(fixtureKb("ex3"));
  EXPECT_EQ(sparqlAnsBranch(u, g3, u), sparqlAns(u, g3));
  EXPECT_EQ(sparqlAnsBranch(q, Graph{}, parseQuery("A(?x)")), MappingSet{});
  EXPECT_THROW(sparqlAnsBranch(q, g, parseQuery("B(?x)")), ShapeError);
}

TEST(EAns, Examples) {
  EXPECT_EQ(eAns(fixtureQuery("ex2"), Graph::fromAbox(fixtureKb("ex2"))), mappings({{}, {{"x", "Alice"}}}));
  EXPECT_EQ(eAns(fixtureQuery("ex2"), Graph{}), MappingSet{});
  MappingSet closed = eAns(fixtureQuery("ex3"), Graph::fromAbox(fixtureKb("ex3")));
  EXPECT_TRUE(closed.contains(SolutionMapping{}));
  EXPECT_EQ(closed.size(), 4u);
}

TEST(GraphEvalProperties, AnswerDomainsAreAdmissible) {
  InstanceGenerator gen(31);
  for (int i = 0; i < 300; ++i) {
    Instance inst = gen.next();
    const VarSetFamily admissible = adm(inst.query);
    for (const Graph& g : {Graph::fromAbox(inst.kb), chase(inst.kb, 3).graph}) {
      for (const SolutionMapping& m : sparqlAns(inst.query, g)) {
        ASSERT_TRUE(admissible.contains(m.domain())) << inst.id << " " << inst.query.toString() << " " << m.toString();
      }
    }
  }
}

TEST(GraphEvalProperties, UcqAnswersMatchHomomorphismOracle) {
  InstanceGenerator gen(37);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Instance inst = gen.next();
    if (!isUcqShaped(inst.query)) continue;
    ++checked;
    for (const Graph& g : {Graph::fromAbox(inst.kb), chase(inst.kb, 3).graph}) {
      ASSERT_EQ(sparqlAns(inst.query, g), bruteForceCqMatches(inst.query, g)) << inst.id << " " << inst.query.toString();
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(GraphEvalProperties, OptExtensionOnPlainGraphs) {
  InstanceGenerator gen(41);
  for (int i = 0; i < 300; ++i) {
    Instance inst = gen.next();
    Query right = gen.nextQuery();
    Graph g = Graph::fromAbox(inst.kb);
    ASSERT_TRUE(setExtends(sparqlAns(inst.query, g), sparqlAns(Query::opt(inst.query, right), g)))
        << inst.id << " " << inst.query.toString() << " OPT " << right.toString();
  }
}

TEST(GraphEvalProperties, GeneratedAnswersComeFromSomeBranch) {
  InstanceGenerator gen(43);
  for (int i = 0; i < 300; ++i) {
    Instance inst = gen.next();
    Graph g = Graph::fromAbox(inst.kb);
    MappingSet covered;
    for (const Query& b : branches(inst.query)) covered = setUnion(covered, sparqlAns(b, g));
    ASSERT_TRUE(isSubsetOf(sparqlAns(inst.query, g), covered)) << inst.id << " " << inst.query.toString();
  }
}

// Branch coverage does not hold in general once a UNION sits under the
// right operand of a nested OPT. This pins the smallest instance found.
TEST(GraphEvalProperties, BranchCoverageCounterexample) {
  Query q = parseQuery(kUncoveredQuery);
  Graph g = graphOf(kUncoveredAbox);
  const MappingSet answers = sparqlAns(q, g);
  EXPECT_EQ(answers, mappings({{{"x", "a"}, {"y", "e9"}, {"z", "f9"}}}));
  ASSERT_EQ(branches(q).size(), 2u);
  for (const Query& b : branches(q)) {
    EXPECT_FALSE(isSubsetOf(answers, sparqlAns(b, g))) << b.toString();
    EXPECT_TRUE(sparqlAnsBranch(q, g, b).empty()) << b.toString();
  }
}
