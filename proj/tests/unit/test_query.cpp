#include <thread>

#include <gtest/gtest.h>

#include "mcan/errors.hpp"
#include "mcan/harness.hpp"
#include "mcan/query.hpp"
#include "support.hpp"

using namespace mcan;

namespace {

const char* kTeacherShape = "OPT(A(?x),JOIN(R(?x,?y),R(?y,?z)))";

VarSetFamily bruteMaxWithin(const VarSetFamily& admissible, const VarSet& upper) {
  return admissible.within(upper).maximal();
}

std::vector<VarSet> powerSet(const VarSet& vs) {
  std::vector<Variable> items(vs.begin(), vs.end());
  std::vector<VarSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    VarSet s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.insert(items[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST(ParseQuery, SelectOverPattern) {
  Query q = parseQuery("SELECT{x}( hasLicense(?x,?y) )");
  ASSERT_EQ(q.kind(), QueryKind::Select);
  EXPECT_EQ(q.projection(), VarSet{"x"});
  ASSERT_TRUE(q.body().isTriple());
  EXPECT_EQ(q.body().predicate(), "hasLicense");
  EXPECT_EQ(q.toString(), "SELECT{x}(hasLicense(?x,?y))");
}

TEST(ParseQuery, BarePatternAndConstants) {
  Query q = parseQuery("Driver(?x)");
  EXPECT_TRUE(q.isTriple());
  Query g = parseQuery("teachesTo(Alice, ?y)");
  EXPECT_FALSE(g.args()[0].isVariable());
  EXPECT_EQ(g.args()[0].constant(), Term::individual("Alice"));
  EXPECT_EQ(g.toString(), "teachesTo(Alice,?y)");
}

TEST(ParseQuery, ProjectionMustBeBound) {
  EXPECT_THROW(parseQuery("SELECT{z}( Driver(?x) )"), ParseError);
  EXPECT_THROW(Query::select({"z"}, parseQuery("Driver(?x)")), ShapeError);
}

TEST(ParseQuery, SyntaxErrors) {
  EXPECT_THROW(parseQuery("OPT(A(?x))"), ParseError);
  EXPECT_THROW(parseQuery("A(?x,?y,?z)"), ParseError);
  EXPECT_THROW(parseQuery("JOIN(A(?x),B(?x)) extra"), ParseError);
  EXPECT_THROW(parseQuery("A(?x"), ParseError);
  EXPECT_THROW(parseQuery(""), ParseError);
}

TEST(Vars, Examples) {
  EXPECT_EQ(vars(parseQuery("SELECT{x}(hasLicense(?x,?y))")), VarSet{"x"});
  EXPECT_EQ(vars(parseQuery("OPT(Person(?x),hasLicense(?x,?y))")), (VarSet{"x", "y"}));
  EXPECT_EQ(vars(parseQuery("Driver(Alice)")), VarSet{});
  EXPECT_EQ(allVariables(parseQuery("SELECT{x}(hasLicense(?x,?y))")), (VarSet{"x", "y"}));
}

TEST(Adm, Examples) {
  EXPECT_EQ(adm(parseQuery(kTeacherShape)), (VarSetFamily{{"x"}, {"x", "y", "z"}}));
  EXPECT_EQ(adm(parseQuery("r(?x,?y)")), (VarSetFamily{{"x", "y"}}));
  EXPECT_EQ(adm(parseQuery("UNION(A(?x),R(?x,?y))")), (VarSetFamily{{"x"}, {"x", "y"}}));
  EXPECT_EQ(adm(parseQuery("SELECT{x}(R(?x,?y))")), (VarSetFamily{{"x"}}));
  EXPECT_EQ(adm(parseQuery("JOIN(OPT(A(?x),R(?x,?y)),OPT(B(?z),S(?z,?w)))")),
            (VarSetFamily{{"x", "z"}, {"w", "x", "z"}, {"x", "y", "z"}, {"w", "x", "y", "z"}}));
}

TEST(Branches, OptOverUnion) {
  Query q = parseQuery("OPT(A(?x),UNION(R1(?x,?y),R2(?x,?z)))");
  const auto& bs = branches(q);
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_EQ(bs[0].toString(), "OPT(A(?x),R1(?x,?y))");
  EXPECT_EQ(bs[1].toString(), "OPT(A(?x),R2(?x,?z))");
}

TEST(Branches, UnionFreeQueryIsItsOwnBranch) {
  Query q = parseQuery(kTeacherShape);
  ASSERT_EQ(branches(q).size(), 1u);
  EXPECT_EQ(branches(q)[0], q);
  EXPECT_TRUE(isBranchOf(q, q));
}

TEST(Branches, JoinTakesTheProduct) {
  Query q = parseQuery("JOIN(UNION(A(?x),B(?x)),UNION(C(?y),D(?y)))");
  EXPECT_EQ(branches(q).size(), 4u);
  EXPECT_TRUE(isBranchOf(parseQuery("JOIN(B(?x),C(?y))"), q));
  EXPECT_FALSE(isBranchOf(parseQuery("JOIN(C(?y),B(?x))"), q));
}

TEST(Branches, SelectKeepsOnlyVisibleVariables) {
  Query q = parseQuery("SELECT{x,y}(UNION(A(?x),R(?x,?y)))");
  const auto& bs = branches(q);
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_EQ(bs[0].toString(), "SELECT{x,y}(R(?x,?y))");
  EXPECT_EQ(bs[1].toString(), "SELECT{x}(A(?x))");
}

TEST(Base, Examples) {
  EXPECT_EQ(base(parseQuery("r(?x,?y)")), (VarSetFamily{{"x", "y"}}));
  EXPECT_EQ(base(parseQuery(kTeacherShape)), (VarSetFamily{{"x"}, {"x", "y", "z"}}));
  Query q = parseQuery("OPT(OPT(A(?x),R(?x,?y)),S(?x,?w))");
  VarSetFamily unions;
  const VarSetFamily family = base(q);
  const std::vector<VarSet> members(family.begin(), family.end());
  for (std::size_t mask = 1; mask < (std::size_t{1} << members.size()); ++mask) {
    VarSet u;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (mask & (std::size_t{1} << i)) u = unite(u, members[i]);
    }
    unions.insert(u);
  }
  EXPECT_EQ(unions, adm(q));
  EXPECT_EQ(adm(q), (VarSetFamily{{"x"}, {"x", "y"}, {"w", "x"}, {"w", "x", "y"}}));
}

TEST(Base, RejectsNonJoQueries) {
  EXPECT_THROW(base(parseQuery("UNION(A(?x),B(?x))")), ShapeError);
  EXPECT_THROW(base(parseQuery("SELECT{x}(R(?x,?y))")), ShapeError);
}

TEST(IsAdmissible, TeacherShape) {
  Query q = parseQuery(kTeacherShape);
  EXPECT_FALSE(isAdmissible(q, {"x", "z"}));
  EXPECT_TRUE(isAdmissible(q, {"x"}));
  EXPECT_TRUE(isAdmissible(q, {"x", "y", "z"}));
  EXPECT_FALSE(isAdmissible(q, {}));
  EXPECT_FALSE(isAdmissible(q, {"y", "z"}));
}

TEST(MaxAdmissibleSubsets, TeacherShape) {
  Query q = parseQuery(kTeacherShape);
  EXPECT_EQ(maxAdmissibleSubsets(q, {"x", "z"}), (VarSetFamily{{"x"}}));
  EXPECT_EQ(maxAdmissibleSubsets(q, {"x", "y", "z"}), (VarSetFamily{{"x", "y", "z"}}));
  EXPECT_EQ(maxAdmissibleSubsets(q, {}), VarSetFamily{});
  EXPECT_EQ(maxAdmissibleSubsets(q, {"y", "z"}), VarSetFamily{});
}

TEST(QueryShape, Predicates) {
  EXPECT_TRUE(isJo(parseQuery(kTeacherShape)));
  EXPECT_FALSE(isJo(parseQuery("SELECT{x}(R(?x,?y))")));
  EXPECT_TRUE(isUcqShaped(parseQuery("SELECT{x}(JOIN(Driver(?x),hasLicense(?x,?y)))")));
  EXPECT_TRUE(isUcqShaped(parseQuery("UNION(CarDriver(?x),TruckDriver(?x))")));
  EXPECT_FALSE(isUcqShaped(parseQuery("UNION(A(?x),R(?x,?y))")));
  EXPECT_FALSE(isUcqShaped(parseQuery("OPT(A(?x),R(?x,?y))")));
  EXPECT_EQ(ucqDisjuncts(parseQuery("UNION(UNION(A(?x),B(?x)),C(?x))")).size(), 3u);
  EXPECT_THROW(ucqDisjuncts(parseQuery("OPT(A(?x),R(?x,?y))")), ShapeError);
  EXPECT_EQ(triplePatternCount(parseQuery(kTeacherShape)), 3u);
}

TEST(QueryProperties, RoundTripOnGeneratedQueries) {
  InstanceGenerator gen(5);
  for (int i = 0; i < 300; ++i) {
    Query q = gen.nextQuery();
    ASSERT_EQ(serializeQuery(parseQuery(serializeQuery(q))), serializeQuery(q));
    ASSERT_EQ(parseQuery(q.toString()), q);
  }
}

TEST(QueryProperties, BaseUnionsEqualBruteForceAdm) {
  InstanceGenerator gen(17, [] {
    SizeParams p;
    p.variables = 8;
    return p;
  }());
  for (int i = 0; i < 300; ++i) {
    Query q = gen.nextJoQuery();
    const VarSetFamily brute = bruteForceAdm(q);
    ASSERT_EQ(adm(q), brute) << q.toString();
    ASSERT_EQ(base(q).minimal().size(), 1u) << q.toString();
    for (const VarSet& x : powerSet(vars(q))) {
      ASSERT_EQ(isAdmissible(q, x), brute.contains(x)) << q.toString() << " " << toString(x);
      ASSERT_EQ(maxAdmissibleSubsets(q, x), bruteMaxWithin(brute, x)) << q.toString() << " " << toString(x);
    }
  }
}

TEST(QueryProperties, BranchLaws) {
  InstanceGenerator gen(23);
  for (int i = 0; i < 300; ++i) {
    Query q = gen.nextQuery();
    for (const Query& b : branches(q)) {
      ASSERT_FALSE(containsUnion(b)) << q.toString();
      ASSERT_TRUE(adm(b).isSubsetOf(adm(q))) << q.toString() << " branch " << b.toString();
    }
    if (!containsUnion(q)) ASSERT_EQ(branches(q), std::vector<Query>{q});

    Query other = gen.nextQuery();
    const auto& left = branches(q);
    const auto& right = branches(other);
    std::vector<Query> shared;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(shared));
    if (shared.empty()) {
      ASSERT_EQ(branches(Query::unionOf(q, other)).size(), left.size() + right.size());
    }
  }
}

TEST(QueryProperties, ConcurrentAnalysisIsConsistent) {
  Query q = parseQuery("OPT(OPT(A(?x),UNION(R(?x,?y),S(?x,?y))),JOIN(T(?y,?z),OPT(B(?z),U(?z,?w))))");
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] { results[i] = adm(q).toString() + "|" + std::to_string(branches(q).size()); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, results.front());
}
