#include <random>

#include "doctest.h"

#include "dbmend/classical.hpp"
#include "dbmend/errors.hpp"
#include "dbmend/grounding.hpp"
#include "dbmend/repair.hpp"
#include "dbmend/trivalent.hpp"

#include "support/builders.hpp"
#include "support/random_gen.hpp"

using namespace dbmend;
using namespace dbmend::testing;

namespace {

ThreeValuation val3(const UniversePtr& universe, std::vector<Three> values) {
  return ThreeValuation(universe, std::move(values));
}

}  // namespace

TEST_CASE("three-valued evaluation of an implication with a conflicting premise") {
  const UniversePtr u = make_universe({ga("p"), ga("q")});
  const Formula imp = Formula::implies(Formula::atom(ga("p")), Formula::atom(ga("q")));
  CHECK(eval3(val3(u, {Three::both, Three::f}), imp) == Three::both);
  CHECK(eval3(val3(u, {Three::t, Three::t}),
              Formula::conj(Formula::atom(ga("p")), Formula::atom(ga("q")))) == Three::t);
  CHECK(eval3(val3(u, {Three::f, Three::f}), Formula::neg(Formula::atom(ga("p")))) == Three::t);
}

TEST_CASE("satisfaction means a designated value") {
  const UniversePtr u = make_universe({ga("p")});
  CHECK(satisfies3(val3(u, {Three::both}), Formula::atom(ga("p"))));
  CHECK_FALSE(satisfies3(val3(u, {Three::f}), Formula::atom(ga("p"))));
}

TEST_CASE("a conflicted consequent still yields a three-valued model") {
  const UniversePtr u = make_universe({ga("p"), ga("q"), ga("r")});
  const ThreeValuation n1 = val3(u, {Three::t, Three::both, Three::t});
  const std::vector<Formula> theory{
      Formula::atom(ga("p")),
      Formula::atom(ga("r")),
      Formula::implies(Formula::atom(ga("p")), Formula::atom(ga("q"))),
  };
  CHECK(is_model3(n1, theory));
}

TEST_CASE("knowledge join of Herbrand and classical models") {
  const UniversePtr u = make_universe({ga("p"), ga("q"), ga("r")});
  const TwoValuation h(u, {true, false, true});

  const ThreeValuation n1 = knowledge_join(h, TwoValuation(u, {true, true, true}));
  CHECK(n1 == val3(u, {Three::t, Three::both, Three::t}));

  const ThreeValuation joined_self = knowledge_join(h, h);
  CHECK(joined_self == embed3(h));

  const ThreeValuation n2 = knowledge_join(h, TwoValuation(u, {false, false, true}));
  CHECK(n2 == val3(u, {Three::both, Three::f, Three::t}));
}

TEST_CASE("knowledge join requires one universe") {
  const TwoValuation a(make_universe({ga("p")}), {true});
  const TwoValuation b(make_universe({ga("q")}), {true});
  CHECK_THROWS_AS(knowledge_join(a, b), UniverseMismatchError);
}

TEST_CASE("insert and retract components of a valuation") {
  const UniversePtr u = make_universe({ga("p"), ga("q"), ga("r")});
  const std::set<GroundAtom> instance{ga("p"), ga("r")};

  const ThreeValuation n1 = val3(u, {Three::t, Three::both, Three::t});
  CHECK(insert_of(n1, instance) == std::set<GroundAtom>{ga("q")});
  CHECK(retract_of(n1, instance).empty());

  const ThreeValuation n2 = val3(u, {Three::both, Three::f, Three::t});
  CHECK(insert_of(n2, instance).empty());
  CHECK(retract_of(n2, instance) == std::set<GroundAtom>{ga("p")});

  const ThreeValuation clean = val3(u, {Three::t, Three::f, Three::t});
  CHECK(insert_of(clean, instance).empty());
  CHECK(retract_of(clean, instance).empty());
}

TEST_CASE("membership in the dominating-model set") {
  const Database db = small_pr_db();
  const UniversePtr u = make_universe(candidate_universe(db));
  REQUIRE(u->size() == 3);  // p, q, r

  // Any valuation with q conflicted and p, r at least as known as true.
  CHECK(in_mdb(val3(u, {Three::t, Three::both, Three::t}), db));
  CHECK(in_mdb(val3(u, {Three::both, Three::both, Three::t}), db));
  CHECK(in_mdb(val3(u, {Three::t, Three::both, Three::both}), db));

  // The bare Herbrand embedding of an inconsistent database is not a member.
  const TwoValuation h = minimal_herbrand(db.instance, u);
  CHECK_FALSE(in_mdb(embed3(h), db));

  // The all-conflict valuation dominates everything.
  CHECK(in_mdb(val3(u, {Three::both, Three::both, Three::both}), db));

  // Disagreeing with the Herbrand model on a clean atom is fatal.
  CHECK_FALSE(in_mdb(val3(u, {Three::f, Three::both, Three::t}), db));
}

TEST_CASE("maximally consistent models of the propositional example") {
  const Database db = small_pr_db();
  const UniversePtr u = make_universe(candidate_universe(db));
  const auto models = maximally_consistent(db, PreferenceCriterion::inclusion);
  REQUIRE(models.size() == 2);
  // Sorted by top set: {p} before {q}.
  CHECK(models[0] == val3(u, {Three::both, Three::f, Three::t}));
  CHECK(models[1] == val3(u, {Three::t, Three::both, Three::t}));

  CHECK(maximally_consistent(db, PreferenceCriterion::cardinality) == models);
}

TEST_CASE("maximally consistent models of the merged p/q database") {
  const Database db = merge({pq_db1(), pq_db2()});
  const auto models = maximally_consistent(db, PreferenceCriterion::inclusion);
  REQUIRE(models.size() == 2);
  CHECK(models[0].top_set() == std::set<GroundAtom>{ga("p", {"b"})});
  CHECK(models[1].top_set() == std::set<GroundAtom>{ga("q", {"b"})});
  for (const auto& m : models) {
    CHECK(m.at(ga("p", {"a"})) == Three::t);
    CHECK(m.at(ga("p", {"c"})) == Three::f);
    CHECK(m.at(ga("q", {"a"})) == Three::t);
    CHECK(m.at(ga("q", {"c"})) == Three::t);
  }
}

TEST_CASE("a consistent database has one maximally consistent model") {
  const Database db = teachers_db1();
  const auto models = maximally_consistent(db, PreferenceCriterion::inclusion);
  REQUIRE(models.size() == 1);
  CHECK(models[0].top_set().empty());
  CHECK(models[0] == embed3(minimal_herbrand(db.instance, candidate_universe(db))));
}

TEST_CASE("maximally consistent models require satisfiable constraints") {
  const Database db = mkdb({}, {implication({eq("a", "a")}, {pat("p")}), denial({pat("p")})});
  CHECK_THROWS_AS(maximally_consistent(db, PreferenceCriterion::inclusion), NoModelError);
}

TEST_CASE("a repair maps to the three-valued model that encodes it") {
  const Database db = small_pr_db();
  const Repair r{{ga("q")}, {}};
  const ThreeValuation n = repair_to_model3(db, r);
  CHECK(n.at(ga("p")) == Three::t);
  CHECK(n.at(ga("q")) == Three::both);
  CHECK(n.at(ga("r")) == Three::t);
  CHECK(insert_of(n, db.instance) == r.insert);
  CHECK(retract_of(n, db.instance) == r.retract);
}

TEST_CASE("the empty repair of a consistent database embeds its Herbrand model") {
  const Database db = teachers_db1();
  const ThreeValuation n = repair_to_model3(db, Repair{});
  CHECK(n == embed3(minimal_herbrand(db.instance, candidate_universe(db))));
}

TEST_CASE("repairing the p/q database marks exactly the retracted fact") {
  const Database db = merge({pq_db1(), pq_db2()});
  const ThreeValuation n = repair_to_model3(db, Repair{{}, {ga("p", {"b"})}});
  CHECK(n.top_set() == std::set<GroundAtom>{ga("p", {"b"})});
}

TEST_CASE("repair_to_model3 rejects non-repairs") {
  const Database db = small_pr_db();
  CHECK_THROWS_AS(repair_to_model3(db, Repair{{}, {}}), InvalidRepairError);
  CHECK_THROWS_AS(repair_to_model3(db, Repair{{ga("p")}, {}}), InvalidRepairError);
}

TEST_CASE("the encoded model satisfies the database and its constraints") {
  std::mt19937 rng(16);
  for (int i = 0; i < 20; ++i) {
    const Database db = random_database(rng);
    for (const Repair& r : brute_force_preferred(db, PreferenceCriterion::inclusion)) {
      const ThreeValuation n = repair_to_model3(db, r);
      for (const GroundAtom& fact : db.instance) {
        CHECK(satisfies3(n, Formula::atom(fact)));
      }
      std::vector<GroundClause> clauses = ground_theory(db);
      CHECK(is_model3(n, clauses));
      CHECK(insert_of(n, db.instance) == r.insert);
      CHECK(retract_of(n, db.instance) == r.retract);
    }
  }
}

TEST_CASE("knowledge-monotone evaluation") {
  std::mt19937 rng(17);
  const UniversePtr u = make_universe({ga("p"), ga("q"), ga("r"), ga("s")});
  const std::vector<GroundAtom> atoms(u->atoms());
  for (int i = 0; i < 300; ++i) {
    const auto [low, high] = random_kle_pair(rng, u);
    const Formula f = random_ground_formula(rng, atoms, 5);
    CHECK(leq_know(eval3(low, f), eval3(high, f)));
  }
}

TEST_CASE("a model stays a model under knowledge increase") {
  std::mt19937 rng(18);
  const UniversePtr u = make_universe({ga("p"), ga("q"), ga("r"), ga("s")});
  const std::vector<GroundAtom> atoms(u->atoms());
  for (int i = 0; i < 200; ++i) {
    const auto [low, high] = random_kle_pair(rng, u);
    const Formula f = random_ground_formula(rng, atoms, 4);
    if (satisfies3(low, f)) {
      CHECK(satisfies3(high, f));
    }
  }
}

TEST_CASE("three-valued evaluation restricted to two values is classical") {
  std::mt19937 rng(19);
  const UniversePtr u = make_universe({ga("p"), ga("q"), ga("r"), ga("s")});
  const std::vector<GroundAtom> atoms(u->atoms());
  for (int i = 0; i < 200; ++i) {
    std::vector<bool> bits(u->size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
      bits[k] = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    }
    const TwoValuation two(u, bits);
    const Formula f = random_ground_formula(rng, atoms, 5);
    CHECK(eval3(embed3(two), f) == three_of(evaluate2(two, f)));
  }
}
