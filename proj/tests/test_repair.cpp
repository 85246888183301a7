#include <random>

#include "doctest.h"

#include "dbmend/classical.hpp"
#include "dbmend/errors.hpp"
#include "dbmend/grounding.hpp"
#include "dbmend/repair.hpp"

#include "support/builders.hpp"
#include "support/random_gen.hpp"

using namespace dbmend;
using namespace dbmend::testing;

TEST_CASE("merging the teacher databases collapses the shared constraint") {
  const Database merged = merge({teachers_db1(), teachers_db2()});
  CHECK(merged.instance.size() == 3);
  CHECK(merged.constraints.size() == 1);
  CHECK_FALSE(is_consistent(merged));
}

TEST_CASE("merging a single consistent database is the identity") {
  CHECK(merge({teachers_db1()}) == teachers_db1());
}

TEST_CASE("merging the p/q databases keeps four facts and one constraint") {
  const Database merged = merge({pq_db1(), pq_db2()});
  CHECK(merged.instance ==
        std::set<GroundAtom>{ga("p", {"a"}), ga("p", {"b"}), ga("q", {"a"}), ga("q", {"c"})});
  CHECK(merged.constraints.size() == 1);
}

TEST_CASE("merge rejects arity clashes") {
  const Database one = mkdb({ga("p", {"a"})});
  const Database other = mkdb({ga("p", {"a", "b"})});
  CHECK_THROWS_AS(merge({one, other}), SchemaMismatchError);
}

TEST_CASE("merge rejects unsatisfiable combined constraints") {
  const Database one = mkdb({ga("p")}, {implication({eq("a", "a")}, {pat("p")})});
  const Database other = mkdb({}, {denial({pat("p")})});
  CHECK(is_consistent(one));
  CHECK(is_consistent(other));
  CHECK_THROWS_AS(merge({one, other}), IcConflictError);
}

TEST_CASE("merge is associative and commutative up to set equality") {
  std::mt19937 rng(21);
  for (int i = 0; i < 20; ++i) {
    const Database a = random_database(rng);
    const Database b = random_database(rng);
    const Database c = random_database(rng);
    CHECK(merge({a, b}) == merge({b, a}));
    CHECK(merge({merge({a, b}), c}) == merge({a, merge({b, c})}));
  }
}

TEST_CASE("repair validity on the merged teachers database") {
  const Database db = merge({teachers_db1(), teachers_db2()});
  CHECK(is_repair(db, Repair{{}, {ga("teaches", {"c2", "n2"})}}));
  CHECK_FALSE(is_repair(db, Repair{}));
  CHECK_FALSE(is_repair(db, Repair{{ga("teaches", {"c2", "n3"})}, {}}));  // insert overlaps
}

TEST_CASE("applying repairs reproduces the published repaired instances") {
  const Database teachers = merge({teachers_db1(), teachers_db2()});
  const Database r2 = apply_repair(teachers, Repair{{}, {ga("teaches", {"c2", "n2"})}});
  CHECK(r2.instance ==
        std::set<GroundAtom>{ga("teaches", {"c1", "n1"}), ga("teaches", {"c2", "n3"})});
  CHECK(is_consistent(r2));

  const Database pq = merge({pq_db1(), pq_db2()});
  const Database r1 = apply_repair(pq, Repair{{ga("q", {"b"})}, {}});
  CHECK(r1.instance == std::set<GroundAtom>{ga("p", {"a"}), ga("p", {"b"}), ga("q", {"a"}),
                                            ga("q", {"b"}), ga("q", {"c"})});

  CHECK(apply_repair(teachers_db1(), Repair{}) == teachers_db1());
}

TEST_CASE("apply_repair rejects non-repairs") {
  const Database db = merge({teachers_db1(), teachers_db2()});
  CHECK_THROWS_AS(apply_repair(db, Repair{}), InvalidRepairError);
}

TEST_CASE("strict dominance between repairs") {
  const Repair remove_p{{}, {ga("p")}};
  const Repair remove_pq{{}, {ga("p"), ga("q")}};
  const Repair add_q{{ga("q")}, {}};
  const Repair remove_pr{{}, {ga("p"), ga("r")}};

  CHECK(strictly_better(PreferenceCriterion::inclusion, remove_p, remove_pq));
  CHECK_FALSE(strictly_better(PreferenceCriterion::inclusion, remove_p, add_q));
  CHECK_FALSE(strictly_better(PreferenceCriterion::inclusion, remove_p, remove_p));
  CHECK(strictly_better(PreferenceCriterion::cardinality, add_q, remove_pr));
  CHECK_FALSE(strictly_better(PreferenceCriterion::cardinality, remove_p, add_q));
}

TEST_CASE("a classical model induces a repair") {
  const Database db = small_pr_db();
  const UniversePtr u = make_universe(candidate_universe(db));

  const Repair grow = repair_from_model2(db, TwoValuation(u, {true, true, true}));
  CHECK(grow == Repair{{ga("q")}, {}});

  const Repair shrink = repair_from_model2(db, TwoValuation(u, {false, false, true}));
  CHECK(shrink == Repair{{}, {ga("p")}});

  const Database consistent = teachers_db1();
  const TwoValuation h =
      minimal_herbrand(consistent.instance, candidate_universe(consistent));
  CHECK(repair_from_model2(consistent, h) == Repair{});
}

TEST_CASE("repair_from_model2 rejects non-models") {
  const Database db = small_pr_db();
  const UniversePtr u = make_universe(candidate_universe(db));
  CHECK_THROWS_AS(repair_from_model2(db, TwoValuation(u, {true, false, true})), NotAModelError);
}

TEST_CASE("a repair induces the classical model of its repaired instance") {
  const Database teachers = merge({teachers_db1(), teachers_db2()});
  const TwoValuation m = model2_from_repair(teachers, Repair{{}, {ga("teaches", {"c2", "n2"})}});
  CHECK(m.true_set() ==
        std::set<GroundAtom>{ga("teaches", {"c1", "n1"}), ga("teaches", {"c2", "n3"})});

  const Database consistent = teachers_db1();
  CHECK(model2_from_repair(consistent, Repair{}) ==
        minimal_herbrand(consistent.instance, candidate_universe(consistent)));

  const Database pq = merge({pq_db1(), pq_db2()});
  const TwoValuation r1 = model2_from_repair(pq, Repair{{ga("q", {"b"})}, {}});
  CHECK(r1.true_set() == std::set<GroundAtom>{ga("p", {"a"}), ga("p", {"b"}), ga("q", {"a"}),
                                              ga("q", {"b"}), ga("q", {"c"})});

  CHECK_THROWS_AS(model2_from_repair(pq, Repair{{ga("q", {"b"})}, {ga("q", {"b"})}}),
                  InvalidRepairError);
}

TEST_CASE("two-valued round trips") {
  std::mt19937 rng(22);
  for (int i = 0; i < 20; ++i) {
    const Database db = random_database(rng);
    const auto clauses = ground_theory(db);
    const UniversePtr u = make_universe(candidate_universe(db));
    for (const TwoValuation& m : classical_models(clauses, u)) {
      const Repair r = repair_from_model2(db, m);
      CHECK(is_repair(db, r));
      CHECK(model2_from_repair(db, r) == m);
      CHECK(repair_from_model2(db, model2_from_repair(db, r)) == r);
    }
  }
}

TEST_CASE("brute force on the merged p/q database") {
  const Database db = merge({pq_db1(), pq_db2()});
  const auto repairs = brute_force_preferred(db, PreferenceCriterion::inclusion);
  REQUIRE(repairs.size() == 2);
  CHECK(repairs[0] == Repair{{}, {ga("p", {"b"})}});
  CHECK(repairs[1] == Repair{{ga("q", {"b"})}, {}});
}

TEST_CASE("brute force on a propositional denial") {
  const Database db = mkdb({ga("p"), ga("q"), ga("r")}, {denial({pat("p")})});
  const auto repairs = brute_force_preferred(db, PreferenceCriterion::inclusion);
  CHECK(repairs == std::vector<Repair>{Repair{{}, {ga("p")}}});
  CHECK(brute_force_preferred(db, PreferenceCriterion::cardinality) == repairs);
}

TEST_CASE("brute force on a vacuously consistent database") {
  const Database db = mkdb({}, {implication({pat("p")}, {pat("q")})});
  CHECK(brute_force_preferred(db, PreferenceCriterion::inclusion) ==
        std::vector<Repair>{Repair{}});
}

TEST_CASE("the oracle refuses universes above its bound") {
  const Database db = merge({teachers_db1(), teachers_db2()});
  REQUIRE(candidate_universe(db).size() == 25);
  CHECK_THROWS_AS(brute_force_preferred(db, PreferenceCriterion::inclusion), OracleBoundError);
}

TEST_CASE("repaired databases of the examples") {
  const Database teachers = merge({teachers_db1(), teachers_db2()});
  const auto repaired = repaired_databases(teachers, PreferenceCriterion::inclusion);
  REQUIRE(repaired.size() == 2);
  CHECK(repaired[0].instance ==
        std::set<GroundAtom>{ga("teaches", {"c1", "n1"}), ga("teaches", {"c2", "n2"})});
  CHECK(repaired[1].instance ==
        std::set<GroundAtom>{ga("teaches", {"c1", "n1"}), ga("teaches", {"c2", "n3"})});
  for (const Database& r : repaired) {
    CHECK(r.constraints == teachers.constraints);
    CHECK(is_consistent(r));
  }

  const Database pq = merge({pq_db1(), pq_db2()});
  const auto pq_repaired = repaired_databases(pq, PreferenceCriterion::inclusion);
  REQUIRE(pq_repaired.size() == 2);
  // Database order is lexicographic on instances, so the grown instance
  // (p(b) before q(a)) sorts first.
  CHECK(pq_repaired[0].instance ==
        std::set<GroundAtom>{ga("p", {"a"}), ga("p", {"b"}), ga("q", {"a"}), ga("q", {"b"}),
                             ga("q", {"c"})});
  CHECK(pq_repaired[1].instance ==
        std::set<GroundAtom>{ga("p", {"a"}), ga("q", {"a"}), ga("q", {"c"})});

  CHECK(repaired_databases(teachers_db1(), PreferenceCriterion::inclusion) ==
        std::vector<Database>{teachers_db1()});
}
