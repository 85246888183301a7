#include "dbmend/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "dbmend/classical.hpp"
#include "dbmend/errors.hpp"
#include "dbmend/grounding.hpp"
#include "dbmend/repair.hpp"
#include "dbmend/universe.hpp"

namespace dbmend {

namespace {

// Fixed-width bit set sized to the candidate universe; holds a flip set.
class Mask {
 public:
  explicit Mask(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool subset_of(const Mask& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct IndexedClause {
  std::vector<std::size_t> body;
  std::vector<std::size_t> head;
  std::size_t last = 0;  // maximum atom index; the clause is decided there
};

// State of one branch-and-bound run over assignments of the candidate
// universe. Atoms are decided in lexicographic order, keeping the stored
// value first, so flip sets are visited in lexicographic order of their
// characteristic vectors: every subset is reached before its supersets.
class Search {
 public:
  Search(std::size_t n,
         std::vector<bool> herbrand,
         std::vector<IndexedClause> clauses,
         PreferenceCriterion criterion,
         const SearchLimits& limits)
      : n_(n),
        herbrand_(std::move(herbrand)),
        criterion_(criterion),
        limits_(limits),
        assignment_(n, false),
        flips_(n),
        by_last_(n),
        in_body_(n, false),
        in_head_(n, false) {
    clauses_ = std::move(clauses);
    for (const IndexedClause& c : clauses_) {
      by_last_[c.last].push_back(&c);
      for (const std::size_t i : c.body) {
        in_body_[i] = true;
      }
      for (const std::size_t i : c.head) {
        in_head_[i] = true;
      }
    }
  }

  void run() {
    if (n_ == 0) {
      record();
      return;
    }
    decide(0, 0);
  }

  std::vector<Mask>&& solutions() && { return std::move(solutions_); }
  bool complete() const { return complete_; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool out_of_budget() {
    if (++nodes_ > limits_.node_budget) {
      complete_ = false;
      return true;
    }
    return false;
  }

  // True while the search should continue.
  bool decide(std::size_t depth, std::size_t flip_count) {
    for (const bool flip : {false, true}) {
      if (out_of_budget()) {
        return false;
      }
      if (flip) {
        // A minimal repair never inserts an atom outside every clause
        // head, nor retracts one outside every clause body: undoing such
        // a flip leaves every clause satisfied and shrinks the repair.
        const bool useful = herbrand_[depth] ? in_body_[depth] : in_head_[depth];
        if (!useful) {
          continue;
        }
        if (criterion_ == PreferenceCriterion::cardinality && flip_count + 1 > best_) {
          continue;
        }
        flips_.set(depth);
      }
      assignment_[depth] = herbrand_[depth] != flip;

      bool viable = !(flip && criterion_ == PreferenceCriterion::inclusion && dominated());
      if (viable) {
        for (const IndexedClause* clause : by_last_[depth]) {
          if (violated(*clause)) {
            viable = false;
            break;
          }
        }
      }
      if (viable) {
        if (depth + 1 == n_) {
          if (!record_leaf(flip_count + (flip ? 1 : 0))) {
            return false;
          }
        } else if (!decide(depth + 1, flip_count + (flip ? 1 : 0))) {
          return false;
        }
      }
      if (flip) {
        flips_.reset(depth);
      }
    }
    return true;
  }

  bool violated(const IndexedClause& clause) const {
    for (const std::size_t b : clause.body) {
      if (!assignment_[b]) {
        return false;
      }
    }
    for (const std::size_t h : clause.head) {
      if (assignment_[h]) {
        return false;
      }
    }
    return true;
  }

  bool dominated() const {
    for (const Mask& solution : solutions_) {
      if (solution.subset_of(flips_)) {
        return true;
      }
    }
    return false;
  }

  bool record_leaf(std::size_t flip_count) {
    if (criterion_ == PreferenceCriterion::inclusion) {
      if (dominated()) {
        return true;
      }
    } else {
      if (flip_count > best_) {
        return true;
      }
      if (flip_count < best_) {
        best_ = flip_count;
        solutions_.clear();
      }
    }
    record();
    if (limits_.max_solutions > 0 && solutions_.size() >= limits_.max_solutions) {
      complete_ = false;
      return false;
    }
    return true;
  }

  void record() { solutions_.push_back(flips_); }

  std::size_t n_;
  std::vector<bool> herbrand_;
  PreferenceCriterion criterion_;
  SearchLimits limits_;

  std::vector<bool> assignment_;
  Mask flips_;
  std::vector<IndexedClause> clauses_;
  std::vector<std::vector<const IndexedClause*>> by_last_;
  std::vector<bool> in_body_;
  std::vector<bool> in_head_;

  std::vector<Mask> solutions_;
  std::size_t best_ = SIZE_MAX;
  bool complete_ = true;
  std::size_t nodes_ = 0;
};

}  // namespace

RepairSearchResult preferred_repairs(const Database& db,
                                     PreferenceCriterion criterion,
                                     const SearchLimits& limits) {
  const std::set<GroundAtom> atoms = candidate_universe(db);
  const UniversePtr universe = make_universe(atoms);
  const std::size_t n = universe->size();
  const std::vector<GroundClause> clauses = ground_theory(db);

  if (!satisfiable(clauses, universe)) {
    throw NoRepairError("no repair possible: constraints are unsatisfiable");
  }

  std::vector<bool> herbrand(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    herbrand[i] = db.instance.contains(universe->atom(i));
  }

  std::vector<IndexedClause> indexed;
  indexed.reserve(clauses.size());
  for (const GroundClause& clause : clauses) {
    IndexedClause ic;
    for (const GroundAtom& b : clause.body) {
      ic.body.push_back(*universe->index_of(b));
    }
    for (const GroundAtom& h : clause.head) {
      ic.head.push_back(*universe->index_of(h));
    }
    ic.last = 0;
    for (const std::size_t i : ic.body) {
      ic.last = std::max(ic.last, i);
    }
    for (const std::size_t i : ic.head) {
      ic.last = std::max(ic.last, i);
    }
    indexed.push_back(std::move(ic));
  }

  Search search(n, herbrand, std::move(indexed), criterion, limits);
  search.run();

  RepairSearchResult result;
  result.complete = search.complete();
  result.nodes = search.nodes();

  // Rebuild repairs from flip sets and validate each against the full
  // repair contract before emitting.
  for (const Mask& mask : std::move(search).solutions()) {
    Repair r;
    for (std::size_t i = 0; i < n; ++i) {
      if (!mask.test(i)) {
        continue;
      }
      const GroundAtom& atom = universe->atom(i);
      if (herbrand[i]) {
        r.retract.insert(atom);
      } else {
        r.insert.insert(atom);
      }
    }
    if (is_repair(db, r)) {
      result.repairs.push_back(std::move(r));
    }
  }
  sort_repairs(result.repairs);
  return result;
}

}  // namespace dbmend
