#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "modlearn/core.hpp"
#include "modlearn/learners.hpp"

namespace modlearn {

// Every combinator below is a Learner over the composite class that drives
// one sublearner per dimension, acting as each sublearner's oracle. Feeds
// delivered to sublearner i are recorded in sub_feeds()[i] so tests can
// replay them against the honest component oracle.

class CombinatorLearner : public Learner {
 public:
  const std::vector<std::vector<TranscriptEntry>>& sub_feeds() const {
    return sub_feeds_;
  }

 protected:
  std::vector<std::vector<TranscriptEntry>> sub_feeds_;
};

// Learns a product from superset queries (one composite query per round;
// every counterexample coordinate outside its pending sub-query is handed
// to that dimension). Performs the initial empty-superset check only when
// some component class contains the empty concept.
class ProductSupLearner : public CombinatorLearner {
 public:
  explicit ProductSupLearner(std::vector<SublearnerSpec> subs);

  LearnerEvent next() override;
  void feed(const Answer& answer) override;

 private:
  struct Dim {
    SublearnerSpec spec;
    std::unique_ptr<Learner> learner;
    std::optional<ConceptDesc> pending;
    std::optional<ConceptDesc> hypothesis;
  };

  void pump(int i);
  ConceptDesc composite() const;

  std::vector<Dim> dims_;
  bool empty_check_pending_ = false;
  std::optional<ConceptDesc> result_;
};

// Learns a product from equivalence or subset queries plus membership
// queries and one positive example. Negative counterexamples are attributed
// per dimension by substituting each coordinate into the positive example;
// positive
// counterexamples (EQ only) are attributed by membership in the pending
// sub-queries. The positive example is validated with a single membership
// query right before its first use.
class ProductCexMemPosLearner : public CombinatorLearner {
 public:
  ProductCexMemPosLearner(std::vector<SublearnerSpec> subs, Point positive,
                          QueryKind mode);

  LearnerEvent next() override;
  void feed(const Answer& answer) override;

 private:
  struct Dim {
    SublearnerSpec spec;
    std::unique_ptr<Learner> learner;
    std::optional<ConceptDesc> pending;
    std::optional<ConceptDesc> hypothesis;
  };

  enum class Phase { Mode, ValidatePositive, Attribute };

  void pump(int i);
  void deliver(int i, const Answer& answer);
  ConceptDesc composite() const;
  Query attribution_query() const;
  void finish_attribution();

  std::vector<Dim> dims_;
  QueryKind mode_;
  Point positive_;
  bool validated_ = false;
  Phase phase_ = Phase::Mode;
  std::vector<Point> cex_;  // coordinates of the counterexample under attribution
  int attribute_dim_ = 0;
  bool any_attributed_ = false;
  std::optional<ConceptDesc> result_;
};

// Learns a product from membership queries and one positive example by
// simulating each sublearner in sequence; a sub-query M at dimension i is
// answered by Mem(p[i <- M]).
class ProductMemPosLearner : public CombinatorLearner {
 public:
  ProductMemPosLearner(std::vector<SublearnerSpec> subs, Point positive);

  LearnerEvent next() override;
  void feed(const Answer& answer) override;

 private:
  struct Dim {
    SublearnerSpec spec;
    std::unique_ptr<Learner> learner;
    std::optional<ConceptDesc> hypothesis;
  };

  std::vector<Dim> dims_;
  Point positive_;
  bool validated_ = false;
  bool validating_ = false;
  size_t active_ = 0;
  std::optional<ConceptDesc> result_;
};

// Learns a product from membership queries alone: grows per-dimension pools
// along each sublearner's all-negative query sequence (seeded with the
// hard-coded witness when the sequence terminates), queries every uncached
// pool product, and on the first positive delegates to the mem+1Pos learner.
// Already-answered product points are cached, so the session's query count
// is the number of distinct oracle calls.
class ProductMemOnlyLearner : public CombinatorLearner {
 public:
  explicit ProductMemOnlyLearner(std::vector<SublearnerSpec> subs);

  LearnerEvent next() override;
  void feed(const Answer& answer) override;

 private:
  struct Dim {
    SublearnerSpec spec;
    std::vector<Point> allneg_seq;       // the dimension's all-negative queries
    size_t seq_pos = 0;
    std::optional<ConceptDesc> fallback; // N_i when the sequence terminates
    std::vector<Point> pool;             // sorted, unique
    std::vector<Point> last_new;         // points added by the latest round
  };

  void grow_round();
  void refill_queue();
  bool feed_cached_to_delegate();

  std::vector<Dim> dims_;
  bool primed_ = false;
  std::map<Point, bool> cache_;
  std::vector<Point> queue_;
  size_t queue_pos_ = 0;
  std::unique_ptr<ProductMemPosLearner> delegate_;
  std::optional<ConceptDesc> result_;
};

// Algorithm for the prefix class: query c(s) starting from the empty string,
// extend s by the value of a negative counterexample (s, m), jump to s' on a
// positive counterexample (s', m). Works with EQ and Sub queries.
class PrefixEqLearner : public Learner {
 public:
  explicit PrefixEqLearner(QueryKind mode = QueryKind::EQ);

  LearnerEvent next() override;
  void feed(const Answer& answer) override;

 private:
  QueryKind mode_;
  PrefixStr s_;
  std::optional<ConceptDesc> result_;
};

// Learns a disjoint union: composite queries are unions of the pending
// sub-queries; each counterexample carries its dimension tag and is routed
// to that sublearner. Mem mode routes tagged point queries directly.
class DisjointUnionLearner : public CombinatorLearner {
 public:
  DisjointUnionLearner(std::vector<SublearnerSpec> subs, QueryKind mode);

  LearnerEvent next() override;
  void feed(const Answer& answer) override;

 private:
  struct Dim {
    SublearnerSpec spec;
    std::unique_ptr<Learner> learner;
    std::optional<ConceptDesc> pending;
    std::optional<ConceptDesc> hypothesis;
  };

  void pump(int i);
  ConceptDesc composite() const;

  std::vector<Dim> dims_;
  QueryKind mode_;
  size_t active_ = 0;  // Mem mode: dimension currently simulated
  std::optional<ConceptDesc> result_;
};

SessionResult learn_product_sup(const std::vector<SublearnerSpec>& subs,
                                Oracle& oracle, long long budget = kDefaultBudget);

SessionResult learn_product_cex_mem_pos(const std::vector<SublearnerSpec>& subs,
                                        Oracle& oracle, const Point& positive,
                                        QueryKind mode,
                                        long long budget = kDefaultBudget);

SessionResult learn_product_mem_pos(const std::vector<SublearnerSpec>& subs,
                                    Oracle& oracle, const Point& positive,
                                    long long budget = kDefaultBudget);

SessionResult learn_product_mem_only(const std::vector<SublearnerSpec>& subs,
                                     Oracle& oracle,
                                     long long budget = kDefaultBudget);

SessionResult learn_prefix_eq(Oracle& oracle, QueryKind mode = QueryKind::EQ,
                              long long budget = kDefaultBudget);

SessionResult learn_disjoint_union(const std::vector<SublearnerSpec>& subs,
                                   Oracle& oracle, QueryKind mode,
                                   long long budget = kDefaultBudget);

}  // namespace modlearn
