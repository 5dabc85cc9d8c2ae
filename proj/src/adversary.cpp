#include "modlearn/adversary.hpp"

#include <algorithm>
#include <sstream>

namespace modlearn {

long long consistent_count(const ClassId& cls,
                           const std::vector<TranscriptEntry>& transcript) {
  long long n = 0;
  for (const auto& c : enumerate_concepts(cls)) {
    bool ok = true;
    std::set<Point> issued;  // grows as Pos answers are replayed
    for (const auto& entry : transcript) {
      if (!answer_is_valid(cls, c, entry.query, entry.answer, &issued)) {
        ok = false;
        break;
      }
      if (entry.answer.kind() == Answer::Kind::Positive &&
          entry.query.kind == QueryKind::Pos) {
        issued.insert(entry.answer.point());
      }
    }
    if (ok) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Positive-query adversary

AdversarialPosOracle::AdversarialPosOracle(int universe)
    : cls_(ClassId::pair_demo(universe)), universe_(universe) {}

Answer AdversarialPosOracle::answer(const Query& query) {
  if (query.kind != QueryKind::Pos) {
    throw Error(ErrorCode::UnsupportedQuery, "this adversary answers Pos queries only");
  }
  if (issued_ >= universe_) {
    throw Error(ErrorCode::UniverseExhausted,
                "no fresh points left in {a} x [0,U)");
  }
  // Fresh points drawn from {a} x [0,U) only; 'b' never appears.
  Point p = Point::vec({Point::integer(0), Point::integer(issued_)});
  ++issued_;
  return Answer::positive(p);
}

// ---------------------------------------------------------------------------
// Singleton-product adversary

AdversarialSingletonOracle::AdversarialSingletonOracle(int m, int k) {
  if (m < 0 || k < 1) throw Error(ErrorCode::Config, "need m >= 0 and k >= 1");
  std::vector<ClassId> parts(k, ClassId::singletons(m));
  cls_ = ClassId::product(std::move(parts));
  for (const auto& x : enumerate_universe(cls_)) candidates_.insert(x);
}

Point AdversarialSingletonOracle::survivor() const {
  return *candidates_.rbegin();
}

void AdversarialSingletonOracle::eliminate(const Point& p) {
  if (candidates_.size() > 1) candidates_.erase(p);
  if (candidates_.size() == 1) committed_ = true;
}

Answer AdversarialSingletonOracle::answer(const Query& query) {
  // Once a single candidate remains the oracle is pinned and answers like
  // the honest oracle for that target.
  auto target_of = [&](const Point& p) {
    std::vector<ConceptDesc> parts;
    for (const auto& c : p.coords_or_self(cls_.arity())) {
      parts.push_back(ConceptDesc::singleton(c.value()));
    }
    return ConceptDesc::product(std::move(parts));
  };
  switch (query.kind) {
    case QueryKind::Mem: {
      if (!query.point) throw Error(ErrorCode::UniverseMismatch, "Mem needs a point");
      validate_point(cls_, *query.point);
      if (committed_) {
        return *query.point == survivor() ? Answer::yes() : Answer::no();
      }
      eliminate(*query.point);
      return Answer::no();
    }
    case QueryKind::Sub:
    case QueryKind::EQ: {
      if (!query.concept_) throw Error(ErrorCode::UniverseMismatch, "needs a concept");
      validate_concept(cls_, *query.concept_);
      auto w = witness(cls_, *query.concept_);
      if (!w) throw Error(ErrorCode::UniverseMismatch, "queries are product singletons");
      if (committed_) {
        std::set<Point> unused;
        return honest_answer(target_of(survivor()), cls_, query, unused);
      }
      // The queried singleton's own point refutes it for every other target.
      eliminate(*w);
      return Answer::counterexample(*w);
    }
    default:
      throw Error(ErrorCode::UnsupportedQuery,
                  "this adversary answers Mem, Sub and EQ queries");
  }
}

// ---------------------------------------------------------------------------
// Fresh values

FreshValueSource::FreshValueSource(int bound) : bound_(bound) {
  if (bound < 2) throw Error(ErrorCode::Config, "fresh-value bound too small");
}

int FreshValueSource::take() {
  while (seen_.count(next_)) ++next_;
  if (next_ >= bound_) {
    throw Error(ErrorCode::FreshValuesExhausted,
                "fresh values exhausted; raise the universe bound");
  }
  seen_.insert(next_);
  return next_++;
}

void FreshValueSource::observe(int value) { seen_.insert(value); }

// ---------------------------------------------------------------------------
// Prefix-product adversary and justifiability accounting

int string_length_sum(const std::vector<PrefixStr>& concept_strings) {
  int sum = 0;
  for (const auto& s : concept_strings) sum += static_cast<int>(s.size());
  return sum;
}

PrefixAdversaryOracle::PrefixAdversaryOracle(int k, int fresh_bound)
    : k_(k), fresh_(fresh_bound) {
  if (k < 1) throw Error(ErrorCode::Config, "need k >= 1");
  log_.justifiable.insert(std::vector<PrefixStr>(k));  // the all-lambda concept
}

Answer PrefixAdversaryOracle::answer(const Query& query) {
  if ((query.kind != QueryKind::Sub && query.kind != QueryKind::EQ) ||
      !query.concept_) {
    throw Error(ErrorCode::UnsupportedQuery, "this adversary answers Sub/EQ queries");
  }
  std::vector<PrefixStr> strings;
  for (const auto& part : query.concept_->parts_or_self(k_)) {
    if (part.kind() != ConceptDesc::Kind::Prefix) {
      throw Error(ErrorCode::UniverseMismatch, "queries are products of prefix concepts");
    }
    strings.push_back(part.prefix_str());
  }
  if (auto it = log_.answered.find(strings); it != log_.answered.end()) {
    return Answer::counterexample(Point::vec(it->second));
  }
  for (const auto& s : strings) {
    for (int sym : s) fresh_.observe(sym);
  }
  // One fresh value per coordinate, in dimension order.
  std::vector<Point> coords;
  std::vector<int> values;
  for (int i = 0; i < k_; ++i) {
    int a = fresh_.take();
    values.push_back(a);
    coords.push_back(Point::pair(strings[i], a));
  }
  log_.answered.emplace(strings, coords);
  if (log_.justifiable.count(strings)) {
    log_.justifiably_queried.insert(strings);
    // The counterexample justifies the k one-symbol extensions.
    for (int i = 0; i < k_; ++i) {
      std::vector<PrefixStr> extended = strings;
      extended[i].push_back(values[i]);
      log_.justifiable.insert(std::move(extended));
    }
  }
  return Answer::counterexample(Point::vec(std::move(coords)));
}

long long count_justifiable(const JustifiabilityLog& log, int level) {
  for (const auto& c : log.justifiable) {
    int sum = string_length_sum(c);
    if (sum < level && !log.answered.count(c)) {
      throw Error(ErrorCode::PreconditionUnmet,
                  "a justifiable concept below the requested level is unqueried");
    }
  }
  long long n = 0;
  for (const auto& c : log.justifiable) {
    if (string_length_sum(c) == level) ++n;
  }
  return n;
}

std::vector<std::vector<PrefixStr>> unqueried_justifiable(const JustifiabilityLog& log,
                                                          int max_level) {
  std::vector<std::vector<PrefixStr>> out;
  for (const auto& c : log.justifiable) {
    if (string_length_sum(c) <= max_level && !log.answered.count(c)) {
      out.push_back(c);
    }
  }
  return out;
}

bool consistent_with_log(const std::vector<PrefixStr>& candidate,
                         const JustifiabilityLog& log) {
  int k = static_cast<int>(candidate.size());
  for (const auto& [queried, cex] : log.answered) {
    // The counterexample must lie in the queried concept but not in the
    // candidate; by construction cex[i] = (queried[i], a_i) is always in
    // the queried concept.
    bool in_candidate = true;
    for (int i = 0; i < k && in_candidate; ++i) {
      in_candidate = prefix_contains(candidate[i], cex[i].prefix(), cex[i].value());
    }
    if (in_candidate) return false;
  }
  return true;
}

std::vector<std::vector<PrefixStr>> drive_breadth_first(PrefixAdversaryOracle& oracle,
                                                        int max_level) {
  std::vector<std::vector<PrefixStr>> queried;
  std::vector<std::vector<PrefixStr>> queue = {
      std::vector<PrefixStr>(oracle.k())};
  size_t pos = 0;
  while (pos < queue.size()) {
    std::vector<PrefixStr> concept_strings = queue[pos++];
    if (string_length_sum(concept_strings) >= max_level) continue;
    std::vector<ConceptDesc> parts;
    for (const auto& s : concept_strings) parts.push_back(ConceptDesc::prefix(s));
    Answer a = oracle.answer(Query::sub(ConceptDesc::product(std::move(parts))));
    queried.push_back(concept_strings);
    auto coords = a.point().coords_or_self(oracle.k());
    // Spawn the k justified extensions in dimension order (FIFO keeps the
    // traversal level by level).
    for (int i = 0; i < oracle.k(); ++i) {
      std::vector<PrefixStr> extended = concept_strings;
      extended[i].push_back(static_cast<int>(coords[i].value()));
      queue.push_back(std::move(extended));
    }
  }
  return queried;
}

std::optional<std::vector<PrefixStr>> exhibit_consistent_candidate(
    const std::vector<std::vector<PrefixStr>>& queried_order,
    const JustifiabilityLog& full_log, size_t n, int max_level) {
  int k = queried_order.empty()
              ? 0
              : static_cast<int>(queried_order.front().size());
  if (k == 0) return std::nullopt;
  // Rebuild the justifiability state after the first n answers.
  JustifiabilityLog prefix_log;
  prefix_log.justifiable.insert(std::vector<PrefixStr>(k));
  for (size_t q = 0; q < n && q < queried_order.size(); ++q) {
    const auto& strings = queried_order[q];
    auto it = full_log.answered.find(strings);
    if (it == full_log.answered.end()) {
      throw Error(ErrorCode::Internal, "query missing from the adversary log");
    }
    prefix_log.answered.emplace(strings, it->second);
    if (prefix_log.justifiable.count(strings)) {
      prefix_log.justifiably_queried.insert(strings);
      for (int i = 0; i < k; ++i) {
        std::vector<PrefixStr> extended = strings;
        extended[i].push_back(static_cast<int>(it->second[i].value()));
        prefix_log.justifiable.insert(std::move(extended));
      }
    }
  }
  for (const auto& candidate : unqueried_justifiable(prefix_log, max_level)) {
    if (consistent_with_log(candidate, prefix_log)) return candidate;
  }
  return std::nullopt;
}

namespace {

std::string render_prefix_concept(const std::vector<PrefixStr>& strings) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < strings.size(); ++i) {
    if (i > 0) out << ",";
    out << "c(\"" << prefix_str_to_string(strings[i]) << "\")";
  }
  out << ")";
  return out.str();
}

std::string render_cex(const std::vector<Point>& cex) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < cex.size(); ++i) {
    if (i > 0) out << ",";
    out << "(\"" << prefix_str_to_string(cex[i].prefix()) << "\"," << cex[i].value()
        << ")";
  }
  out << ")";
  return out.str();
}

void render_node(const JustifiabilityLog& log, const std::vector<PrefixStr>& node,
                 int k, int depth, std::ostringstream& out) {
  out << std::string(static_cast<size_t>(depth) * 2, ' ');
  out << "JQ " << render_prefix_concept(node);
  auto it = log.answered.find(node);
  if (it == log.answered.end()) {
    out << "\n";
    return;
  }
  out << " CE " << render_cex(it->second) << "\n";
  if (!log.justifiably_queried.count(node)) return;
  for (int i = 0; i < k; ++i) {
    std::vector<PrefixStr> child = node;
    child[i].push_back(static_cast<int>(it->second[i].value()));
    render_node(log, child, k, depth + 1, out);
  }
}

}  // namespace

std::string render_justifiability_tree(const JustifiabilityLog& log, int k) {
  std::ostringstream out;
  render_node(log, std::vector<PrefixStr>(k), k, 0, out);
  return out.str();
}

}  // namespace modlearn
