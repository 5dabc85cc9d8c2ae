#include "modlearn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "modlearn/adversary.hpp"
#include "modlearn/combinators.hpp"
#include "modlearn/core.hpp"
#include "modlearn/learners.hpp"
#include "modlearn/pac.hpp"

namespace modlearn {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::Config, what);
}

ConceptDesc random_concept(const ClassId& cls, std::mt19937_64& rng) {
  auto pick = [&rng](long long n) {
    return static_cast<long long>(rng() % static_cast<uint64_t>(n));
  };
  switch (cls.kind()) {
    case ClassId::Kind::Singletons:
      return ConceptDesc::singleton(pick(cls.m() + 1));
    case ClassId::Kind::Intervals: {
      long long lo = pick(cls.universe());
      long long hi = lo + pick(cls.universe() - lo);
      return ConceptDesc::interval(lo, hi);
    }
    case ClassId::Kind::FiniteSets: {
      std::vector<long long> elems;
      for (int v = 0; v < cls.universe(); ++v) {
        if (rng() & 1) elems.push_back(v);
      }
      return ConceptDesc::finite_set(std::move(elems));
    }
    case ClassId::Kind::PairDemoLeft:
      return pick(2) == 0 ? ConceptDesc::finite_set({0})
                          : ConceptDesc::finite_set({0, 1});
    case ClassId::Kind::PairDemoRight:
      return pick(2) == 0 ? ConceptDesc::interval(0, cls.universe() - 1)
                          : ConceptDesc::interval(-cls.universe(), -1);
    case ClassId::Kind::PrefixClass: {
      PrefixStr s;
      long long len = pick(cls.max_len() + 1);
      for (long long i = 0; i < len; ++i) {
        s.push_back(static_cast<int>(pick(cls.universe())));
      }
      return ConceptDesc::prefix(std::move(s));
    }
    case ClassId::Kind::Product:
    case ClassId::Kind::Union: {
      std::vector<ConceptDesc> parts;
      for (const auto& part : cls.parts()) parts.push_back(random_concept(part, rng));
      return cls.kind() == ClassId::Kind::Product
                 ? ConceptDesc::product(std::move(parts))
                 : ConceptDesc::union_of(std::move(parts));
    }
  }
  config_error("cannot sample a concept of " + cls.to_string());
}

ordered_json stats_to_json(const QueryStats& stats) {
  ordered_json counts = ordered_json::object();
  for (int i = 0; i < kQueryKindCount; ++i) {
    counts[to_string(static_cast<QueryKind>(i))] = stats.counts[i];
  }
  return ordered_json{{"total", stats.total}, {"counts", counts}};
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

// ---------------------------------------------------------------------------
// learn

std::vector<SublearnerSpec> component_subs(const ClassId& cls, QueryKind kind) {
  std::vector<SublearnerSpec> subs;
  for (const auto& part : cls.parts()) subs.push_back(make_sublearner(part, kind));
  return subs;
}

Report run_learn(const ExperimentConfig& cfg) {
  if (cfg.class_spec.empty()) config_error("learn needs --class");
  if (cfg.target_spec.empty()) config_error("learn needs --target");
  if (cfg.mode.empty()) config_error("learn needs --mode");
  ClassId cls = parse_class(cfg.class_spec);
  ConceptDesc target = parse_concept(cls, cfg.target_spec);
  HonestOracle oracle(cls, target);

  SessionResult result;
  if (cls.kind() == ClassId::Kind::Product) {
    if (cfg.mode == "sup") {
      result = learn_product_sup(component_subs(cls, QueryKind::Sup), oracle, cfg.budget);
    } else if (cfg.mode == "eq" || cfg.mode == "sub") {
      auto p = witness(cls, target);
      if (!p) config_error("the target is empty; only sup mode can learn it");
      QueryKind mode = cfg.mode == "eq" ? QueryKind::EQ : QueryKind::Sub;
      result = learn_product_cex_mem_pos(component_subs(cls, mode), oracle, *p, mode,
                                         cfg.budget);
    } else if (cfg.mode == "mem") {
      result = learn_product_mem_only(component_subs(cls, QueryKind::Mem), oracle,
                                      cfg.budget);
    } else if (cfg.mode == "mem1pos") {
      auto p = witness(cls, target);
      if (!p) config_error("the target is empty; only sup mode can learn it");
      result = learn_product_mem_pos(component_subs(cls, QueryKind::Mem), oracle, *p,
                                     cfg.budget);
    } else {
      config_error("product modes: sup, sub, eq, mem, mem1pos");
    }
  } else if (cls.kind() == ClassId::Kind::Union) {
    auto mode = query_kind_from_string(cfg.mode);
    if (!mode) config_error("unknown mode " + cfg.mode);
    result = learn_disjoint_union(component_subs(cls, *mode), oracle, *mode, cfg.budget);
  } else if (cls.kind() == ClassId::Kind::PrefixClass &&
             (cfg.mode == "eq" || cfg.mode == "sub")) {
    result = learn_prefix_eq(oracle,
                             cfg.mode == "eq" ? QueryKind::EQ : QueryKind::Sub,
                             cfg.budget);
  } else {
    auto mode = query_kind_from_string(cfg.mode);
    if (!mode) config_error("unknown mode " + cfg.mode);
    VersionSpaceLearner learner(cls, *mode);
    result = run_session(learner, oracle, cfg.budget);
  }

  bool exact = extensionally_equal(cls, result.hypothesis, target);
  Report report;
  report.exit_code = exact ? kExitOk : kExitFailure;
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "class,target,mode,hypothesis,exact,total\n";
    out << cls.to_string() << "," << render_concept(cls, target) << "," << cfg.mode
        << "," << render_concept(cls, result.hypothesis) << ","
        << (exact ? "true" : "false") << "," << result.stats.total << "\n";
    report.text = out.str();
    return report;
  }
  ordered_json doc{{"command", "learn"},
                   {"class", cls.to_string()},
                   {"target", render_concept(cls, target)},
                   {"mode", cfg.mode},
                   {"seed", cfg.seed},
                   {"budget", cfg.budget},
                   {"hypothesis", render_concept(cls, result.hypothesis)},
                   {"exact", exact},
                   {"stats", stats_to_json(result.stats)}};
  ordered_json lines = ordered_json::array();
  std::istringstream tr(serialize_transcript(cls, result.transcript));
  std::string line;
  while (std::getline(tr, line)) lines.push_back(line);
  doc["transcript"] = lines;
  report.text = doc.dump(2) + "\n";
  return report;
}

// ---------------------------------------------------------------------------
// lowerbound

Report run_lowerbound(const ExperimentConfig& cfg) {
  if (cfg.construction == "prefix") {
    int k = cfg.k, r = cfg.r;
    if (k < 2 || r < 0) config_error("prefix lower bound needs k >= 2, r >= 0");
    long long needed = 1;
    for (int i = 0; i < r + 2; ++i) needed *= k;
    PrefixAdversaryOracle oracle(k, static_cast<int>(k * needed + 2));
    auto queried = drive_breadth_first(oracle, r);
    ordered_json levels = ordered_json::array();
    bool pass = true;
    for (int level = 0; level <= r; ++level) {
      long long count = count_justifiable(oracle.log(), level);
      long long expected = 1;
      for (int i = 0; i < level; ++i) expected *= k;
      pass = pass && count == expected;
      levels.push_back(ordered_json{
          {"level", level}, {"justifiable", count}, {"expected", expected}});
    }
    // Certificate: one query short of k^r still leaves a consistent
    // unqueried justifiable concept.
    long long kr = 1;
    for (int i = 0; i < r; ++i) kr *= k;
    size_t n = static_cast<size_t>(std::min<long long>(
        kr - 1, static_cast<long long>(queried.size())));
    auto candidate = exhibit_consistent_candidate(queried, oracle.log(), n, r);
    bool cert = r == 0 || candidate.has_value();
    pass = pass && cert;
    std::string candidate_text;
    if (candidate) {
      std::vector<ConceptDesc> parts;
      for (const auto& s : *candidate) parts.push_back(ConceptDesc::prefix(s));
      ClassId render_cls = ClassId::product(
          std::vector<ClassId>(k, ClassId::prefix_class(10, r + 1)));
      candidate_text = render_concept(render_cls, ConceptDesc::product(parts));
    }
    Report report;
    report.exit_code = pass ? kExitOk : kExitFailure;
    if (cfg.format == "csv") {
      std::ostringstream out;
      out << "level,justifiable,expected\n";
      for (const auto& row : levels) {
        out << row["level"] << "," << row["justifiable"] << "," << row["expected"]
            << "\n";
      }
      report.text = out.str();
      return report;
    }
    ordered_json doc{{"command", "lowerbound"},
                     {"construction", "prefix"},
                     {"k", k},
                     {"r", r},
                     {"queries_made", queried.size()},
                     {"levels", levels},
                     {"certificate",
                      ordered_json{{"after_queries", n},
                                   {"consistent_unqueried", candidate_text},
                                   {"holds", cert}}},
                     {"pass", pass}};
    std::istringstream tree(render_justifiability_tree(oracle.log(), k));
    ordered_json tree_lines = ordered_json::array();
    std::string line;
    while (std::getline(tree, line)) tree_lines.push_back(line);
    doc["tree"] = tree_lines;
    report.text = doc.dump(2) + "\n";
    return report;
  }

  if (cfg.construction == "singleton") {
    int m = static_cast<int>(cfg.m >= 0 ? cfg.m : 2);
    int k = cfg.k;
    long long required = 1;
    for (int i = 0; i < k; ++i) required *= (m + 1);
    required -= 1;
    ClassId product = ClassId::product(std::vector<ClassId>(k, ClassId::singletons(m)));
    ordered_json rows = ordered_json::array();
    bool pass = true;

    auto run_driver = [&](const std::string& name, Learner& learner,
                          AdversarialSingletonOracle& oracle) {
      SessionResult result = run_session(learner, oracle, 1'000'000);
      // Consistency certificate one query before the forcing threshold.
      std::vector<TranscriptEntry> head(
          result.transcript.begin(),
          result.transcript.begin() +
              std::min<size_t>(result.transcript.size(),
                               static_cast<size_t>(required - 1)));
      long long consistent = consistent_count(oracle.cls(), head);
      bool ok = result.stats.total >= required && consistent >= 2;
      pass = pass && ok;
      rows.push_back(ordered_json{{"driver", name},
                                  {"queries", result.stats.total},
                                  {"required", required},
                                  {"consistent_before_forcing", consistent},
                                  {"pass", ok}});
    };

    {
      AdversarialSingletonOracle oracle(m, k);
      VersionSpaceLearner learner(product, QueryKind::Mem);
      run_driver("brute-force-mem", learner, oracle);
    }
    {
      AdversarialSingletonOracle oracle(m, k);
      VersionSpaceLearner learner(product, QueryKind::EQ);
      run_driver("version-space-eq", learner, oracle);
    }
    {
      AdversarialSingletonOracle oracle(m, k);
      VersionSpaceLearner learner(product, QueryKind::Sub);
      run_driver("version-space-sub", learner, oracle);
    }
    {
      AdversarialSingletonOracle oracle(m, k);
      std::vector<SublearnerSpec> subs;
      for (int i = 0; i < k; ++i) {
        subs.push_back(make_sublearner(ClassId::singletons(m), QueryKind::Mem));
      }
      ProductMemOnlyLearner learner(std::move(subs));
      run_driver("mem-only-combinator", learner, oracle);
    }

    Report report;
    report.exit_code = pass ? kExitOk : kExitFailure;
    if (cfg.format == "csv") {
      std::ostringstream out;
      out << "driver,queries,required,consistent_before_forcing,pass\n";
      for (const auto& row : rows) {
        out << row["driver"].get<std::string>() << "," << row["queries"] << ","
            << row["required"] << "," << row["consistent_before_forcing"] << ","
            << (row["pass"].get<bool>() ? "true" : "false") << "\n";
      }
      report.text = out.str();
      return report;
    }
    ordered_json doc{{"command", "lowerbound"}, {"construction", "singleton"},
                     {"m", m},                  {"k", k},
                     {"required", required},    {"drivers", rows},
                     {"pass", pass}};
    report.text = doc.dump(2) + "\n";
    return report;
  }

  if (cfg.construction == "pos") {
    long long answers = cfg.m >= 0 ? cfg.m : 20;
    int universe = static_cast<int>(std::max<long long>(32, answers + 1));
    AdversarialPosOracle oracle(universe);
    std::vector<TranscriptEntry> transcript;
    for (long long i = 0; i < answers; ++i) {
      Query q = Query::pos();
      Answer a = oracle.answer(q);
      transcript.push_back({q, a});
    }
    long long consistent = consistent_count(oracle.cls(), transcript);
    bool pass = consistent >= 2;
    Report report;
    report.exit_code = pass ? kExitOk : kExitFailure;
    if (cfg.format == "csv") {
      std::ostringstream out;
      out << "answers,consistent,pass\n";
      out << answers << "," << consistent << "," << (pass ? "true" : "false") << "\n";
      report.text = out.str();
      return report;
    }
    ordered_json doc{{"command", "lowerbound"},
                     {"construction", "pos"},
                     {"universe", universe},
                     {"answers", answers},
                     {"consistent", consistent},
                     {"note", "every issued point lies in {a} x [0,U)"},
                     {"pass", pass}};
    report.text = doc.dump(2) + "\n";
    return report;
  }

  config_error("lowerbound constructions: prefix, singleton, pos");
}

// ---------------------------------------------------------------------------
// pac

Report run_pac(const ExperimentConfig& cfg) {
  std::string class_spec = cfg.class_spec.empty()
                               ? "prod(intervals(16),intervals(16))"
                               : cfg.class_spec;
  ClassId cls = parse_class(class_spec);
  if (cls.kind() != ClassId::Kind::Product) {
    config_error("pac needs a product class");
  }
  int k = cls.arity();
  if (!cfg.withmem && k != 2) {
    config_error("the subconcept search handles two-fold products; use --withmem");
  }
  long long trials = cfg.trials > 0 ? cfg.trials : 200;

  PacParams params;
  params.epsilon = cfg.epsilon;
  params.delta = cfg.delta;
  params.b = cfg.b;
  params.d1 = vc_dimension(cls.parts()[0]);
  params.d2 = vc_dimension(cls.parts()[k > 1 ? 1 : 0]);
  if (k > 2) {
    // Size samples by the summed component dimensions.
    int dsum = 0;
    for (const auto& part : cls.parts()) dsum += vc_dimension(part);
    params.d1 = dsum;
    params.d2 = 0;
  }

  Distribution dist = Distribution::uniform(cls);
  std::vector<ConsistencyFinder> finders;
  for (const auto& part : cls.parts()) finders.push_back(exact_finder(part));

  long long failures = 0;
  bool hard_failure = false;
  ordered_json trial_rows = ordered_json::array();
  std::ostringstream csv;
  csv << "seed,m,epsilon,delta,error,nodes,mem\n";

  for (long long t = 0; t < trials; ++t) {
    uint64_t trial_seed = cfg.seed + 1000003ULL * static_cast<uint64_t>(t);
    std::mt19937_64 rng(trial_seed);
    ConceptDesc target = cfg.target_spec.empty()
                             ? random_concept(cls, rng)
                             : parse_concept(cls, cfg.target_spec);
    ExampleOracle ex(dist, cls, target, trial_seed + 1);
    PacResult res;
    if (cfg.withmem) {
      HonestOracle mem(cls, target);
      res = pac_learn_with_mem(params, ex, mem, k, finders);
      if (res.mem_count > static_cast<long long>(k) * res.m) hard_failure = true;
      for (int i = 0; i < k; ++i) {
        auto parts = target.parts_or_self(k);
        for (const auto& e : res.dim_samples[i]) {
          if (contains(cls.parts()[i], parts[i], e.point) != e.label) {
            hard_failure = true;  // a per-dimension label disagrees with ground truth
          }
        }
      }
    } else {
      res = pac_learn_product(params, ex, finders[0], finders[1]);
    }
    double error = exact_error(dist, cls, target, res.hypothesis);
    if (error > params.epsilon) ++failures;
    csv << trial_seed << "," << res.m << "," << format_double(params.epsilon) << ","
        << format_double(params.delta) << "," << format_double(error) << ","
        << res.nodes << "," << res.mem_count << "\n";
    trial_rows.push_back(ordered_json{{"seed", trial_seed},
                                      {"m", res.m},
                                      {"error", error},
                                      {"nodes", res.nodes},
                                      {"mem", res.mem_count}});
  }

  double failure_rate = trials > 0 ? static_cast<double>(failures) / trials : 0.0;
  double sigma = std::sqrt(params.delta * (1.0 - params.delta) /
                           std::max<long long>(1, trials));
  double threshold = params.delta + 3.0 * sigma;
  bool statistical_ok = trials < 30 || failure_rate <= threshold;
  bool pass = statistical_ok && !hard_failure;

  Report report;
  report.exit_code = pass ? kExitOk : kExitFailure;
  if (cfg.format == "csv") {
    report.text = csv.str();
    return report;
  }
  ordered_json doc{{"command", "pac"},
                   {"class", cls.to_string()},
                   {"withmem", cfg.withmem},
                   {"epsilon", params.epsilon},
                   {"delta", params.delta},
                   {"b", params.b},
                   {"trials", trials},
                   {"failures", failures},
                   {"failure_rate", failure_rate},
                   {"threshold", threshold},
                   {"pass", pass},
                   {"trial_reports", trial_rows}};
  report.text = doc.dump(2) + "\n";
  return report;
}

// ---------------------------------------------------------------------------
// table

struct TableRow {
  std::string mode;
  std::string queryset;
  long long trials = 0;
  long long q_measured = -1;  // -1 renders as "-"
  long long q_bound = -1;
  long long mem_measured = -1;
  long long mem_bound = -1;
  bool pass = false;
  std::string note;
};

std::string cell(long long v) { return v < 0 ? "-" : std::to_string(v); }

Report run_table(const ExperimentConfig& cfg) {
  int k = cfg.k;
  if (k < 2 || k > 3) config_error("table supports k in {2, 3}");
  long long trials = cfg.trials > 0 ? cfg.trials : 20;
  std::vector<TableRow> rows;

  // Pos rows: not possible, witnessed by the surviving-target certificate.
  {
    AdversarialPosOracle oracle(32);
    std::vector<TranscriptEntry> transcript;
    for (int i = 0; i < 20; ++i) {
      Query q = Query::pos();
      Answer a = oracle.answer(q);
      transcript.push_back({q, a});
    }
    long long consistent = consistent_count(oracle.cls(), transcript);
    for (const char* qs : {"onlyQ", "withMem1Pos"}) {
      TableRow row;
      row.mode = "Pos";
      row.queryset = qs;
      row.trials = 1;
      row.pass = consistent >= 2;
      row.note = "not possible; " + std::to_string(consistent) +
                 " consistent targets after 20 positive examples";
      rows.push_back(row);
    }
  }

  ClassId interval_part = ClassId::intervals(16);
  std::vector<ClassId> parts(k, interval_part);
  ClassId product = ClassId::product(parts);

  auto worst_update = [](TableRow& row, long long measured, long long bound,
                         bool* ok) {
    if (measured > bound) *ok = false;
    if (row.q_measured < 0 || measured - bound > row.q_measured - row.q_bound) {
      row.q_measured = measured;
      row.q_bound = bound;
    }
  };

  // Sup rows: composite superset count vs the summed standalone counts.
  {
    TableRow row;
    row.mode = "Sup";
    row.queryset = "onlyQ";
    row.trials = trials;
    bool ok = true;
    for (long long t = 0; t < trials; ++t) {
      std::mt19937_64 rng(cfg.seed + 77'000 + static_cast<uint64_t>(t));
      ConceptDesc target = random_concept(product, rng);
      std::vector<SublearnerSpec> subs = component_subs(product, QueryKind::Sup);
      long long bound = 0;
      auto target_parts = target.parts_or_self(k);
      for (int i = 0; i < k; ++i) {
        bound += measure_standalone(subs[i], target_parts[i]).total;
      }
      HonestOracle oracle(product, target);
      SessionResult res = learn_product_sup(subs, oracle);
      if (!extensionally_equal(product, res.hypothesis, target)) ok = false;
      worst_update(row, res.stats.count(QueryKind::Sup), bound, &ok);
    }
    row.pass = ok;
    row.note = "composite Sup <= sum of standalone #sup";
    rows.push_back(row);
    TableRow with = row;
    with.queryset = "withMem1Pos";
    with.mem_measured = 0;
    with.mem_bound = 0;
    with.note = "no membership queries needed";
    rows.push_back(with);
  }

  // Mem onlyQ: the pool-product learner against intervals(8)^k.
  {
    ClassId small = ClassId::intervals(8);
    ClassId small_product = ClassId::product(std::vector<ClassId>(k, small));
    TableRow row;
    row.mode = "Mem";
    row.queryset = "onlyQ";
    row.trials = trials;
    bool ok = true;
    for (long long t = 0; t < trials; ++t) {
      std::mt19937_64 rng(cfg.seed + 78'000 + static_cast<uint64_t>(t));
      ConceptDesc target = random_concept(small_product, rng);
      std::vector<SublearnerSpec> subs = component_subs(small_product, QueryKind::Mem);
      long long max_mem = 0;
      auto target_parts = target.parts_or_self(k);
      for (int i = 0; i < k; ++i) {
        max_mem = std::max(max_mem,
                           measure_standalone(subs[i], target_parts[i]).total);
      }
      long long bound = 1;
      for (int i = 0; i < k; ++i) bound *= (max_mem + 2);
      HonestOracle oracle(small_product, target);
      SessionResult res = learn_product_mem_only(subs, oracle);
      if (!extensionally_equal(small_product, res.hypothesis, target)) ok = false;
      worst_update(row, res.stats.count(QueryKind::Mem), bound, &ok);
    }
    row.pass = ok;
    row.note = "distinct Mem <= prod(max #mem + 2)";
    rows.push_back(row);
  }

  // Mem withMem1Pos: sequential simulation through the positive example.
  {
    TableRow row;
    row.mode = "Mem";
    row.queryset = "withMem1Pos";
    row.trials = trials;
    bool ok = true;
    for (long long t = 0; t < trials; ++t) {
      std::mt19937_64 rng(cfg.seed + 79'000 + static_cast<uint64_t>(t));
      ConceptDesc target = random_concept(product, rng);
      std::vector<SublearnerSpec> subs = component_subs(product, QueryKind::Mem);
      long long sum = 0;
      auto target_parts = target.parts_or_self(k);
      for (int i = 0; i < k; ++i) {
        sum += measure_standalone(subs[i], target_parts[i]).total;
      }
      HonestOracle oracle(product, target);
      SessionResult res = learn_product_mem_pos(subs, oracle, *witness(product, target));
      if (!extensionally_equal(product, res.hypothesis, target)) ok = false;
      long long measured = res.stats.count(QueryKind::Mem);
      long long bound = static_cast<long long>(k) * sum;
      if (row.mem_measured < 0 ||
          measured - bound > row.mem_measured - row.mem_bound) {
        row.mem_measured = measured;
        row.mem_bound = bound;
      }
      if (measured > bound) ok = false;
    }
    row.pass = ok;
    row.note = "Mem <= k * sum of standalone #mem";
    rows.push_back(row);
  }

  // Sub/EQ onlyQ: the justifiable-query growth behind the exponential
  // lower bound (any learner needs at least k^r queries at level r).
  for (const char* mode : {"Sub", "EQ"}) {
    int r = cfg.r;
    long long needed = 1;
    for (int i = 0; i < r + 2; ++i) needed *= k;
    PrefixAdversaryOracle oracle(k, static_cast<int>(k * needed + 2));
    drive_breadth_first(oracle, r);
    long long kr = 1;
    for (int i = 0; i < r; ++i) kr *= k;
    long long count = count_justifiable(oracle.log(), r);
    TableRow row;
    row.mode = mode;
    row.queryset = "onlyQ";
    row.trials = 1;
    row.q_measured = count;
    row.q_bound = kr;
    row.pass = count == kr;
    row.note = "k^r justifiable concepts at level r=" + std::to_string(r) +
               "; any learner needs >= k^r queries";
    rows.push_back(row);
  }

  // Sub/EQ withMem1Pos: counterexample attribution through the positive
  // example.
  for (QueryKind mode : {QueryKind::Sub, QueryKind::EQ}) {
    TableRow row;
    row.mode = to_string(mode);
    row.queryset = "withMem1Pos";
    row.trials = trials;
    bool ok = true;
    for (long long t = 0; t < trials; ++t) {
      std::mt19937_64 rng(cfg.seed + (mode == QueryKind::Sub ? 80'000 : 81'000) +
                          static_cast<uint64_t>(t));
      ConceptDesc target = random_concept(product, rng);
      std::vector<SublearnerSpec> subs = component_subs(product, mode);
      long long sum = 0;
      auto target_parts = target.parts_or_self(k);
      for (int i = 0; i < k; ++i) {
        sum += measure_standalone(subs[i], target_parts[i]).total;
      }
      HonestOracle oracle(product, target);
      SessionResult res = learn_product_cex_mem_pos(subs, oracle,
                                                    *witness(product, target), mode);
      if (!extensionally_equal(product, res.hypothesis, target)) ok = false;
      worst_update(row, res.stats.count(mode), sum, &ok);
      long long mem = res.stats.count(QueryKind::Mem);
      long long mem_bound = static_cast<long long>(k) * sum;
      if (row.mem_measured < 0 || mem - mem_bound > row.mem_measured - row.mem_bound) {
        row.mem_measured = mem;
        row.mem_bound = mem_bound;
      }
      if (mem > mem_bound) ok = false;
    }
    row.pass = ok;
    row.note = "#q <= sum standalone; Mem <= k * sum";
    rows.push_back(row);
  }

  bool all_pass = std::all_of(rows.begin(), rows.end(),
                              [](const TableRow& r) { return r.pass; });
  Report report;
  report.exit_code = all_pass ? kExitOk : kExitFailure;
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back(ordered_json{{"mode", r.mode},
                                 {"queryset", r.queryset},
                                 {"trials", r.trials},
                                 {"q_measured", r.q_measured},
                                 {"q_bound", r.q_bound},
                                 {"mem_measured", r.mem_measured},
                                 {"mem_bound", r.mem_bound},
                                 {"pass", r.pass},
                                 {"note", r.note}});
    }
    ordered_json doc{{"command", "table"}, {"k", k}, {"seed", cfg.seed},
                     {"rows", arr},        {"pass", all_pass}};
    report.text = doc.dump(2) + "\n";
    return report;
  }
  std::ostringstream out;
  out << "mode,queryset,trials,q_measured,q_bound,mem_measured,mem_bound,pass,note\n";
  for (const auto& r : rows) {
    out << r.mode << "," << r.queryset << "," << r.trials << "," << cell(r.q_measured)
        << "," << cell(r.q_bound) << "," << cell(r.mem_measured) << ","
        << cell(r.mem_bound) << "," << (r.pass ? "true" : "false") << ",\"" << r.note
        << "\"\n";
  }
  report.text = out.str();
  return report;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    config_error(std::string("malformed config JSON: ") + e.what());
  }
  if (!doc.is_object()) config_error("config must be a JSON object");
  ExperimentConfig cfg;
  try {
    cfg.command = doc.value("command", std::string());
    cfg.class_spec = doc.value("class", std::string());
    cfg.target_spec = doc.value("target", std::string());
    cfg.mode = doc.value("mode", std::string());
    cfg.construction = doc.value("construction", std::string());
    cfg.format = doc.value("format", std::string("json"));
    cfg.k = doc.value("k", 2);
    cfg.r = doc.value("r", 2);
    cfg.m = doc.value("m", static_cast<long long>(-1));
    cfg.trials = doc.value("trials", 0);
    cfg.budget = doc.value("budget", static_cast<long long>(1'000'000));
    cfg.epsilon = doc.value("epsilon", 0.2);
    cfg.delta = doc.value("delta", 0.2);
    cfg.b = doc.value("b", 4.0);
    cfg.seed = doc.value("seed", 0ULL);
    cfg.withmem = doc.value("withmem", false);
  } catch (const std::exception& e) {
    config_error(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

Report run_experiment(const ExperimentConfig& cfg) {
  try {
    if (cfg.command == "learn") return run_learn(cfg);
    if (cfg.command == "lowerbound") return run_lowerbound(cfg);
    if (cfg.command == "pac") return run_pac(cfg);
    if (cfg.command == "table") return run_table(cfg);
    config_error("unknown command '" + cfg.command +
                 "' (expected learn, lowerbound, pac or table)");
  } catch (const Error& e) {
    Report report;
    report.exit_code = e.code() == ErrorCode::Config ? kExitConfig : kExitFailure;
    report.text = std::string("error: ") + to_string(e.code()) + ": " + e.what() + "\n";
    return report;
  } catch (const std::exception& e) {
    Report report;
    report.exit_code = kExitFailure;
    report.text = std::string("error: ") + e.what() + "\n";
    return report;
  }
}

}  // namespace modlearn
