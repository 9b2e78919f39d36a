#include "sqfd/cli.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfd/instances.hpp"
#include "sqfd/io.hpp"
#include "sqfd/koszul.hpp"
#include "sqfd/poset.hpp"
#include "sqfd/profile.hpp"
#include "sqfd/surgery.hpp"

namespace sqfd {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

FieldSpec parse_field(const std::string& text) {
  if (text == "q") return FieldSpec::rationals();
  if (text.rfind("gfp:", 0) == 0) {
    long long p = 0;
    try {
      p = std::stoll(text.substr(4));
    } catch (const std::exception&) {
      fail(Errc::Parse, "--field gfp: needs a prime, got '" + text + "'");
    }
    return FieldSpec::prime_field(p);
  }
  fail(Errc::Parse, "--field must be q or gfp:P, got '" + text + "'");
}

/// Appends one JSON record per line to the --out target, if any.
class RecordSink {
 public:
  explicit RecordSink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::trunc);
    if (!file_) fail(Errc::Parse, "cannot write " + path);
    enabled_ = true;
  }

  void write(const json& record) {
    if (enabled_) file_ << record.dump() << "\n";
  }

  bool enabled() const { return enabled_; }

 private:
  std::ofstream file_;
  bool enabled_ = false;
};

json instance_record(const IdealPair& pair, const std::string& name) {
  InstanceFile file = from_pair(pair, name);
  json j;
  if (!file.name.empty()) j["name"] = file.name;
  j["n"] = file.n;
  j["I"] = file.I;
  j["J"] = file.J;
  return j;
}

json monomial_strings(const std::vector<Monomial>& ms) {
  json arr = json::array();
  for (const Monomial& m : ms) arr.push_back(to_string(m));
  return arr;
}

json partition_record(const IntervalPartition& p) {
  json arr = json::array();
  for (const Interval& iv : p.intervals)
    arr.push_back(json::array({to_string(iv.u), to_string(iv.v)}));
  return arr;
}

json profile_record(const InstanceProfile& prof) {
  json j;
  j["d"] = prof.d;
  j["r"] = prof.r;
  j["s"] = prof.s;
  j["q"] = prof.q;
  j["f"] = prof.f ? json(to_string(*prof.f)) : json(nullptr);
  j["E"] = monomial_strings(prof.E);
  j["B"] = monomial_strings(prof.B);
  j["C"] = monomial_strings(prof.C);
  j["flags"] = {{"s_gt_r_plus_q", prof.s_gt_r_plus_q},
                {"r_gt_q", prof.r_gt_q},
                {"s_lt_2r", prof.s_lt_2r},
                {"s_eq_q_plus_1", prof.s_eq_q_plus_1},
                {"c_in_fb", prof.c_in_fb}};
  return j;
}

json chain_record(const ChainState& st) {
  json j;
  j["bottoms"] = monomial_strings(st.bottoms);
  j["tops"] = monomial_strings(st.tops);
  j["case"] = st.stop_case;
  j["fixed_u"] = st.fixed_u;
  return j;
}

void print_partition(std::ostream& out, const IntervalPartition& p) {
  for (const Interval& iv : p.intervals)
    out << "  [" << to_string(iv.u) << ", " << to_string(iv.v) << "]\n";
}

/// Runs f(0..count-1) on a small worker pool; f must be pure per index.
template <typename F>
void parallel_for(int jobs, int count, F&& f) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  for (std::thread& t : pool) t.join();
}

void check_poset_cap(const IdealPair& pair, int max_poset) {
  if (max_poset <= 0) return;
  int size = build_poset(pair, pair.n()).size();
  if (size > max_poset)
    fail(Errc::Capacity, "poset has " + std::to_string(size) + " elements, over the --max-poset limit of " +
                             std::to_string(max_poset));
}

struct CommonOpts {
  std::string file;
  std::string out_path;
  std::string field = "q";
  int max_poset = 0;
  int trunc_degree = -1;
  std::uint64_t seed = 0;
  int jobs = 1;
};

int cmd_sdepth(const CommonOpts& opt, std::ostream& out) {
  auto start = Clock::now();
  IdealPair pair = to_pair(load_instance_file(opt.file));
  check_poset_cap(pair, opt.max_poset);
  RecordSink sink(opt.out_path);
  json rec;
  rec["instance"] = instance_record(pair, "");
  rec["tool_version"] = kToolVersion;
  if (opt.trunc_degree >= 0) {
    auto witness = sdepth_decide(pair, opt.trunc_degree);
    out << "sdepth >= " << opt.trunc_degree << ": " << (witness ? "yes" : "no") << "\n";
    json t;
    t["degree"] = opt.trunc_degree;
    t["satisfied"] = witness.has_value();
    t["witness"] = witness ? partition_record(*witness) : json(nullptr);
    rec["truncation"] = t;
    if (witness) {
      out << "witness partition of the degree-<=" << opt.trunc_degree << " truncation:\n";
      print_partition(out, *witness);
    }
  } else {
    SdepthCertificate cert = sdepth(pair);
    out << "sdepth = " << cert.value << "\n";
    out << "witness partition of the degree-<=" << cert.value << " truncation:\n";
    print_partition(out, cert.witness);
    if (!cert.refutation.empty())
      out << "no partition reaches " << cert.value + 1 << ": " << cert.refutation << "\n";
    rec["sdepth"] = cert.value;
    rec["witness"] = partition_record(cert.witness);
    rec["refutation"] = cert.refutation;
  }
  rec["timing_ms"] = ms_since(start);
  sink.write(rec);
  return 0;
}

int cmd_depth(const CommonOpts& opt, std::ostream& out) {
  auto start = Clock::now();
  IdealPair pair = to_pair(load_instance_file(opt.file));
  FieldSpec field = parse_field(opt.field);
  DepthResult res = depth(pair, field);
  out << "depth = " << res.depth << " (projective dimension " << res.projective_dimension
      << ", top homology at " << to_string(res.witness) << ", field " << field.describe()
      << ")\n";
  RecordSink sink(opt.out_path);
  json rec;
  rec["instance"] = instance_record(pair, "");
  rec["depth"] = res.depth;
  rec["projective_dimension"] = res.projective_dimension;
  rec["witness_multidegree"] = to_string(res.witness);
  rec["field"] = field.describe();
  rec["tool_version"] = kToolVersion;
  rec["timing_ms"] = ms_since(start);
  sink.write(rec);
  return 0;
}

int cmd_classify(const CommonOpts& opt, std::ostream& out) {
  auto start = Clock::now();
  IdealPair pair = to_pair(load_instance_file(opt.file));
  InstanceProfile prof = classify(pair);
  BoundVerdict bounds = bound_conditions(prof, pair);
  out << "d = " << prof.d << ", r = " << prof.r << ", s = " << prof.s << ", q = " << prof.q
      << "\n";
  if (prof.f) out << "f = " << to_string(*prof.f) << "\n";
  out << "E = {";
  for (std::size_t i = 0; i < prof.E.size(); ++i)
    out << (i ? ", " : "") << to_string(prof.E[i]);
  out << "}\n";
  out << "flags:";
  if (prof.s_gt_r_plus_q) out << " s>r+q";
  if (prof.r_gt_q) out << " r>q";
  if (prof.s_lt_2r) out << " s<2r";
  if (prof.s_eq_q_plus_1) out << " s=q+1";
  if (prof.c_in_fb) out << " C-in-(f,B)";
  out << "\n";
  out << "counting bounds " << (bounds.applicable ? "" : "not ") << "applicable";
  if (bounds.any_fires()) out << "; a firing bound forces sdepth <= " << prof.d + 1;
  out << "\n";
  json rec;
  rec["instance"] = instance_record(pair, "");
  rec["profile"] = profile_record(prof);
  rec["bounds"] = {{"applicable", bounds.applicable},
                   {"s_gt_r_plus_q", bounds.s_gt_r_plus_q},
                   {"r_gt_q", bounds.r_gt_q},
                   {"s_lt_2r", bounds.s_lt_2r}};
  if (prof.r == 1) {
    bool cc = c_condition(prof);
    out << "covering condition on the top layer: " << (cc ? "satisfied" : "not satisfied")
        << "\n";
    rec["c_condition"] = cc;
  }
  rec["tool_version"] = kToolVersion;
  rec["timing_ms"] = ms_since(start);
  RecordSink sink(opt.out_path);
  sink.write(rec);
  return 0;
}

json theorem_record(const IdealPair& pair, const std::string& name, const TheoremVerdict& v,
                    long long timing_ms) {
  json rec;
  rec["instance"] = instance_record(pair, name);
  rec["verdict"] = {{"hypotheses_hold", v.hypotheses_hold},
                    {"conclusion_holds", v.conclusion_holds},
                    {"sdepth", v.sdepth_value},
                    {"depth", v.depth_value}};
  rec["profile"] = profile_record(v.profile);
  rec["tool_version"] = kToolVersion;
  rec["timing_ms"] = timing_ms;
  return rec;
}

void print_verdict(std::ostream& out, const TheoremVerdict& v) {
  out << "sdepth = " << v.sdepth_value << ", depth = " << v.depth_value << ", d = "
      << v.profile.d << "\n";
  if (v.profile.s_eq_q_plus_1) out << "boundary case: s = q+1 (excluded by the hypotheses)\n";
  if (v.hypotheses_hold) {
    out << "hypotheses hold (r = 1, s != q+1, sdepth = d+1)\n";
    out << "conclusion depth <= d+1: " << (v.conclusion_holds ? "holds" : "VIOLATED") << "\n";
  } else {
    out << "hypotheses fail; the verdict is vacuous\n";
  }
}

struct CorpusOpts {
  bool enabled = false;
  int n = 5;
  int d = 1;
  int count = 0;
};

int cmd_check_theorem(const CommonOpts& opt, const CorpusOpts& corpus, std::ostream& out,
                      std::ostream& err) {
  FieldSpec field = parse_field(opt.field);
  RecordSink sink(opt.out_path);
  if (!corpus.enabled) {
    auto start = Clock::now();
    IdealPair pair = to_pair(load_instance_file(opt.file));
    TheoremVerdict v = theorem_check(pair, field);
    print_verdict(out, v);
    sink.write(theorem_record(pair, "", v, ms_since(start)));
    if (v.hypotheses_hold && !v.conclusion_holds) {
      err << "conclusion violated by:\n" << format_instance_text(from_pair(pair, ""));
      return 2;
    }
    return 0;
  }

  Rng rng(opt.seed);
  std::vector<IdealPair> pairs;
  pairs.reserve(static_cast<std::size_t>(corpus.count));
  for (int i = 0; i < corpus.count; ++i) pairs.push_back(gen_r1(rng, corpus.n, corpus.d));
  std::vector<TheoremVerdict> verdicts(pairs.size());
  std::vector<long long> timings(pairs.size());
  parallel_for(opt.jobs, corpus.count, [&](int i) {
    auto start = Clock::now();
    verdicts[static_cast<std::size_t>(i)] = theorem_check(pairs[static_cast<std::size_t>(i)], field);
    timings[static_cast<std::size_t>(i)] = ms_since(start);
  });
  int held = 0;
  int violations = 0;
  for (int i = 0; i < corpus.count; ++i) {
    const auto& v = verdicts[static_cast<std::size_t>(i)];
    held += v.hypotheses_hold;
    if (v.hypotheses_hold && !v.conclusion_holds) {
      ++violations;
      err << "conclusion violated by instance " << i << ":\n"
          << format_instance_text(from_pair(pairs[static_cast<std::size_t>(i)], ""));
    }
    sink.write(theorem_record(pairs[static_cast<std::size_t>(i)],
                              "random-" + std::to_string(i), v,
                              timings[static_cast<std::size_t>(i)]));
  }
  out << "checked " << corpus.count << " random quotients (n = " << corpus.n
      << ", d = " << corpus.d << ", seed " << opt.seed << "): " << held
      << " satisfied the hypotheses, " << violations << " violations\n";
  return violations > 0 ? 2 : 0;
}

int cmd_search_ccondition(const CommonOpts& opt, const CorpusOpts& corpus, std::ostream& out) {
  FieldSpec field = parse_field(opt.field);
  RecordSink sink(opt.out_path);
  std::vector<std::pair<std::string, IdealPair>> queue;
  for (const NamedInstance& ni : named_instances())
    if (ni.pair.n() == corpus.n && ni.pair.d == corpus.d) queue.push_back({ni.name, ni.pair});
  Rng rng(opt.seed);
  for (int i = 0; i < corpus.count; ++i)
    queue.push_back({"random-" + std::to_string(i), gen_r1(rng, corpus.n, corpus.d)});

  const int total = static_cast<int>(queue.size());
  struct Finding {
    bool satisfies = false;
    int depth_value = 0;
  };
  std::vector<Finding> findings(queue.size());
  parallel_for(opt.jobs, total, [&](int i) {
    const IdealPair& pair = queue[static_cast<std::size_t>(i)].second;
    InstanceProfile prof = classify(pair);
    if (prof.r != 1 || !c_condition(prof)) return;
    findings[static_cast<std::size_t>(i)] = {true, depth(pair, field).depth};
  });
  int satisfying = 0;
  int counterexamples = 0;
  for (int i = 0; i < total; ++i) {
    const Finding& f = findings[static_cast<std::size_t>(i)];
    if (!f.satisfies) continue;
    ++satisfying;
    const auto& [name, pair] = queue[static_cast<std::size_t>(i)];
    bool counter = f.depth_value > pair.d + 1;
    counterexamples += counter;
    json rec;
    rec["name"] = name;
    rec["instance"] = instance_record(pair, name);
    rec["d"] = pair.d;
    rec["depth"] = f.depth_value;
    rec["c_condition"] = true;
    rec["counterexample"] = counter;
    sink.write(rec);
    if (counter)
      out << "potential counterexample: " << name << " has depth " << f.depth_value << " > "
          << pair.d + 1 << "\n";
  }
  out << "scanned " << total << " quotients (" << total - corpus.count << " bundled, "
      << corpus.count << " random, seed " << opt.seed << "): " << satisfying
      << " satisfy the covering condition, " << counterexamples
      << " exceed depth d+1\n";
  if (counterexamples == 0 && satisfying > 0)
    out << "no counterexample: every satisfying quotient has depth <= d+1\n";
  return 0;
}

int cmd_upgrade_partition(const CommonOpts& opt, std::ostream& out) {
  auto start = Clock::now();
  IdealPair pair = to_pair(load_instance_file(opt.file));
  check_poset_cap(pair, opt.max_poset);
  UpgradeReport rep = upgrade_partition(pair);
  RecordSink sink(opt.out_path);
  json rec;
  rec["instance"] = instance_record(pair, "");
  rec["tool_version"] = kToolVersion;
  if (rep.status == UpgradeReport::Status::Upgraded) {
    out << "upgraded via " << rep.route << " (" << rep.detail << ")\n";
    out << "partition with minimum top degree " << rep.partition->min_top_degree() << ":\n";
    print_partition(out, *rep.partition);
    PartitionDiagnostics diag = validate_partition(*rep.partition);
    rec["status"] = "upgraded";
    rec["route"] = rep.route;
    rec["detail"] = rep.detail;
    rec["min_top_degree"] = rep.partition->min_top_degree();
    rec["partition"] = partition_record(*rep.partition);
    rec["valid"] = diag.valid;
    if (rep.chain) {
      rec["chain"] = chain_record(*rep.chain);
      out << "stopping case " << rep.chain->stop_case << "\n";
    }
  } else {
    out << "not applicable: " << rep.reason << " (" << rep.detail << ")\n";
    rec["status"] = "not-applicable";
    rec["reason"] = rep.reason;
    rec["detail"] = rep.detail;
  }
  rec["timing_ms"] = ms_since(start);
  sink.write(rec);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stanley depth and Koszul depth toolkit for squarefree quotients I/J"};
  app.require_subcommand(1);

  CommonOpts opt;
  CorpusOpts corpus;

  auto add_common = [&](CLI::App* sub, bool takes_file) {
    if (takes_file) sub->add_option("file", opt.file, "instance file (text or JSON)");
    sub->add_option("--out", opt.out_path, "write one JSON record per line to this file");
    sub->add_option("--field", opt.field, "coefficient field: q or gfp:P (default q)");
    sub->add_option("--max-poset", opt.max_poset, "refuse posets larger than this (0 = off)");
    sub->add_option("--seed", opt.seed, "seed for all randomness");
    sub->add_option("--jobs", opt.jobs, "worker threads for batch commands");
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--n", corpus.n, "ambient variable count for generated quotients");
    sub->add_option("--d", corpus.d, "bottom generator degree for generated quotients");
    sub->add_option("--count", corpus.count, "number of generated quotients");
  };

  CLI::App* s_sdepth = app.add_subcommand("sdepth", "Stanley depth of I/J");
  add_common(s_sdepth, true);
  s_sdepth->add_option("--trunc-degree", opt.trunc_degree,
                       "only decide whether sdepth >= this degree");
  s_sdepth->get_option("file")->required();

  CLI::App* s_depth = app.add_subcommand("depth", "depth of I/J via Koszul homology");
  add_common(s_depth, true);
  s_depth->get_option("file")->required();

  CLI::App* s_classify = app.add_subcommand("classify", "layer counts and bound conditions");
  add_common(s_classify, true);
  s_classify->get_option("file")->required();

  CLI::App* s_check = app.add_subcommand("check-theorem",
                                         "verify depth <= d+1 under the sdepth hypotheses");
  add_common(s_check, true);
  s_check->add_flag("--corpus", corpus.enabled, "generate random quotients instead of a file");
  add_corpus(s_check);

  CLI::App* s_search = app.add_subcommand(
      "search-ccondition", "scan quotients whose top layer satisfies the covering condition");
  add_common(s_search, false);
  add_corpus(s_search);

  CLI::App* s_upgrade = app.add_subcommand("upgrade-partition",
                                           "rebuild a degree-(d+2) partition from subquotients");
  add_common(s_upgrade, true);
  s_upgrade->get_option("file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (s_sdepth->parsed()) return cmd_sdepth(opt, out);
    if (s_depth->parsed()) return cmd_depth(opt, out);
    if (s_classify->parsed()) return cmd_classify(opt, out);
    if (s_check->parsed()) {
      if (!corpus.enabled && opt.file.empty())
        fail(Errc::Parse, "check-theorem needs an instance file or --corpus");
      if (corpus.enabled && !opt.file.empty())
        fail(Errc::Parse, "check-theorem takes a file or --corpus, not both");
      return cmd_check_theorem(opt, corpus, out, err);
    }
    if (s_search->parsed()) return cmd_search_ccondition(opt, corpus, out);
    if (s_upgrade->parsed()) return cmd_upgrade_partition(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand selected\n";
  return 1;
}

}  // namespace sqfd
