#include "baire/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "baire/bars_fans.hpp"
#include "baire/formal_space.hpp"
#include "baire/testkit.hpp"

namespace baire::suites {

namespace {

using testkit::Rng;

constexpr std::size_t kKeptFailures = 10;

struct Recorder {
  SuiteResult& r;
  void fail(std::string what) {
    ++r.failure_count;
    if (r.failures.size() < kKeptFailures) r.failures.push_back(std::move(what));
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++r.checked;
    if (!ok) fail(what());
  }
};

std::size_t pick(std::size_t v, std::size_t fallback) { return v == 0 ? fallback : v; }

testkit::OpGenSpec default_spec() { return {5, 4, 9, 0}; }

// Runs `body` and converts escaping exceptions into recorded failures.
SuiteResult timed(const std::string& name, const std::function<void(Recorder&)>& body) {
  SuiteResult r;
  r.name = name;
  Recorder rec{r};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void for_each_extension(Nat len, Nat entries, std::vector<Nat>& cur, const std::function<void(const FinSeq&)>& f) {
  f(FinSeq(cur));
  if (len == 0) return;
  for (Nat v = 0; v < entries; ++v) {
    cur.push_back(v);
    for_each_extension(len - 1, entries, cur, f);
    cur.pop_back();
  }
}

std::vector<AddrPattern> sorted_addresses(const std::vector<BarPattern>& items) {
  std::vector<AddrPattern> out;
  for (const auto& i : items) out.push_back(i.address);
  std::sort(out.begin(), out.end());
  return out;
}

bool all_unit_leaves(const BrouwerOp& op) {
  if (op.is_leaf()) return op.leaf_value() == 1;
  if (!all_unit_leaves(op.default_child())) return false;
  for (const auto& c : op.explicit_children()) {
    if (!all_unit_leaves(c)) return false;
  }
  return true;
}

}  // namespace

SuiteResult neighbourhood_law(const SuiteOptions& opt) {
  return timed("neighbourhood-law", [&](Recorder& rec) {
    Rng rng(opt.seed);
    const std::size_t count = pick(opt.count, 1000);
    const std::size_t samples = pick(opt.samples, 50);
    for (std::size_t k = 0; k < count; ++k) {
      const BrouwerOp op = testkit::gen_random_op(default_spec(), rng);
      const auto tag = [&] { return "op#" + std::to_string(k) + " " + describe(op); };

      // Extension invariance once positive.
      for (const auto& a : testkit::oracle_positions(op)) {
        const Nat va = apply_nbhd(op, a);
        if (va == 0) continue;
        std::vector<Nat> cur;
        bool ok = true;
        FinSeq bad;
        for_each_extension(3, 4, cur, [&](const FinSeq& b) {
          if (ok && apply_nbhd(op, concat(a, b)) != va) {
            ok = false;
            bad = concat(a, b);
          }
        });
        rec.expect(ok, [&] { return tag() + ": value changes from " + a.to_string() + " to " + bad.to_string(); });
      }

      // Listed bar is an antichain (adjacent check suffices once sorted).
      auto listing = bar_enumerate(op, std::nullopt, Nat{6});
      std::vector<FinSeq> bar;
      for (const auto& item : listing.items) bar.push_back(item.address);
      std::sort(bar.begin(), bar.end());
      bool antichain = true;
      for (std::size_t i = 1; i < bar.size(); ++i) antichain = antichain && !is_prefix(bar[i - 1], bar[i]);
      rec.expect(antichain, [&] { return tag() + ": bar listing is not an antichain"; });

      const auto patterns = bar_patterns(op);
      for (const auto& alpha : testkit::random_points(rng, samples, 5)) {
        const auto res = eval(op, alpha);
        const FinSeq hit = iseg(alpha, res.modulus);
        std::size_t listed = 0;
        for (const auto& a : bar) listed += a == iseg(alpha, a.size());
        std::size_t matched = 0;
        for (const auto& p : patterns) matched += p.address.matches(iseg(alpha, p.address.size()));
        const bool in_listing = std::binary_search(bar.begin(), bar.end(), hit);
        rec.expect(listed == 1 && matched == 1 && in_listing, [&] {
          return tag() + ": point " + alpha.to_string() + " meets " + std::to_string(listed) + " listed / " +
                 std::to_string(matched) + " pattern bar addresses";
        });
        rec.expect(res.value + 1 == apply_nbhd(op, hit),
                   [&] { return tag() + ": eval disagrees with the neighbourhood value at " + hit.to_string(); });
      }
    }
  });
}

SuiteResult cov_roundtrip(const SuiteOptions& opt) {
  return timed("cov-roundtrip", [&](Recorder& rec) {
    Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t count = pick(opt.count, 300);
    for (std::size_t k = 0; k < count; ++k) {
      const BrouwerOp op = testkit::gen_random_op(default_spec(), rng);
      const auto tag = [&] { return "op#" + std::to_string(k) + " " + describe(op); };
      const CovWitness w = cov_from_brouwer(FinSeq{}, op);

      auto denoted = w.denoted_patterns();
      std::sort(denoted.begin(), denoted.end());
      rec.expect(denoted == sorted_addresses(bar_patterns(op)),
                 [&] { return tag() + ": denoted patterns differ from the bar patterns"; });

      const Nat cutoff = default_expansion_cutoff(op);
      auto listed = w.denoted(cutoff);
      std::sort(listed.begin(), listed.end());
      const auto oracle = testkit::oracle_bar(op, cutoff);
      rec.expect(listed == oracle, [&] { return tag() + ": denoted set differs from the brute-force bar"; });
      const bool member = std::all_of(oracle.begin(), oracle.end(), [&](const FinSeq& a) { return w.denotes(a); });
      rec.expect(member, [&] { return tag() + ": a brute-force bar address is not denoted"; });

      const BrouwerOp back = brouwer_from_cov(w);
      rec.expect(same_op(back, skeleton(op)) && all_unit_leaves(back),
                 [&] { return tag() + ": round trip gives " + describe(back); });
    }
  });
}

SuiteResult realiser_extraction(const SuiteOptions& opt) {
  return timed("realiser-extraction", [&](Recorder& rec) {
    Rng rng(opt.seed ^ 0x51ed270b27f0a3c9ULL);
    Rng points(opt.seed ^ 0x6a09e667f3bcc909ULL);
    const std::size_t count = pick(opt.count, 100);
    const std::size_t samples = pick(opt.samples, 50);
    for (std::size_t k = 0; k < count; ++k) {
      const BrouwerOp op = testkit::gen_random_op(default_spec(), rng);
      const auto tag = [&] { return "op#" + std::to_string(k) + " " + describe(op); };
      const ContinuousFn f = ContinuousFn::realised_by(op);
      const BrouwerOp extracted = extract_realiser(f, skeleton(op));
      rec.expect(same_op(skeleton(extracted), skeleton(op)), [&] { return tag() + ": skeleton changed"; });
      const auto pts = testkit::random_points(points, samples, 5);
      const auto report = check_realises(f, extracted, pts);
      rec.expect(report.ok(), [&] {
        const auto& fl = report.failures.front();
        return tag() + ": sample " + pts[fl.sample].to_string() + " F=" + std::to_string(fl.expected) +
               " realiser=" + std::to_string(fl.got);
      });
    }
  });
}

SuiteResult commuting_diagram(const SuiteOptions& opt) {
  return timed("commuting-diagram", [&](Recorder& rec) {
    // Same op stream as the extraction suite.
    Rng rng(opt.seed ^ 0x51ed270b27f0a3c9ULL);
    Rng points(opt.seed ^ 0xbb67ae8584caa73bULL);
    const std::size_t count = pick(opt.count, 100);
    const std::size_t samples = pick(opt.samples, 100);
    for (std::size_t k = 0; k < count; ++k) {
      const BrouwerOp op = testkit::gen_random_op(default_spec(), rng);
      const auto tag = [&] { return "op#" + std::to_string(k) + " " + describe(op); };
      const ContinuousFn f = ContinuousFn::realised_by(op);
      const FormalMap r = map_from_realisable(f);
      const auto pts = testkit::random_points(points, samples, 5);
      for (const auto& alpha : pts) {
        const Nat lhs = f.apply(alpha);
        const Nat rhs = apply_map(r, alpha);
        rec.expect(lhs == rhs, [&] {
          return tag() + ": at " + alpha.to_string() + " F=" + std::to_string(lhs) + " Pt(r)=" + std::to_string(rhs);
        });
      }
      const auto report = validate_map(r, &f, pts);
      rec.expect(report.ok(), [&] {
        return tag() + ": " + report.violations.front().kind + " " + report.violations.front().detail;
      });
      const ContinuousFn g = realiser_from_map(r);
      rec.expect(same_op(*g.realiser(), extract_realiser(f, skeleton(op))),
                 [&] { return tag() + ": realiser_from_map differs from extract_realiser"; });
    }
  });
}

SuiteResult modulus_vs_oracle(const SuiteOptions& opt) {
  return timed("modulus-vs-oracle", [&](Recorder& rec) {
    {
      const ContinuousFn sum = ContinuousFn::realised_by(testkit::sum_first_two_op());
      const FanTree binary = FanTree::full_binary();
      const Nat n = uniform_modulus(sum, binary);
      const auto oracle = testkit::brute_force_modulus(sum, binary, 8);
      rec.expect(n == 2 && oracle == Nat{2},
                 [&] { return "sum example: modulus " + std::to_string(n) + ", oracle " +
                              (oracle ? std::to_string(*oracle) : "none"); });
      const Nat m = modulus_M(sum, binary, 2);
      rec.expect(m == 3, [&] { return "sum example: M = " + std::to_string(m); });
    }
    Rng rng(opt.seed ^ 0x2545f4914f6cdd1dULL);
    const std::size_t count = pick(opt.count, 200);
    const std::vector<std::pair<std::string, FanTree>> fans{{"full_binary", FanTree::full_binary()},
                                                            {"bounded(3,2)", FanTree::bounded_by({3, 2})}};
    for (std::size_t k = 0; k < count; ++k) {
      const BrouwerOp op = testkit::gen_random_op(default_spec(), rng);
      const ContinuousFn f = ContinuousFn::realised_by(op);
      for (const auto& [name, fan] : fans) {
        const Nat engine = uniform_modulus(f, fan);
        const auto oracle = testkit::brute_force_modulus(f, fan, kDefaultDepthBudget);
        rec.expect(oracle && *oracle == engine, [&] {
          return "op#" + std::to_string(k) + " " + describe(op) + " on " + name + ": engine " +
                 std::to_string(engine) + ", oracle " + (oracle ? std::to_string(*oracle) : "none");
        });
      }
    }
  });
}

SuiteResult cbar_modulus(const SuiteOptions& opt) {
  return timed("cbar-modulus", [&](Recorder& rec) {
    {
      const ContinuousFn sum = ContinuousFn::realised_by(testkit::sum_first_two_op());
      const FanTree binary = FanTree::full_binary();
      const Nat m = modulus_M(sum, binary, uniform_modulus(sum, binary));
      const CBar p = cbar_from_function(sum);
      for (const auto& a : binary.slice(m)) {
        const auto v = cbar_member(p, a).verdict;
        rec.expect(v == Verdict::yes, [&] { return "P(" + a.to_string() + ") at depth M is " + to_string(v); });
      }
    }
    Rng rng(opt.seed ^ 0x2545f4914f6cdd1dULL);
    const std::size_t count = pick(opt.count, 200);
    const std::vector<std::pair<std::string, FanTree>> fans{{"full_binary", FanTree::full_binary()},
                                                            {"bounded(3,2)", FanTree::bounded_by({3, 2})}};
    for (std::size_t k = 0; k < count; ++k) {
      const BrouwerOp op = testkit::gen_random_op(default_spec(), rng);
      const ContinuousFn f = ContinuousFn::realised_by(op);
      const CBar p = cbar_from_function(f);
      for (const auto& [name, fan] : fans) {
        const Nat by_bar = uniform_bar_modulus(p, fan);
        const Nat by_fn = uniform_modulus(f, fan);
        rec.expect(by_bar == by_fn, [&] {
          return "op#" + std::to_string(k) + " " + describe(op) + " on " + name + ": c-bar " + std::to_string(by_bar) +
                 ", function " + std::to_string(by_fn);
        });
      }
    }
  });
}

SuiteResult cover_certificates(const SuiteOptions& opt) {
  return timed("cover-certificates", [&](Recorder& rec) {
    for (Nat k = 0; k <= 5; ++k) {
      const CovWitness w = cov_from_brouwer(FinSeq{}, testkit::uniform_skeleton(k));
      const auto v = check_cover(FinSeq{}, cylinder_set(FinSeq{}, k), w);
      rec.expect(v == Verdict::yes, [&] { return "uniform cover of depth " + std::to_string(k) + ": " + to_string(v); });
    }
    Rng rng(opt.seed ^ 0xbf58476d1ce4e5b9ULL);
    const std::size_t count = pick(opt.count, 100);
    const testkit::OpGenSpec spec{4, 4, 1, 0};
    const DecidableSet zero = DecidableSet::from_list({FinSeq{0}});
    for (std::size_t k = 0; k < count; ++k) {
      const CovWitness w = cov_from_brouwer(FinSeq{}, testkit::gen_random_op(spec, rng));
      const auto v = check_cover(FinSeq{}, zero, w);
      rec.expect(v == Verdict::no, [&] { return "witness " + describe(w.shape()) + " covers {<0>}: " + to_string(v); });
    }
    std::size_t covered = 0;
    for (std::size_t k = 0; k < count; ++k) {
      const CovWitness w = cov_from_brouwer(FinSeq{}, testkit::gen_random_op(spec, rng));
      // Half the sets are cut from the witness itself so that both verdicts occur.
      std::vector<AddrPattern> u;
      if (k % 2 == 0) {
        for (const auto& a : testkit::random_finite_set(rng, 5, 3, 4)) u.push_back(AddrPattern::exact(a));
      } else {
        for (const auto& p : w.denoted_patterns()) {
          const auto cut = std::uniform_int_distribution<std::size_t>(0, p.size())(rng);
          u.emplace_back(std::vector<PatternStep>(p.steps().begin(), p.steps().begin() + static_cast<std::ptrdiff_t>(cut)));
        }
        if (u.size() > 1 && std::bernoulli_distribution(0.3)(rng)) u.erase(u.begin());
      }
      const DecidableSet set = DecidableSet::from_patterns(u);
      const Nat height = w.shape().height();
      const auto direct = check_cover(FinSeq{}, set, w);
      const auto closed = check_cover(FinSeq{}, ext_closure_listing(set, height), w);
      // Brute force: every listed instance, with families listed past every breakpoint.
      Nat cutoff = default_expansion_cutoff(w.shape());
      for (const auto& p : u) {
        for (const auto& s : p.steps()) cutoff = std::max(cutoff, s.lo + 2);
      }
      const auto listed = w.denoted(cutoff);
      const bool oracle = std::all_of(listed.begin(), listed.end(), [&](const FinSeq& a) { return ext_member(set, a); });
      covered += oracle;
      rec.expect(direct == closed && direct == (oracle ? Verdict::yes : Verdict::no), [&] {
        return "set #" + std::to_string(k) + " witness " + describe(w.shape()) + ": direct " + to_string(direct) +
               ", closure " + to_string(closed) + ", brute force " + (oracle ? "yes" : "no");
      });
    }
    rec.expect(covered > 0 && covered < count, [&] { return "cover corpus is one-sided: " + std::to_string(covered); });
  });
}

SuiteResult cbar_function(const SuiteOptions& opt) {
  return timed("cbar-function", [&](Recorder& rec) {
    Rng rng(opt.seed ^ 0x94d049bb133111ebULL);
    const std::size_t count = pick(opt.count, 100);
    const std::size_t samples = pick(opt.samples, 50);
    for (std::size_t k = 0; k < count; ++k) {
      const BrouwerOp op = testkit::gen_random_op(default_spec(), rng);
      const auto tag = [&] { return "c-bar#" + std::to_string(k) + " " + describe(op); };
      const CBar p = CBar::from_brouwer(op);
      const ContinuousFn f = function_from_cbar(p);
      const Nat height = testkit::oracle_height(op);
      rec.expect(same_op(skeleton(*f.realiser()), skeleton(op)),
                 [&] { return tag() + ": realiser bar differs from the witness bar"; });
      for (const auto& alpha : testkit::random_points(rng, samples, 5)) {
        const Nat depth = eval(p.witness(), alpha).modulus;
        const Nat value = f.apply(alpha);
        const Nat oracle = testkit::oracle_max_change(p, alpha, height + 3);
        rec.expect(depth <= height && value == oracle && eval(*f.realiser(), alpha).value == value, [&] {
          return tag() + ": at " + alpha.to_string() + " stop depth " + std::to_string(depth) + ", value " +
                 std::to_string(value) + ", oracle " + std::to_string(oracle);
        });
      }
    }
  });
}

std::vector<std::string> suite_names() {
  return {"neighbourhood-law", "cov-roundtrip",      "realiser-extraction", "commuting-diagram",
          "modulus-vs-oracle", "cbar-modulus",       "cover-certificates",  "cbar-function"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> table{
      {"neighbourhood-law", neighbourhood_law},     {"cov-roundtrip", cov_roundtrip},
      {"realiser-extraction", realiser_extraction}, {"commuting-diagram", commuting_diagram},
      {"modulus-vs-oracle", modulus_vs_oracle},     {"cbar-modulus", cbar_modulus},
      {"cover-certificates", cover_certificates},   {"cbar-function", cbar_function}};
  const auto it = table.find(name);
  if (it == table.end()) throw SchemaError("unknown suite \"" + name + "\"");
  return it->second(opt);
}

}  // namespace baire::suites
