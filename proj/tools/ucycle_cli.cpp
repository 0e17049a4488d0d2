// ucycle: generate, verify and analyse universal cycles on multisets.
//
//   ucycle gen    --n N --t T [--method inductive|doubling|search|auto]
//                 [--kind multiset|subset] [--out FILE] [--subset-input FILE]
//                 [--budget N] [--provenance FILE]
//   ucycle verify --input FILE [--kind multiset|subset]
//   ucycle pairs  --input FILE
//   ucycle count  --n N --t T [--budget N] [--reflect] [--threads K]
//
// Exit codes: 0 ok, 1 verification failed / infeasible, 2 usage or
// inadmissible parameters, 3 budget exhausted. Payloads on stdout,
// diagnostics on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ucycle/combinatorics.hpp"
#include "ucycle/doubling.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/inductive.hpp"
#include "ucycle/search.hpp"
#include "ucycle/ucy_io.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

const std::map<std::string, Family> kKinds{{"multiset", Family::multiset},
                                           {"subset", Family::subset}};

// --budget beats UCYCLE_BUDGET beats the default.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("UCYCLE_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("UCYCLE_BUDGET", "must be a positive integer, got '" +
                                                    std::string(env) + "'");
  }
  return fallback;
}

struct GenArgs {
  int n = 0;
  int t = 0;
  std::string method = "auto";
  std::string kind = "multiset";
  std::string out;
  std::string subset_input;
  std::optional<std::uint64_t> budget;
  std::string provenance;
};

int cmd_gen(const GenArgs& a) {
  const Family family = kKinds.at(a.kind);
  if (a.n < 1) {
    std::cerr << "error: --n must be positive\n";
    return kUsage;
  }
  if (a.t < 2 || a.t > 4) {
    std::cerr << "error: --t must be 2, 3 or 4\n";
    return kUsage;
  }
  if (!admissible(a.n, a.t, family)) {
    std::cerr << "error: inadmissible: n=" << a.n << " does not divide the number of " << a.t
              << "-" << to_string(family) << "s (" << family_size(a.n, a.t, family) << ")\n";
    return kUsage;
  }
  const std::uint64_t budget = resolve_budget(a.budget, kDefaultWitnessBudget);

  std::string method = a.method;
  if (method == "auto") {
    if (family == Family::multiset && a.t == 3 && a.n % 3 == 1 && a.n >= 4) method = "inductive";
    else if (family == Family::multiset && a.t == 3 && a.n % 2 == 0 && a.n >= 8) method = "doubling";
    else method = "search";
  }
  if ((method == "inductive" || method == "doubling") && (family != Family::multiset || a.t != 3)) {
    std::cerr << "error: --method " << method << " builds 3-multiset cycles only\n";
    return kUsage;
  }
  if (method == "doubling" && a.n % 2 == 1) {
    std::cerr << "warning: doubling handles even n only; using search for n=" << a.n << "\n";
    method = "search";
  }
  if (!a.subset_input.empty() && method != "doubling") {
    std::cerr << "error: --subset-input only applies to the doubling method\n";
    return kUsage;
  }
  if (!a.provenance.empty() && method != "inductive") {
    std::cerr << "error: --provenance only applies to the inductive method\n";
    return kUsage;
  }

  std::optional<CycleWord> word;
  std::string detail;
  if (method == "inductive") {
    if (a.n == 4) {
      word = construct_inductive(4);
      if (!a.provenance.empty()) std::ofstream(a.provenance) << "";
    } else {
      const auto st = construct_inductive_traced(a.n, budget);
      word = st.cycle();
      if (!a.provenance.empty()) {
        std::ofstream f(a.provenance);
        f << format_provenance(st.provenance);
        if (!f) throw std::runtime_error("cannot write " + a.provenance);
      }
      int repaired = 0;
      for (const auto& s : st.provenance) repaired += s.path == StepPath::repaired;
      detail = " steps=" + std::to_string(st.provenance.size()) +
               " repaired=" + std::to_string(repaired);
    }
  } else if (method == "doubling") {
    std::optional<CycleWord> input;
    if (!a.subset_input.empty()) {
      const UcyFile f = read_ucy(a.subset_input);
      if (f.t != 3 || f.n != a.n) {
        std::cerr << "error: --subset-input must hold a 3-subset cycle over [" << a.n
                  << "], file says n=" << f.n << " t=" << f.t << "\n";
        return kUsage;
      }
      input = f.word;
    }
    const auto tr = construct_doubling_traced(a.n, input, budget);
    word = tr.x_double_prime;
    detail = " missing_pairs=" + std::to_string(tr.index.missing.size());
  } else if (method == "search") {
    SearchConstraints c;
    c.node_budget = budget;
    const auto o = find_ucycle(a.n, a.t, family, c);
    word = o.word;
    detail = " strategy=\"" + o.strategy + "\" nodes=" + std::to_string(o.nodes);
  } else {
    std::cerr << "error: unknown method " << method << "\n";
    return kUsage;
  }

  // no unverified word reaches the output
  const auto report = verify_ucycle(*word, a.t, family);
  if (!report.ok) {
    std::cerr << "error: generated word failed verification\n" << format_report(report);
    return kFailed;
  }
  if (a.out.empty()) {
    std::cout << format_ucy(*word, a.t);
  } else {
    write_ucy(a.out, *word, a.t);
  }
  std::cerr << "generated " << to_string(family) << " ucycle n=" << a.n << " t=" << a.t
            << " length=" << word->size() << " method=" << method << detail << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& kind) {
  const UcyFile f = read_ucy(input);
  const auto report = verify_ucycle(f.word, f.t, kKinds.at(kind));
  std::cout << format_report(report);
  return report.ok ? kOk : kFailed;
}

int cmd_pairs(const std::string& input) {
  const UcyFile f = read_ucy(input);
  if (f.t != 3) {
    std::cerr << "error: pairs needs a 3-subset cycle, file has t=" << f.t << "\n";
    return kFailed;
  }
  const auto idx = pair_index(f.word);
  std::cout << "n: " << f.n << '\n'
            << "present_count: " << idx.present.size() << '\n'
            << "missing_count: " << idx.missing.size() << '\n'
            << "missing: " << idx.missing.to_string() << '\n'
            << "matching: " << (idx.missing.is_matching() ? "true" : "false") << '\n';
  return kOk;
}

int cmd_count(int n, int t, std::optional<std::uint64_t> budget_flag, bool reflect,
              unsigned threads) {
  if (n < 1 || t < 2 || t > 4) {
    std::cerr << "error: count needs n >= 1 and t in 2..4\n";
    return kUsage;
  }
  if (!admissible_multiset(n, t)) {
    std::cerr << "error: inadmissible: n=" << n << " does not divide C(n+t-1,t) = "
              << multiset_count(n, t) << "\n";
    return kUsage;
  }
  CountOptions o;
  o.node_budget = resolve_budget(budget_flag, kDefaultCountBudget);
  o.threads = threads;
  const auto r = count_distinct(n, t, o);
  std::cout << format_count(r) << '\n';
  if (!r.exhausted) {
    std::cerr << "budget of " << o.node_budget << " nodes exhausted; counts are partial\n";
    return kBudget;
  }
  if (reflect) {
    std::cerr << "distinct up to rotation, relabeling and reflection: " << r.count_also_reflect
              << "\n";
  } else {
    std::cerr << "distinct up to rotation and relabeling: " << r.count_rot_relabel << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal cycles on t-multisets and t-subsets"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a verified ucycle");
  g->add_option("--n", gen.n, "alphabet size")->required();
  g->add_option("--t", gen.t, "window size")->required();
  g->add_option("--method", gen.method)
      ->check(CLI::IsMember({"inductive", "doubling", "search", "auto"}));
  g->add_option("--kind", gen.kind)->check(CLI::IsMember({"multiset", "subset"}));
  g->add_option("--out", gen.out, "write the .ucy here instead of stdout");
  g->add_option("--subset-input", gen.subset_input, "3-subset .ucy for doubling");
  g->add_option("--budget", gen.budget, "search node budget")->check(CLI::PositiveNumber);
  g->add_option("--provenance", gen.provenance, "per-step report for inductive");

  std::string v_input, v_kind = "multiset";
  auto* v = app.add_subcommand("verify", "check a .ucy file");
  v->add_option("--input", v_input)->required();
  v->add_option("--kind", v_kind)->check(CLI::IsMember({"multiset", "subset"}));

  std::string p_input;
  auto* p = app.add_subcommand("pairs", "missing adjacent pairs of a 3-subset ucycle");
  p->add_option("--input", p_input)->required();

  int c_n = 0, c_t = 0;
  std::optional<std::uint64_t> c_budget;
  bool c_reflect = false;
  unsigned c_threads = 1;
  auto* c = app.add_subcommand("count", "count distinct multiset ucycles");
  c->add_option("--n", c_n)->required();
  c->add_option("--t", c_t)->required();
  c->add_option("--budget", c_budget)->check(CLI::PositiveNumber);
  c->add_flag("--reflect", c_reflect, "also identify reversed cycles");
  c->add_option("--threads", c_threads)->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*v) return cmd_verify(v_input, v_kind);
    if (*p) return cmd_pairs(p_input);
    if (*c) return cmd_count(c_n, c_t, c_budget, c_reflect, c_threads);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InadmissibleError& e) {
    std::cerr << "error: inadmissible: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
