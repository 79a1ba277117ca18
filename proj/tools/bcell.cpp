// bcell: generalized Robinson-Schensted cells and Kazhdan-Lusztig cells of type B_n.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#include "bcell/cell_reps.hpp"
#include "bcell/io.hpp"
#include "bcell/kl_store.hpp"
#include "bcell/tableau.hpp"
#include "bcell/verify.hpp"

using namespace bcell;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 3;
  std::string order = "asymptotic";
  int c = 1;
  int d = 1;
  std::string format = "text";
  std::string cache_dir;
  std::string tier = "fast";
  int threads = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OrderSpec order_of(const RunConfig& cfg) {
  if (cfg.order == "asymptotic") return OrderSpec::asymptotic();
  return OrderSpec::weighted(cfg.c, cfg.d);
}

int rank_budget(const RunConfig& cfg) { return cfg.tier == "slow" ? kKLMaxRank : 4; }

void check_rank(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > rank_budget(cfg)) {
    throw UsageError("--n " + std::to_string(cfg.n) + " outside the " + cfg.tier + " tier budget 1.." +
                     std::to_string(rank_budget(cfg)));
  }
}

std::optional<std::filesystem::path> cache_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv("BCELL_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
  return std::nullopt;
}

KLStore store_for(const RunConfig& cfg, const OrderSpec& spec) {
  check_rank(cfg);
  auto group = std::make_shared<const Group>(Rank(cfg.n));
  return load_or_build(group, spec, cache_dir(cfg), BuildMode::parallel, std::cerr);
}

bool looks_like_word(const std::string& text) { return text.find_first_of("ts") != std::string::npos; }

SignedPermutation parse_element(const std::string& text, int n_hint, bool have_n) {
  if (looks_like_word(text)) {
    if (!have_n) throw UsageError("a word needs --n to fix the rank");
    auto word = parse_word(n_hint, text);
    return from_word(n_hint, word);
  }
  auto w = parse_window(text);
  if (have_n && w.rank() != n_hint) throw UsageError("window rank differs from --n");
  return w;
}

std::string word_text(const SignedPermutation& w) {
  const auto word = reduced_word(w);
  return word.empty() ? "1" : format_word(word);
}

int cmd_rs(const RunConfig& cfg, const std::string& element, bool have_n) {
  const auto w = parse_element(element, cfg.n, have_n);
  const auto pair = rs_insert(w);
  if (cfg.format == "json") {
    nlohmann::json out{{"format", "bcell-rs/1"},
                       {"element", format_window(w)},
                       {"A", format_bitableau(pair.a)},
                       {"B", format_bitableau(pair.b)},
                       {"shape", shape_to_json(pair.a.shape())}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "element  " << format_window(w) << "\n";
    std::cout << "A        " << format_bitableau(pair.a) << "\n";
    std::cout << "B        " << format_bitableau(pair.b) << "\n";
    std::cout << "shape    " << format_bipartition(pair.a.shape()) << "\n";
  }
  return kExitOk;
}

int cmd_cells(const RunConfig& cfg) {
  const auto spec = order_of(cfg);
  const auto store = store_for(cfg, spec);
  const auto cells = left_cells(store);
  if (cfg.format == "json") {
    std::cout << cells_to_json(store, cells).dump(2) << "\n";
    return kExitOk;
  }
  const Group& g = store.group();
  std::cout << "# W_" << g.rank() << ", order " << spec.name() << ", " << cells.size() << " left cells\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::cout << c;
    if (spec.kind() == OrderKind::asymptotic) {
      std::cout << "  " << format_bipartition(rs_insert(g.element(cells.cells[c].front())).b.shape());
    }
    std::cout << "  {";
    for (std::size_t k = 0; k < cells.cells[c].size(); ++k) {
      std::cout << (k ? ", " : "") << word_text(g.element(cells.cells[c][k]));
    }
    std::cout << "}\n";
  }
  return kExitOk;
}

int cmd_klpoly(const RunConfig& cfg, const std::string& y_text, const std::string& w_text) {
  const auto spec = order_of(cfg);
  const auto y_el = parse_element(y_text, cfg.n, true);
  const auto w_el = parse_element(w_text, cfg.n, true);
  const auto store = store_for(cfg, spec);
  const Group& g = store.group();
  const Index y = g.index_of(y_el);
  const Index w = g.index_of(w_el);
  nlohmann::json out{{"format", "bcell-klpoly/1"},
                     {"y", format_window(y_el)},
                     {"w", format_window(w_el)},
                     {"order", spec.to_json()},
                     {"bruhat_leq", g.bruhat_leq(y, w)},
                     {"pstar", store.pstar(y, w).format()},
                     {"p", store.p(y, w).format()}};
  nlohmann::json ms = nlohmann::json::object();
  for (Generator s : generators(g.rank())) {
    if (g.is_left_descent(s, y) && !g.is_left_descent(s, w) && y != w && g.bruhat_leq(y, w)) {
      ms[s.name()] = store.m(s, y, w).format();
    }
  }
  out["m"] = ms;
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "P*(y,w) = " << out["pstar"].get<std::string>() << "\n";
  std::cout << "P(y,w)  = " << out["p"].get<std::string>() << "\n";
  for (const auto& [name, value] : ms.items()) std::cout << "M^" << name << "(y,w) = " << value.get<std::string>() << "\n";
  return kExitOk;
}

struct CharacterRun {
  std::vector<ConjugacyClass> classes;
  std::vector<CellIdentification> ids;
  std::vector<std::vector<Index>> members;
};

CharacterRun run_characters(const KLStore& store) {
  const Group& g = store.group();
  const auto cells = left_cells(store);
  CharacterRun run;
  run.classes = conjugacy_classes(g);
  const auto table = character_table(g, run.classes);
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<CellIdentification> ids(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) ids[c] = identify_cell(store, cells, c, run.classes, table);
  std::map<Bipartition, std::size_t> shape_rank;
  const auto bps = bipartitions(g.rank());
  for (std::size_t i = 0; i < bps.size(); ++i) shape_rank[bps[i]] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return shape_rank[ids[a].shape] < shape_rank[ids[b].shape]; });
  for (auto c : order) {
    run.ids.push_back(ids[c]);
    run.members.push_back(cells.cells[c]);
  }
  return run;
}

int cmd_chars(const RunConfig& cfg) {
  if (cfg.order != "asymptotic") throw UsageError("chars identifies cells under the asymptotic order");
  const auto store = store_for(cfg, OrderSpec::asymptotic());
  const auto run = run_characters(store);
  const bool ok = std::all_of(run.ids.begin(), run.ids.end(), [](const auto& id) { return id.ok(); });
  if (cfg.format == "json") {
    std::cout << characters_to_json(store.group(), run.classes, run.ids, run.members).dump(2) << "\n";
  } else {
    for (const auto& id : run.ids) {
      std::cout << format_bipartition(id.shape) << "  dim " << id.dimension << "  affords ";
      if (id.matches.size() == 1) {
        std::cout << format_bipartition(id.matches.front());
      } else {
        std::cout << id.matches.size() << " candidates";
      }
      std::cout << (id.ok() ? "  ok" : "  MISMATCH") << "\n";
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

const std::vector<std::string> kSuites = {"pstar-basic", "m-conditions",        "bar-invariance", "longest-element",
                                          "asymptotic-theorems", "parabolic", "transport",      "rs-cells",
                                          "specialization", "characters",       "cosets",         "coset-intervals",
                                          "rs-bijection"};

std::vector<Report> run_suite(const RunConfig& cfg, const std::string& suite) {
  if (suite == "cosets" || suite == "coset-intervals" || suite == "rs-bijection") {
    check_rank(cfg);
    const Group g{Rank(cfg.n)};
    if (suite == "cosets") return {verify_coset_structure(g)};
    if (suite == "coset-intervals") return {verify_coset_intervals(g)};
    return {verify_rs_bijection(g)};
  }
  const auto spec = order_of(cfg);
  const auto store = store_for(cfg, spec);
  const Group& g = store.group();
  const auto cells = left_cells(store);
  const bool asym = spec.kind() == OrderKind::asymptotic;
  auto need_asym = [&] {
    if (!asym) throw UsageError("suite '" + suite + "' needs --order asymptotic");
  };
  if (suite == "pstar-basic") return {verify_pstar_basic(store)};
  if (suite == "m-conditions") return {verify_m_conditions(store)};
  if (suite == "bar-invariance") {
    if (g.rank() > kRTableMaxRank) throw UsageError("bar-invariance is limited to n <= 4");
    return {verify_bar_invariance(store, RTable(store))};
  }
  if (suite == "longest-element") return {verify_longest_identities(store)};
  if (suite == "asymptotic-theorems") {
    need_asym();
    return {verify_asymptotic_theorems(store, cells)};
  }
  if (suite == "parabolic") {
    std::vector<Report> out;
    const GeneratorSet all = all_generators(g.rank());
    for (int drop = 0; drop < g.rank(); ++drop) {
      auto rep = verify_parabolic(store, cells, all & ~(GeneratorSet{1} << drop));
      rep.name += " (J without " + (drop == 0 ? std::string("t") : "s" + std::to_string(drop)) + ")";
      out.push_back(std::move(rep));
    }
    return out;
  }
  if (suite == "transport") {
    need_asym();
    std::unique_ptr<RTable> r;
    if (g.rank() <= kRTableMaxRank) r = std::make_unique<RTable>(store);
    return {verify_transport(store, cells, r.get())};
  }
  if (suite == "rs-cells") {
    need_asym();
    return {verify_rs_cells(store, cells)};
  }
  if (suite == "specialization") {
    need_asym();
    const int c = g.rank() * g.rank();
    RunConfig weighted = cfg;
    const auto wstore = store_for(weighted, OrderSpec::weighted(c, 1));
    return {compare_partitions("specialization (c = " + std::to_string(c) + ", d = 1)", cells, left_cells(wstore))};
  }
  if (suite == "characters") {
    need_asym();
    const auto run = run_characters(store);
    Report rep{"characters"};
    for (const auto& id : run.ids) {
      rep.check(id.ok(), [&] { return "cell of shape " + format_bipartition(id.shape) + " not identified"; });
    }
    return {rep};
  }
  throw UsageError("unknown suite '" + suite + "'");
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") {
    const bool asym = cfg.order == "asymptotic";
    for (const auto& s : kSuites) {
      const bool asym_only = s == "asymptotic-theorems" || s == "transport" || s == "rs-cells" ||
                             s == "specialization" || s == "characters";
      if (asym_only && !asym) continue;
      if ((s == "bar-invariance" || s == "coset-intervals") && cfg.n > kRTableMaxRank) continue;
      names.push_back(s);
    }
  } else {
    names.push_back(suite);
  }
  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& name : names) {
    for (const auto& rep : run_suite(cfg, name)) {
      ok = ok && rep.passed();
      if (cfg.format == "json") {
        out.push_back({{"suite", rep.name},
                       {"passed", rep.passed()},
                       {"checks", rep.checks},
                       {"failures", rep.failures},
                       {"counterexamples", rep.counterexamples}});
        continue;
      }
      std::cout << (rep.passed() ? "PASS  " : "FAIL  ") << rep.name << "  (" << rep.checks << " checks, "
                << rep.failures << " failures)\n";
      for (const auto& c : rep.counterexamples) std::cout << "      " << c << "\n";
    }
  }
  if (cfg.format == "json") std::cout << nlohmann::json{{"format", "bcell-verify/1"}, {"reports", out}}.dump(2) << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Robinson-Schensted and Kazhdan-Lusztig cells of type B_n"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Rank n of W_n")->check(CLI::Range(1, kMaxRank));
    sub->add_option("--order", cfg.order, "Parameter order")->check(CLI::IsMember({"asymptotic", "weighted"}));
    sub->add_option("--c", cfg.c, "Weight exponent of t (weighted order)")->check(CLI::PositiveNumber);
    sub->add_option("--d", cfg.d, "Weight exponent of s_i (weighted order)")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "Directory for KL table caches (BCELL_CACHE_DIR overrides)");
    sub->add_option("--tier", cfg.tier, "Rank budget")->check(CLI::IsMember({"fast", "slow"}));
    sub->add_option("--threads", cfg.threads, "Worker thread cap")->check(CLI::NonNegativeNumber);
  };

  std::string element;
  auto* rs = app.add_subcommand("rs", "Generalized RS bitableaux of an element");
  add_common(rs);
  rs->add_option("element", element, "Window \"-4,3,6,-1,7,-2,5\" or word \"t s1\" (words need --n)")->required();

  auto* cells = app.add_subcommand("cells", "Left cells of W_n");
  add_common(cells);

  std::string y_text;
  std::string w_text;
  auto* klpoly = app.add_subcommand("klpoly", "P*, P and M polynomials for a pair y <= w");
  add_common(klpoly);
  klpoly->add_option("--y", y_text, "Lower element")->required();
  klpoly->add_option("--w", w_text, "Upper element")->required();

  auto* chars = app.add_subcommand("chars", "Characters afforded by the left cells");
  add_common(chars);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run consistency suites");
  add_common(verify);
  verify->add_option("--suite", suite, "Suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    if (cfg.order == "weighted" && (cfg.c < 1 || cfg.d < 1)) throw UsageError("weighted order needs --c, --d >= 1");
    const bool have_n = rs->count("--n") > 0;
    if (*rs) return cmd_rs(cfg, element, have_n);
    if (*cells) return cmd_cells(cfg);
    if (*klpoly) return cmd_klpoly(cfg, y_text, w_text);
    if (*chars) return cmd_chars(cfg);
    if (*verify) {
      if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw UsageError("unknown suite '" + suite + "'");
      }
      return cmd_verify(cfg, suite);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
