#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "bcell/io.hpp"
#include "oracle.hpp"

using namespace bcell;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  TempDir() {
    path = fs::temp_directory_path() / ("bcell-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path path;
  static inline int counter = 0;
};

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded; returns exit status and stdout.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + BCELL_CLI + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), k);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::shared_ptr<const Group> group(int n) { return std::make_shared<const Group>(Rank(n)); }

}  // namespace

TEST_CASE("cache file names") {
  CHECK(cache_file_name(3, OrderSpec::asymptotic()) == "kl-n3-asymptotic.txt");
  CHECK(cache_file_name(3, OrderSpec::weighted(1, 2)) == "kl-n3-weighted-1-2.txt");
}

TEST_CASE("store round trip through text") {
  for (const auto& spec : {OrderSpec::asymptotic(), OrderSpec::weighted(3, 2)}) {
    const auto g = group(3);
    const auto store = KLStore::build(g, spec);
    std::stringstream buffer;
    write_store(buffer, store);
    std::string reason;
    const auto back = read_store(buffer, g, spec, reason);
    REQUIRE_MESSAGE(back.has_value(), reason);
    CHECK(*back == store);
    std::stringstream again;
    write_store(again, *back);
    std::stringstream first;
    write_store(first, store);
    CHECK(again.str() == first.str());
  }
}

TEST_CASE("stale or corrupt caches are rejected") {
  const auto g = group(2);
  const auto spec = OrderSpec::asymptotic();
  std::stringstream buffer;
  write_store(buffer, KLStore::build(g, spec));
  const std::string text = buffer.str();
  std::string reason;
  {
    std::string bumped = text;
    bumped.replace(0, std::string("bcell-kl-cache 1").size(), "bcell-kl-cache 0");
    std::stringstream in(bumped);
    CHECK_FALSE(read_store(in, g, spec, reason).has_value());
    CHECK(reason.find("header") != std::string::npos);
  }
  {
    std::stringstream in(text);
    CHECK_FALSE(read_store(in, g, OrderSpec::weighted(1, 2), reason).has_value());
  }
  {
    std::stringstream in(text);
    CHECK_FALSE(read_store(in, group(3), spec, reason).has_value());
  }
  {
    std::stringstream in(text.substr(0, text.size() / 2));
    CHECK_FALSE(read_store(in, g, spec, reason).has_value());
  }
}

TEST_CASE("load_or_build writes, reuses and repairs the cache") {
  TempDir dir;
  const auto g = group(3);
  const auto spec = OrderSpec::weighted(1, 2);
  std::stringstream warn;
  const auto cold = load_or_build(g, spec, dir.path, BuildMode::parallel, warn);
  const auto file = dir.path / cache_file_name(3, spec);
  CHECK(fs::exists(file));
  CHECK(warn.str().empty());
  const auto warm = load_or_build(g, spec, dir.path, BuildMode::parallel, warn);
  CHECK(warm == cold);
  CHECK(left_cells(warm).cells == left_cells(cold).cells);
  CHECK(warn.str().empty());

  std::string text;
  {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  text.replace(0, std::string("bcell-kl-cache 1").size(), "bcell-kl-cache 99");
  {
    std::ofstream out(file);
    out << text;
  }
  const auto repaired = load_or_build(g, spec, dir.path, BuildMode::parallel, warn);
  CHECK(repaired == cold);
  CHECK(warn.str().find("warning") != std::string::npos);
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "bcell-kl-cache 1");
}

TEST_CASE("cells JSON") {
  const auto store = KLStore::build(group(3), OrderSpec::asymptotic());
  const auto cells = left_cells(store);
  const auto j = cells_to_json(store, cells);
  CHECK(j["format"] == "bcell-cells/1");
  CHECK(j["n"] == 3);
  CHECK(j["order"]["kind"] == "asymptotic");
  CHECK(j["cells"].size() == 20);
  CHECK(j["cells"][0]["elements"] == nlohmann::json::array({"1,2,3"}));
  CHECK(j["cells"][0]["shape"] == nlohmann::json::parse("[[3],[]]"));
  const auto w = cells_to_json(KLStore::build(group(3), OrderSpec::weighted(1, 2)),
                               left_cells(KLStore::build(group(3), OrderSpec::weighted(1, 2))));
  CHECK_FALSE(w["cells"][0].contains("shape"));
}

TEST_CASE("CLI: rs") {
  const auto r = cli("rs -- -4,3,6,-1,7,-2,5");
  CHECK(r.status == 0);
  CHECK(r.out.find("A        3,5,7;6|1,2;4") != std::string::npos);
  CHECK(r.out.find("B        2,3,5;7|1,6;4") != std::string::npos);
  const auto single = cli("rs 1,2,3 --format json");
  CHECK(single.status == 0);
  const auto j = nlohmann::json::parse(single.out);
  CHECK(j["A"] == "1,2,3|-");
  CHECK(j["B"] == "1,2,3|-");
  const auto by_word = cli("rs --n 3 \"t s1\" --format json");
  const auto by_window = cli("rs 2,-1,3 --format json");
  CHECK(by_word.status == 0);
  CHECK(nlohmann::json::parse(by_word.out) == nlohmann::json::parse(by_window.out));
  CHECK(cli("rs 1,1,2").status == 2);
  CHECK(cli("rs \"t s1\"").status == 2);
}

TEST_CASE("CLI: cells reproduce the golden tables") {
  const auto golden = oracle::load_json("b3_weighted_cells.json");
  const Group g{Rank(3)};
  for (const auto& block : golden["blocks"]) {
    const auto r = cli("cells --n 3 --order weighted --c " + std::to_string(block["c"].get<int>()) + " --d " +
                       std::to_string(block["d"].get<int>()) + " --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    std::set<std::set<Index>> got;
    for (const auto& cell : j["cells"]) {
      std::set<Index> members;
      for (const auto& w : cell["elements"]) members.insert(g.index_of(parse_window(Rank(3), w.get<std::string>())));
      got.insert(members);
    }
    CHECK(got == oracle::cells_from_words(g, block["cells"]));
  }
  const auto asym = cli("cells --n 3 --format json");
  REQUIRE(asym.status == 0);
  const auto j = nlohmann::json::parse(asym.out);
  CHECK(j["cells"].size() == 20);
}

TEST_CASE("CLI: output is deterministic and the cache is transparent") {
  TempDir dir;
  const auto cold = cli("cells --n 3 --format json");
  const auto first = cli("cells --n 3 --format json --cache-dir " + dir.path.string());
  const auto second = cli("cells --n 3 --format json --cache-dir " + dir.path.string());
  CHECK(fs::exists(dir.path / "kl-n3-asymptotic.txt"));
  CHECK(cold.out == first.out);
  CHECK(first.out == second.out);
  TempDir env_dir;
  const auto via_env = cli("cells --n 2", "BCELL_CACHE_DIR=" + env_dir.path.string());
  CHECK(via_env.status == 0);
  CHECK(fs::exists(env_dir.path / "kl-n2-asymptotic.txt"));
}

TEST_CASE("CLI: klpoly and chars") {
  const auto r = cli("klpoly --n 2 --y 1,2 --w -1,2");
  CHECK(r.status == 0);
  CHECK(r.out.find("V^-1") != std::string::npos);
  const auto c = cli("chars --n 3");
  CHECK(c.status == 0);
  CHECK(c.out.find("MISMATCH") == std::string::npos);
  const auto cj = cli("chars --n 2 --format json");
  CHECK(cj.status == 0);
  const auto j = nlohmann::json::parse(cj.out);
  CHECK(j["format"] == "bcell-characters/1");
  CHECK(j["cells"].size() == 6);
  for (const auto& cell : j["cells"]) CHECK(cell["identified"] == true);
}

TEST_CASE("CLI: verify and exit codes") {
  const auto r = cli("verify --n 3 --suite asymptotic-theorems");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
  CHECK(cli("verify --n 3").status == 0);
  CHECK(cli("verify --n 2 --order weighted --c 1 --d 2").status == 0);
  const auto j = cli("verify --n 2 --suite cosets --format json");
  CHECK(j.status == 0);
  CHECK(nlohmann::json::parse(j.out)["reports"][0]["passed"] == true);
  CHECK(cli("verify --n 3 --suite nonsense").status == 2);
  CHECK(cli("verify --n 3 --order weighted --suite rs-cells").status == 2);
  CHECK(cli("cells --n 5").status == 2);
  CHECK(cli("cells --n 0").status == 2);
  CHECK(cli("cells --n 3 --order other").status == 2);
  CHECK(cli("").status == 2);
}
