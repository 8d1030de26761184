#include <filesystem>
#include <fstream>
#include <sstream>

#include "check.hpp"
#include "gsc/cli/app.hpp"
#include "gsc/cli/cache.hpp"
#include "gsc/cli/expression.hpp"
#include "gsc/cli/format.hpp"
#include "gsc/stieltjes.hpp"
#include "json.hpp"

using namespace gsc;
using namespace gsc::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string text;
  Json json() const { return Json::parse(text); }
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "gsc");
  std::ostringstream os;
  int code = run(args, os);
  return {code, os.str()};
}

// Fresh path under the system temp directory, removed on scope exit.
struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& stem) {
    path = fs::temp_directory_path() / (stem + "-" + std::to_string(::getpid()) + ".jsonl");
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
  std::size_t lines() const {
    std::ifstream in(path);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) n += !line.empty();
    return n;
  }
};

}  // namespace

TEST_CASE("stieltjes over all residues") {
  auto r = call({"stieltjes", "--k", "1", "--modulus", "5", "--all", "--digits", "50", "--no-timestamps"});
  REQUIRE(r.code == kExitOk);
  Json j = r.json();
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 5);
  const auto ctx = PrecisionContext::with_digits(50);
  for (std::size_t a = 1; a <= 5; ++a) {
    const Json& rec = j[a - 1];
    CHECK(rec["kind"] == "stieltjes");
    CHECK(rec["method"] == "euler_maclaurin");
    CHECK(rec["a"] == a);
    CHECK(rec["q"] == 5);
    CHECK(rec["k"] == 1);
    CHECK(rec["digits"] == 50);
    CHECK_FALSE(rec.contains("created_at"));
    Real v = stieltjes_em(StieltjesKey{1, a, 5}, ctx).value;
    WorkingPrecision wp(ctx.working_digits());
    CHECK(rec["value"].get<std::string>() == to_fixed(v, 50));
  }
}

TEST_CASE("stieltjes direct and both") {
  auto r = call({"stieltjes", "--k", "0", "--modulus", "1", "--residue", "1", "--digits", "20", "--method", "both",
                 "--x-cut", "100000", "--no-timestamps"});
  REQUIRE(r.code == kExitOk);
  Json j = r.json();
  REQUIRE(j.size() == 2);
  CHECK(j[0]["method"] == "direct");
  CHECK(j[0]["x_cut"] == 100000);
  CHECK(j[0].contains("error_estimate"));
  CHECK(j[0]["digits"].get<unsigned>() < 20);
  CHECK(j[1]["method"] == "euler_maclaurin");
  CHECK(j[1]["value"].get<std::string>().rfind("0.5772156649015328606", 0) == 0);
}

TEST_CASE("timestamps are present unless suppressed") {
  auto r = call({"stieltjes", "--k", "0", "--modulus", "2", "--residue", "1", "--digits", "20"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.json()[0].contains("created_at"));
}

TEST_CASE("identical arguments give identical output") {
  std::vector<std::string> args{"verify", "--modulus", "4", "--identity", "all", "--trials", "3",
                                "--digits", "30", "--seed", "9", "--no-timestamps"};
  auto a = call(args);
  auto b = call(args);
  CHECK(a.code == kExitOk);
  CHECK(a.text == b.text);
  std::vector<std::string> rel{"relations", "--vector", "log_gamma(1/2);log_pi", "--coeff-bound", "100",
                               "--digits", "60", "--no-timestamps"};
  CHECK(call(rel).text == call(rel).text);
}

TEST_CASE("verify reports") {
  auto r = call({"verify", "--modulus", "5", "--identity", "all", "--trials", "10", "--digits", "50", "--seed", "42"});
  REQUIRE(r.code == kExitOk);
  Json j = r.json();
  CHECK(j["verdict"] == "PASS");
  CHECK(j["seed"] == "42");
  CHECK(j["digits"] == 50);
  REQUIRE(j["reports"].size() == 9);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["verdict"] == "PASS");
    CHECK(rep["seed"] == "42");
  }

  auto one = call({"verify", "--modulus", "3", "--identity", "lemma2", "--trials", "2", "--digits", "30"});
  CHECK(one.code == kExitOk);
  CHECK(one.json()["reports"].size() == 1);
}

TEST_CASE("relations") {
  auto probe = call({"relations", "--probe-conjecture", "--modulus", "5", "--coeff-bound", "10000", "--digits", "200"});
  REQUIRE(probe.code == kExitOk);
  Json p = probe.json();
  CHECK(p["mode"] == "probe_conjecture");
  CHECK(p["status"] == "excluded_at_bound");
  CHECK(p["flagged"] == false);
  CHECK(p["digits"] == 200);
  CHECK(p["norm_bound"] == "10000");
  CHECK(p["entries"].size() == 4);
  CHECK(p.contains("scope"));

  auto vec = call({"relations", "--vector", "log_gamma(1/4); log_gamma(3/4); log_pi; log_2", "--coeff-bound", "100",
                   "--digits", "80"});
  REQUIRE(vec.code == kExitOk);
  Json v = vec.json();
  CHECK(v["status"] == "found");
  CHECK(v["coefficients"] == Json::parse(R"(["2","2","-2","-1"])"));
  CHECK(v["verified_digits"] == 100);
}

TEST_CASE("lseries") {
  auto r = call({"lseries", "--modulus", "3", "--values", "1,-1,0", "--at", "1", "--digits", "30"});
  REQUIRE(r.code == kExitOk);
  Json j = r.json();
  CHECK(j["values"] == "(1,-1,0)");
  CHECK(j["pole"] == false);
  CHECK(j["value"]["re"].get<std::string>().rfind("0.6045997880780726168646927525", 0) == 0);

  auto pole = call({"lseries", "--modulus", "2", "--values", "1,1", "--at", "1", "--digits", "20"});
  REQUIRE(pole.code == kExitOk);
  Json pj = pole.json();
  CHECK(pj["pole"] == true);
  CHECK(pj["residue"]["re"].get<std::string>().rfind("1.000000", 0) == 0);

  auto cf = call({"lseries", "--modulus", "3", "--values", "1,-1,0", "--closed-form", "lp1", "--digits", "30"});
  REQUIRE(cf.code == kExitOk);
  Json c = cf.json();
  CHECK(c["closed_form"] == "lp1");
  CHECK(c["value"]["re"].get<std::string>().rfind("0.22266298696860150948666", 0) == 0);
  WorkingPrecision wp(40);
  CHECK(parse_real(c["residual"].get<std::string>()) < check::tol(28));

  auto cx = call({"lseries", "--modulus", "4", "--values", "1,0+1i,-1,0-1i", "--at", "2,1", "--digits", "20"});
  CHECK(cx.code == kExitOk);
}

TEST_CASE("csv output") {
  auto r = call({"stieltjes", "--k", "0", "--modulus", "3", "--all", "--digits", "15", "--format", "csv",
                 "--no-timestamps"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "kind,k,a,q,digits,value,method");
  CHECK(lines[1].rfind("stieltjes,0,1,3,15,", 0) == 0);

  auto v = call({"verify", "--modulus", "3", "--identity", "lemma2", "--trials", "2", "--digits", "20", "--format",
                 "csv", "--no-timestamps"});
  CHECK(v.text.rfind("identity_id,q,instances,max_residual,worst_case,digits,seed,verdict\n", 0) == 0);

  Json nested = Json::parse(R"({"a":{"b":"x,y"},"c":[1,2]})");
  CHECK(render(nested, OutputFormat::csv) == "a.b,c\n\"x,y\",1 2\n");
}

TEST_CASE("usage errors exit with 2 and a JSON error") {
  std::vector<std::vector<std::string>> bad{
      {"stieltjes", "--k", "1", "--modulus", "5", "--digits", "30"},
      {"stieltjes", "--k", "9", "--modulus", "5", "--all", "--digits", "30"},
      {"stieltjes", "--k", "1", "--modulus", "5", "--residue", "6", "--digits", "30"},
      {"stieltjes", "--k", "1", "--modulus", "5", "--all", "--digits", "5"},
      {"lseries", "--modulus", "3", "--values", "1,2", "--at", "2", "--digits", "20"},
      {"lseries", "--modulus", "3", "--values", "1,x,0", "--at", "2", "--digits", "20"},
      {"lseries", "--modulus", "3", "--values", "1,2,3", "--at", "1", "--closed-form", "lp0", "--digits", "20"},
      {"verify", "--modulus", "5", "--identity", "nope", "--digits", "20"},
      {"verify", "--modulus", "2", "--identity", "lemma3", "--digits", "20"},
      {"relations", "--vector", "log_gamma(1/2);", "--coeff-bound", "10", "--digits", "30"},
      {"relations", "--vector", "foo(1)", "--coeff-bound", "10", "--digits", "30"},
      {"relations", "--vector", "1;log_pi", "--coeff-bound", "0", "--digits", "30"},
      {"relations", "--probe-conjecture", "--modulus", "5", "--vector", "1;2", "--coeff-bound", "10", "--digits", "30"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : bad) {
    auto r = call(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    INFO("args: " << joined << "\noutput: " << r.text);
    CHECK(r.code == kExitUsage);
    Json j = Json::parse(r.text, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j.contains("error"));
    CHECK(j["exit_code"] == kExitUsage);
  }
}

TEST_CASE("precision refusals exit with 3") {
  auto r = call({"relations", "--vector", "log_gamma(1/4);log_gamma(3/4);log_pi;log_2", "--coeff-bound", "10000",
                 "--digits", "40"});
  CHECK(r.code == kExitPrecision);
  CHECK(r.json()["exit_code"] == kExitPrecision);
}

TEST_CASE("help exits cleanly") {
  auto r = call({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.text.find("stieltjes") != std::string::npos);
}

TEST_CASE("cache records round trip bit-exactly") {
  CacheRecord rec;
  rec.kind = "stieltjes";
  rec.k = 2;
  rec.a = 3;
  rec.q = 7;
  rec.digits = 40;
  rec.value = "-0.0012345678901234567890123456789012345678";
  rec.method = "euler_maclaurin";
  rec.created_at = "2026-01-01T00:00:00Z";
  CacheRecord back = from_json_line(to_json_line(rec));
  CHECK(back.value == rec.value);
  CHECK(back.same_key(rec));
  CHECK(back.digits == 40);
  CHECK(back.method == rec.method);
  CHECK(back.created_at == rec.created_at);
  CHECK_THROWS(from_json_line("{not json"));

  TempFile tmp("gsc-cache-unit");
  ValueCache cache(tmp.path.string());
  CHECK(cache.load().empty());
  cache.store(rec);
  CacheRecord better = rec;
  better.digits = 60;
  better.value = "-0.001234567890123456789012345678901234567890123456789012345678";
  cache.store(better);
  {
    std::ofstream junk(tmp.path, std::ios::app);
    junk << "garbage line\n";
  }
  auto all = cache.load();
  REQUIRE(all.size() == 2);
  CHECK(all[0].value == rec.value);
  auto hit = cache.lookup(rec, 30);
  REQUIRE(hit.has_value());
  CHECK(hit->digits == 60);
  CHECK(hit->value == better.value);
  CHECK_FALSE(cache.lookup(rec, 61).has_value());
  CacheRecord other = rec;
  other.a = 4;
  CHECK_FALSE(cache.lookup(other, 10).has_value());
}

TEST_CASE("the CLI reuses cached values") {
  TempFile tmp("gsc-cache-cli");
  std::vector<std::string> args{"stieltjes", "--k", "1", "--modulus", "3", "--all", "--digits", "30",
                                "--no-timestamps", "--cache", tmp.path.string()};
  auto first = call(args);
  REQUIRE(first.code == kExitOk);
  CHECK(tmp.lines() == 3);
  auto second = call(args);
  CHECK(second.text == first.text);
  CHECK(tmp.lines() == 3);
  // A request for more digits than cached computes and appends.
  args[7] = "40";
  auto third = call(args);
  REQUIRE(third.code == kExitOk);
  CHECK(tmp.lines() == 6);

  auto rel = call({"relations", "--vector", "euler_gamma;1", "--coeff-bound", "100", "--digits", "40",
                   "--cache", tmp.path.string()});
  CHECK(rel.code == kExitOk);
  CHECK(tmp.lines() == 7);
}

TEST_CASE("vector expressions") {
  const auto ctx = PrecisionContext::with_digits(40);
  auto entries = parse_vector("1 + 2 * 3; (1 + 2) * 3; -2 - -3; 7 / 2; 1.5e1; 2*log_2 - log_2", nullptr);
  REQUIRE(entries.size() == 6);
  CHECK(entries[0].text == "1 + 2 * 3");
  auto v = as_source(std::move(entries))(ctx);
  WorkingPrecision wp(ctx.working_digits());
  CHECK(v[0] == 7);
  CHECK(v[1] == 9);
  CHECK(v[2] == 1);
  CHECK(v[3] == Real(3.5));
  CHECK(v[4] == 15);
  CHECK_CLOSE(v[5], log2_const(), check::tol(45));

  auto st = parse_vector("stieltjes(0,1,1) - euler_gamma", nullptr);
  CHECK(boost::multiprecision::abs(st[0].evaluate(ctx)) < check::tol(40));

  for (const char* bad : {"", ";", "1 +", "(1", "log_gamma(0)", "log_gamma(x)", "stieltjes(0,2,1)", "stieltjes(1,1)",
                          "pi", "1 2", "2 $ 3"}) {
    INFO("input: " << bad);
    CHECK_THROWS_AS(parse_vector(bad, nullptr), std::invalid_argument);
  }
}
