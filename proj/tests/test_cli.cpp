#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "elliptica/cli.hpp"

using elliptica::cplx;
using elliptica::cli::parse_complex;
using elliptica::cli::run;

namespace {
struct Out {
  int code;
  std::string out, err;
};
Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run(args, o, e);
  return {c, o.str(), e.str()};
}
}  // namespace

TEST_CASE("complex literals") {
  CHECK(*parse_complex("0.5") == cplx(0.5, 0));
  CHECK(*parse_complex("-2e-3i") == cplx(0, -2e-3));
  CHECK(*parse_complex("0.3-0.1i") == cplx(0.3, -0.1));
  CHECK(*parse_complex("1e-2+1e+1j") == cplx(0.01, 10));
  CHECK(*parse_complex("i") == cplx(0, 1));
  CHECK(*parse_complex("-i") == cplx(0, -1));
  CHECK(*parse_complex(" 2+i ") == cplx(2, 1));
  for (const char* bad : {"", "abc", "1+", "nan", "inf", "1..2", "2ii", "1+2", "--1", "0x10"}) {
    INFO(bad);
    CHECK_FALSE(parse_complex(bad).has_value());
  }
}

TEST_CASE("identical seeds give byte-identical reports") {
  for (std::vector<std::string> a : {std::vector<std::string>{"rmatrix", "--samples", "5", "--seed", "42"},
                                     {"table", "--z-samples", "3", "--seed", "9"},
                                     {"vo", "--samples", "4"}}) {
    auto x = call(a), y = call(a);
    CHECK(x.out == y.out);
    CHECK(!x.out.empty());
  }
  auto a = call({"rmatrix", "--samples", "5", "--seed", "1"});
  auto b = call({"rmatrix", "--samples", "5", "--seed", "2"});
  CHECK(a.out != b.out);
}

TEST_CASE("report schema") {
  auto r = call({"rmatrix", "--samples", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["subcommand"] == "rmatrix");
  CHECK(j["seed"] == 7);
  CHECK(j["config"]["q"] == "0.6+0i");
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 9);
}

TEST_CASE("exit codes") {
  CHECK(call({"rmatrix", "--samples", "3"}).code == 0);
  CHECK(call({"vo", "--samples", "3"}).code == 1);  // the literal rho(b - c) identity fails
  CHECK(call({"surface", "--check", "--ell", "1", "--ell-prime", "6"}).code == 1);
  CHECK(call({"surface", "--check", "--ell", "1", "--ell-prime", "7"}).code == 0);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("malformed flag corpus exits 2") {
  const std::vector<std::vector<std::string>> corpus{
      {},
      {"bogus"},
      {"rmatrix", "--q", "abc"},
      {"rmatrix", "--q"},
      {"rmatrix", "--q", "1.5"},
      {"rmatrix", "--q", "0.6", "--p", "0"},
      {"rmatrix", "--n", "1"},
      {"rmatrix", "--check", "everything"},
      {"rmatrix", "--samples", "-3"},
      {"rmatrix", "--samples", "ten"},
      {"rmatrix", "--tol", "-1"},
      {"rmatrix", "--unknown-flag"},
      {"rmatrix", "--max-terms", "0"},
      {"theta", "--z", "0"},
      {"theta", "--z", "1+"},
      {"surface"},
      {"surface", "--solve"},
      {"surface", "--solve", "--check", "--ell", "1"},
      {"surface", "--solve", "--ell", "1", "--exponent", "3/0"},
      {"surface", "--solve", "--ell", "1", "--exponent", "5/3"},
      {"surface", "--solve", "--ell", "3", "--ell-prime", "1"},
      {"surface", "--check", "--ell", "1"},
      {"surface", "--enumerate", "--c", "x"},
      {"rhsplit", "--ell", "3", "--ell-prime", "1", "--q", "0.5"},
      {"classical", "--ell", "1", "--ell-prime", "0"},
      {"classical", "--z", "1"},
      {"table", "--z-samples", "0"},
      {"vo", "--range", "99"},
  };
  for (const auto& args : corpus) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    INFO(joined);
    auto r = call(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
}

TEST_CASE("surface solve prints the congruence family") {
  auto r = call({"surface", "--solve", "--n", "2", "--c", "1", "--ell", "1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& s : j["solutions"])
    found |= s["ell_prime"] == 7 && s["a"] == "3/2" && s["relation"] == "p^1 = q^3";
  CHECK(found);
  auto d = nlohmann::json::parse(call({"surface", "--solve", "--ell", "2", "--ell-prime", "2"}).out);
  CHECK(d["degenerate"]["critical_c"] == "-1");
}
