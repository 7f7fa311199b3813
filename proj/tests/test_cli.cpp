#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "ldpcq/alist.hpp"
#include "ldpcq/cli.hpp"
#include "ldpcq/procjson.hpp"
#include "ldpcq/process.hpp"
#include "testutil.hpp"

using namespace ldpcq;
using namespace ldpcq::testutil;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("ldpcq_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& content) const {
    std::ofstream f(path(name), std::ios::binary);
    f << content;
  }
  std::string read(const std::string& name) const {
    std::ifstream f(path(name), std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
};

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("code info") {
  TempDir tmp;
  tmp.write("ising3.alist", emit_alist(ising3()));
  const RunResult r = run({"code", "info", tmp.path("ising3.alist")});
  CHECK(r.status == 0);
  CHECK(r.out.find("n 3") != std::string::npos);
  CHECK(r.out.find("rank 2") != std::string::npos);
  CHECK(r.out.find("k 1") != std::string::npos);
  CHECK(r.out.find("k_transpose 1") != std::string::npos);
  CHECK(r.out.find("symmetry 0: 0 1 2") != std::string::npos);
  CHECK(r.out.find("redundancy 0: 0 1 2") != std::string::npos);
}

TEST_CASE("code transpose and perp") {
  TempDir tmp;
  tmp.write("chain.alist", emit_alist(open_chain3()));
  CHECK(run({"code", "transpose", tmp.path("chain.alist"), "-o", tmp.path("t.alist")}).status == 0);
  CHECK(parse_alist(tmp.read("t.alist")).H() == open_chain3().H().transposed());
  CHECK(run({"code", "perp", tmp.path("chain.alist"), "-o", tmp.path("p.alist")}).status == 0);
  CHECK(parse_alist(tmp.read("p.alist")).H() == rows_to_matrix(open_chain3().symmetries(), 3));
}

TEST_CASE("products through the command line") {
  TempDir tmp;
  tmp.write("a.alist", emit_alist(ising3()));
  CHECK(run({"product", "tensor", tmp.path("a.alist"), tmp.path("a.alist"), "-o",
             tmp.path("tp.alist")})
            .status == 0);
  CHECK(parse_alist(tmp.read("tp.alist")).H() == tensor_product(ising3(), ising3()).H());

  CHECK(run({"product", "check", tmp.path("a.alist"), tmp.path("a.alist"), "-o",
             tmp.path("cp.alist")})
            .status == 0);
  CHECK(parse_alist(tmp.read("cp.alist")).H() == check_product(ising3(), ising3()).H());

  CHECK(run({"product", "pq", "--q", "2", tmp.path("a.alist"), tmp.path("a.alist"),
             tmp.path("a.alist"), "-o", tmp.path("cubic.alist")})
            .status == 0);
  const ClassicalCode cubic = parse_alist(tmp.read("cubic.alist"));
  CHECK(cubic.m() == 81);
  CHECK(cubic.n() == 27);
}

TEST_CASE("extract then verify round trips with exit code 0") {
  TempDir tmp;
  tmp.write("ising3.alist", emit_alist(ising3()));
  const RunResult ex = run({"extract", tmp.path("ising3.alist"), "--realization", "defect", "-o",
                            tmp.path("proc.json")});
  CHECK(ex.status == 0);
  CHECK(ex.out.find("ancillas 1") != std::string::npos);
  CHECK(ex.out.find("measurements 1") != std::string::npos);

  const RunResult v = run({"verify", tmp.path("ising3.alist"), tmp.path("proc.json")});
  CHECK(v.status == 0);
  CHECK(v.out.find("all relations hold") != std::string::npos);

  const RunResult vj =
      run({"verify", "--json", tmp.path("ising3.alist"), tmp.path("proc.json")});
  CHECK(vj.status == 0);
  CHECK(vj.out.find("\"status\": \"pass\"") != std::string::npos);

  // minimal realization too
  CHECK(run({"extract", tmp.path("ising3.alist"), "--realization", "minimal", "-o",
             tmp.path("proc_min.json")})
            .status == 0);
  CHECK(run({"verify", tmp.path("ising3.alist"), tmp.path("proc_min.json")}).status == 0);
}

TEST_CASE("verify flags a broken process with exit code 1") {
  TempDir tmp;
  tmp.write("ising3.alist", emit_alist(ising3()));
  QuantumProcess p = extract_defect(ising3());
  std::size_t cnot_at = 0;
  for (std::size_t k = 0; k < p.gates.size(); ++k)
    if (p.gates[k].kind == Gate::Kind::Cnot) cnot_at = k;
  tmp.write("broken.json", process_to_json(drop_gate(p, cnot_at)));
  const RunResult v = run({"verify", tmp.path("ising3.alist"), tmp.path("broken.json")});
  CHECK(v.status == 1);
  CHECK(v.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify dispatches product realizations with two code files") {
  TempDir tmp;
  tmp.write("a.alist", emit_alist(open_chain3()));
  tmp.write("b.alist", emit_alist(single_bit_check()));
  CHECK(run({"extract-product", "tensor", tmp.path("a.alist"), tmp.path("b.alist"), "-o",
             tmp.path("merge.json")})
            .status == 0);
  CHECK(run({"verify", tmp.path("a.alist"), tmp.path("b.alist"), tmp.path("merge.json")}).status ==
        0);
  // missing the second code file
  CHECK(run({"verify", tmp.path("a.alist"), tmp.path("merge.json")}).status == 2);
}

TEST_CASE("simulate prints the postselected output state") {
  TempDir tmp;
  tmp.write("ising3.alist", emit_alist(ising3()));
  REQUIRE(run({"extract", tmp.path("ising3.alist"), "--realization", "defect", "-o",
               tmp.path("proc.json")})
              .status == 0);

  const RunResult r =
      run({"simulate", tmp.path("proc.json"), "--input", "plus", "--ancilla", "plus"});
  CHECK(r.status == 0);
  CHECK(r.out.find("probability 1") != std::string::npos);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);  // probability
  std::getline(is, line);
  CHECK(line.substr(0, 4) == "0 1 ");  // amplitude 1 on |000>

  tmp.write("expect.txt", "1 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n");
  CHECK(run({"simulate", tmp.path("proc.json"), "--input", "plus", "--ancilla", "plus",
             "--expect", tmp.path("expect.txt")})
            .status == 0);
  tmp.write("wrong.txt", "0 0\n1 0\n0 0\n0 0\n0 0\n0 0\n0 0\n0 0\n");
  CHECK(run({"simulate", tmp.path("proc.json"), "--input", "plus", "--ancilla", "plus",
             "--expect", tmp.path("wrong.txt")})
            .status == 1);
}

TEST_CASE("spectrum") {
  TempDir tmp;
  tmp.write("ising3.alist", emit_alist(ising3()));
  const RunResult r =
      run({"spectrum", tmp.path("ising3.alist"), "--J", "1", "--h", "0", "-k", "2"});
  CHECK(r.status == 0);
  std::istringstream is(r.out);
  double e0 = 0, e1 = 0;
  is >> e0 >> e1;
  CHECK(e0 == doctest::Approx(-3.0));
  CHECK(e1 == doctest::Approx(-3.0));
}

TEST_CASE("perturbation table and fit") {
  TempDir tmp;
  tmp.write("two.alist", emit_alist(ising_ring(2)));
  const RunResult r = run({"perturbation", "tensor", tmp.path("two.alist"), tmp.path("two.alist"),
                           "--h1", "1", "--h2", "1", "--lambdas", "50,100,200", "--probe", "flip"});
  CHECK(r.status == 0);
  CHECK(r.out.find("fit exponent") != std::string::npos);
  const std::size_t at = r.out.find("fit exponent ");
  const double exponent = std::stod(r.out.substr(at + 13));
  CHECK(exponent == doctest::Approx(-1.0).epsilon(0.02));
}

TEST_CASE("dense ingestion flag") {
  TempDir tmp;
  tmp.write("h.txt", "101\n110\n011\n");
  const RunResult r = run({"--dense", "code", "info", tmp.path("h.txt")});
  CHECK(r.status == 0);
  CHECK(r.out.find("rank 2") != std::string::npos);
}

TEST_CASE("errors exit with status 2") {
  TempDir tmp;
  tmp.write("bad.alist", "3 x\n");
  CHECK(run({"code", "info", tmp.path("bad.alist")}).status == 2);
  CHECK(run({"code", "info", tmp.path("missing.alist")}).status == 2);
  CHECK(run({"no-such-command"}).status == 2);
  CHECK(run({"product", "pq", "--q", "9", tmp.path("bad.alist"), "-o", "x"}).status == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).status == 0);
}
