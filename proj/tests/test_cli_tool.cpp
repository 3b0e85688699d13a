#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = LIGHTSHIFT_TEST_WORKDIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path out = kWork / "stdout.txt", err = kWork / "stderr.txt";
  const std::string cmd = std::string("\"") + LIGHTSHIFT_TOOL_PATH + "\" " + args + " >\"" +
                          out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("oracle-diff passes for sr87") {
  const Result r = invoke("oracle-diff --atom sr87");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("an unattainable threshold reports a failed check") {
  const Result r = invoke("oracle-diff --atom sr87 --set threshold=1e-30");
  CHECK(r.code == 1);
  CHECK(r.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 2") {
  write(kWork / "bad.cfg", "atom = sr87\nspin_twice = 0\n");
  Result r = invoke("coeffs -c \"" + (kWork / "bad.cfg").string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("\"error\":\"config\"") != std::string::npos);
  CHECK(r.err.find("\"line\":2") != std::string::npos);

  r = invoke("coeffs --set delta_bar=1");
  CHECK(r.code == 2);
  CHECK(r.err.find("atom") != std::string::npos);

  r = invoke("coeffs --atom sr87 --bogus");
  CHECK(r.code == 2);
  r = invoke("");
  CHECK(r.code == 2);
  r = invoke("coeffs -c \"" + (kWork / "missing.cfg").string() + "\"");
  CHECK(r.code == 2);
}

TEST_CASE("pole and infeasible errors") {
  Result r = invoke("coeffs --atom sr87 --set gamma=0 --set gamma_bar=0 --set delta_bar=4.5");
  CHECK(r.code == 3);
  CHECK(r.err.find("\"error\":\"pole\"") != std::string::npos);

  r = invoke("bichromatic --atom sr87 --set delta_small_bar=4.5");
  CHECK(r.code == 4);
  CHECK(r.err.find("\"error\":\"infeasible\"") != std::string::npos);
}

TEST_CASE("output files are byte-identical across runs") {
  write(kWork / "run.cfg",
        "atom = sr87\ndelta_bar = 0.4\ndelta_small_bar = 3\n[field]\ntype = counterprop\nz = 0.3\n");
  const std::string cfg = "-c \"" + (kWork / "run.cfg").string() + "\"";
  for (const std::string sub :
       {"coeffs", "scan", "heff", "oracle-diff", "bichromatic", "bichromatic --scan", "rephasing"}) {
    CAPTURE(sub);
    const fs::path first = kWork / "first.out", second = kWork / "second.out";
    CHECK(invoke(sub + " " + cfg + " -o \"" + first.string() + "\"").code == 0);
    CHECK(invoke(sub + " " + cfg + " -o \"" + second.string() + "\"").code == 0);
    const std::string a = slurp(first);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(second));
    CHECK(invoke(sub + " " + cfg).out == a);
  }
}
