#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chernob/errors.hpp"
#include "support.hpp"

using namespace chernob;
using namespace chernob::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("chernob_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("the example file parses") {
  ProblemSpec spec = testing::cusp_problem();
  CHECK(spec.variety.dim == 2);
  CHECK(spec.variety.ambient_dim() == 3);
  CHECK(spec.collection.parts.size() == 2);
  CHECK(spec.collection.partition() == std::vector<int>{1, 1});
  REQUIRE(spec.variety.normalization.has_value());
  CHECK(spec.variety.normalization->images.size() == 3);
}

TEST_CASE("format and parse round trip") {
  ProblemSpec spec = testing::cusp_problem();
  ProblemSpec again = parse_input_file(format_problem(spec));
  CHECK(format_problem(again) == format_problem(spec));
  CHECK(again.collection.parts[1].forms == spec.collection.parts[1].forms);
}

TEST_CASE("input errors carry line numbers") {
  const std::string too_many =
      "ring x, y, z;\nvariety: y^2 - x^3;\ndim 2;\n"
      "collection k=1: (0, x^3, z^2), (z^3, 0, x^2), (1, 0, 0);\n"
      "collection k=1: (y^2, z^3, 0), (0, y^3, z^2);\n";
  try {
    parse_input_file(too_many);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected d-k+1 = 2") != std::string::npos);
    CHECK(e.position() == 4);
  }

  const std::string short_partition =
      "ring x, y, z;\nvariety: y^2 - x^3;\ndim 2;\ncollection k=1: (0, x^3, z^2), (z^3, 0, x^2);\n";
  try {
    parse_input_file(short_partition);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("partition") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_input_file("ring x, y;\ndim 2;\nvariety: x + w;\n"), ParseError);
  CHECK_THROWS_AS(parse_input_file("dim 2;\n"), ParseError);
  CHECK_THROWS_AS(parse_input_file("ring x, y;\nfrobnicate;\n"), ParseError);
}

TEST_CASE("compute on the example file") {
  std::string path = write_temp("cusp.chern", testing::cusp_problem_text());
  Result r = call({"compute", path, "--seed", "7", "--route", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("final: 47") != std::string::npos);
  CHECK(r.out.find("seeds: 7 8 9") != std::string::npos);
}

TEST_CASE("json report schema") {
  std::string path = write_temp("cusp_json.chern", testing::cusp_problem_text());
  Result r = call({"compute", path, "--format", "json", "--route", "normalization"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"final", "geometry", "method", "seeds", "terms", "warnings"});
  CHECK(j["final"] == 47);
  CHECK(j["method"] == "surface-normalization");
  CHECK(j["geometry"].size() == 3);
  CHECK(j["geometry"]["isolated"] == true);
  CHECK(j["geometry"]["prefix_dims"] == nlohmann::json::array({1, 0}));
  for (const auto& t : j["terms"]) {
    CHECK(t.size() == 3);
    CHECK(t.contains("label"));
    CHECK(t.contains("value"));
    CHECK(t.contains("seed"));
  }
}

TEST_CASE("non-isolated input exits 2 and names the dimension") {
  std::string path = write_temp("line.chern", "ring x, y;\ndim 2;\ncollection k=2: (x, 0);\n");
  Result r = call({"compute", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("dimension 1") != std::string::npos);
  CHECK(call({"check", path}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 1);
  CHECK(call({"compute"}).code == 1);
  CHECK(call({"compute", "/nonexistent/file.chern"}).code == 1);
  std::string bad = write_temp("bad.chern", "ring x, y;\ndim 2;\ncollection k=2: (x + w, 0);\n");
  Result r = call({"compute", bad});
  CHECK(r.code == 3);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(call({"gb", "--vars", "x,y,z", "--global", "--cap", "2", "x^5 + y^4*z", "y^5 + x*z^4", "z^5 + x^4*y"}).code == 4);
  CHECK(call({"colength", "--vars", "x,y", "x", "--local", "--global"}).code == 1);
}

TEST_CASE("small commands") {
  Result im = call({"imult", "--vars", "t,z", "z^2*(2t^5+3z^3)", "-3t^11+2z^5"});
  CHECK(im.code == 0);
  CHECK(im.out == "47\n");
  CHECK(call({"colength", "--vars", "x", "x^2 - x^3"}).out == "2\n");
  CHECK(call({"colength", "--vars", "x", "--global", "x^2 - x^3"}).out == "3\n");
  CHECK(call({"colength", "--vars", "x,y", "x*y"}).out == "inf\n");
  CHECK(call({"colength", "--vars", "x,y", "-x^2 + y^3", "-y^2"}).out == "4\n");
  CHECK(call({"dim", "--vars", "x,y,z", "y^2 - x^3"}).out == "2\n");
  CHECK(call({"gb", "--vars", "x,y", "x", "y"}).code == 0);
  std::string path = write_temp("grad.chern", "ring x, y;\ndim 2;\ncollection k=2: (3x^2, 3y^2);\n");
  CHECK(call({"ind", path}).out == "ind = 4\n");
}

TEST_CASE("selftest passes") {
  Result r = call({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
