#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fgroups/catalog.hpp"
#include "fgroups/errors.hpp"
#include "fgroups/group_io.hpp"

using namespace fg;

namespace {

NamedGroup load_text(const std::string& text) {
  std::istringstream in(text);
  return load_group(in, "<test>");
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("save and load round trip") {
    NamedGroup s3{"S3", build(GroupSpec::symmetric(3))};
    std::ostringstream out;
    save_group(s3, out);
    std::istringstream in(out.str());
    NamedGroup loaded = load_group(in, "<roundtrip>");
    CHECK(loaded.name == "S3");
    CHECK(loaded.group.degree() == s3.group.degree());
    CHECK(loaded.group.generators() == s3.group.generators());
    CHECK(loaded.group.elements() == s3.group.elements());
  }

  TEST_CASE("file round trip") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "fgroups_io_test.json";
    NamedGroup g{"Q8:C3", quaternion_semidirect_c3()};
    save_group(g, path);
    NamedGroup loaded = load_group(path);
    CHECK(loaded.name == "Q8:C3");
    CHECK(loaded.group.order() == 24);
    CHECK(loaded.group.elements() == g.group.elements());
    fs::remove(path);
  }

  TEST_CASE("well-formed minimal file") {
    NamedGroup g = load_text(R"({"name":"K","degree":4,
        "generators":[[1,0,3,2],[2,3,0,1]]})");
    CHECK(g.name == "K");
    CHECK(g.group.order() == 4);
  }

  TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS_AS(load_text("not json"), ParseError);
    CHECK_THROWS_AS(load_text(R"({"degree":3,"generators":[[0,1,2]]})"), ParseError);
    CHECK_THROWS_AS(load_text(R"({"name":"X","generators":[[0,1,2]]})"), ParseError);
    CHECK_THROWS_AS(load_text(R"({"name":"X","degree":3})"), ParseError);
    CHECK_THROWS_AS(load_text(R"({"name":7,"degree":3,"generators":[[0,1,2]]})"), ParseError);
    CHECK_THROWS_AS(load_text(R"({"name":"X","degree":0,"generators":[[0]]})"), ParseError);
    CHECK_THROWS_AS(load_text(R"({"name":"X","degree":3,"generators":[]})"), ParseError);
    // Degree mismatch inside a generator.
    CHECK_THROWS_AS(load_text(R"({"name":"X","degree":3,"generators":[[0,1]]})"), ParseError);
    // Repeated point.
    CHECK_THROWS_AS(load_text(R"({"name":"X","degree":3,"generators":[[0,0,1]]})"), ParseError);
    // Out of range point.
    CHECK_THROWS_AS(load_text(R"({"name":"X","degree":3,"generators":[[0,1,3]]})"), ParseError);
    // Negative point.
    CHECK_THROWS_AS(load_text(R"({"name":"X","degree":3,"generators":[[0,1,-1]]})"), ParseError);

    try {
      load_text(R"({"name":"X","degree":3,"generators":[[0,1,2],[0,0,1]]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      std::string what = e.what();
      CHECK(what.find("generators[1]") != std::string::npos);
      CHECK(what.find("repeated") != std::string::npos);
    }
  }

  TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_group(std::filesystem::path("/nonexistent/fgroups.json")), ParseError);
  }
}
