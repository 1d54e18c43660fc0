#include <cutbetti/fixtures.hpp>

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace cutbetti;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "cutbetti_fixture_test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("shipped fixtures load") {
  const auto fx = Fixtures::load(CUTBETTI_FIXTURE_DIR);
  REQUIRE(fx.table1.size() == 6);
  CHECK(fx.table1[0].path_vertices == 3);
  CHECK(fx.table1[1].beta0 == 9);
  CHECK(*fx.table1[1].beta1 == 16);
  CHECK_FALSE(fx.table1[5].beta1.has_value());
  REQUIRE(fx.table5.size() == 7);
  CHECK(fx.table5[6].vertices == 9);
  CHECK(fx.table5[6].values.size() == 6);
  CHECK(fx.table2_n4.rfind("total: 1 9 16 9 1\n", 0) == 0);
  CHECK(fx.table2_n5.rfind("total: 1 55 326", 0) == 0);
}

TEST_CASE("malformed fixtures are rejected") {
  CHECK_THROWS_AS(Fixtures::load("/nonexistent/fixtures"), InvalidInput);
  CHECK_THROWS_AS(parse_bigint("-1"), InvalidInput);
  CHECK_THROWS_AS(parse_bigint("12x"), InvalidInput);
  CHECK_THROWS_AS(parse_bigint(""), InvalidInput);
  CHECK(parse_bigint("19911592842") == BigInt("19911592842"));

  TempDir dir;
  dir.write("table1.csv", "path_vertices,beta0,beta1\n3,1\n");
  dir.write("table2_n4.txt", "");
  dir.write("table2_n5.txt", "");
  dir.write("table5.csv", "n,b02\n");
  CHECK_THROWS_AS(Fixtures::load(dir.path), InvalidInput);

  dir.write("table1.csv", "# comment\npath_vertices,beta0,beta1\r\n3,1,0\r\n");
  dir.write("table5.csv", "n,b02,b13,b24,b14,b25,b35\n3,1,0,0,0,0\n");
  CHECK_THROWS_AS(Fixtures::load(dir.path), InvalidInput);

  dir.write("table5.csv", "n,b02,b13,b24,b14,b25,b35\n3,1,0,0,0,0,0\n");
  const auto fx = Fixtures::load(dir.path);
  CHECK(fx.table1.size() == 1);
  CHECK(fx.table5.size() == 1);
}
