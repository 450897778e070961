#include <qshuffle/json_io.hpp>
#include <qshuffle/cache.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

using namespace qsh;

namespace {

Word W(std::initializer_list<int> ks) {
  Word w;
  for (int k : ks) w.letters.push_back(Letter(k));
  return w;
}

DimVector theta_w(std::initializer_list<std::pair<int, int>> pos) {
  DimVector b;
  for (const auto& [k, m] : pos) b.add(Letter(k), m);
  return symmetrize(b);
}

}  // namespace

TEST_CASE("laurent json round trip") {
  LaurentPoly p;
  p.add_term(-2, Int(1));
  p.add_term(0, Int(1));
  const json j = laurent_to_json(p);
  CHECK(j.dump() == "{\"-2\":1,\"0\":1}");
  CHECK(laurent_from_json(j) == p);
}

TEST_CASE("element json") {
  const ShuffleElt x = shuffle_mul(ShuffleElt(W({1})), ShuffleElt(W({1})));
  const json j = shuffle_elt_to_json(x);
  CHECK(j["weight"] == "1:2");
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["word"] == "1,1");
  CHECK(j["terms"][0]["coeff"].dump() == "{\"-2\":1,\"0\":1}");
}

TEST_CASE("byte-identical repeated serialization") {
  const DimVector beta = theta_w({{1, 2}});
  WeightSpace ws1(beta), ws2(beta);
  const std::string a = basis_family_to_json(ws1, BasisKind::canonical).dump();
  const std::string b = basis_family_to_json(ws2, BasisKind::canonical).dump();
  CHECK(a == b);
  const std::string c1 = char_table_to_json(simple_chars(beta)).dump();
  const std::string c2 = char_table_to_json(simple_chars(beta)).dump();
  CHECK(c1 == c2);
}

TEST_CASE("cache round trip with checksums") {
  const auto dir = std::filesystem::temp_directory_path() / "qshuffle-cache-test";
  std::filesystem::remove_all(dir);
  Cache cache(dir);
  const CacheKey key{"basis", "-1:2,1:2", ""};

  WeightSpace ws(theta_w({{1, 2}}));
  const json payload = basis_family_to_json(ws, BasisKind::canonical);
  CHECK(!cache.load(key).has_value());
  cache.store(key, payload);
  const auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(hit->dump() == payload.dump());

  // different key misses even with the same digest path shape
  CHECK(!cache.load(CacheKey{"basis", "-1:1,1:1", ""}).has_value());

  // corrupting the payload invalidates the checksum
  {
    std::ofstream out(cache.path_for(key));
    out << "{\"key\": \"" << key.canonical() << "\", \"checksum\": \"0\", \"payload\": {}}";
  }
  CHECK(!cache.load(key).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports serialize with status and witness") {
  Report r;
  r.add("fam", "case a", "1,1", true);
  r.add("fam", "case b", "1,-1", false, "broken");
  const json j = report_to_json(r);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["status"] == "pass");
  CHECK(!j[0].contains("witness"));
  CHECK(j[1]["status"] == "fail");
  CHECK(j[1]["witness"] == "broken");
}
