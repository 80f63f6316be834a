#include <doctest.h>

#include <cstdio>

#include "wqh/catalog.hpp"
#include "wqh/io.hpp"

using namespace wqh;

TEST_CASE("scalars round-trip through text") {
  for (Scalar s : {Scalar(0), Scalar(-3), Scalar(Rational(5, 7)), golden_ratio(), sqrt2(),
                   Scalar::root_of_unity(16, 3) + Scalar(Rational(1, 3))}) {
    Json j = scalar_to_json(s);
    CHECK(scalar_from_json(j) == s);
    CHECK(scalar_from_json(Json::parse(j.dump())) == s);
  }
  Json j = scalar_to_json(golden_ratio());
  CHECK(j.at("conductor") == 5);
  CHECK(j.at("coeffs").is_array());
  Scalar a = scalar_from_json(Json{{"re", 0.5}, {"im", -1.0}});
  CHECK_FALSE(a.is_exact());
  CHECK(a.to_complex() == std::complex<double>(0.5, -1.0));
}

TEST_CASE("malformed scalars are input errors") {
  CHECK_THROWS_AS(scalar_from_json(Json{{"conductor", 5}, {"coeffs", {"1/0"}}}), InputError);
  CHECK_THROWS_AS(scalar_from_json(Json{{"conductor", 0}, {"coeffs", {"1"}}}), InputError);
  CHECK_THROWS_AS(scalar_from_json(Json{{"coeffs", {"1"}}}), InputError);
  CHECK_THROWS_AS(scalar_from_json(Json{{"conductor", 5}, {"coeffs", {"x"}}}), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")), InputError);
}

TEST_CASE("catalog categories round-trip") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto e = builtin(name);
    Json j = category_to_json(e.data, e.provenance);
    CHECK(j.at("provenance") == e.provenance);
    CategoryData back = category_from_json(Json::parse(j.dump()));
    CHECK(back.ring == e.data.ring);
    CHECK(back.F == e.data.F);
    CHECK(back.R == e.data.R);
    CHECK(back.theta == e.data.theta);
    CHECK(category_hash(back) == category_hash(e.data));
  }
  CHECK(category_hash(fibonacci_data()) != category_hash(ising_data()));
}

TEST_CASE("category files with inconsistent shapes are rejected") {
  Json j = category_to_json(fibonacci_data());
  SUBCASE("F matrix shape") {
    for (auto& e : j["F"])
      if (e["labels"] == Json{1, 1, 1, 1}) e["matrix"] = Json::parse("[[1]]");
    CHECK_THROWS_AS(category_from_json(j), InputError);
  }
  SUBCASE("label out of range") {
    j["R"][0]["labels"] = Json{1, 1, 7};
    CHECK_THROWS_AS(category_from_json(j), InputError);
  }
  SUBCASE("unknown theta label") {
    j["theta"]["sigma"] = 1;
    CHECK_THROWS_AS(category_from_json(j), InputError);
  }
  SUBCASE("missing ring") {
    j.erase("ring");
    CHECK_THROWS_AS(category_from_json(j), InputError);
  }
}

TEST_CASE("algebra dump reloads to identical reports") {
  auto cat = std::make_shared<const CategoryData>(fibonacci_data());
  DimensionFunction D{{1, 2}, false};
  for (auto st : {FunctorStrategy::canonical(), FunctorStrategy::with_seed(7)}) {
    auto F = std::make_shared<const FunctorData>(build_functor(cat, D, st));
    WQHopf H = reconstruct(F);
    Json j = algebra_to_json(H);
    CHECK(j.at("dimension") == 5);
    CHECK(j.at("provenance").at("D") == Json{1, 2});
    WQHopf back = algebra_from_json(Json::parse(j.dump()));
    CHECK(back.delta_unit == H.delta_unit);
    CHECK(back.phi == H.phi);
    CHECK(back.R == H.R);
    CHECK(report_to_json(verify_weak_axioms(back)) == report_to_json(verify_weak_axioms(H)));
    CHECK(report_to_json(verify_structure_transport(back)) == report_to_json(verify_structure_transport(H)));
  }
}

TEST_CASE("tampered algebra dumps are rejected or fail verification") {
  auto cat = std::make_shared<const CategoryData>(fibonacci_data());
  auto F = std::make_shared<const FunctorData>(build_functor(cat, DimensionFunction{{1, 2}, false}));
  Json j = algebra_to_json(reconstruct(F));
  SUBCASE("category edited behind the hash") {
    j["category"]["theta"]["tau"] = 1;
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
  }
  SUBCASE("block shape") {
    j["phi"]["blocks"][0]["matrix"] = Json::parse("[[1, 0], [0, 1]]");
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
  }
  SUBCASE("R entry") {
    auto& m = j["R"]["blocks"].back()["matrix"];
    m[0][0] = scalar_to_json(scalar_from_json(m[0][0]) + Scalar(1));
    WQHopf H = algebra_from_json(j);
    Report r = verify_weak_axioms(H);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.passed("R_intertwining"));
  }
}

TEST_CASE("report json has the machine fields") {
  Report r;
  r.observe("x", {1, 2}, false, 0.5);
  r.observe("y", {0}, true);
  Json j = report_to_json(r);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("id") == "x");
  CHECK(j[0].at("status") == "fail");
  CHECK(j[0].at("worst_deviation") == 0.5);
  CHECK(j[0].at("witness_indices") == Json{{1, 2}});
  CHECK(j[1].at("status") == "pass");
}

TEST_CASE("dimension function files") {
  auto ring = fibonacci_ring();
  CHECK(dimension_from_json(Json{{"D", {1, 2}}}, ring).values == std::vector<long>{1, 2});
  CHECK(dimension_from_json(Json{1, 2}, ring).values == std::vector<long>{1, 2});
  CHECK_THROWS_AS(dimension_from_json(Json{1, 1}, ring), InputError);
  CHECK_THROWS_AS(dimension_from_json(Json{1}, ring), InputError);
}

TEST_CASE("files") {
  std::string path = "wqh_io_test.json";
  write_json_file(path, category_to_json(ising_data()));
  CHECK(category_from_json(read_json_file(path)).F == ising_data().F);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("/nonexistent/x.json"), InputError);
}

TEST_CASE("approximate backend copy") {
  auto c = approximate(fibonacci_data());
  for (const auto& [k, m] : c.F) CHECK_FALSE(m.is_exact());
  CHECK(verify_pentagon(c, Tolerance{1e-9}).ok());
  CHECK(verify_hexagons(c, Tolerance{1e-9}).ok());
}
