#include <doctest.h>

#include <nlohmann/json.hpp>

#include "regjm/report.hpp"
#include "regjm/textio.hpp"

using namespace regjm;

TEST_SUITE("report") {

TEST_CASE("Betti JSON follows the schema and round-trips") {
  BettiTable b;
  b.add(0, 2, 5);
  b.add(1, 3, 7);
  b.add(2, 4, 4);
  b.add(3, 5, 1);
  auto j = nlohmann::json::parse(betti_json(b));
  CHECK(j["pd"] == 3);
  CHECK(j["reg"] == 2);
  REQUIRE(j["entries"].size() == 4);
  CHECK(j["entries"][0] == nlohmann::json({{"i", 0}, {"j", 2}, {"beta", 5}}));
  CHECK(betti_from_json(betti_json(b)) == b);
  CHECK(nlohmann::json::parse(betti_json(BettiTable()))["reg"].is_null());
  CHECK_THROWS_AS(betti_from_json("{\"entries\": [{\"i\": 0}]}"), InvalidInput);
  CHECK_THROWS_AS(betti_from_json("not json"), InvalidInput);
  CHECK_THROWS_AS(betti_from_json(R"({"entries": [{"i": 0, "j": 0, "beta": 0}]})"), InvalidInput);
}

TEST_CASE("ASCII layout: rows by j - i, dots for zeros") {
  BettiTable b;
  b.add(0, 0, 1);
  b.add(1, 2, 3);
  b.add(2, 3, 2);
  CHECK(betti_ascii(b) ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");
  CHECK(betti_ascii(BettiTable()) == "(zero)\n");
  BettiTable shifted;
  shifted.add(0, 2, 12);
  shifted.add(1, 5, 1);
  CHECK(betti_ascii(shifted) ==
        "        0 1\n"
        "total: 12 1\n"
        "    2: 12 .\n"
        "    3:  . .\n"
        "    4:  . 1\n");
}

TEST_CASE("side by side keeps both titles") {
  BettiTable a;
  a.add(0, 1, 2);
  std::string s = betti_side_by_side(a, a, "predicted", "computed");
  CHECK(s.rfind("predicted", 0) == 0);
  CHECK(s.find("computed") != std::string::npos);
  CHECK(s.find(" \n") == std::string::npos);
}

TEST_CASE("certificate JSON carries parameters, convention and verdicts") {
  JmCertificate c = verify(PureModuleSpec{1, 2, 1}, 2);
  auto j = nlohmann::json::parse(certificate_json(c));
  CHECK(j["parameters"]["n"] == 1);
  CHECK(j["parameters"]["N"] == 2);
  CHECK(j["parameters"]["d"] == 1);
  CHECK(j["parameters"]["prime"] == 32003);
  CHECK(j["pass"] == true);
  CHECK(j["computed"]["degree_sequence"] == nlohmann::json({3, 5, 6, 7}));
  CHECK(j["predicted"]["regularity"] == 4);
  CHECK(j.contains("wall_seconds"));
  CHECK(j["convention"].get<std::string>().find("i = 0") != std::string::npos);
  CHECK(betti_from_json(j["computed"]["betti"].dump()) == c.computed_betti);
  for (const auto& ch : j["checks"]) CHECK(ch["pass"] == true);
  CHECK_FALSE(nlohmann::json::parse(certificate_json(c, false)).contains("wall_seconds"));
  std::string ascii = certificate_ascii(c);
  CHECK(ascii.find("PASS") != std::string::npos);
  CHECK(ascii.find("FAIL") == std::string::npos);
}

TEST_CASE("CAS snippet") {
  RingContext S(1, 2, 101);
  std::vector<Polynomial> g{parse_polynomial(S, "y1^2"), parse_polynomial(S, "x0*y1 - x1*y2")};
  CHECK(cas_snippet(S, g) ==
        "R = ZZ/101[x0,x1,y1,y2, MonomialOrder => GRevLex];\n"
        "J = ideal(y1^2,\n    x0*y1 - x1*y2);\n"
        "betti res module J\n");
}

TEST_CASE("scan CSV has a fixed header and blank computed cells past budget") {
  std::vector<ScanRow> rows{{2, 5, 8, 8, 0.5}, {3, 9, 13, std::nullopt, std::nullopt}};
  CHECK(scan_csv(rows) ==
        "k,d_max,reg_predicted,reg_computed,wall_seconds\n"
        "2,5,8,8,0.5000\n"
        "3,9,13,,\n");
  CHECK(scan_csv({}) == "k,d_max,reg_predicted,reg_computed,wall_seconds\n");
}

TEST_CASE("ring headers and variable scanning") {
  RingHeader h = parse_ring_header("# ring n=2 N=3 prime=101\nx0\n");
  CHECK(h.n == 2);
  CHECK(h.N == 3);
  CHECK(h.prime == 101u);
  CHECK_FALSE(parse_ring_header("x0 + y1").n);
  CHECK_THROWS_AS(parse_ring_header("# ring n=two"), InvalidInput);
  CHECK_THROWS_AS(parse_ring_header("# ring q=2"), InvalidInput);
  CHECK(scan_variable_indices("x3*y2 + x1*y7") == std::pair{3, 7});
  CHECK(scan_variable_indices("1") == std::pair{-1, 0});
}

TEST_CASE("generator files round-trip") {
  ModuleInput m = pure_module({1, 2, 1});
  RingContext S = ambient_ring(m, 2);
  GeneratorFile f{S, 2, 1, "pure(n=1,k=2,d=1)", m.presentation, build_jm(m, S, 2)};
  std::string text = format_generator_file(f);
  CHECK(text.rfind("# generators of J_M\n# ring n=1 N=2 prime=32003\n# params k=2 d=1 module=pure(n=1,k=2,d=1)\n", 0) ==
        0);
  GeneratorFile g = parse_generator_file(text);
  CHECK(g.ring == S);
  CHECK(g.k == 2);
  CHECK(g.d == 1);
  CHECK(g.module_label == f.module_label);
  CHECK(g.module == f.module);
  CHECK(g.generators == f.generators);
  CHECK(format_generator_file(g) == text);

  CHECK_THROWS_AS(parse_generator_file("y1^2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_generator_file("# ring n=1 N=2\ny1^2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_generator_file("# ring n=1 N=2\n# params k=1\ny1^2\n"), InvalidInput);
}

TEST_CASE("module files") {
  auto [ring, pres] = parse_module_file("matrix 2 <- 4 4\n0: x0^2\n0: x2^2\n");
  CHECK(ring.n() == 2);
  CHECK(ring.N() == 0);
  CHECK(pres.cols() == 2);
  auto [r1, p1] = parse_module_file("matrix 1 <- 2\n0: x0\n");
  CHECK(r1.n() == 1);
  auto [r3, p3] = parse_module_file("# ring n=3 prime=101\nmatrix 1 <- 2\n0: x0\n");
  CHECK(r3.n() == 3);
  CHECK(r3.prime() == 101u);
  CHECK_THROWS_AS(parse_module_file("# ring n=1 N=2\nmatrix 1 <- 2\n0: x0\n"), InvalidInput);
}

}  // TEST_SUITE
