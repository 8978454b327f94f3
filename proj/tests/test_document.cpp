#include "helpers.hpp"

#include "jordanlab/document.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/random.hpp"

#include <doctest.h>

#include <sstream>

using namespace jordanlab;

TEST_SUITE("document") {

TEST_CASE("parse a document") {
  std::istringstream in("algebra: herm_c:2\ncoords: 1 0 0 0.5\nlabel: mixed state\n");
  const ElementDocument d = read_document(in);
  CHECK(d.algebra == "herm_c:2");
  CHECK(d.coords == std::vector<double>{1, 0, 0, 0.5});
  REQUIRE(d.label.has_value());
  CHECK(*d.label == "mixed state");
}

TEST_CASE("malformed documents") {
  for (const char* text : {"", "coords: 1 2\n", "algebra: spin:3\n", "algebra: spin:3\ncoords: 1 x 2\n",
                           "algebra: spin:3\ncoords: 1 2 3\nweight: 4\n"}) {
    CAPTURE(text);
    std::istringstream in(text);
    try {
      read_document(in);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  const AlgebraPtr s = spin(3).algebra;
  CHECK_THROWS_AS(to_element({"spin:3", {1, 2}, {}}, s), Error);
  CHECK_THROWS_AS(to_element({"spin:4", {1, 2, 3, 4}, {}}, s), Error);
}

TEST_CASE("write/read round trip is exact") {
  const AlgebraPtr alg = albert().algebra;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = trial_rng(37, t);
    const Element x = random_element(*alg, rng) * 1e-3;
    std::ostringstream out;
    write_document(out, to_document(x, "trial"));
    std::istringstream in(out.str());
    const Element y = to_element(read_document(in), alg);
    CHECK((x.coords() - y.coords()).cwiseAbs().maxCoeff() == 0.0);
  }
}

}
