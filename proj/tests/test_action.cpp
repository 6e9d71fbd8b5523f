#include "doctest.h"

#include <functional>
#include <stdexcept>

#include "kcrank/action.hpp"
#include "kcrank/errors.hpp"
#include "support.hpp"

using namespace kcrank;
namespace ts = kcrank::testsupport;

namespace {

errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const kcrank_error& e) {
    return e.code();
  }
  throw std::logic_error("expected a kcrank_error");
}

}  // namespace

TEST_SUITE("action") {

TEST_CASE("valid specs carry primes, order and name") {
  const ActionSpec hex =
      validate_action(IntMatrix{{1, -1}, {1, 0}}, 6, "hexagonal");
  CHECK(hex.n == 2);
  CHECK(hex.m == 6);
  CHECK(hex.order == 6);
  CHECK(hex.primes == std::vector<unsigned long>{2, 3});
  CHECK(hex.name == "hexagonal");

  // The declared order may exceed the exact order: a faithful order is
  // not required, only divisibility.
  const ActionSpec lazy = validate_action(IntMatrix{{-1}}, 6, "lazy");
  CHECK(lazy.order == 2);
  CHECK(lazy.m == 6);

  const ActionSpec trivial = validate_action(IntMatrix::identity(2), 2);
  CHECK(trivial.order == 1);
  CHECK(trivial.name.empty());
}

TEST_CASE("rejection: non-square matrix") {
  IntMatrix rect(2, 3);
  CHECK(code_of([&] { validate_action(rect, 2); }) == errc::dimension);
}

TEST_CASE("rejection: order not square-free") {
  CHECK(code_of([] { validate_action(IntMatrix{{-1}}, 4); }) ==
        errc::squarefree);
  CHECK(code_of([] { validate_action(IntMatrix{{-1}}, 12); }) ==
        errc::squarefree);
  CHECK(code_of([] { validate_action(IntMatrix{{-1}}, 0); }) ==
        errc::squarefree);
  CHECK(code_of([] { validate_action(IntMatrix{{-1}}, 1); }) ==
        errc::squarefree);
}

TEST_CASE("rejection: non-unimodular matrix") {
  CHECK(code_of([] { validate_action(IntMatrix{{2, 0}, {0, 1}}, 2); }) ==
        errc::unimodular);
  CHECK(code_of([] { validate_action(IntMatrix{{0, 0}, {0, 0}}, 2); }) ==
        errc::unimodular);
}

TEST_CASE("rejection: order does not annihilate the matrix") {
  // Order 3 rotation declared with m = 2.
  CHECK(code_of([] {
          validate_action(IntMatrix{{0, -1}, {1, -1}}, 2);
        }) == errc::order);
  // Infinite-order shear.
  CHECK(code_of([] { validate_action(IntMatrix{{1, 1}, {0, 1}}, 6); }) ==
        errc::order);
}

TEST_CASE("free outside the origin") {
  CHECK(free_outside_origin(ts::example("pillowcase")));
  CHECK(free_outside_origin(ts::example("cyclotomic3")));
  CHECK(free_outside_origin(ts::example("hexagonal")));
  CHECK(free_outside_origin(ts::example("cyclotomic5")));
  // The mirrors fix a line, the trivial action fixes everything.
  CHECK_FALSE(free_outside_origin(ts::example("diagonal-mirror")));
  CHECK_FALSE(free_outside_origin(ts::example("axis-mirror")));
  CHECK_FALSE(free_outside_origin(ts::example("free-rank-one")));
  CHECK_FALSE(free_outside_origin(ts::example("pillowcase-cylinder")));
}

TEST_CASE("every bundled example validates") {
  for (const std::string& name : ts::example_names()) {
    const ActionSpec spec = ts::example(name);
    CHECK(spec.name == name);
    CHECK(spec.n >= 1);
  }
}

}  // TEST_SUITE
