#include <doctest.h>

#include <stdexcept>

#include "resovar/corpus.hpp"
#include "resovar/screen.hpp"
#include "test_util.hpp"

using namespace resovar;
using namespace resovar::testutil;

namespace {
ThreeForm torus3_form() {
  ThreeForm t(3);
  t.set(1, 2, 3, Rational(1));
  return t;
}
}  // namespace

TEST_CASE("reason tags are the published tokens") {
  CHECK(reason_tag(Reason::HodgeParity) == "hodge-parity");
  CHECK(reason_tag(Reason::Thm41) == "thm-4.1");
  CHECK(reason_tag(Reason::Prop511) == "prop-5.1-1");
  CHECK(reason_tag(Reason::Prop512) == "prop-5.1-2");
}

TEST_CASE("surface data passes the screen") {
  // Even b1; R1 full and 1-isotropic, so the implication is satisfied.
  Verdict v = kahler_screen(surface_cup_data(2));
  CHECK_FALSE(v.excluded());
  CHECK(v.summary() == "not-excluded");
  CHECK(v.reasons.empty());
  CHECK_FALSE(v.threemanifold_consistent);  // b2 = 1 != b1 = 4
}

TEST_CASE("torus cup data is excluded by parity") {
  Verdict v = kahler_screen(cup_from_threeform(torus3_form()));
  CHECK(v.excluded());
  CHECK(v.summary() == "excluded(hodge-parity)");
  CHECK(v.threemanifold_consistent);
}

TEST_CASE("zero cup data is excluded by the resonance/isotropy obstruction") {
  CupData heisenberg(2, 2);
  Verdict v = kahler_screen(heisenberg);
  CHECK(v.excluded());
  CHECK(v.summary() == "excluded(thm-4.1)");
  REQUIRE(v.reasons.size() == 1);
  CHECK(v.reasons[0].detail.find("dimension 0") != std::string::npos);
}

TEST_CASE("b1 = 0 is rejected as out of scope") {
  CupData empty(0, 0);
  CHECK_THROWS_AS(kahler_screen(empty), std::invalid_argument);
  CHECK_THROWS_AS(threemanifold_kahler_screen(ThreeForm(0)), std::invalid_argument);
  try {
    kahler_screen(empty);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("b1 >= 1") != std::string::npos);
  }
}

TEST_CASE("three-manifold screens on the pinned examples") {
  Verdict torus = threemanifold_kahler_screen(torus3_form());
  CHECK(torus.summary() == "excluded(hodge-parity)");
  CHECK(torus.subject == SubjectKind::ThreeFormSubject);
  CHECK(torus.threemanifold_consistent);

  ThreeForm bordered(4);
  bordered.set(1, 2, 3, Rational(1));
  Verdict sum = threemanifold_kahler_screen(bordered);
  CHECK(sum.summary() == "excluded(thm-4.1)");
  CHECK(sum.threemanifold_consistent);
  // Supporting findings document the structural facts used.
  REQUIRE(sum.reasons.size() == 3);
  CHECK(sum.reasons[1].reason == Reason::Prop512);
  CHECK(sum.reasons[2].reason == Reason::Prop511);

  Verdict zero2 = threemanifold_kahler_screen(ThreeForm(2));
  CHECK(zero2.summary() == "excluded(thm-4.1)");
}

TEST_CASE("no three-form input ever passes the screen") {
  SplitMix64 rng(0x10101010ULL);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 7));
    ThreeForm t = random_threeform(rng, n);
    Verdict v = threemanifold_kahler_screen(t);
    CHECK(v.excluded());
    CHECK_FALSE(v.reasons.empty());
    CHECK(v.threemanifold_consistent);
  }
}

TEST_CASE("three-form screen agrees with the cup-data screen") {
  SplitMix64 rng(0x20202020ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    ThreeForm t = random_threeform(rng, n);
    Verdict via_form = threemanifold_kahler_screen(t);
    Verdict via_cup = kahler_screen(cup_from_threeform(t));
    CHECK(via_form.excluded() == via_cup.excluded());
    CHECK(via_form.primary_reason_tag() == via_cup.primary_reason_tag());
    CHECK(via_form.threemanifold_consistent == via_cup.threemanifold_consistent);
  }
}

TEST_CASE("surface groups of any genus are never excluded") {
  for (int g = 1; g <= 4; ++g) CHECK_FALSE(kahler_screen(surface_cup_data(g)).excluded());
}

TEST_CASE("verdicts are reproducible and invariant under H1 change of basis") {
  SplitMix64 rng(0x30303030ULL);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    ThreeForm t = random_threeform(rng, n, 3);
    Verdict first = threemanifold_kahler_screen(t);
    Verdict again = threemanifold_kahler_screen(t);
    REQUIRE(first.reasons.size() == again.reasons.size());
    for (std::size_t i = 0; i < first.reasons.size(); ++i) {
      CHECK(first.reasons[i].reason == again.reasons[i].reason);
      CHECK(first.reasons[i].detail == again.reasons[i].detail);
    }
    Verdict moved = threemanifold_kahler_screen(change_basis(t, random_invertible(rng, n, 2)));
    CHECK(first.summary() == moved.summary());
  }
  // Cup-data subjects: change of H1 basis preserves the verdict too.
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    const int m = static_cast<int>(rng.uniform_int(1, 4));
    CupData c = random_cup_data(rng, n, m, 3);
    Verdict base = kahler_screen(c);
    Verdict moved = kahler_screen(change_basis_h1(c, random_invertible(rng, n, 2)));
    CHECK(base.summary() == moved.summary());
  }
}
