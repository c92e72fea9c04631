#include <doctest.h>

#include <stdexcept>

#include "resovar/corpus.hpp"
#include "resovar/isotropy.hpp"
#include "resovar/threeform.hpp"
#include "test_util.hpp"

using namespace resovar;
using namespace resovar::testutil;

namespace {

CupData torus3_cup() {
  ThreeForm t(3);
  t.set(1, 2, 3, Rational(1));
  return cup_from_threeform(t);
}

QVector unit_vec(Eigen::Index n, Eigen::Index i) {
  QVector v = QVector::Zero(n);
  v(i) = 1;
  return v;
}

Subspace span2(const QVector& a, const QVector& b) {
  QMatrix rows(2, a.size());
  rows.row(0) = a.transpose();
  rows.row(1) = b.transpose();
  return Subspace(a.size(), rows);
}

}  // namespace

TEST_CASE("subspace canonicalization") {
  QMatrix rows(2, 3);
  rows << Rational(2), Rational(0), Rational(2),
          Rational(1), Rational(0), Rational(1);
  Subspace s(3, rows);
  CHECK(s.dim() == 1);
  CHECK(s.basis()(0, 0) == 1);
  CHECK(s.basis()(0, 2) == 1);
  CHECK(s.contains(unit_vec(3, 0) + unit_vec(3, 2)));
  CHECK_FALSE(s.contains(unit_vec(3, 0)));
  CHECK(Subspace::whole(3).dim() == 3);
  CHECK(Subspace(3).dim() == 0);
  // Equal subspaces presented differently compare equal.
  QMatrix other(1, 3);
  other << Rational(-3), Rational(0), Rational(-3);
  CHECK(s == Subspace(3, other));
}

TEST_CASE("cup image dimensions on the pinned examples") {
  CupData genus2 = surface_cup_data(2);
  CHECK(cup_image_dim(genus2, Subspace::whole(4)) == 1);
  CHECK(cup_image_dim(genus2, Subspace::span_of(unit_vec(4, 0))) == 0);

  CupData torus = torus3_cup();
  CHECK(cup_image_dim(torus, Subspace::whole(3)) == 3);

  CHECK_THROWS_AS(cup_image_dim(torus, Subspace::whole(4)), std::invalid_argument);
}

TEST_CASE("isotropy predicates") {
  CupData genus2 = surface_cup_data(2);
  CHECK_FALSE(is_isotropic(genus2, Subspace(4)));  // zero subspace, by convention
  CHECK(is_isotropic(genus2, span2(unit_vec(4, 0), unit_vec(4, 2))));   // e1, e3
  CHECK_FALSE(is_isotropic(genus2, span2(unit_vec(4, 0), unit_vec(4, 1))));  // e1 cup e2 = f

  CHECK(is_one_isotropic(genus2, Subspace::whole(4)));
  CHECK_FALSE(is_one_isotropic(torus3_cup(), Subspace::whole(3)));
  CupData heisenberg(2, 2);
  CHECK_FALSE(is_one_isotropic(heisenberg, Subspace::whole(2)));
}

TEST_CASE("greedy extension on the pinned examples") {
  CupData genus2 = surface_cup_data(2);
  Subspace from_e1 = extend_isotropic(genus2, Subspace::span_of(unit_vec(4, 0)));
  CHECK(from_e1 == span2(unit_vec(4, 0), unit_vec(4, 2)));  // solve y cup e1 = 0 by hand

  CupData heisenberg(2, 2);
  CHECK(extend_isotropic(heisenberg, Subspace::span_of(unit_vec(2, 0))) == Subspace::whole(2));

  CupData torus = torus3_cup();
  Subspace only_e1 = extend_isotropic(torus, Subspace::span_of(unit_vec(3, 0)));
  CHECK(only_e1 == Subspace::span_of(unit_vec(3, 0)));  // ker Delta(e1) = span{e1}

  CHECK_THROWS_AS(extend_isotropic(genus2, span2(unit_vec(4, 0), unit_vec(4, 1))),
                  std::invalid_argument);
}

TEST_CASE("extension contains its input, is isotropic, and is idempotent") {
  SplitMix64 rng(0x15071501ULL);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 6));
    const int m = static_cast<int>(rng.uniform_int(1, 5));
    CupData c = random_cup_data(rng, n, m, 3);
    // Start from a random single vector; span{x} is isotropic since x cup x = 0.
    QVector x = random_point(rng, n, 3);
    Subspace start = Subspace::span_of(x);
    if (start.dim() == 0) continue;
    Subspace extended = extend_isotropic(c, start);
    CHECK(extended.contains(start));
    CHECK(is_isotropic(c, extended));
    CHECK(extend_isotropic(c, extended) == extended);
  }
}

TEST_CASE("every vector lies in the kernel of its own Delta evaluation") {
  SplitMix64 rng(0x77aa77aaULL);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 6));
    const int m = static_cast<int>(rng.uniform_int(0, 6));
    CupData c = random_cup_data(rng, n, m);
    QVector x = random_point(rng, n, 5);
    QVector image = evaluate(build_delta(c), x) * x;
    for (Eigen::Index k = 0; k < image.size(); ++k) CHECK(image(k) == 0);
  }
}

TEST_CASE("cup products match the Delta pairing") {
  SplitMix64 rng(0xc0c0c0c0ULL);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 6));
    const int m = static_cast<int>(rng.uniform_int(1, 6));
    CupData c = random_cup_data(rng, n, m);
    QVector u = random_point(rng, n, 4);
    QVector v = random_point(rng, n, 4);
    QVector via_delta = evaluate(build_delta(c), u) * v;
    QVector direct = cup_product(c, u, v);
    for (Eigen::Index k = 0; k < m; ++k) CHECK(direct(k) == via_delta(k));
  }
}

TEST_CASE("isotropy invariants survive an H2 change of coordinates") {
  SplitMix64 rng(0x9e9e9e9eULL);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(2, 5));
    const int m = static_cast<int>(rng.uniform_int(1, 4));
    CupData c = random_cup_data(rng, n, m, 3);
    CupData moved = change_basis_h2(c, random_invertible(rng, m));
    QMatrix rows = random_matrix(rng, rng.uniform_int(1, n), n, 3);
    Subspace E(n, rows);
    if (E.dim() == 0) continue;
    CHECK(cup_image_dim(c, E) == cup_image_dim(moved, E));
    CHECK(is_isotropic(c, E) == is_isotropic(moved, E));
    CHECK(is_one_isotropic(c, E) == is_one_isotropic(moved, E));
  }
}
