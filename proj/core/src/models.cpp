#include "orbicoh/models.hpp"

namespace orbicoh::models {

namespace {

const IntMatrix kRot{{0, 1}, {-1, 0}};

}  // namespace

ZGLattice y1() {
  IntMatrix t = IntMatrix::direct_sum(IntMatrix::direct_sum(IntMatrix::diagonal({-1, -1}, 2, 2), kRot), kRot);
  return ZGLattice::defining(FiniteMatrixGroup::enumerate(6, {t}));
}

ZGLattice y2() {
  IntMatrix s1 = IntMatrix::diagonal({-1, -1, -1, -1, 1, 1}, 6, 6);
  IntMatrix s2 = IntMatrix::diagonal({-1, -1, 1, 1, -1, -1}, 6, 6);
  return ZGLattice::defining(FiniteMatrixGroup::enumerate(6, {s1, s2}));
}

GroupPtr z4() {
  static const GroupPtr group = FiniteMatrixGroup::enumerate(2, {kRot});
  return group;
}

ZGLattice z4_trivial() { return ZGLattice::trivial(z4(), 1); }
ZGLattice z4_m1() { return ZGLattice::from_generator_images(z4(), {IntMatrix{{-1}}}); }
ZGLattice z4_m2() { return ZGLattice::defining(z4()); }
ZGLattice z4_p() { return ZGLattice::from_generator_images(z4(), {IntMatrix{{0, 1}, {1, 0}}}); }

ZGLattice brown_trivial_z2() {
  return ZGLattice::trivial(FiniteMatrixGroup::enumerate(1, {IntMatrix{{-1}}}), 2);
}

ZGLattice brown_minus_identity_z4() {
  return ZGLattice::from_generator_images(z4(), {IntMatrix{{-1, 0}, {0, -1}}});
}

}  // namespace orbicoh::models
