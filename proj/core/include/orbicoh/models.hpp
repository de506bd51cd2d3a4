#pragma once

#include <string>

#include "orbicoh/lattice.hpp"
#include "orbicoh/matrix_group.hpp"

namespace orbicoh::models {

/// Z^6 with t = diag(-1,-1) + R + R, R the rotation [[0,1],[-1,0]]; G = Z/4.
ZGLattice y1();
/// Z^6 with s1 = diag(-1,-1,-1,-1,1,1), s2 = diag(-1,-1,1,1,-1,-1); G = (Z/2)^2.
ZGLattice y2();

/// The rotation group Z/4 = <[[0,1],[-1,0]]> and its lattices Z, M1 (t -> -1),
/// M2 (defining), P (t -> coordinate swap).
GroupPtr z4();
ZGLattice z4_trivial();
ZGLattice z4_m1();
ZGLattice z4_m2();
ZGLattice z4_p();

/// Z^2 with trivial action of Z/2 = <(-1)>.
ZGLattice brown_trivial_z2();
/// Z^2 with t -> -I over the rotation group Z/4.
ZGLattice brown_minus_identity_z4();

}  // namespace orbicoh::models
