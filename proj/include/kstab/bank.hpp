// Named toric instances, polarized by -K unless stated otherwise.

#pragma once

#include "kstab/toric.hpp"

#include <string>
#include <vector>

namespace kstab::bank {

struct Named {
    std::string name;
    toric::PolarizedToricPair pair;
};

/// Pair on the given rays polarized by -K = sum D_rho.
toric::PolarizedToricPair anticanonical(const std::vector<IntVec>& rays);

toric::PolarizedToricPair p1();
toric::PolarizedToricPair p2();
toric::PolarizedToricPair p1xp1();
/// Blow-up of P^2 at one torus-fixed point: rays e1, e2, -e1-e2, e1+e2.
toric::PolarizedToricPair bl1_p2();
toric::PolarizedToricPair p3();

/// Gorenstein toric Fano instances in dimensions 1 to 3.
std::vector<Named> reflexive();

/// Looks up an entry of reflexive() by name; throws DomainError.
toric::PolarizedToricPair by_name(const std::string& name);

}  // namespace kstab::bank
