#include "kstab/bank.hpp"

namespace kstab::bank {

toric::PolarizedToricPair anticanonical(const std::vector<IntVec>& rays) {
    std::vector<Vec> rs;
    for (const auto& r : rays) rs.push_back(to_vec(r));
    Vec ones(rs.size(), Rational(1));
    return toric::PolarizedToricPair::from_rays(std::move(rs), ones);
}

toric::PolarizedToricPair p1() { return anticanonical({{1}, {-1}}); }
toric::PolarizedToricPair p2() { return anticanonical({{1, 0}, {0, 1}, {-1, -1}}); }
toric::PolarizedToricPair p1xp1() { return anticanonical({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
toric::PolarizedToricPair bl1_p2() { return anticanonical({{1, 0}, {0, 1}, {-1, -1}, {1, 1}}); }
toric::PolarizedToricPair p3() { return anticanonical({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}); }

std::vector<Named> reflexive() {
    return {
        {"P1", p1()},
        {"P2", p2()},
        {"P1xP1", p1xp1()},
        {"Bl1P2", bl1_p2()},
        {"Bl2P2", anticanonical({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}})},
        {"Bl3P2", anticanonical({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}})},
        {"P112", anticanonical({{1, 0}, {0, 1}, {-1, -2}})},
        {"F2blowdown", anticanonical({{1, 0}, {0, 1}, {-1, -1}, {0, -1}})},
        {"P1xP1/Z2", anticanonical({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}})},
        {"P2/Z3", anticanonical({{-1, -1}, {2, -1}, {-1, 2}})},
        {"Bl1P2dual", anticanonical({{-1, 0}, {0, -1}, {2, -1}, {-1, 2}})},
        {"P3", p3()},
        {"P1xP1xP1", anticanonical({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}})},
        {"P2xP1", anticanonical({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}})},
        {"Octahedral", anticanonical({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}})},
    };
}

toric::PolarizedToricPair by_name(const std::string& name) {
    for (auto& e : reflexive())
        if (e.name == name) return e.pair;
    throw DomainError("unknown instance " + name);
}

}  // namespace kstab::bank
