#pragma once

#include "loophom/polynomial.hpp"

#include <vector>

namespace loophom {

// A reduced cohomology presentation: polynomial generators, a homogeneous
// relation list, and anticommuting exterior generators.
struct CohomPresentation {
    PolyContextPtr ctx;
    std::vector<Polynomial> relations;
    std::vector<GradedGenerator> exterior;
};

// Throws on duplicate names, even exterior degrees, inhomogeneous or
// foreign-context relations.
void validate(const CohomPresentation& pres);

} // namespace loophom
