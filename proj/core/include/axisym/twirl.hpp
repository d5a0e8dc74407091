#pragma once

#include <cstdint>
#include <vector>

#include "axisym/dense.hpp"
#include "axisym/family.hpp"

namespace axisym {

/// Generators of the symmetry group: simultaneous cyclic shifts X^n (x) X^n
/// and local phase rotations with opposite signs on the two parties.
struct SymmetryGenerator {
    enum class Kind { CyclicShift, PhaseRotation };

    Kind kind = Kind::CyclicShift;
    int d = 0;
    int shift = 1;                 // CyclicShift: n in 1..d-1
    std::vector<double> phases;    // PhaseRotation: d-1 phase parameters

    static SymmetryGenerator cyclic(int d, int n) { return {Kind::CyclicShift, d, n, {}}; }
    static SymmetryGenerator phase(int d, std::vector<double> phi) {
        return {Kind::PhaseRotation, d, 0, std::move(phi)};
    }
};

/// Dense d^2 x d^2 unitary U (x) V of a generator.
ComplexMatrix generator_matrix(const SymmetryGenerator& g);

/// Group average of an arbitrary state, computed in closed form:
/// diagonal orbits are cyclically averaged, the |kk><jj| orbits are averaged
/// with Hermitization, every other matrix element is annihilated by the
/// phase average. Exact (no phase-grid discretization), trace preserving,
/// idempotent on family members.
FamilyState twirl_to_family(const DensityMatrix& sigma);

/// Max over all cyclic shifts and `samples` seeded random phase tuples of
/// the entrywise norm of g rho g^dag - rho.
double invariance_residual(const FamilyState& s, int samples, std::uint64_t seed = 42);
double invariance_residual(const DensityMatrix& rho, int samples, std::uint64_t seed = 42);

}  // namespace axisym
