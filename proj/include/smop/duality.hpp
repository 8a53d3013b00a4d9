//  Copyright 2026 The smop Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "smop/bounds.hpp"
#include "smop/frame_pairs.hpp"
#include "smop/spaces.hpp"

namespace smop {

struct LawResult {
    std::string name;
    bool pass = true;
    /// On failure: the offending point or element and both sides of the
    /// equation. On success: what was checked.
    std::string witness;
};

struct AdjunctionReport {
    std::string instance;
    std::vector<LawResult> laws;

    bool ok() const;
    std::size_t failures() const;
    void add(std::string name, bool pass, std::string witness);
    void append(const AdjunctionReport& other);
};

/// Weakly open sets of X in increasing bitmask order; index i is element i of
/// the frame of omega_object(X).
Family omega_sets(const LocallySmallSpace& space);

/// (weakly open frame, smops)
FramePair omega_object(const LocallySmallSpace& space);

/// For f : X -> Y, the preimage hom Omega(Y) -> Omega(X) and its right
/// adjoint. As a localic map it runs Omega(X) -> Omega(Y).
/// Throws NotBounded or NotContinuous.
SpecialLocalicMap omega_morphism(const SpaceMap& f);

/// (Spec L, Delta_L(L_s)); point i is the i-th prime in element order.
LocallySmallSpace sigma_object(const FramePair& pair);

/// For h_* with h : L -> M, the map Spec M -> Spec L, p -> h_*(p).
/// Throws PrimeNotPreserved if some h_*(p) is not prime.
SpaceMap sigma_morphism(const SpecialLocalicMap& m);

/// x -> ext{x}, from X to sigma_object(omega_object(X)).
SpaceMap unit_lambda(const LocallySmallSpace& space);

/// (Delta_L)_* : Omega(Sigma(P)) -> P. The underlying hom is Delta_L.
SpecialLocalicMap counit_sigma(const FramePair& pair);

/// Sigma(sigma_L) o lambda_{Sigma P} = id on Spec L.
AdjunctionReport check_triangle_identities(const FramePair& pair);
/// sigma_{Omega X} o Omega(lambda_X) = id on Omega X.
AdjunctionReport check_triangle_identities(const LocallySmallSpace& space);

/// Both identities around an object: at P and Sigma(P), or at X and Omega(X).
AdjunctionReport check_both_triangles(const FramePair& pair);
AdjunctionReport check_both_triangles(const LocallySmallSpace& space);

/// Sigma Omega(f) o lambda_X = lambda_Y o f.
AdjunctionReport check_naturality(const SpaceMap& f);
/// sigma_L o Omega Sigma(h_*) = h_* o sigma_M on elements of Omega Sigma(M).
AdjunctionReport check_naturality(const SpecialLocalicMap& m);

/// Omega(id) = id and Omega(g o f) = Omega(g) o Omega(f) in the locale
/// direction, on hom and adjoint alike. f : X -> Y, g : Y -> Z.
AdjunctionReport check_functor_laws(const SpaceMap& f, const SpaceMap& g);
/// Sigma(id) = id and Sigma(outer o inner) = Sigma(outer) o Sigma(inner).
AdjunctionReport check_functor_laws(const SpecialLocalicMap& inner, const SpecialLocalicMap& outer);

/// Bijection test for lambda_X with lambda_X(L_X) = Delta(L_X), checked set by
/// set, and lambda^-1 carrying the target smops back onto L_X.
/// Throws NotT0 or NotSober when X is outside the duality.
AdjunctionReport stone_roundtrip(const LocallySmallSpace& space, const Bounds& bounds = default_bounds());
/// Delta_L injective and a frame hom onto its image, Delta^-1(Delta(L_s)) = L_s,
/// and the counit a bijection inverse to Delta. Throws NotSpatial.
AdjunctionReport stone_roundtrip(const FramePair& pair);

/// Continuous frame => spectrum space topologically locally compact and
/// sober; then the Stone round-trip.
AdjunctionReport hofmann_lawson_report(const FramePair& pair, const Bounds& bounds = default_bounds());
/// Topologically locally compact sober => weakly open frame continuous; then
/// the Stone round-trip.
AdjunctionReport hofmann_lawson_report(const LocallySmallSpace& space, const Bounds& bounds = default_bounds());

}  // namespace smop
