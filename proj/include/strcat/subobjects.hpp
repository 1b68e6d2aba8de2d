#pragma once

#include <utility>

#include "strcat/lattice.hpp"
#include "strcat/morphisms.hpp"

namespace strc {

/// The monomorphism classified by a non-crossing set: generators are grouped
/// by composability; a non-wrapping group of size c contributes Linear(c), a
/// wrapping group (kind B, total length n) contributes Cyclic(c), and the
/// simple strings map to the generators in (cyclic) chain order.  The empty
/// set yields the zero mono out of Linear(0).
std::pair<StringsObject, Morphism> subobject_from_ncset(const NcSet& S);

/// The generator set of a monomorphism into a connected object; left
/// inverse of subobject_from_ncset.
NcSet ncset_of_mono(const Morphism& phi);

/// Whether phi factors through the monomorphism psi (same codomain).
bool mono_factors_through(const Morphism& phi, const Morphism& psi);

}  // namespace strc
