#pragma once

#include <cstdint>
#include <vector>

#include "strcat/morphisms.hpp"
#include "strcat/strings.hpp"

namespace strc {

/// A morphism of the augmented simplex category: a weakly increasing map
/// from [m] = {0,...,m-1} to [n].
struct MonotoneMap {
    int m = 0, n = 0;
    std::vector<int> values;  // length m, entries in [0, n)

    static MonotoneMap make(int m, int n, std::vector<int> values);
    static MonotoneMap identity(int n);
    /// Face: the injective map [n] -> [n+1] missing the value i, 0 <= i <= n.
    static MonotoneMap face(int n, int i);
    /// Degeneracy: the surjection [n+1] -> [n] taking the value i twice.
    static MonotoneMap degeneracy(int n, int i);

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
    friend std::strong_ordering operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
};

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Canonical word of a monotone map: faces are the values missed,
/// degeneracies the positions repeated.
struct MonotoneWord {
    int m = 0, n = 0;
    std::vector<int> degeneracies;  // ascending positions, applied largest first
    std::vector<int> faces;         // ascending missed values

    friend bool operator==(const MonotoneWord&, const MonotoneWord&) = default;
};

MonotoneWord decompose_monotone(const MonotoneMap& f);
MonotoneMap evaluate_monotone_word(const MonotoneWord& word);

/// The comparison functor: [n] goes to Linear(n-1) (and [0] to Linear(0)),
/// faces to faces, degeneracies to degeneracies, the map [0] -> [1] to the
/// identity.
Morphism functor_p(const MonotoneMap& f);

/// Section of the comparison functor, i in {0, 1}: rebuilds a monotone map
/// from the canonical word of a linear connected morphism, resolving the
/// collapsed smallest face to face(1, i).
MonotoneMap section(int i, const Morphism& phi);

std::vector<MonotoneMap> enumerate_monotone(int m, int n);

/// C(n, k) on 64-bit integers; C(-1, 0) = 1 so the hom-count identity
/// |Hom([m],[n])| = C(m+n-1, m) covers the empty cases.
std::int64_t binomial(int n, int k);

}  // namespace strc
