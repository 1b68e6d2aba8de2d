#pragma once

#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "strcat/strings.hpp"

namespace strc {

enum class NcKind { A, B };

/// A non-crossing set of strings: kind A lives in the linear object of size
/// n, kind B in the cyclic object of size n (generators are orbits, tested
/// on all lifts, including shifted self-pairs).  Canonical generators of a
/// thick subset.
class NcSet {
public:
    NcSet() = default;

    /// Validates pairwise non-crossing (and, for kind B, length <= n).
    static NcSet make(NcKind kind, int n, std::vector<Str> gens);

    NcKind kind() const { return kind_; }
    int n() const { return n_; }
    const std::vector<Str>& gens() const { return gens_; }
    bool empty() const { return gens_.empty(); }

    friend bool operator==(const NcSet&, const NcSet&) = default;
    friend std::strong_ordering operator<=>(const NcSet&, const NcSet&) = default;

private:
    NcKind kind_ = NcKind::A;
    int n_ = 0;
    std::vector<Str> gens_;
};

/// A partition of the ground set: [n+1] for kind A, [2n] with the bar
/// involution x -> x+n (mod 2n) for kind B.  Blocks are disjoint, non-empty
/// and cover the ground set; kind B requires the bar image of a block to be
/// a block.
struct Partition {
    NcKind kind = NcKind::A;
    int n = 0;
    std::vector<std::vector<int>> blocks;  // each sorted; list sorted by min

    int ground_size() const { return kind == NcKind::A ? n + 1 : 2 * n; }
    static Partition make(NcKind kind, int n, std::vector<std::vector<int>> blocks);
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// True when two strings cross: lifts x, y with x' <= y' <= x'' <= y''
/// and x != y (kind B checks a window of shifted lifts, self-pairs too).
bool strings_cross(NcKind kind, const Str& s, const Str& t);

/// Least thick superset of the generators: closed under composable products
/// and the three splitting strings of any overlapping pair.  Kind B works on
/// lifts and truncates at length_bound.  Includes the zero string.
std::set<Str> thick_closure(NcKind kind, int n, const std::vector<Str>& gens,
                            int length_bound = -1);

/// Decides x in Thick(S) by greedy chain decomposition into generators.
bool nc_membership(const NcSet& S, const Str& x);

/// The minimal members of a thick set given by a membership predicate: no
/// other non-zero member supported strictly inside them.
NcSet simples_of_thick(const std::function<bool(const Str&)>& member, NcKind kind, int n);

bool nc_leq(const NcSet& S, const NcSet& T);
NcSet nc_meet(const NcSet& S, const NcSet& T);
NcSet nc_join(const NcSet& S, const NcSet& T);

Partition to_partition(const NcSet& S);
NcSet from_partition(const Partition& P);

bool partition_is_noncrossing(const Partition& P);
bool partition_refines(const Partition& P, const Partition& Q);
/// Join in the full partition lattice (finest common coarsening).
Partition partition_join(const Partition& P, const Partition& Q);

/// All non-crossing sets of the given kind and size, canonically ordered.
std::vector<NcSet> enumerate_nc(int n, NcKind kind);

/// Cover relations (i, j) with element i covered by element j.
std::vector<std::pair<int, int>> hasse_covers(const std::vector<NcSet>& lattice);

}  // namespace strc
