#include "strcat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace strc {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

std::vector<std::vector<int>> uf_blocks(UnionFind& uf)
{
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < static_cast<int>(uf.parent.size()); ++i)
        by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, block] : by_root) blocks.push_back(std::move(block));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
}

// Staircase pattern x' <= y' <= x'' <= y'' on integer intervals.
bool staircase(int xa, int xb, int ya, int yb)
{
    return xa <= ya && ya <= xb && xb <= yb;
}

bool lifts_cross(const Str& s, const Str& t)
{
    const int n = s.modulus();
    const int sa = s.start(), sb = s.start() + s.length() - 1;
    const int span = s.length() + t.length();
    const int K = span / n + 2;
    for (int k = -K; k <= K; ++k) {
        const int ta = t.start() + k * n, tb = ta + t.length() - 1;
        if (s == t && k == 0) continue;  // identical lift
        if (staircase(sa, sb, ta, tb) || staircase(ta, tb, sa, sb)) return true;
    }
    return false;
}

void check_same_lattice(const NcSet& S, const NcSet& T)
{
    if (S.kind() != T.kind() || S.n() != T.n())
        throw std::invalid_argument("non-crossing sets live in different lattices");
}

// Candidate generators: every string that can be a member of a non-crossing
// set of the given kind and size.
std::vector<Str> nc_candidates(NcKind kind, int n)
{
    std::vector<Str> out;
    if (kind == NcKind::A) {
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) out.push_back(Str::interval(a, b));
    } else {
        for (int len = 1; len <= n; ++len)
            for (int a = 0; a < n; ++a) out.push_back(Str::orbit(n, a, len));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool strings_cross(NcKind kind, const Str& s, const Str& t)
{
    if (s.is_zero() || t.is_zero()) return false;
    if (kind == NcKind::A) {
        if (s == t) return false;
        return staircase(s.a(), s.b(), t.a(), t.b()) || staircase(t.a(), t.b(), s.a(), s.b());
    }
    return lifts_cross(s, t);
}

NcSet NcSet::make(NcKind kind, int n, std::vector<Str> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const Str& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("non-crossing sets hold non-zero strings");
        if (kind == NcKind::A) {
            if (!g.is_interval() || g.a() < 0 || g.b() >= n)
                throw std::invalid_argument("generator outside the linear object");
        } else {
            if (!g.is_orbit() || g.modulus() != n)
                throw std::invalid_argument("generator outside the cyclic object");
            if (g.length() > n)
                throw std::invalid_argument("generator longer than the modulus is crossing");
        }
    }
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            if (strings_cross(kind, gens[i], gens[j]))
                throw std::invalid_argument("crossing generators");
    NcSet S;
    S.kind_ = kind;
    S.n_ = n;
    S.gens_ = std::move(gens);
    return S;
}

std::set<Str> thick_closure(NcKind kind, int n, const std::vector<Str>& gens, int length_bound)
{
    if (kind == NcKind::B && length_bound < 0)
        throw std::invalid_argument("cyclic thick closure needs a length bound");
    std::set<Str> out;
    out.insert(Str::zero());
    for (const Str& g : gens)
        if (!g.is_zero() && (length_bound < 0 || g.length() <= length_bound)) out.insert(g);

    auto add = [&](const Str& x, bool& grew) {
        if (x.is_zero()) return;
        if (length_bound >= 0 && x.length() > length_bound) return;
        if (out.insert(x).second) grew = true;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Str> cur(out.begin(), out.end());
        for (const Str& s : cur) {
            if (s.is_zero()) continue;
            for (const Str& t : cur) {
                if (t.is_zero()) continue;
                add(mul(s, t), grew);
                if (kind == NcKind::A) {
                    if (s != t && staircase(s.a(), s.b(), t.a(), t.b())) {
                        if (s.a() <= t.a() - 1) add(Str::interval(s.a(), t.a() - 1), grew);
                        add(Str::interval(t.a(), s.b()), grew);
                        if (s.b() + 1 <= t.b()) add(Str::interval(s.b() + 1, t.b()), grew);
                    }
                } else {
                    // Splits on lifts, shifted self-pairs included.
                    const int sa = s.start(), sb = s.start() + s.length() - 1;
                    const int K = (s.length() + t.length()) / n + 2;
                    for (int k = -K; k <= K; ++k) {
                        const int ta = t.start() + k * n, tb = ta + t.length() - 1;
                        if (s == t && k == 0) continue;
                        if (!staircase(sa, sb, ta, tb)) continue;
                        if (sa <= ta - 1) add(Str::orbit(n, sa, ta - sa), grew);
                        add(Str::orbit(n, ta, sb - ta + 1), grew);
                        if (sb + 1 <= tb) add(Str::orbit(n, sb + 1, tb - sb), grew);
                    }
                }
            }
        }
    }
    return out;
}

bool nc_membership(const NcSet& S, const Str& x)
{
    if (x.is_zero()) return true;
    if (S.kind() == NcKind::A) {
        if (!x.is_interval()) return false;
        // Generator starts are distinct, so the chain walk is forced.
        int pos = x.a();
        while (pos <= x.b()) {
            const Str* next = nullptr;
            for (const Str& g : S.gens())
                if (g.a() == pos) { next = &g; break; }
            if (!next || next->b() > x.b()) return false;
            pos = next->b() + 1;
        }
        return true;
    }
    if (!x.is_orbit() || x.modulus() != S.n()) return false;
    const int n = S.n();
    int pos = x.start(), total = 0;
    while (total < x.length()) {
        const Str* next = nullptr;
        for (const Str& g : S.gens())
            if (g.start() == pos) { next = &g; break; }
        if (!next) return false;
        total += next->length();
        pos = (pos + next->length()) % n;
    }
    return total == x.length();
}

NcSet simples_of_thick(const std::function<bool(const Str&)>& member, NcKind kind, int n)
{
    std::vector<Str> members;
    for (const Str& c : nc_candidates(kind, n))
        if (member(c)) members.push_back(c);

    // The canonical generators are the members that are not a product of
    // two non-zero members.  Both factors of a bounded member are shorter,
    // so the candidate range covers them.
    std::vector<Str> indecomposable;
    for (const Str& s : members) {
        bool product = false;
        for (const Str& x : members) {
            if (x.length() >= s.length()) continue;
            for (const Str& y : members) {
                if (mul(x, y) == s) { product = true; break; }
            }
            if (product) break;
        }
        if (!product) indecomposable.push_back(s);
    }
    return NcSet::make(kind, n, std::move(indecomposable));
}

bool nc_leq(const NcSet& S, const NcSet& T)
{
    check_same_lattice(S, T);
    for (const Str& g : S.gens())
        if (!nc_membership(T, g)) return false;
    return true;
}

NcSet nc_meet(const NcSet& S, const NcSet& T)
{
    check_same_lattice(S, T);
    auto member = [&](const Str& x) { return nc_membership(S, x) && nc_membership(T, x); };
    return simples_of_thick(member, S.kind(), S.n());
}

Partition Partition::make(NcKind kind, int n, std::vector<std::vector<int>> blocks)
{
    Partition P;
    P.kind = kind;
    P.n = n;
    const int g = P.ground_size();
    std::vector<int> seen(g, 0);
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 0 || x >= g || seen[x]++)
                throw std::invalid_argument("blocks must partition the ground set");
        }
    }
    for (int x = 0; x < g; ++x)
        if (!seen[x]) throw std::invalid_argument("blocks must partition the ground set");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    P.blocks = std::move(blocks);
    if (kind == NcKind::B) {
        // The bar image of every block must be a block.
        for (const auto& block : P.blocks) {
            std::vector<int> bar;
            for (int x : block) bar.push_back((x + n) % (2 * n));
            std::sort(bar.begin(), bar.end());
            if (std::find(P.blocks.begin(), P.blocks.end(), bar) == P.blocks.end())
                throw std::invalid_argument("partition is not bar-invariant");
        }
    }
    return P;
}

Partition to_partition(const NcSet& S)
{
    const int n = S.n();
    if (S.kind() == NcKind::A) {
        UnionFind uf(n + 1);
        for (const Str& g : S.gens()) uf.unite(g.a(), g.b() + 1);
        return Partition::make(NcKind::A, n, uf_blocks(uf));
    }
    UnionFind uf(2 * n);
    for (const Str& g : S.gens()) {
        const int a = g.start(), l = g.length();
        uf.unite(a, (a + l) % (2 * n));
        uf.unite((a + n) % (2 * n), (a + l + n) % (2 * n));
    }
    return Partition::make(NcKind::B, n, uf_blocks(uf));
}

NcSet from_partition(const Partition& P)
{
    std::vector<Str> gens;
    if (P.kind == NcKind::A) {
        for (const auto& block : P.blocks)
            for (size_t i = 0; i + 1 < block.size(); ++i)
                gens.push_back(Str::interval(block[i], block[i + 1] - 1));
        return NcSet::make(NcKind::A, P.n, std::move(gens));
    }
    const int g = 2 * P.n;
    for (const auto& block : P.blocks) {
        if (block.size() < 2) continue;
        std::vector<int> in_block(g, 0), in_bar(g, 0);
        for (int x : block) {
            in_block[x] = 1;
            in_bar[(x + P.n) % g] = 1;
        }
        // Cyclically consecutive pairs; the gap holding the bar image of a
        // non-invariant block carries no generator.
        for (size_t i = 0; i < block.size(); ++i) {
            const int x = block[i];
            const int y = block[(i + 1) % block.size()];
            const int gap = ((y - x) % g + g) % g;
            bool blocked = false;
            for (int d = 1; d < gap; ++d)
                if (in_bar[(x + d) % g] && !in_block[(x + d) % g]) { blocked = true; break; }
            if (!blocked) gens.push_back(Str::orbit(P.n, x % P.n, gap));
        }
    }
    return NcSet::make(NcKind::B, P.n, std::move(gens));
}

bool partition_is_noncrossing(const Partition& P)
{
    const int g = P.ground_size();
    std::vector<int> label(g, -1);
    for (int bi = 0; bi < static_cast<int>(P.blocks.size()); ++bi)
        for (int x : P.blocks[bi]) label[x] = bi;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int i2 = j + 1; i2 < g; ++i2)
                for (int j2 = i2 + 1; j2 < g; ++j2)
                    if (label[i] == label[i2] && label[j] == label[j2] && label[i] != label[j])
                        return false;
    return true;
}

bool partition_refines(const Partition& P, const Partition& Q)
{
    if (P.kind != Q.kind || P.n != Q.n) throw std::invalid_argument("ground set mismatch");
    std::vector<int> qlabel(Q.ground_size(), -1);
    for (int bi = 0; bi < static_cast<int>(Q.blocks.size()); ++bi)
        for (int x : Q.blocks[bi]) qlabel[x] = bi;
    for (const auto& block : P.blocks)
        for (int x : block)
            if (qlabel[x] != qlabel[block.front()]) return false;
    return true;
}

Partition partition_join(const Partition& P, const Partition& Q)
{
    if (P.kind != Q.kind || P.n != Q.n) throw std::invalid_argument("ground set mismatch");
    UnionFind uf(P.ground_size());
    for (const auto& block : P.blocks)
        for (size_t i = 0; i + 1 < block.size(); ++i) uf.unite(block[i], block[i + 1]);
    for (const auto& block : Q.blocks)
        for (size_t i = 0; i + 1 < block.size(); ++i) uf.unite(block[i], block[i + 1]);
    return Partition::make(P.kind, P.n, uf_blocks(uf));
}

NcSet nc_join(const NcSet& S, const NcSet& T)
{
    check_same_lattice(S, T);
    Partition P = partition_join(to_partition(S), to_partition(T));
    const int g = P.ground_size();
    // Merge crossing blocks to a fixpoint.  Kind B merges bar-symmetric
    // pairs in the same union-find pass, which keeps bar-invariance.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> label(g, -1);
        for (int bi = 0; bi < static_cast<int>(P.blocks.size()); ++bi)
            for (int x : P.blocks[bi]) label[x] = bi;
        for (int i = 0; i < g && !changed; ++i)
            for (int j = i + 1; j < g && !changed; ++j)
                for (int i2 = j + 1; i2 < g && !changed; ++i2)
                    for (int j2 = i2 + 1; j2 < g && !changed; ++j2)
                        if (label[i] == label[i2] && label[j] == label[j2] &&
                            label[i] != label[j]) {
                            UnionFind uf(g);
                            for (const auto& block : P.blocks)
                                for (size_t t = 0; t + 1 < block.size(); ++t)
                                    uf.unite(block[t], block[t + 1]);
                            uf.unite(i, j);
                            if (P.kind == NcKind::B)
                                uf.unite((i + P.n) % g, (j + P.n) % g);
                            P = Partition::make(P.kind, P.n, uf_blocks(uf));
                            changed = true;
                        }
    }
    return from_partition(P);
}

std::vector<NcSet> enumerate_nc(int n, NcKind kind)
{
    const std::vector<Str> candidates = nc_candidates(kind, n);
    std::vector<NcSet> out;
    std::vector<Str> current;

    auto emit = [&]() {
        NcSet S;
        S = NcSet::make(kind, n, current);
        out.push_back(std::move(S));
    };

    std::function<void(size_t)> dfs = [&](size_t from) {
        emit();
        for (size_t i = from; i < candidates.size(); ++i) {
            bool ok = !strings_cross(kind, candidates[i], candidates[i]);
            for (const Str& g : current)
                if (strings_cross(kind, g, candidates[i])) { ok = false; break; }
            if (!ok) continue;
            current.push_back(candidates[i]);
            dfs(i + 1);
            current.pop_back();
        }
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> hasse_covers(const std::vector<NcSet>& lattice)
{
    const int N = static_cast<int>(lattice.size());
    std::vector<std::vector<bool>> le(N, std::vector<bool>(N, false));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) le[i][j] = nc_leq(lattice[i], lattice[j]);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j || !le[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < N && cover; ++k)
                if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
            if (cover) covers.emplace_back(i, j);
        }
    std::sort(covers.begin(), covers.end());
    return covers;
}

}  // namespace strc
