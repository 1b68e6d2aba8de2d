#include "strcat/simplex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace strc {

MonotoneMap MonotoneMap::make(int m, int n, std::vector<int> values)
{
    if (m < 0 || n < 0 || static_cast<int>(values.size()) != m)
        throw std::invalid_argument("monotone map needs one value per point");
    for (int i = 0; i < m; ++i) {
        if (values[i] < 0 || values[i] >= n)
            throw std::invalid_argument("monotone map value out of range");
        if (i > 0 && values[i] < values[i - 1])
            throw std::invalid_argument("values must be weakly increasing");
    }
    MonotoneMap f;
    f.m = m;
    f.n = n;
    f.values = std::move(values);
    return f;
}

MonotoneMap MonotoneMap::identity(int n)
{
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i) values[i] = i;
    return make(n, n, std::move(values));
}

MonotoneMap MonotoneMap::face(int n, int i)
{
    if (i < 0 || i > n) throw std::out_of_range("face index needs 0 <= i <= n");
    std::vector<int> values(n);
    for (int j = 0; j < n; ++j) values[j] = j < i ? j : j + 1;
    return make(n, n + 1, std::move(values));
}

MonotoneMap MonotoneMap::degeneracy(int n, int i)
{
    if (i < 0 || i >= n) throw std::out_of_range("degeneracy index needs 0 <= i < n");
    std::vector<int> values(n + 1);
    for (int j = 0; j <= n; ++j) values[j] = j <= i ? j : j - 1;
    return make(n + 1, n, std::move(values));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f)
{
    if (f.n != g.m) throw std::invalid_argument("composition mismatch");
    std::vector<int> values(f.m);
    for (int i = 0; i < f.m; ++i) values[i] = g.values[f.values[i]];
    return MonotoneMap::make(f.m, g.n, std::move(values));
}

MonotoneWord decompose_monotone(const MonotoneMap& f)
{
    MonotoneWord w;
    w.m = f.m;
    w.n = f.n;
    for (int i = 0; i + 1 < f.m; ++i)
        if (f.values[i] == f.values[i + 1]) w.degeneracies.push_back(i);
    for (int v = 0; v < f.n; ++v)
        if (std::find(f.values.begin(), f.values.end(), v) == f.values.end())
            w.faces.push_back(v);
    return w;
}

MonotoneMap evaluate_monotone_word(const MonotoneWord& word)
{
    MonotoneMap acc = MonotoneMap::identity(word.m);
    int size = word.m;
    std::vector<int> degens = word.degeneracies;
    std::sort(degens.rbegin(), degens.rend());
    for (int j : degens) {
        acc = compose(MonotoneMap::degeneracy(size - 1, j), acc);
        --size;
    }
    std::vector<int> faces = word.faces;
    std::sort(faces.begin(), faces.end());
    for (int i : faces) {
        acc = compose(MonotoneMap::face(size, i), acc);
        ++size;
    }
    if (acc.n != word.n) throw std::invalid_argument("word does not reach its codomain");
    return acc;
}

Morphism functor_p(const MonotoneMap& f)
{
    const MonotoneWord w = decompose_monotone(f);
    const Connected dom = Connected::linear(std::max(f.m - 1, 0));
    Morphism acc = Morphism::identity(StringsObject::connected(dom));
    int size = f.m;  // current object [size] along the word
    std::vector<int> degens = w.degeneracies;
    std::sort(degens.rbegin(), degens.rend());
    for (int j : degens) {
        acc = compose(std_sigma(size - 1, j), acc);
        --size;
    }
    std::vector<int> faces = w.faces;
    std::sort(faces.begin(), faces.end());
    for (int i : faces) {
        // face(size, i) maps to delta(size, i); the map [0] -> [1] collapses
        // to the identity on Linear(0).
        if (size >= 1) acc = compose(std_delta(size, i), acc);
        ++size;
    }
    return acc;
}

MonotoneMap section(int i, const Morphism& phi)
{
    if (i != 0 && i != 1) throw std::out_of_range("the comparison functor has two sections");
    if (!phi.is_connected_pair() || !phi.dom().comps[0].is_linear() ||
        !phi.cod().comps[0].is_linear())
        throw std::invalid_argument("sections are defined on linear connected morphisms");
    const CanonicalWord w = canonical_decomposition(phi);

    MonotoneMap acc = MonotoneMap::identity(w.dom.n + 1);
    int size = w.dom.n + 1;
    std::vector<int> degens = w.degeneracies;
    std::sort(degens.rbegin(), degens.rend());
    for (int j : degens) {
        acc = compose(MonotoneMap::degeneracy(size - 1, j), acc);
        --size;
    }
    std::vector<int> faces = w.faces;
    std::sort(faces.begin(), faces.end());
    for (int f : faces) {
        // The collapsed smallest face lifts to face(1, i).
        const int lift = (size == 1 && f == 1) ? i : f;
        acc = compose(MonotoneMap::face(size, lift), acc);
        ++size;
    }
    return acc;
}

std::vector<MonotoneMap> enumerate_monotone(int m, int n)
{
    std::vector<MonotoneMap> out;
    std::vector<int> values(m);
    std::function<void(int, int)> dfs = [&](int idx, int lo) {
        if (idx == m) {
            out.push_back(MonotoneMap::make(m, n, values));
            return;
        }
        for (int v = lo; v < n; ++v) {
            values[idx] = v;
            dfs(idx + 1, v);
        }
    };
    if (m == 0)
        out.push_back(MonotoneMap::make(0, n, {}));
    else if (n > 0)
        dfs(0, 0);
    return out;
}

std::int64_t binomial(int n, int k)
{
    if (k < 0) return 0;
    if (k == 0) return 1;  // covers C(-1, 0) = 1
    if (n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace strc
