#pragma once

/// Bridge from spherical algebras over finite rings (or Z with a box) to
/// finite ternary loops: enumerate a sphere and present the torsor law as
/// a Cayley table. Small spheres are materialized; larger ones stay lazy
/// as closures over the algebra.

#include <map>
#include <memory>

#include "sphere/magma.hpp"
#include "sphere/ternary.hpp"

namespace sphere {

template <ring_type R>
struct SphereLoopData {
    TernaryAlgebra<R> alg;
    typename R::Elem level;
    std::vector<Vec<R>> elems;
    std::map<std::vector<std::string>, int> index; // string key keeps ordering portable

    SphereLoopData(TernaryAlgebra<R> a, typename R::Elem c) : alg(std::move(a)), level(c) {}

    std::vector<std::string> key(const Vec<R>& v) const {
        std::vector<std::string> k;
        k.reserve(v.size());
        for (const auto& x : v) k.push_back(alg.ring().str(x));
        return k;
    }

    int lookup(const Vec<R>& v) const {
        auto it = index.find(key(v));
        if (it == index.end()) throw Error("torsor product left the sphere");
        return it->second;
    }
};

/// The ternary loop of the sphere q^{-1}(c). Elements in deterministic
/// enumeration order; table entries are torsor products (xyz) = <xyz>/q(y).
template <ring_type R>
TernaryMagma sphere_loop(const TernaryAlgebra<R>& A, const typename R::Elem& c,
                         std::int64_t box = 0, int dense_cap = 16) {
    auto data = std::make_shared<SphereLoopData<R>>(A, c);
    data->elems = sphere_enumerate(A, c, box);
    if (data->elems.empty()) throw EmptySphere();
    for (std::size_t i = 0; i < data->elems.size(); ++i)
        data->index[data->key(data->elems[i])] = static_cast<int>(i);

    TernaryMagma t;
    t.k = static_cast<int>(data->elems.size());
    t.labels.reserve(data->elems.size());
    for (const auto& v : data->elems) t.labels.push_back(vec_str(A.ring(), v));
    t.fn = [data](int x, int y, int z) {
        return data->lookup(
            torsor_product(data->alg, data->elems[x], data->elems[y], data->elems[z]));
    };
    if (t.k <= dense_cap) return t.densified();
    return t;
}

} // namespace sphere
