#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace mfcat {

// Rigid objects, maximal rigid and cluster tilting objects from an Ext^1 table
// on a finite set of indecomposables.
struct RigidEnumeration {
    std::vector<std::size_t> rigid;                      // indecomposable rigid vertices
    std::vector<std::vector<std::size_t>> maximal_rigid;  // maximal cliques; {} when none is rigid
    std::vector<std::vector<std::size_t>> cluster_tilting;
    std::size_t max_summands = 0;
};

// ext(i,j) > 0 means Ext^1(i,j) != 0.
inline RigidEnumeration enumerate_rigid(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& ext) {
    RigidEnumeration out;
    for (std::size_t v = 0; v < n; ++v)
        if (ext(v, v) == 0) out.rigid.push_back(v);
    const auto& R = out.rigid;
    std::size_t k = R.size();
    std::vector<std::vector<char>> compat(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) compat[a][b] = ext(R[a], R[b]) == 0 && ext(R[b], R[a]) == 0;
    // Bron-Kerbosch with Tomita pivoting.
    std::vector<std::vector<std::size_t>> cliques;
    std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
        [&](std::vector<std::size_t>& cur, std::vector<std::size_t> cand, std::vector<std::size_t> excl) {
            if (cand.empty() && excl.empty()) {
                std::vector<std::size_t> c;
                for (std::size_t a : cur) c.push_back(R[a]);
                std::sort(c.begin(), c.end());
                cliques.push_back(c);
                return;
            }
            std::size_t pivot = cand.empty() ? excl.front() : cand.front(), best = 0;
            for (const auto* set : {&cand, &excl})
                for (std::size_t u : *set) {
                    std::size_t cnt = 0;
                    for (std::size_t w : cand) cnt += compat[u][w] && u != w;
                    if (cnt > best) best = cnt, pivot = u;
                }
            std::vector<std::size_t> todo;
            for (std::size_t v : cand)
                if (v == pivot || !compat[pivot][v]) todo.push_back(v);
            for (std::size_t v : todo) {
                std::vector<std::size_t> nc, ne;
                for (std::size_t u : cand)
                    if (u != v && compat[v][u]) nc.push_back(u);
                for (std::size_t u : excl)
                    if (compat[v][u]) ne.push_back(u);
                cur.push_back(v);
                bk(cur, nc, ne);
                cur.pop_back();
                cand.erase(std::find(cand.begin(), cand.end(), v));
                excl.push_back(v);
            }
        };
    std::vector<std::size_t> cur, all;
    for (std::size_t a = 0; a < k; ++a) all.push_back(a);
    if (k == 0) {
        cliques.push_back({});
    } else {
        bk(cur, all, {});
    }
    std::sort(cliques.begin(), cliques.end());
    out.maximal_rigid = cliques;
    for (const auto& c : cliques) {
        out.max_summands = std::max(out.max_summands, c.size());
        if (c.empty()) continue;
        bool ct = true;
        for (std::size_t x = 0; x < n && ct; ++x) {
            bool in = false;
            for (std::size_t t : c) in = in || t == x;
            if (in) continue;
            bool orth = true;
            for (std::size_t t : c) orth = orth && ext(t, x) == 0;
            if (orth) ct = false;
        }
        if (ct) out.cluster_tilting.push_back(c);
    }
    return out;
}

}  // namespace mfcat
