#pragma once

#include "mfcat/cliques.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mfcat {

struct DynkinDiagram {
    char type = 'A';
    int n = 1;
    std::vector<std::vector<int>> adj;
    std::vector<int> par;  // bipartite colouring

    static DynkinDiagram make(char type, int n);
    int rank() const { return n; }
    int coxeter() const;
    std::string name() const;
    // All diagram automorphisms as vertex permutations, identity first.
    std::vector<std::vector<int>> automorphisms() const;
    std::vector<int> flip() const;  // nontrivial involution (A, D, E6); identity otherwise
};

// Vertex (i, c) of the cover, with c = par(i) mod 2.
struct CoverVertex {
    int i = 0, c = 0;
    bool operator<(const CoverVertex& o) const { return c != o.c ? c < o.c : i < o.i; }
    bool operator==(const CoverVertex& o) const { return i == o.i && c == o.c; }
};

// g(i, c) = (perm[i], c - shift). tau = (2, id); on A_n with n even the
// square root gamma = (1, flip) exists.
struct AutElement {
    int shift = 0;
    std::vector<int> perm;
    std::string label;

    CoverVertex apply(const CoverVertex& v, int power = 1) const;
};

AutElement tau_power(const DynkinDiagram& d, int k, const std::vector<int>& sigma = {});
AutElement gamma_power(const DynkinDiagram& d, int k);
AutElement frobenius_F(const DynkinDiagram& d);
bool is_automorphism(const DynkinDiagram& d, const AutElement& g);
bool is_weakly_admissible(const DynkinDiagram& d, const AutElement& g);
std::string perm_label(const DynkinDiagram& d, const std::vector<int>& sigma);

// Hom(x, -) in the mesh category k(ZDelta) on the slices c in [x.c, x.c + width].
struct Hammock {
    CoverVertex source;
    std::map<CoverVertex, std::size_t> values;  // nonzero entries only

    std::size_t at(const CoverVertex& v) const {
        auto it = values.find(v);
        return it == values.end() ? 0 : it->second;
    }
};
Hammock hammock(const DynkinDiagram& d, const CoverVertex& x, int width = -1);
std::size_t mesh_hom_dim(const DynkinDiagram& d, const CoverVertex& x, const CoverVertex& y);

class StableTranslationQuiver {
public:
    StableTranslationQuiver(const DynkinDiagram& d, const AutElement& g);

    const DynkinDiagram& cover() const { return d_; }
    const AutElement& group_generator() const { return g_; }
    std::size_t size() const { return reps_.size(); }
    const CoverVertex& rep(std::size_t v) const { return reps_[v]; }
    const std::string& name(std::size_t v) const { return names_[v]; }
    // Names the orbit of any cover vertex.
    void set_name(const CoverVertex& v, const std::string& name);
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index(const CoverVertex& v) const;
    std::size_t tau(std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> arrows() const;

    std::size_t hom_dim(std::size_t x, std::size_t y) const;
    // 2-CY reading: Ext^1(X, Y) = D Hom(Y, tau X).
    std::size_t ext1_dim(std::size_t x, std::size_t y) const;
    const std::vector<std::vector<std::size_t>>& hom_table() const;

    std::string metadata;  // covering data
    std::string to_dot() const;
    nlohmann::json to_json() const;

private:
    CoverVertex canonical(const CoverVertex& v) const;

    DynkinDiagram d_;
    AutElement g_;
    std::vector<CoverVertex> reps_;
    std::vector<std::string> names_;
    std::map<CoverVertex, std::size_t> index_;
    mutable std::vector<std::vector<std::size_t>> hom_;
};

// Curves: A<n>, D<n>, E6, E7, E8.
StableTranslationQuiver curve_quiver(const std::string& name);
std::vector<std::string> curve_names(int max_a = 9, int max_d = 8);

struct QuiverCounts {
    std::size_t rigid = 0, cluster_tilting = 0, maximal_rigid = 0, summands = 0;
    bool operator==(const QuiverCounts& o) const {
        return rigid == o.rigid && cluster_tilting == o.cluster_tilting && maximal_rigid == o.maximal_rigid &&
               summands == o.summands;
    }
    std::string str() const;
};
RigidEnumeration enumerate_rigid(const StableTranslationQuiver& q);
QuiverCounts quiver_counts(const StableTranslationQuiver& q);
// Table of indecomposable rigid / basic CT / basic maximal rigid / summands per curve.
QuiverCounts expected_curve_counts(const std::string& name);

// Generators g with F in <g>, weakly admissible.
std::vector<AutElement> legal_generators(const DynkinDiagram& d);
bool expected_has_ct(const DynkinDiagram& d, const AutElement& g);
bool expected_no_rigid(const DynkinDiagram& d, const AutElement& g);

struct SweepEntry {
    std::string diagram, generator;
    std::size_t vertices = 0;
    bool has_ct = false, has_rigid = false;
    bool expected_ct = false, expected_no_rigid = false;
    bool ok() const { return has_ct == expected_ct && has_rigid == !expected_no_rigid; }
};
std::vector<DynkinDiagram> sweep_diagrams(int max_rank = 8);
std::vector<SweepEntry> sweep_quotients(int max_rank = 8, std::size_t max_vertices = 200);
nlohmann::json to_json(const std::vector<SweepEntry>& sweep);

}  // namespace mfcat
