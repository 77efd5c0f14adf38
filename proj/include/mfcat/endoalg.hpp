#pragma once

#include "mfcat/homalg.hpp"
#include "mfcat/matfac.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mfcat {

using AlgElement = std::vector<Rational>;

// Finite-dimensional algebra End(M) for M = direct sum of the given summands.
// Basis elements are stable Hom classes between summands; mul(a, b) = a o b
// (b first), so that e_i A e_j = Hom(S_j, S_i).
class FiniteDimAlgebra {
public:
    struct BasisElement {
        std::size_t src = 0, tgt = 0;
        Matrix alpha;
        std::string label;
    };

    std::vector<std::string> vertices;
    std::vector<BasisElement> basis;
    std::vector<AlgElement> idempotents;

    std::size_t dim() const { return basis.size(); }
    AlgElement zero() const { return AlgElement(dim(), Rational(0)); }
    AlgElement unit() const;
    AlgElement basis_vector(std::size_t k) const;
    AlgElement mul(const AlgElement& a, const AlgElement& b) const;
    // Class of alpha : summand src -> summand tgt.
    AlgElement from_alpha(std::size_t src, std::size_t tgt, const Matrix& alpha) const;
    // Exhaustive check on basis triples.
    bool is_associative() const;
    // Block of a basis-homogeneous element; nullopt for zero or mixed elements.
    std::optional<std::pair<std::size_t, std::size_t>> block_of(const AlgElement& a) const;

    nlohmann::json to_json() const;

    // Structure constants: table_[a][b] = coordinates of basis[a] o basis[b].
    std::vector<std::vector<AlgElement>> table_;
    std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<StableHomBasis>> homs_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> offset_;
};

AlgElement operator+(const AlgElement& a, const AlgElement& b);
AlgElement operator-(const AlgElement& a, const AlgElement& b);
AlgElement operator*(const Rational& c, const AlgElement& a);
bool is_zero(const AlgElement& a);

// Free and zero summands contribute no vertex.
FiniteDimAlgebra stable_endo_algebra(const std::vector<MF>& summands, const HomalgConfig& cfg = {});

std::size_t nilpotency_index(const FiniteDimAlgebra& alg, const AlgElement& a);

struct Radical {
    std::vector<AlgElement> rad, rad2;
    std::size_t loewy_length = 0;
    // Per block (src, tgt): arrows = a basis of rad modulo rad^2 in that block.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<AlgElement>> arrows;
};
Radical radical(const FiniteDimAlgebra& alg);

struct CartanMatrix {
    std::vector<std::vector<std::size_t>> C;
    bool symmetric = false;
    bool nonsingular = false;
    std::string str() const;
};
CartanMatrix cartan_matrix(const FiniteDimAlgebra& alg);

struct QuiverPresentation {
    struct Arrow {
        std::size_t from = 0, to = 0, multiplicity = 0;
    };
    enum class Status { verified_zero, verified_equal, failed };
    struct RelationResult {
        std::string relation;
        Status status = Status::failed;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<RelationResult> relations;

    std::size_t arrow_count(std::size_t from, std::size_t to) const;
    bool has_loop(std::size_t v) const { return arrow_count(v, v) > 0; }
    std::string to_dot() const;
    nlohmann::json to_json() const;
};
std::string to_string(QuiverPresentation::Status s);

QuiverPresentation quiver_of_endo(const FiniteDimAlgebra& alg);
// Combinatorial quiver of End(M_w) for the chain object on the given factor order.
QuiverPresentation chain_quiver(const FactorList& factors, bool stable);
// (f_i, f_{i+1}) = m, decided on the degree-1 parts.
bool spans_maximal_ideal(const Series& a, const Series& b);

using GeneratorMap = std::map<std::string, AlgElement>;

// Relations are words like "psi*alpha - alpha*phi", "phi^2 - beta*alpha",
// "alpha*beta*alpha", "a = b"; coefficients are rationals, words compose right to left.
std::vector<QuiverPresentation::RelationResult> check_relations(const FiniteDimAlgebra& alg, const GeneratorMap& gens,
                                                               const std::vector<std::string>& relations);

struct PresentationMatch {
    bool found = false;
    std::string dictionary;
    std::map<std::string, Rational> scales;
    std::string message;
};
struct NamedDictionary {
    std::string label;
    GeneratorMap gens;
};
// Searches generator rescalings g -> c_g g over the candidate scalars until all
// relations vanish; reports "presentation match not found" on failure.
PresentationMatch match_presentation(const FiniteDimAlgebra& alg, const GeneratorMap& gens,
                                     const std::vector<std::string>& relations,
                                     const std::vector<Rational>& candidates = {});
// Tries each dictionary in turn (e.g. vertex permutations of one assignment).
PresentationMatch match_presentation(const FiniteDimAlgebra& alg, const std::vector<NamedDictionary>& dictionaries,
                                     const std::vector<std::string>& relations,
                                     const std::vector<Rational>& candidates = {});

}  // namespace mfcat
