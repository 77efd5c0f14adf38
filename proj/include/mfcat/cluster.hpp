#pragma once

#include "mfcat/homalg.hpp"
#include "mfcat/matfac.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mfcat {

using Permutation = std::vector<int>;  // 0-based images w(0..n-1)

// Condition (A): every factor has ord 1.
bool has_cluster_tilting(const FactorList& factors);

struct StableCounts {
    std::size_t indec_rigid = 0, cluster_tilting = 0, summands = 0;
    bool operator==(const StableCounts& o) const {
        return indec_rigid == o.indec_rigid && cluster_tilting == o.cluster_tilting && summands == o.summands;
    }
};
StableCounts stable_counts(std::size_t n);
StableCounts stable_counts(const FactorList& factors);

// Validates reducedness (no associate pair) and ord >= 1; throws UsageError.
void check_factor_list(const FactorList& factors);

std::vector<MF> indec_rigid_objects(const FactorList& factors, bool stable, bool verify = false,
                                    const HomalgConfig& cfg = {});

// Summands S/(f_{w(1)}...f_{w(i)}), i = 1..n (the last one is free).
std::vector<MF> cluster_tilting_summands(const FactorList& factors, const Permutation& w);
MF cluster_tilting_object(const FactorList& factors, const Permutation& w);
// Index sets {w(1..i)} of the summands.
std::vector<std::vector<int>> summand_sets(const Permutation& w);

// Map between direct sums of cyclic modules S/(g): entry (t,s) multiplies
// source summand s into target summand t.
struct CyclicMap {
    std::vector<Series> source, target;  // generators g of S/(g)
    std::vector<std::vector<Series>> mult;
};

// A morphism S/(source) -> (target of the last map) by multiplication, which
// must factor through the last map of its sequence.
struct ApproxCheck {
    std::string label;
    Series source;
    Series multiplier;
};

struct ExchangeSequence {
    std::string label;
    std::vector<CyclicMap> maps;  // consecutive maps left to right
    std::vector<ApproxCheck> checks;
};

struct ExchangeData {
    FactorList factors;
    Permutation w;
    std::size_t i = 0;  // 1-based mutation index
    std::vector<ExchangeSequence> sequences;
};

struct ExchangeReport {
    bool compositions_ok = true, well_defined_ok = true, approximation_ok = true;
    std::vector<std::string> failures;
    bool ok() const { return compositions_ok && well_defined_ok && approximation_ok; }
};

Permutation apply_transposition(const Permutation& w, std::size_t i);
std::pair<Permutation, ExchangeData> mutate(const FactorList& factors, const Permutation& w, std::size_t i);
// The 2-almost split sequence at i (requires (f_i, f_{i+1}) = m), transported along w.
ExchangeData almost_split_sequence(const FactorList& factors, const Permutation& w, std::size_t i);
// End-term sequence with an auxiliary f_{n+1} spanning m together with f_n.
ExchangeData end_sequence(const FactorList& factors, const Permutation& w);
Series choose_auxiliary_factor(const FactorList& factors, const Permutation& w);

ExchangeReport verify_exchange(const ExchangeData& data, const HomalgConfig& cfg = {});

MorphismPair cyclic_morphism(const CyclicMap& map, const Series& f);
MF cyclic_sum(const std::vector<Series>& gens, const Series& f);

struct MutationGraph {
    std::vector<Permutation> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t degree(std::size_t v) const;
    bool is_bipartite() const;
    bool is_connected() const;
    std::string to_dot(const std::vector<std::string>& labels = {}) const;
    nlohmann::json to_json() const;
};
MutationGraph mutation_graph(std::size_t n);
std::string permutation_label(const Permutation& w);

// Geometry.
Irreducibility irreducibility_heuristic(const Series& f);
std::size_t branch_count(const FactorList& factors);
bool katz_check(const FactorList& factors, std::size_t m);
unsigned cAm_type(const Series& g);
// Local Milnor number; throws InconsistencyError when no stabilization by degree 40.
std::size_t milnor_number(const Series& f);

// Verified counts over the universe of all S_I.
struct VerifiedCounts {
    StableCounts counts;
    std::vector<std::vector<int>> subsets;  // all nonempty I, free module last
    std::vector<std::vector<std::size_t>> ext;
    bool all_rigid = true;
    bool chains_vanish = true;
};
VerifiedCounts verify_counts(const FactorList& factors, const HomalgConfig& cfg = {});

}  // namespace mfcat
