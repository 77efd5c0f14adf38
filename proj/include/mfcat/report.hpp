#pragma once

#include "mfcat/arquiver.hpp"
#include "mfcat/cluster.hpp"
#include "mfcat/homalg.hpp"
#include "mfcat/matfac.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mfcat {

// Geometric branches of one explicit factor.
struct BranchInfo {
    std::string factor;
    std::size_t branches = 1;
    unsigned ord = 0;  // ord of each branch
    std::string status;
    bool explicit_factor = true;  // the factor is itself a single branch
};

struct CurveInput {
    std::string description;
    Series f;
    FactorList factors;
    std::vector<BranchInfo> branches;

    std::size_t branch_count() const;
    bool condition_a() const;
    // Every geometric branch is an explicit rational factor.
    bool materialized() const;
};

// Splits a top-level product "(a)*(b)" or "(a)(b)" and then binomials
// c1 x^a + c2 y^b whose branches are rational.
CurveInput curve_from_equation(const std::string& text);
CurveInput curve_from_factors(const std::vector<std::string>& factors);
CurveInput curve_from_catalog(const Catalog& c);
std::vector<std::string> split_top_level_product(const std::string& text);

struct AnalyzeOptions {
    bool verify = false;
    HomalgConfig cfg;
};
nlohmann::json analyze(const CurveInput& in, const AnalyzeOptions& opts = {});
std::string analyze_text(const nlohmann::json& report);

struct ExtTable {
    std::string catalog, engine;
    std::vector<std::string> objects;
    std::vector<std::vector<long>> symbolic, mesh;  // -1 when unavailable
    std::vector<std::vector<bool>> agree;

    nlohmann::json to_json() const;
    std::string str() const;
};
// engine is symbolic, mesh or both.
ExtTable ext_table(const std::string& catalog_name, const CatalogParams& params, const std::string& engine,
                   const HomalgConfig& cfg = {});

// Injective assignments of catalog entries to quiver vertices with equal
// stable Hom and Ext^1 tables; labels holds the first in lexicographic order.
struct MeshLabels {
    std::vector<std::string> labels;
    std::size_t matches = 0;
};
MeshLabels match_mesh_labels(const std::vector<MF>& entries, const StableTranslationQuiver& q,
                             const HomalgConfig& cfg = {});

// Mutation graph of a catalog with condition (A); vertices are labelled by the
// non-free summands of M_w, named through labels (indexed like mf_subset sets).
struct CatalogGraph {
    MutationGraph graph;
    std::vector<std::string> labels;
};
CatalogGraph catalog_mutation_graph(const std::string& catalog_name, const CatalogParams& params,
                                    const HomalgConfig& cfg = {});

struct Check {
    std::string name, expected, got;
    bool pass = false;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    bool pass() const;
    std::size_t passed() const;
    nlohmann::json to_json() const;
    std::string str() const;
};

struct SuiteOptions {
    HomalgConfig cfg;
    std::string golden_dir;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace mfcat
