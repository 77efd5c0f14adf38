#pragma once

#include "mfcat/linalg.hpp"
#include "mfcat/matfac.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mfcat {

struct HomalgConfig {
    FieldContext field;
    std::uint32_t precision_max = 128;
    bool use_cache = true;

    // MF_FIELD and MF_PRECISION_MAX override the defaults.
    static HomalgConfig from_env();
};

const std::vector<std::uint32_t>& precision_ladder();

// alpha A = C beta and beta B = D alpha for source (A,B), target (C,D).
struct MorphismPair {
    Matrix alpha, beta;
    std::uint32_t precision = kExact;
};

struct HomotopyWitness {
    Matrix H, K;
};

// Checks the cycle identities modulo m^n.
bool is_morphism(const MF& src, const MF& dst, const MorphismPair& p, std::uint32_t n = kExact);
// Checks alpha = CH + KB and beta = HA + DK modulo m^n.
bool is_homotopy(const MF& src, const MF& dst, const MorphismPair& p, const HomotopyWitness& w,
                 std::uint32_t n = kExact);
MorphismPair compose(const MorphismPair& second, const MorphismPair& first);
MorphismPair identity_morphism(const MF& m);

struct ExtReport {
    std::string kind;  // hom | stable-hom | ext1
    std::size_t dim = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> ladder;
    bool stabilized = false;
    bool certified = false;
    std::uint32_t certified_at = 0;
    std::string note;

    nlohmann::json to_json() const;
};

// Hom_R(coker A, coker C) truncated at prec: basis of alpha modulo C*H and m^prec,
// with matching beta.
std::vector<MorphismPair> hom_space(const MF& src, const MF& dst, std::uint32_t prec, const HomalgConfig& cfg = {});

ExtReport stable_hom_dim(const MF& src, const MF& dst, const HomalgConfig& cfg = {});
ExtReport ext1_dim(const MF& src, const MF& dst, const HomalgConfig& cfg = {});
bool is_rigid(const MF& m, const HomalgConfig& cfg = {});
std::vector<std::vector<ExtReport>> ext_matrix(const std::vector<MF>& objects, const HomalgConfig& cfg = {});

// Stable Hom with an explicit basis: classes are alpha modulo (C*S + S*B) and m^trunc.
class StableHomBasis {
public:
    // min_precision raises the working precision above the ladder's choice.
    StableHomBasis(const MF& src, const MF& dst, const HomalgConfig& cfg = {}, std::uint32_t min_precision = 0);

    std::size_t dim() const { return basis_.size(); }
    std::uint32_t truncation() const { return trunc_; }
    std::uint32_t precision() const { return prec_; }
    const std::vector<Matrix>& basis() const { return basis_; }
    const MF& source() const { return src_; }
    const MF& target() const { return dst_; }
    // Coordinates of the class of alpha; alpha must come from a morphism.
    std::vector<Rational> coordinates(const Matrix& alpha) const;
    Matrix element(const std::vector<Rational>& coords) const;

    struct Impl;

private:
    MF src_, dst_;
    std::uint32_t prec_ = 0, trunc_ = 0;
    std::vector<Matrix> basis_;
    std::shared_ptr<const Impl> impl_;
};

// Solves alpha_a * alpha_h = alpha_g modulo homotopy into the target of g,
// i.e. whether g factors through a (stably when stable is true).
bool factors_through(const MF& a_src, const MF& target, const MorphismPair& a, const MF& g_src,
                     const MorphismPair& g, bool stable, std::uint32_t prec, const HomalgConfig& cfg = {});

bool is_isomorphic(const MF& m, const MF& n, const HomalgConfig& cfg = {});

void clear_homalg_cache();

}  // namespace mfcat
