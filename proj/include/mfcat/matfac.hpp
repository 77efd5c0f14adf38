#pragma once

#include "mfcat/series.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace mfcat {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, int nvars);

    static Matrix identity(std::size_t n, int nvars);
    static Matrix scalar(const Series& s, std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Series>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    int nvars() const { return nv_; }
    Series& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const Series& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Series& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix truncate(std::uint32_t n) const;
    bool is_zero() const;
    // Leibniz expansion; intended for r <= 4.
    Series det() const;
    Matrix remove(std::size_t row, std::size_t col) const;
    unsigned max_degree() const;
    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    int nv_ = 2;
    std::vector<Series> e_;
};

Matrix block_diag(const Matrix& a, const Matrix& b);

// Pair (A,B) with AB = BA = f*I representing coker(A) over S/(f).
struct MatrixFactorization {
    std::string name;
    std::string note;
    Series f;
    Matrix A, B;

    std::size_t rank() const { return A.rows(); }
    int nvars() const { return f.nvars(); }
    bool operator==(const MatrixFactorization& o) const { return f == o.f && A == o.A && B == o.B; }
};
using MF = MatrixFactorization;

struct ValidationResult {
    bool ok = true;
    std::string message;
};

ValidationResult validate(const MF& m);
// Throws InconsistencyError when validate fails.
void require_valid(const MF& m);

enum class Irreducibility { certified, heuristic_yes, asserted, unknown };
std::string to_string(Irreducibility s);

struct FactorList {
    std::vector<Series> factors;
    std::vector<Irreducibility> status;
    std::vector<std::string> labels;

    std::size_t size() const { return factors.size(); }
    Series product() const;
    Series product(const std::vector<int>& indices) const;
};

FactorList make_factor_list(std::vector<Series> factors);

// i is 1-based; S_i = S/(f_1...f_i).
MF mf_partial_product(const FactorList& factors, std::size_t i);
// S_I = S/(prod_{k in I} f_k) with 0-based indices.
MF mf_subset(const FactorList& factors, const std::vector<int>& subset);
MF shift(const MF& m);
MF direct_sum(const MF& a, const MF& b);
MF direct_sum(const std::vector<MF>& parts);

struct ReduceResult {
    MF mf;
    int free_summands = 0;
    int zero_summands = 0;
};
ReduceResult reduce(const MF& m);
bool is_reduced(const MF& m);

// w is a 0-based permutation; i in 1..n.
MF knoerrer_lift(const FactorList& factors, const std::vector<int>& w, std::size_t i);

struct CatalogParams {
    int n = 0, p = 0, q = 0;
    Rational lambda = 2;
    std::vector<Rational> lambdas;
};

struct Catalog {
    std::string name;
    Series f;
    FactorList factors;
    bool has_factors = false;
    std::vector<MF> entries;
};

Catalog catalog(const std::string& name, const CatalogParams& params = {});
std::vector<std::string> catalog_names();

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MF& m);
MF mf_from_json(const nlohmann::json& j);
// Canonical text used as a cache key.
std::string serialize(const MF& m);

}  // namespace mfcat
