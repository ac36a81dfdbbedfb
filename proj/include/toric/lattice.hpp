#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

enum class ErrorKind { Validation, SolverIncomplete, HypothesisFailed };

// code is the short error name, e.g. "NonSimplicial"
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what, ErrorKind kind = ErrorKind::Validation)
        : std::runtime_error(code + ": " + what), code_(std::move(code)), kind_(kind) {}
    const std::string& code() const { return code_; }
    ErrorKind kind() const { return kind_; }

private:
    std::string code_;
    ErrorKind kind_;
};

IVec ivec(std::initializer_list<long> xs);
Int dot(const IVec& a, const IVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const QVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const Int& s, const IVec& a);
IVec neg(const IVec& a);
Int gcd_of(const IVec& a);
IVec primitive(const IVec& a);
bool is_zero(const IVec& a);
QVec to_q(const IVec& a);
// clears denominators then makes primitive; sign preserved
IVec primitive_of(const QVec& a);
bool is_integral(const QVec& a);
IVec to_int(const QVec& a);
std::string to_string(const IVec& a);
std::string to_string(const Rat& q);

struct IMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static IMat identity(std::size_t n);
    static IMat from_rows(const std::vector<IVec>& rs);
    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    IVec row(std::size_t i) const;
    bool operator==(const IMat& o) const = default;
};

IMat operator*(const IMat& x, const IMat& y);
IMat transpose(const IMat& m);
Int determinant(const IMat& m);

using QMat = std::vector<QVec>;

std::size_t rank(const QMat& m);
std::size_t rank(const std::vector<IVec>& rows);
// basis of {x : m x = 0}
std::vector<QVec> nullspace(const QMat& m);
// throws if singular
QMat inverse(const QMat& m);
QMat to_q(const std::vector<IVec>& rows);

struct HNFResult {
    IMat H, U;
};
// row style: U*M = H, pivots positive, entries above a pivot reduced into [0, pivot)
HNFResult hermite_normal_form(const IMat& M);
bool is_hermite_normal_form(const IMat& H);

struct SNFResult {
    IMat S, U, V;
};
// U*M*V = S diagonal, d1 | d2 | ..., nonnegative
SNFResult smith_normal_form(const IMat& M);

struct Cone {
    std::vector<IVec> generators;
    std::size_t ambient_dim = 0;
};

Cone make_cone(std::vector<IVec> gens);
bool is_smooth_cone(const Cone& c);

// translation-invariant GL(n,Z) normal form of a full-dimensional point set
struct LatticeNormalForm {
    Int denom;
    std::vector<IVec> lattice_hnf;
    std::vector<IVec> points;
    bool operator==(const LatticeNormalForm&) const = default;
};
bool operator<(const LatticeNormalForm& a, const LatticeNormalForm& b);
LatticeNormalForm lattice_normal_form(const std::vector<IVec>& vertices);
bool unimodular_equivalent(const std::vector<IVec>& P, const std::vector<IVec>& Q);
// an explicit map A*p + t taking P onto Q, if one exists
bool find_unimodular_map(const std::vector<IVec>& P, const std::vector<IVec>& Q, IMat& A, IVec& t);

}  // namespace toric
