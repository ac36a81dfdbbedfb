#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

namespace toric {

using Real = boost::multiprecision::mpfr_float;

// sets the default precision of new Real values; returns the previous value in bits
unsigned set_working_precision(unsigned bits);
unsigned working_precision();

struct Cx {
    Real re, im;
    Cx() : re(0), im(0) {}
    Cx(const Real& r) : re(r), im(0) {}
    Cx(const Real& r, const Real& i) : re(r), im(i) {}
    Cx(int r) : re(r), im(0) {}
    Cx(double r) : re(r), im(0) {}
};

Cx operator+(const Cx& a, const Cx& b);
Cx operator-(const Cx& a, const Cx& b);
Cx operator-(const Cx& a);
Cx operator*(const Cx& a, const Cx& b);
Cx operator/(const Cx& a, const Cx& b);
Cx& operator+=(Cx& a, const Cx& b);
Cx conj(const Cx& a);
Real abs(const Cx& a);
Real norm(const Cx& a);
Real arg(const Cx& a);
Cx exp(const Cx& a);
Cx log(const Cx& a);
Cx pow(const Cx& a, std::size_t n);

Real pi();
Real from_rat(const boost::multiprecision::mpq_rational& q);
std::string to_decimal(const Real& x, int digits = 30);
std::string to_decimal(const Cx& z, int digits = 30);

using CxVec = std::vector<Cx>;
using CxMat = std::vector<CxVec>;
// Gaussian elimination with partial pivoting; throws on exact singularity
CxVec solve(CxMat A, CxVec b);
Cx determinant(CxMat A);

}  // namespace toric
