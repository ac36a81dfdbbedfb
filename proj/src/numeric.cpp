#include "toric/numeric.hpp"

#include "toric/lattice.hpp"

#include <iomanip>
#include <sstream>

namespace toric {

namespace {
unsigned g_bits = 256;
unsigned digits_for(unsigned bits) { return static_cast<unsigned>(bits * 0.30103) + 1; }
struct PrecisionInit {
    PrecisionInit() { Real::default_precision(digits_for(g_bits)); }
} g_init;
}  // namespace

unsigned set_working_precision(unsigned bits) {
    if (bits < 64) throw Error("InvalidParameter", "precision below 64 bits");
    unsigned old = g_bits;
    g_bits = bits;
    Real::default_precision(digits_for(bits));
    return old;
}

unsigned working_precision() { return g_bits; }

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
    // scaled to avoid overflow for widely ranging magnitudes
    if (abs(b.re) >= abs(b.im)) {
        if (b.re == 0) throw Error("DivisionByZero", "complex division by zero");
        Real r = b.im / b.re, d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    Real r = b.re / b.im, d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}
Cx& operator+=(Cx& a, const Cx& b) {
    a.re += b.re;
    a.im += b.im;
    return a;
}
Cx conj(const Cx& a) { return {a.re, -a.im}; }
Real abs(const Cx& a) { return boost::multiprecision::hypot(a.re, a.im); }
Real norm(const Cx& a) { return a.re * a.re + a.im * a.im; }
Real arg(const Cx& a) { return boost::multiprecision::atan2(a.im, a.re); }
Cx exp(const Cx& a) {
    Real m = boost::multiprecision::exp(a.re);
    return {m * boost::multiprecision::cos(a.im), m * boost::multiprecision::sin(a.im)};
}
Cx log(const Cx& a) { return {boost::multiprecision::log(abs(a)), arg(a)}; }
Cx pow(const Cx& a, std::size_t n) {
    Cx r(1);
    for (std::size_t i = 0; i < n; ++i) r = r * a;
    return r;
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real from_rat(const boost::multiprecision::mpq_rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

std::string to_decimal(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

std::string to_decimal(const Cx& z, int digits) {
    std::string s = to_decimal(z.re, digits);
    if (z.im == 0) return s;
    std::string i = to_decimal(boost::multiprecision::abs(z.im), digits);
    return s + (z.im < 0 ? "-" : "+") + i + "i";
}

CxVec solve(CxMat A, CxVec b) {
    std::size_t n = A.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[p][c])) p = r;
        if (abs(A[p][c]) == 0) throw Error("Singular", "singular complex system");
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Cx f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] = A[r][k] - f * A[c][k];
            b[r] = b[r] - f * b[c];
        }
    }
    CxVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Cx s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s = s - A[i][k] * x[k];
        x[i] = s / A[i][i];
    }
    return x;
}

Cx determinant(CxMat A) {
    std::size_t n = A.size();
    Cx d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[p][c])) p = r;
        if (abs(A[p][c]) == 0) return Cx(0);
        if (p != c) {
            std::swap(A[p], A[c]);
            d = -d;
        }
        d = d * A[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Cx f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] = A[r][k] - f * A[c][k];
        }
    }
    return d;
}

}  // namespace toric
