#pragma once

#include "toric/lattice.hpp"

#include <map>

namespace toric {

// mult * exp(2*pi*k*log)
struct Coeff {
    Rat mult = 1;
    Rat log = 0;
    bool operator==(const Coeff&) const = default;
};

inline Coeff operator/(const Coeff& a, const Coeff& b) { return {a.mult / b.mult, a.log - b.log}; }
inline Coeff operator*(const Coeff& a, const Coeff& b) { return {a.mult * b.mult, a.log + b.log}; }

using Section = std::map<IVec, Coeff>;

}  // namespace toric
