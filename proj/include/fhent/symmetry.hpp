#pragma once

#include <array>
#include <string_view>

namespace fhent {

enum class SymmetryClass { Unitary, OPlusEven, Sp, OMinusEven, OPlusOdd, OMinusOdd };

enum class Prefactor { One, FAtZero, FAtPi, FAtZeroTimesFAtPi };

struct ClassInfo {
    std::string_view name;   // e.g. "sp"
    std::string_view label;  // e.g. "Sp(2N)"
    double sigma1;
    double sigma2;
    int w_G;
    Prefactor prefactor;
};

const ClassInfo& info(SymmetryClass c);

// Accepts the short names: unitary, o+even, sp, o-even, o+odd, o-odd.
SymmetryClass parse_class(std::string_view name);

inline constexpr std::array<SymmetryClass, 6> kAllClasses = {
    SymmetryClass::Unitary, SymmetryClass::OPlusEven, SymmetryClass::Sp,
    SymmetryClass::OMinusEven, SymmetryClass::OPlusOdd, SymmetryClass::OMinusOdd};

}  // namespace fhent
