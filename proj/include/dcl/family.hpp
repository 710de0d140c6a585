#pragma once

// The two factorial-power families and the two difference directions.
//
// Family Minus: (m_ih)^(s) = prod_{k<s} (m_ih - kh)   (falling, the Pi^+ spaces)
// Family Plus:  (m_ih)^(s) = prod_{k<s} (m_ih + kh)   (rising,  the Pi^- spaces)
//
// The forward difference acts diagonally on the Minus family and the backward
// difference on the Plus family (the "matched" pairing); the opposite pairing
// introduces a lattice shift.

#include <stdexcept>
#include <string>

namespace dcl {

enum class FamilySign { Minus, Plus };
enum class OpSign { Forward, Backward };

inline OpSign matched_op(FamilySign f) {
    return f == FamilySign::Minus ? OpSign::Forward : OpSign::Backward;
}
inline FamilySign matched_family(OpSign s) {
    return s == OpSign::Forward ? FamilySign::Minus : FamilySign::Plus;
}

// +1 for the Minus family, -1 for the Plus family: the sign in
// x * x^(s) = x^(s+1) + family_unit(f) * s*h * x^(s).
inline int family_unit(FamilySign f) { return f == FamilySign::Minus ? 1 : -1; }

// +1 for Forward, -1 for Backward: lattice step direction of the stencil.
inline int op_unit(OpSign s) { return s == OpSign::Forward ? 1 : -1; }

inline OpSign opposite(OpSign s) {
    return s == OpSign::Forward ? OpSign::Backward : OpSign::Forward;
}

inline char family_char(FamilySign f) { return f == FamilySign::Minus ? '-' : '+'; }
inline FamilySign family_from_char(char c) {
    if (c == '-') return FamilySign::Minus;
    if (c == '+') return FamilySign::Plus;
    throw std::invalid_argument(std::string("family: expected '+' or '-', got '") + c + "'");
}

inline char op_char(OpSign s) { return s == OpSign::Forward ? '+' : '-'; }
inline OpSign op_from_char(char c) {
    if (c == '+') return OpSign::Forward;
    if (c == '-') return OpSign::Backward;
    throw std::invalid_argument(std::string("operator sign: expected '+' or '-', got '") + c + "'");
}

}  // namespace dcl
