// Monic liftings with controlled divisibility, and a desk-scale
// irreducibility screen for monic integer polynomials.
#pragma once

#include <optional>
#include <string>

#include "trinogen/gfpoly.hpp"

namespace trinogen {

/// S = phi * U + p * T with phi a monic lift of g, and g dividing neither
/// U nor T mod p.
struct Lifting {
  IntPoly phi;
  IntPoly U;
  IntPoly T;
};

/// Selects a monic lifting of an irreducible multiplicity-1 factor g of
/// S mod p satisfying the divisibility conditions above. Starts from the
/// trivial lift and perturbs it by p*w over all w of degree < deg g; throws
/// if the budget is exhausted, g is reducible, or g does not divide S mod p
/// exactly once.
Lifting select_lifting(const GFPoly& g, const IntPoly& S, std::int64_t p);

enum class Screen { Irreducible, Reducible, Unknown };

struct ScreenResult {
  Screen verdict = Screen::Unknown;
  std::string detail;   // e.g. "irreducible mod 7", "Eisenstein at 3"
  IntPoly witness;      // a proper factor, for Reducible
};

/// Heuristic irreducibility screen: proves irreducibility via reduction mod
/// a prime q <= 101 of good reduction or an Eisenstein prime <= 10^6;
/// disproves it via a rational root or a low-degree trial factor; otherwise
/// reports Unknown. Unknown is an honest state, not an error.
ScreenResult irreducibility_screen(const IntPoly& f);

}  // namespace trinogen
