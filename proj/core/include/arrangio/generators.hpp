#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrangio/arrangement.hpp"

namespace arrangio {

// The 2m-line family attaining |Sing_2| = m = n/2, over Q(zeta_{4m}):
// lines cos(2*pi*j/m) x + sin(2*pi*j/m) y + z for j = 0..m-1, followed by
// sin(pi*k/m) x - cos(pi*k/m) y for k = 0..m-1 (the pencil through
// [0,0,1]). Throws ParameterOutOfRange for m < 3.
Arrangement boroczky(size_t m);

// The point set whose dual arrangement is boroczky(m): m unit-circle
// points [cos(2*pi*j/m), sin(2*pi*j/m), 1] followed by m direction points
// [sin(pi*k/m), -cos(pi*k/m), 0]. Kept as an independent construction
// path for cross-checking.
std::vector<ProjPoint> boroczky_points(size_t m);

// The nine rational lines x, y, z, x-y, x-z, y-z, x+y-z, x-y+z, x-y-z.
Arrangement example_nine();

// The nine lines over Q(zeta_3) dual to the inflection points of the
// Fermat cubic x^3+y^3+z^3: no simple points, not supersolvable.
Arrangement hesse_dual();

// All seven lines of the projective plane over F_2.
Arrangement fano();

// n-1 lines y = s*x (s = 0..n-2) through [0,0,1] plus the transversal
// x+y+z, over Q. Throws ParameterOutOfRange for n < 4.
Arrangement near_pencil(size_t n);

// One line per distinct input point via duality (first occurrence wins).
// Throws TooFewPoints if fewer than 2 distinct points remain.
Arrangement dual_arrangement(const std::vector<ProjPoint>& points);

// A named construction request, as used by the command-line generator.
struct GeneratorRecipe {
  std::string name;                        // boroczky|example9|hesse|fano|near-pencil
  std::map<std::string, long> parameters;  // "m" or "n" where applicable
};

// Dispatch on recipe name. Throws InvalidConfig for unknown names or
// missing parameters; parameter range errors propagate from the target.
Arrangement generate(const GeneratorRecipe& recipe);

}  // namespace arrangio
