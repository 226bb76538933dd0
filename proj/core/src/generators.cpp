#include "arrangio/generators.hpp"

#include "arrangio/errors.hpp"

namespace arrangio {

namespace {

// cos(2*pi*j / m) in Q(zeta_{4m}): (zeta^{4j} + zeta^{-4j}) / 2.
FieldElement cos_full(const FieldPtr& f, long fourm, long j) {
  return f->zeta_combination(
      {{4 * j % fourm, Rational(1, 2)}, {(fourm - 4 * j % fourm) % fourm, Rational(1, 2)}});
}

// sin(2*pi*j / m): (zeta^{4j} - zeta^{-4j}) / (2i) with 1/i = -zeta^{m}.
FieldElement sin_full(const FieldPtr& f, long fourm, long j) {
  long m = fourm / 4;
  return f->zeta_combination({{(m + 4 * j) % fourm, Rational(-1, 2)},
                              {((m - 4 * j) % fourm + fourm) % fourm, Rational(1, 2)}});
}

// cos(pi*k / m): (zeta^{2k} + zeta^{-2k}) / 2.
FieldElement cos_half(const FieldPtr& f, long fourm, long k) {
  return f->zeta_combination(
      {{2 * k % fourm, Rational(1, 2)}, {(fourm - 2 * k % fourm) % fourm, Rational(1, 2)}});
}

// sin(pi*k / m): (zeta^{2k} - zeta^{-2k}) / (2i).
FieldElement sin_half(const FieldPtr& f, long fourm, long k) {
  long m = fourm / 4;
  return f->zeta_combination({{(m + 2 * k) % fourm, Rational(-1, 2)},
                              {((m - 2 * k) % fourm + fourm) % fourm, Rational(1, 2)}});
}

ProjLine rational_line(const FieldPtr& q, long c0, long c1, long c2) {
  return ProjLine(q->from_int(c0), q->from_int(c1), q->from_int(c2));
}

}  // namespace

Arrangement boroczky(size_t m) {
  if (m < 3) throw ParameterOutOfRange("the doubled family needs m >= 3");
  const long fourm = 4 * static_cast<long>(m);
  FieldPtr f = Field::cyclotomic(static_cast<unsigned>(fourm));
  std::vector<ProjLine> lines;
  lines.reserve(2 * m);
  for (long j = 0; j < static_cast<long>(m); ++j)
    lines.emplace_back(cos_full(f, fourm, j), sin_full(f, fourm, j), f->one());
  for (long k = 0; k < static_cast<long>(m); ++k)
    lines.emplace_back(sin_half(f, fourm, k), -cos_half(f, fourm, k),
                       f->zero());
  return Arrangement::build(std::move(lines));
}

std::vector<ProjPoint> boroczky_points(size_t m) {
  if (m < 3) throw ParameterOutOfRange("the doubled family needs m >= 3");
  const long fourm = 4 * static_cast<long>(m);
  FieldPtr f = Field::cyclotomic(static_cast<unsigned>(fourm));
  std::vector<ProjPoint> pts;
  pts.reserve(2 * m);
  for (long j = 0; j < static_cast<long>(m); ++j)
    pts.emplace_back(cos_full(f, fourm, j), sin_full(f, fourm, j), f->one());
  for (long k = 0; k < static_cast<long>(m); ++k)
    pts.emplace_back(sin_half(f, fourm, k), -cos_half(f, fourm, k), f->zero());
  return pts;
}

Arrangement example_nine() {
  FieldPtr q = Field::rationals();
  std::vector<ProjLine> lines;
  lines.push_back(rational_line(q, 1, 0, 0));    // x
  lines.push_back(rational_line(q, 0, 1, 0));    // y
  lines.push_back(rational_line(q, 0, 0, 1));    // z
  lines.push_back(rational_line(q, 1, -1, 0));   // x - y
  lines.push_back(rational_line(q, 1, 0, -1));   // x - z
  lines.push_back(rational_line(q, 0, 1, -1));   // y - z
  lines.push_back(rational_line(q, 1, 1, -1));   // x + y - z
  lines.push_back(rational_line(q, 1, -1, 1));   // x - y + z
  lines.push_back(rational_line(q, 1, -1, -1));  // x - y - z
  return Arrangement::build(std::move(lines));
}

Arrangement hesse_dual() {
  FieldPtr f = Field::cyclotomic(3);
  std::vector<ProjLine> lines;
  lines.reserve(9);
  for (long k = 0; k < 3; ++k) {
    FieldElement w = -f->zeta_pow(k);
    lines.emplace_back(f->zero(), f->one(), w);
    lines.emplace_back(f->one(), f->zero(), w);
    lines.emplace_back(f->one(), w, f->zero());
  }
  return Arrangement::build(std::move(lines));
}

Arrangement fano() {
  FieldPtr f = Field::prime(2);
  std::vector<ProjLine> lines;
  lines.reserve(7);
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int c2 = 0; c2 < 2; ++c2) {
        if (c0 == 0 && c1 == 0 && c2 == 0) continue;
        lines.emplace_back(f->from_int(c0), f->from_int(c1), f->from_int(c2));
      }
  return Arrangement::build(std::move(lines));
}

Arrangement near_pencil(size_t n) {
  if (n < 4) throw ParameterOutOfRange("a near-pencil needs n >= 4");
  FieldPtr q = Field::rationals();
  std::vector<ProjLine> lines;
  lines.reserve(n);
  for (long s = 0; s + 2 <= static_cast<long>(n); ++s)
    lines.push_back(rational_line(q, -s, 1, 0));  // y = s*x, through [0,0,1]
  lines.push_back(rational_line(q, 1, 1, 1));     // the transversal
  return Arrangement::build(std::move(lines));
}

Arrangement dual_arrangement(const std::vector<ProjPoint>& points) {
  std::vector<ProjLine> lines;
  std::vector<ProjPoint> distinct;
  for (const ProjPoint& p : points) {
    bool fresh = true;
    for (const ProjPoint& q : distinct)
      if (q == p) {
        fresh = false;
        break;
      }
    if (fresh) {
      distinct.push_back(p);
      lines.push_back(dual(p));
    }
  }
  if (distinct.size() < 2)
    throw TooFewPoints("dualization needs at least two distinct points");
  return Arrangement::build(std::move(lines));
}

Arrangement generate(const GeneratorRecipe& recipe) {
  auto param = [&](const std::string& key) -> long {
    auto it = recipe.parameters.find(key);
    if (it == recipe.parameters.end())
      throw InvalidConfig("generator '" + recipe.name + "' needs parameter '" +
                          key + "'");
    if (it->second < 0)
      throw ParameterOutOfRange("parameter '" + key + "' must be nonnegative");
    return it->second;
  };
  if (recipe.name == "boroczky") return boroczky(static_cast<size_t>(param("m")));
  if (recipe.name == "example9") return example_nine();
  if (recipe.name == "hesse") return hesse_dual();
  if (recipe.name == "fano") return fano();
  if (recipe.name == "near-pencil")
    return near_pencil(static_cast<size_t>(param("n")));
  throw InvalidConfig("unknown generator '" + recipe.name + "'");
}

}  // namespace arrangio
