#include "constructions.hpp"

#include <random>

#include "cohomology.hpp"
#include "hilbert.hpp"
#include "resolution.hpp"

namespace gca {

std::vector<std::uint32_t> eval_param(const PrimeField& K,
                                      const Parametrization& P,
                                      std::uint32_t lambda, bool at_infinity) {
  std::vector<std::uint32_t> out;
  for (const auto& form : P.coords) {
    if (at_infinity) {
      out.push_back(form[P.d]);
      continue;
    }
    // Horner in lambda for sum_k form[k] lambda^k
    std::uint32_t v = 0;
    for (int k = P.d; k >= 0; --k) v = K.add(form[k], K.mul(v, lambda));
    out.push_back(v);
  }
  return out;
}

namespace {

Vec minor2(const FreeModule& F, int a, int b, int c, int d) {
  // x_a x_d - x_b x_c
  const Ring& R = F.ring();
  return make_vec(F, {MTerm{R.mul(R.variable(a), R.variable(d)), 0, 1},
                      MTerm{R.mul(R.variable(b), R.variable(c)), 0,
                            R.field().neg(1)}});
}

Ideal minors_of_two_rows(RingPtr Rp, const std::vector<std::pair<int, int>>& cols) {
  FreeModule F = poly_module(Rp);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      Vec m = minor2(F, cols[i].first, cols[i].second, cols[j].first,
                     cols[j].second);
      if (!m.is_zero()) gens.push_back(std::move(m));
    }
  return Ideal(std::move(Rp), std::move(gens));
}


// Dense univariate polynomials over F_p, coefficient of x^i at index i.
// Degrees stay below the curve degree, so schoolbook arithmetic is plenty.
using UPoly = std::vector<std::uint32_t>;

void utrim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly umod(const PrimeField& K, UPoly f, const UPoly& m) {
  utrim(f);
  std::uint32_t lead_inv = K.inv(m.back());
  while (f.size() >= m.size()) {
    std::uint32_t q = K.mul(f.back(), lead_inv);
    std::size_t off = f.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      f[off + i] = K.sub(f[off + i], K.mul(q, m[i]));
    utrim(f);
  }
  return f;
}

UPoly umulmod(const PrimeField& K, const UPoly& a, const UPoly& b,
              const UPoly& m) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
  return umod(K, std::move(c), m);
}

UPoly ugcd(const PrimeField& K, UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Does f (nonconstant, squarefree-or-not) split into deg f distinct linear
// factors over F_p?  Tested via gcd(f, x^p - x).
bool splits_simply(const PrimeField& K, const UPoly& f) {
  int k = static_cast<int>(f.size()) - 1;
  if (k <= 1) return true;
  UPoly x{0, 1};
  UPoly xp{1};  // x^p mod f by square and multiply
  std::uint64_t e = K.p();
  UPoly base = umod(K, x, f);
  while (e) {
    if (e & 1) xp = umulmod(K, xp, base, f);
    base = umulmod(K, base, base, f);
    e >>= 1;
  }
  // xp - x
  UPoly diff = xp;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = K.sub(diff[1], 1);
  UPoly g = ugcd(K, f, diff);
  return static_cast<int>(g.size()) - 1 == k;
}

}  // namespace

Vec linear_form(const FreeModule& F, const std::vector<std::uint32_t>& row) {
  const Ring& R = F.ring();
  std::vector<MTerm> terms;
  for (int v = 0; v < R.nvars(); ++v)
    if (row[v]) terms.push_back(MTerm{R.variable(v), 0, row[v]});
  return make_vec(F, std::move(terms));
}

Ideal rational_normal_curve(RingPtr R) {
  int d = R->nvars() - 1;
  if (d < 2) throw GeometryError("rational normal curve needs degree >= 2");
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i < d; ++i) cols.push_back({i, i + 1});
  return minors_of_two_rows(std::move(R), cols);
}

Ideal scroll(std::uint32_t p, int a1, int a2) {
  if (a1 < 1 || a2 < a1)
    throw GeometryError("scroll type must satisfy 1 <= a1 <= a2");
  int nv = a1 + a2 + 2;
  if (nv > kMaxVars) throw GeometryError("scroll ambient space too large");
  auto R = Ring::standard(p, nv);
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i < a1; ++i) cols.push_back({i, i + 1});
  for (int k = 0; k < a2; ++k) cols.push_back({a1 + 1 + k, a1 + 2 + k});
  return minors_of_two_rows(std::move(R), cols);
}

Ideal project(const Ideal& I, const ProjectionSpec& spec) {
  Ideal cur = spec.change ? substitute(I, *spec.change) : I;
  const Ring& R = cur.ring();
  std::vector<bool> dropped(R.nvars(), false);
  for (int v : spec.drop) dropped[v] = true;
  // center = vanishing locus of the kept variables
  std::vector<Vec> kept;
  for (int v = 0; v < R.nvars(); ++v)
    if (!dropped[v]) kept.push_back(poly_variable(R, v));
  Ideal with_center = ideal_sum(cur, Ideal(cur.ring_ptr(), kept));
  if (hilbert_series(with_center).krull_dim() > 0)
    throw GeometryError("projection center meets the variety");
  Ideal img = eliminate(cur, spec.drop);
  if (hilbert_series(img).krull_dim() != hilbert_series(cur).krull_dim())
    throw GeometryError("projection changed the dimension of the image");
  return img;
}

Ideal hyperplane_section(const Ideal& I, const Vec& f) {
  const Ring& R = I.ring();
  FreeModule F = poly_module(I.ring_ptr());
  if (f.is_zero() || degree(F, f) != 1)
    throw GeometryError("hyperplane section requires a nonzero linear form");
  if (!is_nzd_linear(I, f))
    throw GeometryError(
        "section form is a zerodivisor on the coordinate ring; "
        "retry with another form");
  // solve f for its last-occurring variable
  const auto& K = R.field();
  std::vector<std::uint32_t> coef(R.nvars(), 0);
  for (const auto& t : f.terms())
    for (int v = 0; v < R.nvars(); ++v)
      if (t.m.e[v]) coef[v] = t.c;
  int pivot = -1;
  for (int v = R.nvars() - 1; v >= 0; --v)
    if (coef[v]) {
      pivot = v;
      break;
    }
  std::vector<std::string> names;
  for (int v = 0; v < R.nvars(); ++v)
    if (v != pivot) names.push_back(R.vars()[v]);
  auto target = std::make_shared<Ring>(R.p(), names);
  FpMatrix M(K, R.nvars(), target->nvars());
  std::uint32_t cinv = K.inv(coef[pivot]);
  int col = 0;
  for (int v = 0; v < R.nvars(); ++v) {
    if (v == pivot) continue;
    M.at(v, col) = 1;
    M.at(pivot, col) = K.neg(K.mul(cinv, coef[v]));
    ++col;
  }
  LinearMap map{I.ring_ptr(), target, M};
  return saturate_irrelevant(substitute(I, map));
}

Ideal union_with_line(const Ideal& IX, const Ideal& IL) {
  const Ring& R = IX.ring();
  FreeModule F = poly_module(IX.ring_ptr());
  FpMatrix M(R.field(), static_cast<int>(IL.gens().size()), R.nvars());
  int row = 0;
  for (const auto& g : IL.gens()) {
    if (g.is_zero() || degree(F, g) != 1)
      throw GeometryError("line ideal must be generated by linear forms");
    for (const auto& t : g.terms())
      for (int v = 0; v < R.nvars(); ++v)
        if (t.m.e[v]) M.at(row, v) = t.c;
    ++row;
  }
  if (M.rank() != R.nvars() - 2)
    throw GeometryError("line ideal does not define a line");
  return ideal_intersect(IX, IL);
}

long long secant_length(const Ideal& IX, const Ideal& IL) {
  Ideal meet = saturate_irrelevant(ideal_sum(IX, IL));
  HilbertSeries hs = hilbert_series(meet);
  if (hs.krull_dim() == 0) return 0;  // empty intersection
  if (hs.krull_dim() != 1)
    throw GeometryError("intersection with the line is not finite");
  return hs.degree();
}

Ideal span_ideal(RingPtr R,
                 const std::vector<std::vector<std::uint32_t>>& pts) {
  const auto& K = R->field();
  FpMatrix M(K, static_cast<int>(pts.size()), R->nvars());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int v = 0; v < R->nvars(); ++v) M.at(static_cast<int>(i), v) = pts[i][v];
  FpMatrix ns = M.nullspace();
  FreeModule F = poly_module(R);
  std::vector<Vec> gens;
  for (int r = 0; r < ns.rows(); ++r) {
    std::vector<std::uint32_t> row(R->nvars());
    for (int v = 0; v < R->nvars(); ++v) row[v] = ns.at(r, v);
    gens.push_back(linear_form(F, row));
  }
  return Ideal(std::move(R), std::move(gens));
}

MaxRegCurve maxreg_curve(std::uint32_t p, int r, int d, std::uint64_t seed) {
  if (r < 4) throw GeometryError("maximal-regularity curves require r >= 4");
  if (d <= r + 1)
    throw GeometryError("degree must exceed r + 1 for maximal regularity");
  if (d + 1 > kMaxVars)
    throw GeometryError("degree too large for the monomial exponent budget");
  PrimeField K(p);
  const int m = d - r + 2;  // points spanning the secant plane

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::uniform_int_distribution<std::uint32_t> coefd(0, p - 1);

    auto Rd = Ring::standard(p, d + 1);
    Ideal rnc = rational_normal_curve(Rd);

    // d - r + 2 distinct parameter values -> points on the curve
    std::vector<std::uint32_t> lambdas;
    while (static_cast<int>(lambdas.size()) < m) {
      std::uint32_t l = coefd(rng);
      bool dup = false;
      for (auto x : lambdas) dup |= x == l;
      if (!dup) lambdas.push_back(l);
    }
    std::vector<std::vector<std::uint32_t>> pts;
    for (auto l : lambdas) {
      std::vector<std::uint32_t> v(d + 1);
      std::uint32_t pw = 1;
      for (int i = 0; i <= d; ++i) {
        v[i] = pw;
        pw = K.mul(pw, l);
      }
      pts.push_back(std::move(v));
    }

    // seeded center: d - r independent combinations of the points
    FpMatrix Z(K, d - r, d + 1);
    for (int t = 0; t < d - r; ++t)
      for (int k = 0; k < m; ++k) {
        std::uint32_t a = coefd(rng);
        for (int i = 0; i <= d; ++i)
          Z.at(t, i) = K.add(Z.at(t, i), K.mul(a, pts[k][i]));
      }
    if (Z.rank() != d - r) continue;

    // forms vanishing on the center become the target coordinates
    FpMatrix forms = Z.nullspace();  // (r+1) x (d+1)
    if (forms.rows() != r + 1) continue;

    // the center must avoid the curve
    {
      FreeModule Fd = poly_module(Rd);
      std::vector<Vec> cgens;
      for (int t = 0; t < forms.rows(); ++t) {
        std::vector<std::uint32_t> row(d + 1);
        for (int i = 0; i <= d; ++i) row[i] = forms.at(t, i);
        cgens.push_back(linear_form(Fd, row));
      }
      Ideal with_center = ideal_sum(rnc, Ideal(Rd, cgens));
      if (hilbert_series(with_center).krull_dim() != 0) continue;
    }

    // complete the forms to an invertible coordinate change T
    FpMatrix T(K, d + 1, d + 1);
    for (int t = 0; t < r + 1; ++t)
      for (int i = 0; i <= d; ++i) T.at(t, i) = forms.at(t, i);
    int placed = r + 1;
    for (int i = 0; i <= d && placed <= d; ++i) {
      T.at(placed, i) = 1;
      if (T.rank() == placed + 1)
        ++placed;
      else
        T.at(placed, i) = 0;
    }
    if (placed != d + 1) continue;
    FpMatrix Tinv = T.inverse();

    auto aux = Ring::standard(p, d + 1, "z");
    LinearMap change{Rd, aux, Tinv};
    Ideal moved = substitute(rnc, change);
    std::vector<int> drop;
    for (int v = r + 1; v <= d; ++v) drop.push_back(v);
    Ideal image = eliminate(moved, drop);
    auto target = Ring::standard(p, r + 1);
    Ideal curve = rename_positional(image, target);

    // parametrization in the new coordinates: rows of T against (1, l, l^2, ...)
    Parametrization param;
    param.d = d;
    for (int i = 0; i <= r; ++i) {
      std::vector<std::uint32_t> row(d + 1);
      for (int k = 0; k <= d; ++k) row[k] = T.at(i, k);
      param.coords.push_back(std::move(row));
    }

    // the secant line: image of the span of the chosen points
    std::vector<std::vector<std::uint32_t>> imgs;
    for (const auto& v : pts) {
      std::vector<std::uint32_t> w(r + 1, 0);
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= d; ++j)
          w[i] = K.add(w[i], K.mul(T.at(i, j), v[j]));
      imgs.push_back(std::move(w));
    }
    {
      FpMatrix W(K, m, r + 1);
      for (int k = 0; k < m; ++k)
        for (int i = 0; i <= r; ++i) W.at(k, i) = imgs[k][i];
      if (W.rank() != 2) continue;
    }
    Ideal line = span_ideal(target, {imgs[0], imgs[1]});

    // postconditions: degree, dimension, regularity, secant length
    HilbertSeries hs = hilbert_series(curve);
    if (hs.degree() != d || hs.proj_dim() != 1) continue;
    BettiTable B(minimal_resolution(curve));
    if (scheme_regularity(B) != d - r + 2) continue;
    if (secant_length(curve, line) != d - r + 2) continue;

    MaxRegCurve out;
    out.curve = std::move(curve);
    out.line = std::move(line);
    out.param = std::move(param);
    out.line_span = {imgs[0], imgs[1]};
    return out;
  }
  throw RetryExhaustedError(
      "maxreg_curve: no seed attempt met the postconditions for (r, d) = (" +
      std::to_string(r) + ", " + std::to_string(d) + ")");
}

LgpResult lgp_test(const PrimeField& K, const PointSet& ps) {
  int s = ps.s;
  int n = static_cast<int>(ps.pts.size());
  if (n < s + 1)
    throw GeometryError("linear general position needs at least s+1 points");
  for (const auto& pt : ps.pts) {
    bool zero = true;
    for (auto c : pt) zero &= c == 0;
    if (zero) throw GeometryError("zero vector is not a projective point");
  }
  // pairwise distinct (non-proportional)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FpMatrix M(K, 2, s + 1);
      for (int v = 0; v <= s; ++v) {
        M.at(0, v) = ps.pts[i][v];
        M.at(1, v) = ps.pts[j][v];
      }
      if (M.rank() < 2) return LgpResult{false, {i, j}};
    }
  // every (s+1)-subset must have full rank
  std::vector<int> idx(s + 1);
  for (int i = 0; i <= s; ++i) idx[i] = i;
  for (;;) {
    FpMatrix M(K, s + 1, s + 1);
    for (int k = 0; k <= s; ++k)
      for (int v = 0; v <= s; ++v) M.at(k, v) = ps.pts[idx[k]][v];
    if (M.rank() != s + 1) return LgpResult{false, idx};
    // next combination
    int i = s;
    while (i >= 0 && idx[i] == n - (s + 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k <= s; ++k) idx[k] = idx[k - 1] + 1;
  }
  return LgpResult{};
}

PointSet split_hyperplane_section_points(
    const PrimeField& K, const Parametrization& param,
    const std::vector<std::vector<std::uint32_t>>& line_span,
    std::uint64_t seed, int max_retries) {
  int r = static_cast<int>(param.coords.size()) - 1;
  int d = param.d;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coefd(0, K.p() - 1);

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::uint32_t> H(r + 1);
    bool allzero = true;
    for (auto& c : H) {
      c = coefd(rng);
      allzero &= c == 0;
    }
    if (allzero) continue;
    // pull H back to a binary form of degree d
    std::vector<std::uint32_t> h(d + 1, 0);
    for (int i = 0; i <= r; ++i)
      for (int k = 0; k <= d; ++k)
        h[k] = K.add(h[k], K.mul(H[i], param.coords[i][k]));
    UPoly hu = h;
    utrim(hu);
    if (hu.empty()) continue;
    int deg_fin = static_cast<int>(hu.size()) - 1;
    // the root at infinity has multiplicity d - deg_fin; it must be simple
    if (d - deg_fin > 1) continue;
    if (!splits_simply(K, hu)) continue;  // cheap pretest before the scan

    // root scan over F_p plus the point at infinity
    std::vector<std::pair<std::uint32_t, bool>> roots;  // (lambda, at_inf)
    for (std::uint32_t l = 0; l < K.p(); ++l) {
      std::uint32_t v = 0;
      for (int k = d; k >= 0; --k) v = K.add(h[k], K.mul(v, l));
      if (v == 0) roots.push_back({l, false});
    }
    if (h[d] == 0) roots.push_back({0, true});
    if (static_cast<int>(roots.size()) != d) continue;  // must split simply

    // identify H with P^{r-1} by dropping a pivot coordinate of H
    int pivot = r;
    while (pivot >= 0 && H[pivot] == 0) --pivot;
    auto to_hyperplane = [&](const std::vector<std::uint32_t>& v) {
      std::vector<std::uint32_t> w;
      for (int i = 0; i <= r; ++i)
        if (i != pivot) w.push_back(v[i]);
      return w;
    };

    PointSet out;
    out.s = r - 1;
    bool good = true;
    for (const auto& [l, inf] : roots) {
      auto pt = to_hyperplane(eval_param(K, param, l, inf));
      bool zero = true;
      for (auto c : pt) zero &= c == 0;
      if (zero) {
        good = false;
        break;
      }
      out.pts.push_back(std::move(pt));
    }
    if (!good) continue;

    // the H ∩ L point
    auto pair_dot = [&](const std::vector<std::uint32_t>& v) {
      std::uint32_t s2 = 0;
      for (int i = 0; i <= r; ++i) s2 = K.add(s2, K.mul(H[i], v[i]));
      return s2;
    };
    std::uint32_t h0 = pair_dot(line_span[0]);
    std::uint32_t h1 = pair_dot(line_span[1]);
    if (h0 == 0 && h1 == 0) continue;  // H contains the line
    std::vector<std::uint32_t> q(r + 1);
    bool qzero = true;
    for (int i = 0; i <= r; ++i) {
      q[i] = K.sub(K.mul(h1, line_span[0][i]), K.mul(h0, line_span[1][i]));
      qzero &= q[i] == 0;
    }
    if (qzero) continue;
    out.pts.push_back(to_hyperplane(q));

    // all d + 1 points must be distinct
    bool distinct = true;
    int n = static_cast<int>(out.pts.size());
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n && distinct; ++j) {
        FpMatrix M(K, 2, r);
        for (int v = 0; v < r; ++v) {
          M.at(0, v) = out.pts[i][v];
          M.at(1, v) = out.pts[j][v];
        }
        if (M.rank() < 2) distinct = false;
      }
    if (!distinct) continue;
    return out;
  }
  throw RetryExhaustedError(
      "split_hyperplane_section_points: no seeded hyperplane split after " +
      std::to_string(max_retries) + " attempts");
}

}  // namespace gca
