#include "ideal_ops.hpp"

#include "hilbert.hpp"

namespace gca {

namespace {

void check_same_ring(const Ideal& I, const Ideal& J, const char* where) {
  if (!I.ring().same_as(J.ring()))
    throw RingMismatchError(std::string(where) + ": ideals in different rings");
}

// Re-index a polynomial through a variable permutation; perm[src] = dst.
// Fd carries the destination ring and the order the result is sorted under.
Vec permute_vars(const Ring& src, const FreeModule& Fd, const Vec& f,
                 const std::vector<int>& perm) {
  const Ring& dst = Fd.ring();
  std::vector<MTerm> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> exps(dst.nvars(), 0);
    for (int v = 0; v < src.nvars(); ++v) {
      if (!t.m.e[v]) continue;
      if (perm[v] < 0)
        throw RingMismatchError("variable '" + src.vars()[v] +
                                "' has no image in target ring");
      exps[perm[v]] = t.m.e[v];
    }
    terms.push_back(MTerm{dst.monomial(exps), 0, t.c});
  }
  return make_vec(Fd, std::move(terms));
}

}  // namespace

Vec transport_poly(const Ring& src, const Ring& dst, const Vec& f) {
  std::vector<int> perm(src.nvars(), -1);
  for (int v = 0; v < src.nvars(); ++v) perm[v] = dst.var_index(src.vars()[v]);
  for (int v = 0; v < src.nvars(); ++v)
    if (perm[v] < 0)
      for (const auto& t : f.terms())
        if (t.m.e[v])
          throw RingMismatchError("variable '" + src.vars()[v] +
                                  "' missing in target ring");
  FreeModule Fd = poly_module(std::make_shared<Ring>(dst));
  return permute_vars(src, Fd, f, perm);
}

Ideal transport_ideal(const Ideal& I, RingPtr dst) {
  std::vector<Vec> gens;
  for (const auto& g : I.gens()) gens.push_back(transport_poly(I.ring(), *dst, g));
  return Ideal(std::move(dst), std::move(gens));
}

Ideal rename_positional(const Ideal& I, RingPtr dst) {
  if (I.ring().nvars() != dst->nvars())
    throw RingMismatchError("rename_positional: variable count mismatch");
  FreeModule Fd = poly_module(dst);
  std::vector<int> identity(I.ring().nvars());
  for (int v = 0; v < I.ring().nvars(); ++v) identity[v] = v;
  std::vector<Vec> gens;
  for (const auto& g : I.gens())
    gens.push_back(permute_vars(I.ring(), Fd, g, identity));
  return Ideal(std::move(dst), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J, "ideal_sum");
  std::vector<Vec> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring_ptr(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J, "ideal_intersect");
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring_ptr());
  const Ring& R = I.ring();
  // auxiliary weight-0 variable @t in its own leading block
  std::vector<std::string> vars{"@t"};
  std::vector<int> weights{0};
  for (int v = 0; v < R.nvars(); ++v) {
    vars.push_back(R.vars()[v]);
    weights.push_back(1);
  }
  auto aux = std::make_shared<Ring>(R.p(), vars, weights);
  MonomialOrder elim{MonomialOrder::Kind::Block, 1};
  FreeModule Fa = poly_module(aux, elim);
  std::vector<int> up(R.nvars());
  for (int v = 0; v < R.nvars(); ++v) up[v] = v + 1;
  Vec t = poly_variable(*aux, 0);
  Vec one_minus_t =
      sub(Fa, poly_constant(*aux, 1), t);
  std::vector<Vec> gens;
  for (const auto& f : I.gens())
    gens.push_back(poly_mul(Fa, t, permute_vars(R, Fa, f, up)));
  for (const auto& g : J.gens())
    gens.push_back(poly_mul(Fa, one_minus_t, permute_vars(R, Fa, g, up)));
  std::vector<Vec> gb = buchberger(Fa, std::move(gens));
  std::vector<int> down(aux->nvars(), -1);
  for (int v = 0; v < R.nvars(); ++v) down[v + 1] = v;
  FreeModule Forig = poly_module(I.ring_ptr());
  std::vector<Vec> out;
  for (const auto& g : gb) {
    bool free_of_t = true;
    for (const auto& tm : g.terms())
      if (tm.m.e[0]) {
        free_of_t = false;
        break;
      }
    if (free_of_t) out.push_back(permute_vars(*aux, Forig, g, down));
  }
  return Ideal(I.ring_ptr(), std::move(out));
}

Vec exact_divide(const FreeModule& F, const Vec& f, const Vec& g) {
  std::vector<DivisionStep> steps;
  Vec r = normal_form_tracked(F, f, {g}, steps);
  if (!r.is_zero()) throw Error("exact_divide: division not exact");
  std::vector<MTerm> q;
  for (const auto& s : steps) q.push_back(MTerm{s.m, 0, s.c});
  return make_vec(F, std::move(q));
}

Ideal ideal_quotient_poly(const Ideal& I, const Vec& g) {
  if (g.is_zero())
    throw DivisionByZeroError("ideal quotient by the zero polynomial");
  FreeModule F = poly_module(I.ring_ptr());
  Ideal gI(I.ring_ptr(), {g});
  Ideal meet = ideal_intersect(I, gI);
  std::vector<Vec> gens;
  for (const auto& h : meet.gens()) gens.push_back(exact_divide(F, h, g));
  return Ideal(I.ring_ptr(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J, "ideal_quotient");
  if (J.is_zero())
    throw DivisionByZeroError("ideal quotient by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const auto& g : J.gens()) {
    Ideal q = ideal_quotient_poly(I, g);
    acc = first ? q : ideal_intersect(acc, q);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J, "saturate");
  if (J.is_zero()) throw DivisionByZeroError("saturation by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const auto& g : J.gens()) {
    Ideal cur = I;
    for (;;) {
      Ideal next = ideal_quotient_poly(cur, g);
      if (ideal_equal(next, cur)) break;
      cur = next;
    }
    acc = first ? cur : ideal_intersect(acc, cur);
    first = false;
  }
  return acc;
}

Ideal saturate_irrelevant(const Ideal& I) {
  const Ring& R = I.ring();
  std::vector<Vec> vars;
  for (int v = 0; v < R.nvars(); ++v) vars.push_back(poly_variable(R, v));
  return saturate(I, Ideal(I.ring_ptr(), std::move(vars)));
}

Ideal eliminate(const Ideal& I, const std::vector<int>& elim) {
  const Ring& R = I.ring();
  if (elim.empty()) return I;
  std::vector<bool> is_elim(R.nvars(), false);
  for (int v : elim) is_elim[v] = true;
  std::vector<std::string> vars;
  std::vector<int> perm(R.nvars(), -1);
  for (int v : elim) {
    perm[v] = static_cast<int>(vars.size());
    vars.push_back(R.vars()[v]);
  }
  std::vector<std::string> kept;
  for (int v = 0; v < R.nvars(); ++v)
    if (!is_elim[v]) {
      perm[v] = static_cast<int>(vars.size());
      vars.push_back(R.vars()[v]);
      kept.push_back(R.vars()[v]);
    }
  auto aux = std::make_shared<Ring>(R.p(), vars);
  MonomialOrder block{MonomialOrder::Kind::Block,
                      static_cast<int>(elim.size())};
  FreeModule Fa = poly_module(aux, block);
  std::vector<Vec> gens;
  for (const auto& f : I.gens()) gens.push_back(permute_vars(R, Fa, f, perm));
  std::vector<Vec> gb = buchberger(Fa, std::move(gens));
  auto target = std::make_shared<Ring>(R.p(), kept);
  FreeModule Ft = poly_module(target);
  int k = static_cast<int>(elim.size());
  std::vector<int> down(aux->nvars(), -1);
  for (int v = k; v < aux->nvars(); ++v)
    down[v] = target->var_index(aux->vars()[v]);
  std::vector<Vec> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (int v = 0; v < k && pure; ++v)
        if (t.m.e[v]) pure = false;
    if (pure) out.push_back(permute_vars(*aux, Ft, g, down));
  }
  return Ideal(std::move(target), std::move(out));
}

Ideal substitute(const Ideal& I, const LinearMap& map) {
  const Ring& S = *map.src;
  const Ring& D = *map.dst;
  if (!I.ring().same_as(S))
    throw RingMismatchError("substitute: ideal not in the map's source ring");
  if (map.coef.rows() != S.nvars() || map.coef.cols() != D.nvars())
    throw RingMismatchError("substitute: matrix shape mismatch");
  FreeModule Fd = poly_module(map.dst);
  // linear images of the source variables
  std::vector<Vec> image(S.nvars());
  for (int v = 0; v < S.nvars(); ++v) {
    std::vector<MTerm> terms;
    for (int w = 0; w < D.nvars(); ++w)
      if (map.coef.at(v, w))
        terms.push_back(MTerm{D.variable(w), 0, map.coef.at(v, w)});
    image[v] = make_vec(Fd, std::move(terms));
  }
  std::vector<Vec> gens;
  for (const auto& f : I.gens()) {
    Vec acc;
    for (const auto& t : f.terms()) {
      Vec prod = poly_constant(D, t.c);
      for (int v = 0; v < S.nvars(); ++v)
        for (int e = 0; e < t.m.e[v]; ++e) prod = poly_mul(Fd, prod, image[v]);
      acc = add(Fd, acc, prod);
    }
    gens.push_back(std::move(acc));
  }
  return Ideal(map.dst, std::move(gens));
}

bool is_nzd_linear(const Ideal& I, const Vec& f) {
  if (f.is_zero()) return false;
  Ideal J = ideal_sum(I, Ideal(I.ring_ptr(), {f}));
  std::vector<long long> a = hilbert_series(I).numerator();
  std::vector<long long> b = hilbert_series(J).numerator();
  // expect b == a * (1 - t)
  std::vector<long long> exp(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    exp[i] += a[i];
    exp[i + 1] -= a[i];
  }
  while (!exp.empty() && exp.back() == 0) exp.pop_back();
  std::vector<long long> bb = b;
  while (!bb.empty() && bb.back() == 0) bb.pop_back();
  if (exp.empty()) exp = {0};
  if (bb.empty()) bb = {0};
  return exp == bb;
}

Ideal ideal_from_strings(RingPtr ring, const std::vector<std::string>& polys) {
  FreeModule F = poly_module(ring);
  std::vector<Vec> gens;
  for (const auto& s : polys) gens.push_back(parse_poly(F, s));
  return Ideal(std::move(ring), std::move(gens));
}

}  // namespace gca
