#include "groebner.hpp"

#include <queue>
#include <set>

namespace gca {

Vec normal_form_tracked(const FreeModule& F, Vec f, const std::vector<Vec>& G,
                        std::vector<DivisionStep>& steps) {
  const Ring& R = F.ring();
  const auto& K = R.field();
  std::vector<MTerm> remainder;
  while (!f.is_zero()) {
    const MTerm& t = f.lead();
    int red = -1;
    for (std::size_t k = 0; k < G.size(); ++k) {
      const MTerm& lt = G[k].lead();
      if (lt.comp == t.comp && R.divides(lt.m, t.m)) {
        red = static_cast<int>(k);
        break;
      }
    }
    if (red < 0) {
      remainder.push_back(t);
      f = Vec(std::vector<MTerm>(f.terms().begin() + 1, f.terms().end()));
      continue;
    }
    const Vec& g = G[red];
    Monomial q = R.quotient(t.m, g.lead().m);
    std::uint32_t c = K.mul(t.c, K.inv(g.lead().c));
    steps.push_back(DivisionStep{red, c, q});
    f = sub(F, f, term_mul(F, c, q, g));
  }
  return Vec(std::move(remainder));
}

Vec normal_form(const FreeModule& F, Vec f, const std::vector<Vec>& G) {
  std::vector<DivisionStep> steps;
  return normal_form_tracked(F, std::move(f), G, steps);
}

namespace {

struct Pair {
  int deg;
  int i, j;
  Monomial lcm;
  bool operator<(const Pair& o) const {
    // priority_queue is max-first; invert for lowest degree first
    if (deg != o.deg) return deg > o.deg;
    if (i != o.i) return i > o.i;
    return j > o.j;
  }
};

}  // namespace

std::vector<Vec> interreduce(const FreeModule& F, std::vector<Vec> G) {
  const Ring& R = F.ring();
  std::erase_if(G, [](const Vec& g) { return g.is_zero(); });
  std::sort(G.begin(), G.end(), [&](const Vec& a, const Vec& b) {
    return F.compare_terms(a.lead().comp, a.lead().m, b.lead().comp,
                           b.lead().m) < 0;
  });
  // minimal lead terms
  std::vector<Vec> kept;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& h : kept)
      if (h.lead().comp == g.lead().comp &&
          R.divides(h.lead().m, g.lead().m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  // tail reduction
  std::vector<Vec> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    out.push_back(monic(F, normal_form(F, kept[i], others)));
  }
  std::erase_if(out, [](const Vec& g) { return g.is_zero(); });
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    return F.compare_terms(a.lead().comp, a.lead().m, b.lead().comp,
                           b.lead().m) < 0;
  });
  return out;
}

std::vector<Vec> buchberger(const FreeModule& F, std::vector<Vec> gens,
                            bool require_homogeneous) {
  const Ring& R = F.ring();
  if (require_homogeneous)
    for (const auto& g : gens)
      if (!is_homogeneous(F, g))
        throw HomogeneityError("buchberger requires homogeneous input: " +
                               format_poly(R, g));
  std::vector<Vec> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(monic(F, std::move(g)));
  std::sort(G.begin(), G.end(), [&](const Vec& a, const Vec& b) {
    return F.compare_terms(a.lead().comp, a.lead().m, b.lead().comp,
                           b.lead().m) < 0;
  });

  std::priority_queue<Pair> queue;
  std::set<std::pair<int, int>> handled;  // processed or criterion-skipped
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (G[i].lead().comp != G[j].lead().comp) continue;
      Monomial l = R.lcm(G[i].lead().m, G[j].lead().m);
      queue.push(Pair{R.degree_of(l) + F.twist(G[j].lead().comp), i, j, l});
    }
  };
  for (int j = 1; j <= static_cast<int>(G.size()) - 1; ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair pr = queue.top();
    queue.pop();
    const Vec& gi = G[pr.i];
    const Vec& gj = G[pr.j];
    // product criterion (valid in the ring case only)
    if (F.rank() == 1 && R.coprime(gi.lead().m, gj.lead().m)) {
      handled.insert({pr.i, pr.j});
      continue;
    }
    // chain criterion
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].lead().comp != gi.lead().comp) continue;
      if (!R.divides(G[k].lead().m, pr.lcm)) continue;
      auto p1 = std::minmax(pr.i, k);
      auto p2 = std::minmax(pr.j, k);
      if (handled.count({p1.first, p1.second}) &&
          handled.count({p2.first, p2.second})) {
        skip = true;
        break;
      }
    }
    handled.insert({pr.i, pr.j});
    if (skip) continue;

    Vec s = sub(F, term_mul(F, 1, R.quotient(pr.lcm, gi.lead().m), gi),
                term_mul(F, 1, R.quotient(pr.lcm, gj.lead().m), gj));
    Vec h = normal_form(F, std::move(s), G);
    if (!h.is_zero()) {
      G.push_back(monic(F, std::move(h)));
      push_pairs(static_cast<int>(G.size()) - 1);
    }
  }
  return interreduce(F, std::move(G));
}

bool is_groebner(const FreeModule& F, const std::vector<Vec>& G) {
  const Ring& R = F.ring();
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[i].lead().comp != G[j].lead().comp) continue;
      Monomial l = R.lcm(G[i].lead().m, G[j].lead().m);
      Vec s =
          sub(F, term_mul(F, 1, R.quotient(l, G[i].lead().m), G[i]),
              term_mul(F, 1, R.quotient(l, G[j].lead().m), G[j]));
      s = scal_mul(F, R.field().inv(G[i].lead().c), s);
      if (!normal_form(F, std::move(s), G).is_zero()) return false;
    }
  return true;
}

std::vector<Vec> kernel_gb(const FreeModule& G,
                           const std::vector<int>& src_twists,
                           const std::vector<Vec>& cols) {
  if (cols.size() != src_twists.size())
    throw Error("kernel_gb: column/twist count mismatch");
  int gr = G.rank();
  std::vector<int> twists = G.twists();
  twists.insert(twists.end(), src_twists.begin(), src_twists.end());
  FreeModule H(G.ring_ptr(), twists, G.order());
  H.set_pos_elim(gr);
  std::vector<Vec> input;
  for (std::size_t b = 0; b < cols.size(); ++b) {
    std::vector<MTerm> terms = cols[b].terms();
    terms.push_back(MTerm{G.ring().one(), gr + static_cast<int>(b), 1});
    input.push_back(make_vec(H, std::move(terms)));
  }
  std::vector<Vec> gb = buchberger(H, std::move(input));
  FreeModule Fsrc(G.ring_ptr(), src_twists, G.order());
  std::vector<Vec> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.terms())
      if (t.comp < gr) {
        pure = false;
        break;
      }
    if (!pure) continue;
    std::vector<MTerm> terms = g.terms();
    for (auto& t : terms) t.comp -= gr;
    out.push_back(make_vec(Fsrc, std::move(terms)));
  }
  return out;
}

// --- Ideal -----------------------------------------------------------------

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::shared_ptr<const GroebnerBasis>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Vec> gens)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  std::erase_if(gens_, [](const Vec& g) { return g.is_zero(); });
  FreeModule F = poly_module(ring_);
  for (const auto& g : gens_)
    if (!is_homogeneous(F, g))
      throw HomogeneityError("ideal generators must be homogeneous");
}

bool Ideal::is_zero() const { return gens_.empty(); }

const GroebnerBasis& Ideal::groebner(MonomialOrder order) const {
  auto key = std::make_pair(static_cast<int>(order.kind), order.block);
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  FreeModule F = poly_module(ring_, order);
  auto gb = std::make_shared<GroebnerBasis>(
      GroebnerBasis{F, buchberger(F, gens_)});
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto [it, ok] = cache_->bases.emplace(key, gb);
  return *it->second;
}

bool Ideal::contains(const Vec& f, MonomialOrder order) const {
  const GroebnerBasis& gb = groebner(order);
  return normal_form(gb.module, f, gb.elems).is_zero();
}

bool Ideal::is_unit() const {
  return contains(poly_constant(ring(), 1));
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_as(b.ring())) throw RingMismatchError("ideal_subset");
  for (const auto& g : a.gens())
    if (!b.contains(g)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  const auto& ga = a.groebner().elems;
  const auto& gb = b.groebner().elems;
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

}  // namespace gca
