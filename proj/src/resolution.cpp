#include "resolution.hpp"

#include <sstream>

#include "hilbert.hpp"

namespace gca {

namespace {

// Pure lexicographic comparison, first variable most significant.
int lex_compare(const Ring& R, const Monomial& u, const Monomial& v) {
  for (int i = 0; i < R.nvars(); ++i)
    if (u.e[i] != v.e[i]) return u.e[i] < v.e[i] ? -1 : 1;
  return 0;
}

// Split a module element into its per-component polynomial entries.
FreeComplex::Column split_columns(const Vec& g) {
  FreeComplex::Column col;
  std::map<int, std::vector<MTerm>> rows;
  for (const auto& t : g.terms())
    rows[t.comp].push_back(MTerm{t.m, 0, t.c});
  for (auto& [r, terms] : rows) col[r] = Vec(std::move(terms));
  return col;
}

}  // namespace

FreeComplex free_resolution(const Ideal& I) {
  RingPtr Rp = I.ring_ptr();
  const Ring& R = *Rp;
  FreeComplex C;
  C.ring = Rp;
  C.twists.push_back({0});
  if (I.is_zero()) return C;

  const GroebnerBasis& gb1 = I.groebner();
  FreeModule Fprev = gb1.module;
  std::vector<Vec> G = gb1.elems;
  SchreyerInfo prev_info;
  prev_info.base = {R.one()};
  prev_info.chain = {{}};

  for (int level = 1; !G.empty(); ++level) {
    if (level > R.nvars() + 2)
      throw Error("free_resolution: length exceeds the global bound");
    // lex-descending sort of the lead terms bounds the length: each level's
    // syzygy quotients then avoid one more leading variable
    std::stable_sort(G.begin(), G.end(), [&](const Vec& x, const Vec& y) {
      int c = lex_compare(R, x.lead().m, y.lead().m);
      if (c) return c > 0;
      return x.lead().comp < y.lead().comp;
    });
    // register F_level and the differential F_level -> F_{level-1}
    std::vector<int> tw;
    SchreyerInfo info;
    FreeComplex::Matrix M;
    for (const auto& g : G) {
      tw.push_back(degree(Fprev, g));
      info.base.push_back(R.mul(prev_info.base[g.lead().comp], g.lead().m));
      auto chain = prev_info.chain[g.lead().comp];
      chain.push_back(static_cast<std::int32_t>(info.chain.size()));
      info.chain.push_back(std::move(chain));
      M.col.push_back(split_columns(g));
    }
    C.twists.push_back(tw);
    C.maps.push_back(std::move(M));
    FreeModule Fk(Rp, tw, Fprev.order());
    Fk.set_schreyer(info);

    // syzygies between basis elements with a common lead component; per
    // element i only the minimal colon generators among the quotients
    // lcm(lt_i, lt_j)/lt_i are needed for a Groebner basis of the kernel
    std::map<int, std::vector<int>> by_comp;
    for (int u = 0; u < static_cast<int>(G.size()); ++u)
      by_comp[G[u].lead().comp].push_back(u);
    std::vector<Vec> syz;
    const auto& K = R.field();
    for (const auto& [comp, members] : by_comp) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        int i = members[a];
        // candidate quotients, minimalized by divisibility (first wins ties)
        std::vector<std::pair<Monomial, int>> quots;
        for (std::size_t b2 = a + 1; b2 < members.size(); ++b2) {
          int j = members[b2];
          Monomial l = R.lcm(G[i].lead().m, G[j].lead().m);
          quots.push_back({R.quotient(l, G[i].lead().m), j});
        }
        std::stable_sort(quots.begin(), quots.end(),
                         [](const auto& x, const auto& y) {
                           return x.first.deg < y.first.deg;
                         });
        std::vector<std::pair<Monomial, int>> kept;
        for (const auto& q : quots) {
          bool redundant = false;
          for (const auto& k2 : kept)
            if (R.divides(k2.first, q.first)) {
              redundant = true;
              break;
            }
          if (!redundant) kept.push_back(q);
        }
        for (const auto& [qi, j] : kept) {
          Monomial l = R.mul(qi, G[i].lead().m);
          Monomial qj = R.quotient(l, G[j].lead().m);
          std::uint32_t ci = K.inv(G[i].lead().c);
          std::uint32_t cj = K.inv(G[j].lead().c);
          Vec s = sub(Fprev, term_mul(Fprev, ci, qi, G[i]),
                      term_mul(Fprev, cj, qj, G[j]));
          std::vector<DivisionStep> steps;
          Vec rem = normal_form_tracked(Fprev, std::move(s), G, steps);
          if (!rem.is_zero())
            throw Error("free_resolution: S-pair did not reduce to zero");
          std::vector<MTerm> terms{MTerm{qi, i, ci}, MTerm{qj, j, K.neg(cj)}};
          for (const auto& st : steps)
            terms.push_back(MTerm{st.m, st.index, K.neg(st.c)});
          Vec sv = make_vec(Fk, std::move(terms));
          if (sv.is_zero()) continue;
          if (!(sv.lead().m == qi) || sv.lead().comp != i)
            throw Error("free_resolution: unexpected syzygy lead term");
          syz.push_back(monic(Fk, sv));
        }
      }
    }
    Fprev = Fk;
    G = std::move(syz);
    prev_info = Fprev.schreyer();
  }
  return C;
}

namespace {

bool constant_entry(const Vec& p, std::uint32_t& c) {
  if (p.size() == 1 && p.lead().m.is_one()) {
    c = p.lead().c;
    return true;
  }
  return false;
}

// Cancel the split pair (row a of F_k, column b of F_{k+1}) around a
// constant pivot in maps[k].
void pivot_out(FreeComplex& C, const FreeModule& Fp, int k, int a, int b,
               std::uint32_t c) {
  const auto& K = C.ring->field();
  std::uint32_t cinv = K.inv(c);
  FreeComplex::Matrix& M = C.maps[k];

  // transfer factors f_j = (1/c) * entry(a, j) for the other columns
  std::map<int, Vec> factor;
  for (int j = 0; j < static_cast<int>(M.col.size()); ++j) {
    if (j == b) continue;
    auto it = M.col[j].find(a);
    if (it != M.col[j].end())
      factor[j] = scal_mul(Fp, cinv, it->second);
  }

  // row operation on the next differential: row_b += sum f_j * row_j
  if (k + 1 < C.length()) {
    for (auto& w : C.maps[k + 1].col) {
      Vec acc;
      auto itb = w.find(b);
      if (itb != w.end()) acc = itb->second;
      for (const auto& [j, f] : factor) {
        auto itj = w.find(j);
        if (itj != w.end()) acc = add(Fp, acc, poly_mul(Fp, f, itj->second));
      }
      if (!acc.is_zero())
        throw Error("minimalize: pivot row of the next map is not zero");
      w.erase(b);
      // renumber rows above b
      FreeComplex::Column shifted;
      for (auto& [r, p] : w) shifted[r > b ? r - 1 : r] = std::move(p);
      w = std::move(shifted);
    }
  }

  // column operations on maps[k]: col_j -= f_j * col_b
  for (const auto& [j, f] : factor) {
    for (const auto& [r, p] : M.col[b]) {
      Vec delta = poly_mul(Fp, f, p);
      auto it = M.col[j].find(r);
      Vec sum = it == M.col[j].end() ? negate(Fp, delta)
                                     : sub(Fp, it->second, delta);
      if (sum.is_zero())
        M.col[j].erase(r);
      else
        M.col[j][r] = std::move(sum);
    }
  }
  M.col.erase(M.col.begin() + b);
  for (auto& col : M.col) {
    col.erase(a);
    FreeComplex::Column shifted;
    for (auto& [r, p] : col) shifted[r > a ? r - 1 : r] = std::move(p);
    col = std::move(shifted);
  }

  // the previous differential loses the column of the removed F_k element
  if (k >= 1) {
    auto& P = C.maps[k - 1];
    P.col.erase(P.col.begin() + a);
  }
  C.twists[k].erase(C.twists[k].begin() + a);
  C.twists[k + 1].erase(C.twists[k + 1].begin() + b);
}

}  // namespace

void minimalize(FreeComplex& C) {
  FreeModule Fp = poly_module(C.ring);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < C.length() && !changed; ++k) {
      auto& M = C.maps[k];
      for (int b = 0; b < static_cast<int>(M.col.size()) && !changed; ++b) {
        for (const auto& [a, p] : M.col[b]) {
          std::uint32_t c;
          if (constant_entry(p, c)) {
            pivot_out(C, Fp, k, a, b, c);
            changed = true;
            break;
          }
        }
      }
    }
  }
  // drop empty trailing levels
  while (!C.maps.empty() && C.maps.back().col.empty()) {
    C.maps.pop_back();
    C.twists.pop_back();
  }
}

bool is_complex_zero_composition(const FreeComplex& C) {
  FreeModule Fp = poly_module(C.ring);
  for (int k = 0; k + 1 < C.length(); ++k) {
    const auto& D = C.maps[k];      // F_{k+1} -> F_k
    const auto& E = C.maps[k + 1];  // F_{k+2} -> F_{k+1}
    for (const auto& w : E.col) {
      // image of w under D, accumulated per row of F_k
      std::map<int, Vec> img;
      for (const auto& [mid, p] : w)
        for (const auto& [r, q] : D.col[mid]) {
          Vec prod = poly_mul(Fp, p, q);
          auto it = img.find(r);
          img[r] = it == img.end() ? prod : add(Fp, it->second, prod);
        }
      for (const auto& [r, v] : img)
        if (!v.is_zero()) return false;
    }
  }
  return true;
}

bool is_minimal(const FreeComplex& C) {
  for (const auto& M : C.maps)
    for (const auto& col : M.col)
      for (const auto& [r, p] : col) {
        std::uint32_t c;
        if (constant_entry(p, c)) return false;
        for (const auto& t : p.terms())
          if (t.m.is_one()) return false;
      }
  return true;
}

long long euler_characteristic(const FreeComplex& C, int n) {
  int nv = C.ring->nvars();
  long long s = 0;
  int sign = 1;
  for (const auto& level : C.twists) {
    for (int t : level) s += sign * ring_hf(nv, n - t);
    sign = -sign;
  }
  return s;
}

BettiTable::BettiTable(const FreeComplex& minimal) {
  for (std::size_t i = 0; i < minimal.twists.size(); ++i)
    for (int d : minimal.twists[i]) {
      ++b_[{static_cast<int>(i), d}];
      pd_ = std::max(pd_, static_cast<int>(i));
      reg_ = std::max(reg_, d - static_cast<int>(i));
    }
}

long long BettiTable::beta(int i, int d) const {
  auto it = b_.find({i, d});
  return it == b_.end() ? 0 : it->second;
}

int BettiTable::max_twist(int i) const {
  int m = 0;
  for (const auto& [key, v] : b_)
    if (key.first == i) m = std::max(m, key.second);
  return m;
}

std::string BettiTable::format() const {
  std::ostringstream out;
  int lo = 0, hi = 0;
  for (const auto& [key, v] : b_) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  const int w = 6;
  out << std::string(7, ' ');
  for (int i = 0; i <= pd_; ++i) {
    std::string s = std::to_string(i);
    out << std::string(w - s.size(), ' ') << s;
  }
  out << "\n";
  for (int j = lo; j <= hi; ++j) {
    std::string lbl = std::to_string(j) + ":";
    out << std::string(7 - lbl.size(), ' ') << lbl;
    for (int i = 0; i <= pd_; ++i) {
      long long v = beta(i, i + j);
      std::string s = v ? std::to_string(v) : ".";
      out << std::string(w - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

std::string BettiTable::machine_format() const {
  std::ostringstream out;
  for (const auto& [key, v] : b_)
    out << "beta " << key.first << " " << key.second - key.first << " " << v
        << "\n";
  return out.str();
}

FreeComplex minimal_resolution(const Ideal& I) {
  FreeComplex C = free_resolution(I);
  minimalize(C);
  return C;
}

}  // namespace gca
