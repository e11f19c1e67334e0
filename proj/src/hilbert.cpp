#include "hilbert.hpp"

namespace gca {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long ring_hf(int nvars, int n) {
  if (n < 0) return 0;
  return binomial(n + nvars - 1, nvars - 1);
}

long long poly_binomial(long long n, int k) {
  if (k < 0) return 0;
  long long num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

namespace {

std::vector<Monomial> minimalize(const Ring& R, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool red = false;
    for (const auto& h : out)
      if (R.divides(h, g)) {
        red = true;
        break;
      }
    if (!red) out.push_back(g);
  }
  return out;
}

void add_scaled(std::vector<long long>& acc, const std::vector<long long>& v,
                int shift, long long scale) {
  if (acc.size() < v.size() + shift) acc.resize(v.size() + shift, 0);
  for (std::size_t i = 0; i < v.size(); ++i) acc[i + shift] += scale * v[i];
}

std::vector<long long> numerator_rec(const Ring& R,
                                     std::vector<Monomial> gens) {
  gens = minimalize(R, gens);
  if (gens.empty()) return {1};
  if (gens[0].is_one()) return {0};
  // pairwise coprime (in particular a single generator): product formula
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!R.coprime(gens[i], gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    std::vector<long long> num{1};
    for (const auto& g : gens) {
      std::vector<long long> next(num.size() + g.deg, 0);
      for (std::size_t i = 0; i < num.size(); ++i) {
        next[i] += num[i];
        next[i + g.deg] -= num[i];
      }
      num = std::move(next);
    }
    return num;
  }
  // pivot: the variable occurring in the most generators
  std::vector<int> freq(R.nvars(), 0);
  for (const auto& g : gens)
    for (int v = 0; v < R.nvars(); ++v)
      if (g.e[v]) ++freq[v];
  int pivot = 0;
  for (int v = 1; v < R.nvars(); ++v)
    if (freq[v] > freq[pivot]) pivot = v;

  // N(I) = N(I + (x)) + t^w N(I : x)
  std::vector<Monomial> plus = gens;
  plus.push_back(R.variable(pivot));
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial h = g;
    if (h.e[pivot]) {
      h.e[pivot] -= 1;
      h.deg = static_cast<std::int16_t>(h.deg - R.weights()[pivot]);
    }
    colon.push_back(h);
  }
  std::vector<long long> a = numerator_rec(R, std::move(plus));
  std::vector<long long> b = numerator_rec(R, std::move(colon));
  std::vector<long long> out;
  add_scaled(out, a, 0, 1);
  add_scaled(out, b, R.weights()[pivot], 1);
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (out.empty()) out = {0};
  return out;
}

}  // namespace

std::vector<long long> hilbert_numerator(const Ring& R,
                                         std::vector<Monomial> gens) {
  if (!R.standard_graded())
    throw Error("hilbert_numerator: standard grading required");
  return numerator_rec(R, std::move(gens));
}

HilbertSeries::HilbertSeries(int nvars, std::vector<long long> numerator)
    : nvars_(nvars), num_(std::move(numerator)) {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  if (num_.empty()) num_ = {0};
  // divide out (1-t) factors
  red_ = num_;
  int cancelled = 0;
  auto at_one = [](const std::vector<long long>& v) {
    long long s = 0;
    for (long long c : v) s += c;
    return s;
  };
  if (red_.size() == 1 && red_[0] == 0) {
    kdim_ = 0;
    degree_ = 0;
    return;
  }
  while (cancelled < nvars_ && at_one(red_) == 0) {
    // red / (1-t): q_i = sum_{k<=i} red_k
    std::vector<long long> q(red_.size() ? red_.size() - 1 : 0, 0);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < red_.size() + 1; ++i) {
      run += red_[i];
      if (i < q.size()) q[i] = run;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.empty()) q = {0};
    red_ = std::move(q);
    ++cancelled;
  }
  kdim_ = nvars_ - cancelled;
  degree_ = at_one(red_);
}

long long HilbertSeries::hf(int n) const {
  long long s = 0;
  for (std::size_t k = 0; k < num_.size(); ++k)
    s += num_[k] * ring_hf(nvars_, n - static_cast<int>(k));
  return s;
}

long long HilbertSeries::hp(int n) const {
  if (kdim_ == 0) return 0;
  long long s = 0;
  for (std::size_t k = 0; k < red_.size(); ++k)
    s += red_[k] * poly_binomial(n - static_cast<long long>(k) + kdim_ - 1,
                                 kdim_ - 1);
  return s;
}

int HilbertSeries::hp_agreement_bound() const {
  // hf and hp agree once n exceeds the reduced numerator degree minus the
  // co-dimension correction; scanning is cheap and exact.
  int hi = static_cast<int>(num_.size()) + nvars_;
  int n0 = hi;
  for (int n = hi; n >= 0; --n) {
    if (hf(n) != hp(n)) break;
    n0 = n;
  }
  return n0;
}

HilbertSeries hilbert_series(const Ideal& I) {
  const auto& gb = I.groebner();
  std::vector<Monomial> leads;
  for (const auto& g : gb.elems) leads.push_back(g.lead().m);
  return HilbertSeries(I.ring().nvars(),
                       hilbert_numerator(I.ring(), std::move(leads)));
}

SubmoduleHF::SubmoduleHF(const FreeModule& F, const std::vector<Vec>& gb)
    : nvars_(F.ring().nvars()), twists_(F.twists()) {
  std::vector<std::vector<Monomial>> per_comp(F.rank());
  for (const auto& g : gb) per_comp[g.lead().comp].push_back(g.lead().m);
  for (int c = 0; c < F.rank(); ++c)
    complement_num_.push_back(
        hilbert_numerator(F.ring(), std::move(per_comp[c])));
}

long long SubmoduleHF::dim(int n) const {
  long long s = 0;
  for (std::size_t c = 0; c < twists_.size(); ++c) {
    int m = n - twists_[c];
    long long free_dim = ring_hf(nvars_, m);
    long long quot = 0;
    for (std::size_t k = 0; k < complement_num_[c].size(); ++k)
      quot += complement_num_[c][k] * ring_hf(nvars_, m - static_cast<int>(k));
    s += free_dim - quot;
  }
  return s;
}

}  // namespace gca
