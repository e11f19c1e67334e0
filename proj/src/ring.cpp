#include "ring.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace gca {

bool PrimeField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw Error("coefficient modulus must be an odd prime below 2^31, got " +
                std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % static_cast<std::uint32_t>(p_);
  std::uint32_t b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero in F_p");
  // extended Euclid
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = a;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return reduce(t0);
}

Ring::Ring(std::uint32_t p, std::vector<std::string> vars,
           std::vector<int> weights)
    : field_(p), vars_(std::move(vars)), weights_(std::move(weights)) {
  if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
    throw Error("ring must have between 1 and " + std::to_string(kMaxVars) +
                " variables");
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size())
    throw Error("weight vector length mismatch");
  standard_ = true;
  for (int w : weights_)
    if (w != 1) standard_ = false;
}

RingPtr Ring::standard(std::uint32_t p, int nvars, const std::string& prefix) {
  std::vector<std::string> vars;
  for (int i = 0; i < nvars; ++i) vars.push_back(prefix + std::to_string(i));
  return std::make_shared<Ring>(p, std::move(vars));
}

Monomial Ring::monomial(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != nvars())
    throw RingMismatchError("exponent vector length mismatch");
  Monomial m;
  int deg = 0;
  for (int i = 0; i < nvars(); ++i) {
    if (exps[i] < 0 || exps[i] > 255)
      throw ExponentOverflowError("exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
    deg += weights_[i] * exps[i];
  }
  m.deg = static_cast<std::int16_t>(deg);
  return m;
}

Monomial Ring::variable(int i) const {
  Monomial m;
  m.e[i] = 1;
  m.deg = static_cast<std::int16_t>(weights_[i]);
  return m;
}

int Ring::degree_of(const Monomial& m) const { return m.deg; }

Monomial Ring::mul(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 255) throw ExponentOverflowError("exponent overflow in product");
    m.e[i] = static_cast<std::uint8_t>(s);
  }
  m.deg = static_cast<std::int16_t>(a.deg + b.deg);
  return m;
}

bool Ring::divides(const Monomial& a, const Monomial& b) const {
  for (int i = 0; i < nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial Ring::quotient(const Monomial& b, const Monomial& a) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) m.e[i] = b.e[i] - a.e[i];
  m.deg = static_cast<std::int16_t>(b.deg - a.deg);
  return m;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  int deg = 0;
  for (int i = 0; i < nvars(); ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    deg += weights_[i] * m.e[i];
  }
  m.deg = static_cast<std::int16_t>(deg);
  return m;
}

bool Ring::coprime(const Monomial& a, const Monomial& b) const {
  for (int i = 0; i < nvars(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

std::string Ring::format_monomial(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars_[i] + "^" + std::to_string(int(m.e[i]));
  }
  return s.empty() ? "1" : s;
}

// Degrevlex on a variable slice [lo, hi): larger total degree wins, ties
// broken by the last variable with differing exponent (smaller wins there).
// Exponent sums, not weighted degrees: a weight-0 elimination variable must
// still dominate within its own block.
static int degrevlex_slice(const Ring& R, const Monomial& u, const Monomial& v,
                           int lo, int hi) {
  int du = 0, dv = 0;
  for (int i = lo; i < hi; ++i) {
    du += u.e[i];
    dv += v.e[i];
  }
  if (du != dv) return du < dv ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (u.e[i] != v.e[i]) return u.e[i] > v.e[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Ring& R, const Monomial& u,
                           const Monomial& v) const {
  switch (kind) {
    case Kind::DegRevLex:
      return degrevlex_slice(R, u, v, 0, R.nvars());
    case Kind::Block: {
      int c = degrevlex_slice(R, u, v, 0, block);
      if (c) return c;
      return degrevlex_slice(R, u, v, block, R.nvars());
    }
  }
  return 0;
}

int FreeModule::compare_terms(int cu, const Monomial& u, int cv,
                              const Monomial& v) const {
  switch (torder_) {
    case TermOrder::TOP: {
      int c = order_.compare(*ring_, u, v);
      if (c) return c;
      if (cu != cv) return cu < cv ? 1 : -1;
      return 0;
    }
    case TermOrder::PosElim: {
      bool bu = cu < split_, bv = cv < split_;
      if (bu != bv) return bu ? 1 : -1;
      int c = order_.compare(*ring_, u, v);
      if (c) return c;
      if (cu != cv) return cu < cv ? 1 : -1;
      return 0;
    }
    case TermOrder::Schreyer: {
      const auto& si = *schreyer_;
      Monomial a = ring_->mul(u, si.base[cu]);
      Monomial b = ring_->mul(v, si.base[cv]);
      int c = order_.compare(*ring_, a, b);
      if (c) return c;
      const auto& ka = si.chain[cu];
      const auto& kb = si.chain[cv];
      std::size_t n = std::min(ka.size(), kb.size());
      for (std::size_t i = 0; i < n; ++i)
        if (ka[i] != kb[i]) return ka[i] < kb[i] ? 1 : -1;
      if (ka.size() != kb.size()) return ka.size() < kb.size() ? 1 : -1;
      if (cu != cv) return cu < cv ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

// --- arithmetic -----------------------------------------------------------

Vec make_vec(const FreeModule& F, std::vector<MTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
    return F.compare_terms(a.comp, a.m, b.comp, b.m) > 0;
  });
  std::vector<MTerm> out;
  const auto& K = F.ring().field();
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = K.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c % F.ring().p() != 0) {
      t.c %= F.ring().p();
      if (t.c) out.push_back(t);
    }
  }
  return Vec(std::move(out));
}

Vec add(const FreeModule& F, const Vec& a, const Vec& b) {
  const auto& K = F.ring().field();
  std::vector<MTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = F.compare_terms(ta[i].comp, ta[i].m, tb[j].comp, tb[j].m);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      std::uint32_t s = K.add(ta[i].c, tb[j].c);
      if (s) out.push_back(MTerm{ta[i].m, ta[i].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  return Vec(std::move(out));
}

Vec negate(const FreeModule& F, const Vec& a) {
  const auto& K = F.ring().field();
  std::vector<MTerm> out = a.terms();
  for (auto& t : out) t.c = K.neg(t.c);
  return Vec(std::move(out));
}

Vec sub(const FreeModule& F, const Vec& a, const Vec& b) {
  return add(F, a, negate(F, b));
}

Vec scal_mul(const FreeModule& F, std::uint32_t c, const Vec& a) {
  const auto& K = F.ring().field();
  c %= F.ring().p();
  if (c == 0) return Vec{};
  std::vector<MTerm> out = a.terms();
  for (auto& t : out) t.c = K.mul(t.c, c);
  return Vec(std::move(out));
}

Vec term_mul(const FreeModule& F, std::uint32_t c, const Monomial& m,
             const Vec& a) {
  const auto& K = F.ring().field();
  const auto& R = F.ring();
  std::vector<MTerm> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    std::uint32_t cc = K.mul(t.c, c);
    if (cc) out.push_back(MTerm{R.mul(m, t.m), t.comp, cc});
  }
  // multiplying by a monomial preserves strict descending order
  return Vec(std::move(out));
}

Vec poly_mul(const FreeModule& F, const Vec& poly, const Vec& a) {
  Vec acc;
  for (const auto& t : poly.terms())
    acc = add(F, acc, term_mul(F, t.c, t.m, a));
  return acc;
}

Vec monic(const FreeModule& F, const Vec& a) {
  if (a.is_zero()) return a;
  return scal_mul(F, F.ring().field().inv(a.lead().c), a);
}

bool is_homogeneous(const FreeModule& F, const Vec& a) {
  if (a.is_zero()) return true;
  const auto& R = F.ring();
  int d = R.degree_of(a.terms()[0].m) + F.twist(a.terms()[0].comp);
  for (const auto& t : a.terms())
    if (R.degree_of(t.m) + F.twist(t.comp) != d) return false;
  return true;
}

int degree(const FreeModule& F, const Vec& a) {
  if (a.is_zero()) throw Error("degree of the zero element");
  if (!is_homogeneous(F, a)) throw HomogeneityError("element not homogeneous");
  return F.ring().degree_of(a.lead().m) + F.twist(a.lead().comp);
}

std::vector<Monomial> monomials_of_degree(const Ring& R, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> exps(R.nvars(), 0);
  // lexicographic enumeration over exponent vectors summing to d
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == R.nvars() - 1) {
      exps[var] = rem;
      out.push_back(R.monomial(exps));
      return;
    }
    for (int e = rem; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, rem - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

FreeModule poly_module(RingPtr ring, MonomialOrder order) {
  return FreeModule(std::move(ring), {0}, order);
}

Vec poly_term(const Ring& R, std::uint32_t c, const Monomial& m) {
  c %= R.p();
  if (!c) return Vec{};
  return Vec({MTerm{m, 0, c}});
}

Vec poly_constant(const Ring& R, std::uint32_t c) {
  return poly_term(R, c, R.one());
}

Vec poly_variable(const Ring& R, int i) {
  return poly_term(R, 1, R.variable(i));
}

// --- text I/O --------------------------------------------------------------

std::string format_poly(const Ring& R, const Vec& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.c);
    if (!t.m.is_one()) s += "*" + R.format_monomial(t.m);
  }
  return s;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return s[i];
  }
  char next() {
    skip();
    return s[i++];
  }
  long number() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("expected number at position " +
                                 std::to_string(i) + " in '" + s + "'");
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  }
  std::string ident() {
    skip();
    std::size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                            s[j] == '_'))
      ++j;
    if (j == i) throw ParseError("expected identifier in '" + s + "'");
    std::string v = s.substr(i, j - i);
    i = j;
    return v;
  }
};

}  // namespace

Vec parse_poly(const FreeModule& F, const std::string& text) {
  const Ring& R = F.ring();
  Lexer lx{text};
  std::vector<MTerm> terms;
  bool neg = false;
  if (!lx.eof() && (lx.peek() == '+' || lx.peek() == '-'))
    neg = lx.next() == '-';
  while (!lx.eof()) {
    // term: number [*var^e]* | var^e [*var^e]*
    std::uint32_t coeff = 1;
    std::vector<int> exps(R.nvars(), 0);
    bool any = false;
    bool expect_factor = true;
    while (expect_factor) {
      if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        coeff = static_cast<std::uint32_t>(
            R.field().mul(coeff, R.field().reduce(lx.number())));
      } else {
        std::string name = lx.ident();
        int vi = R.var_index(name);
        if (vi < 0) throw ParseError("unknown variable '" + name + "'");
        int e = 1;
        if (!lx.eof() && lx.peek() == '^') {
          lx.next();
          e = static_cast<int>(lx.number());
        }
        exps[vi] += e;
      }
      any = true;
      expect_factor = !lx.eof() && lx.peek() == '*';
      if (expect_factor) lx.next();
    }
    if (!any) throw ParseError("empty term in '" + text + "'");
    std::uint32_t c = neg ? R.field().neg(coeff) : coeff;
    if (c) terms.push_back(MTerm{R.monomial(exps), 0, c});
    if (lx.eof()) break;
    char op = lx.next();
    if (op == '+')
      neg = false;
    else if (op == '-')
      neg = true;
    else
      throw ParseError(std::string("unexpected character '") + op + "' in '" +
                       text + "'");
  }
  return make_vec(F, std::move(terms));
}

std::string format_ring_header(const Ring& R) {
  std::string s = "ring p " + std::to_string(R.p()) + " vars ";
  for (int i = 0; i < R.nvars(); ++i) {
    if (i) s += ",";
    s += R.vars()[i];
  }
  s += " order degrevlex";
  return s;
}

RingPtr parse_ring_header(const std::string& line) {
  std::istringstream in(line);
  std::string kw, pword, varsword, varlist, orderword, ordername;
  long p;
  if (!(in >> kw >> pword >> p >> varsword >> varlist >> orderword >>
        ordername) ||
      kw != "ring" || pword != "p" || varsword != "vars" ||
      orderword != "order" || ordername != "degrevlex")
    throw ParseError("bad ring header: " + line);
  std::vector<std::string> vars;
  std::string cur;
  for (char ch : varlist) {
    if (ch == ',') {
      vars.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) vars.push_back(cur);
  return std::make_shared<Ring>(static_cast<std::uint32_t>(p), vars);
}

}  // namespace gca
