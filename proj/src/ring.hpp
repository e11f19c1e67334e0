#ifndef GCA_RING_HPP
#define GCA_RING_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RingMismatchError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct ExponentOverflowError : Error { using Error::Error; };
struct HomogeneityError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct GeometryError : Error { using Error::Error; };
struct RetryExhaustedError : Error { using Error::Error; };
struct WindowError : Error { using Error::Error; };
struct ResourceError : Error { using Error::Error; };

/// Arithmetic in Z/p for an odd prime p < 2^31. Elements are canonical
/// residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return static_cast<std::uint32_t>(p_); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// Reduces an arbitrary signed value to its canonical residue.
  std::uint32_t reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r);
  }

  static bool is_prime(std::uint32_t n);

 private:
  std::uint64_t p_;
};

inline constexpr int kMaxVars = 16;

/// Exponent vector with cached (weighted) total degree. The degree cache is
/// maintained by the Ring helpers that create and combine monomials.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::int16_t deg = 0;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct MonomialOrder {
  enum class Kind { DegRevLex, Block };
  Kind kind = Kind::DegRevLex;
  int block = 0;  // size of the leading elimination block (first vars)

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block == o.block;
  }
  // -1 / 0 / +1 for u < v, u == v, u > v.
  int compare(const Ring& R, const Monomial& u, const Monomial& v) const;
};

/// A polynomial ring F_p[x_0..x_{n-1}] with per-variable weights. The
/// standard grading (all weights 1) is the default; an auxiliary weight-0
/// variable is used internally for intersections and colons.
class Ring {
 public:
  Ring(std::uint32_t p, std::vector<std::string> vars,
       std::vector<int> weights = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const { return standard_; }

  bool same_as(const Ring& o) const {
    return field_.p() == o.field_.p() && vars_ == o.vars_ &&
           weights_ == o.weights_;
  }

  Monomial one() const { return Monomial{}; }
  Monomial monomial(std::span<const int> exps) const;
  Monomial variable(int i) const;
  int degree_of(const Monomial& m) const;

  Monomial mul(const Monomial& a, const Monomial& b) const;
  bool divides(const Monomial& a, const Monomial& b) const;  // a | b
  Monomial quotient(const Monomial& b, const Monomial& a) const;  // b / a
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  bool coprime(const Monomial& a, const Monomial& b) const;

  std::string format_monomial(const Monomial& m) const;
  int var_index(const std::string& name) const;  // -1 if absent

  /// Convenience: a fresh standard ring F_p[x0..xr].
  static RingPtr standard(std::uint32_t p, int nvars,
                          const std::string& prefix = "x");

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  bool standard_;
};

struct SchreyerInfo {
  // Per component: accumulated base-ring monomial and the ancestor index
  // chain (bottom level first, own index last).
  std::vector<Monomial> base;
  std::vector<std::vector<std::int32_t>> chain;
};

/// A graded free module ⊕_k S(−twist_k) together with the term order used
/// for its elements.
class FreeModule {
 public:
  enum class TermOrder {
    TOP,       // ring order on monomials, then lower component index wins
    Schreyer,  // induced order from a Groebner basis one level down
    PosElim,   // components < split dominate; TOP within each block
  };

  FreeModule(RingPtr ring, std::vector<int> twists,
             MonomialOrder order = {}, TermOrder torder = TermOrder::TOP)
      : ring_(std::move(ring)),
        twists_(std::move(twists)),
        order_(order),
        torder_(torder) {}

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(int c) const { return twists_[c]; }
  const MonomialOrder& order() const { return order_; }
  TermOrder term_order() const { return torder_; }

  void set_schreyer(SchreyerInfo info) {
    torder_ = TermOrder::Schreyer;
    schreyer_ = std::move(info);
  }
  void set_pos_elim(int split) {
    torder_ = TermOrder::PosElim;
    split_ = split;
  }
  int split() const { return split_; }
  const SchreyerInfo& schreyer() const { return *schreyer_; }

  int compare_terms(int comp_u, const Monomial& u, int comp_v,
                    const Monomial& v) const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  MonomialOrder order_;
  TermOrder torder_;
  int split_ = 0;
  std::optional<SchreyerInfo> schreyer_;
};

struct MTerm {
  Monomial m;
  std::int32_t comp = 0;
  std::uint32_t c = 0;
};

/// A sparse element of a graded free module: terms sorted strictly
/// descending in the module's term order, no zero coefficients. Rank-1
/// modules with twist 0 double as the polynomial representation.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<MTerm> terms) : t_(std::move(terms)) {}

  bool is_zero() const { return t_.empty(); }
  const std::vector<MTerm>& terms() const { return t_; }
  std::vector<MTerm>& terms() { return t_; }
  const MTerm& lead() const { return t_.front(); }
  std::size_t size() const { return t_.size(); }

  bool operator==(const Vec& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!(t_[i].m == o.t_[i].m) || t_[i].comp != o.t_[i].comp ||
          t_[i].c != o.t_[i].c)
        return false;
    return true;
  }

 private:
  std::vector<MTerm> t_;
};

// --- element construction and arithmetic ---------------------------------

Vec make_vec(const FreeModule& F, std::vector<MTerm> terms);  // sorts, merges
Vec add(const FreeModule& F, const Vec& a, const Vec& b);
Vec sub(const FreeModule& F, const Vec& a, const Vec& b);
Vec scal_mul(const FreeModule& F, std::uint32_t c, const Vec& a);
Vec term_mul(const FreeModule& F, std::uint32_t c, const Monomial& m,
             const Vec& a);
/// poly * vec, with poly an element of the rank-1 module over the same ring.
Vec poly_mul(const FreeModule& F, const Vec& poly, const Vec& a);
Vec negate(const FreeModule& F, const Vec& a);
Vec monic(const FreeModule& F, const Vec& a);

/// Twisted degree of a homogeneous element; throws HomogeneityError if the
/// terms do not share one degree.
int degree(const FreeModule& F, const Vec& a);
bool is_homogeneous(const FreeModule& F, const Vec& a);

/// The degree-d graded piece as a plain coefficient-extraction helper: all
/// monomials of weighted degree d in the ring (standard grading only).
std::vector<Monomial> monomials_of_degree(const Ring& R, int d);

// --- polynomial helpers ---------------------------------------------------

FreeModule poly_module(RingPtr ring, MonomialOrder order = {});
Vec poly_term(const Ring& R, std::uint32_t c, const Monomial& m);
Vec poly_constant(const Ring& R, std::uint32_t c);
Vec poly_variable(const Ring& R, int i);

// --- text I/O --------------------------------------------------------------

std::string format_poly(const Ring& R, const Vec& f);
Vec parse_poly(const FreeModule& F, const std::string& text);
std::string format_ring_header(const Ring& R);
RingPtr parse_ring_header(const std::string& line);

}  // namespace gca

#endif  // GCA_RING_HPP
