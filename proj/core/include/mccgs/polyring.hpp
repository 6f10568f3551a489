#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mccgs {

using Rational = mpq_class;
using Integer = mpz_class;

/// Upper bound on the number of indeterminates of any ring, auxiliary
/// elimination variables included.
inline constexpr std::size_t kMaxVars = 24;

class Monomial {
 public:
  Monomial() { exp_.fill(0); }
  explicit Monomial(std::span<const int> exps);

  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);
  int degree() const { return degree_; }
  int degree(std::size_t begin, std::size_t end) const;
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && exp_ == other.exp_;
  }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_;
  int degree_ = 0;
};

enum class OrderKind { Lex, Grevlex };

struct OrderBlock {
  std::size_t begin;
  std::size_t end;
  OrderKind kind;
};

/// Monomial order over a fixed number of variables: a product of lex or
/// grevlex orders on consecutive index blocks, earlier blocks dominating.
class TermOrder {
 public:
  TermOrder() = default;
  static TermOrder lex(std::size_t n);
  static TermOrder grevlex(std::size_t n);
  static TermOrder of_kind(OrderKind kind, std::size_t n);
  static TermOrder blocks(std::vector<OrderBlock> blocks);

  /// -1, 0 or 1.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::size_t nvars() const { return blocks_.empty() ? 0 : blocks_.back().end; }
  const std::vector<OrderBlock>& block_list() const { return blocks_; }

  bool operator==(const TermOrder& other) const;

 private:
  std::vector<OrderBlock> blocks_;
};

enum class Cmp { LT, EQ, GT };

/// Three-way comparison; throws std::invalid_argument when the order and the
/// monomials disagree on dimension.
Cmp compare(const Monomial& a, const Monomial& b, const TermOrder& order, std::size_t dim_a,
            std::size_t dim_b);

/// Variables plus a monomial order. Immutable and shared by every polynomial
/// living in it.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, TermOrder order);

  const std::vector<std::string>& names() const { return names_; }
  const TermOrder& order() const { return order_; }
  std::size_t nvars() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const PolyRing& other) const {
    return this == &other || (names_ == other.names_ && order_ == other.order_);
  }

 private:
  std::vector<std::string> names_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, TermOrder order);
RingPtr make_ring(std::vector<std::string> names, OrderKind kind);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted by the ring's
/// order, largest first, with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const Rational& c);
  Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  Rational constant_value() const;

  /// Requires a nonzero polynomial.
  const Monomial& lm() const;
  const Rational& lc() const;
  const Term& lt() const;

  int degree(std::size_t var) const;
  int total_degree() const;
  bool involves(std::size_t var) const;
  std::vector<std::size_t> variables() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const;
  Poly times_term(const Monomial& m, const Rational& c) const;
  /// this - c * m * g, merged in one pass.
  Poly sub_scaled(const Poly& g, const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;
  /// All terms but the leading one.
  Poly tail() const;

  /// Scales so the leading coefficient is 1.
  Poly monic() const;
  /// Integer-primitive with positive leading coefficient.
  Poly normalized() const;
  /// Positive rational r such that p = sign * r * normalized(p).
  Rational rational_content() const;

  Poly derivative(std::size_t var) const;
  Poly substitute(std::size_t var, const Rational& value) const;
  Poly substitute(std::size_t var, const Poly& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Coefficients in var: result[k] is the coefficient of var^k (var removed).
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients(RingPtr ring, std::size_t var, const std::vector<Poly>& coeffs);

  /// Re-expresses the polynomial in another ring, matching variables by name.
  /// Throws if a variable in use is missing from the target ring.
  Poly in_ring(const RingPtr& target) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_ring(const Poly& o) const;
  void sort_and_combine();

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses an infix expression over the ring's variables: integers, rationals
/// p/q, + - * ^ and parentheses. Division is accepted only by nonzero
/// constants.
Poly parse_poly(std::string_view text, const RingPtr& ring);

std::string render_rational(const Rational& r);

// ---------------------------------------------------------------------------
// Parametric view K[a][x].

/// Variables x̄ and parameters ā.
struct VarSpace {
  std::vector<std::string> vars;
  std::vector<std::string> params;

  void validate() const;
  std::size_t nvars() const { return vars.size(); }
  std::size_t nparams() const { return params.size(); }
};

/// The rings a parametric problem lives in: the full ring (x̄ block first,
/// then ā) under the product order, and the parameter ring under ≻ā.
struct ParametricRings {
  VarSpace space;
  OrderKind x_order = OrderKind::Lex;
  OrderKind a_order = OrderKind::Lex;
  RingPtr full;
  RingPtr params;
  RingPtr vars;  // x̄ alone under ≻x, for specialized computations

  static ParametricRings make(VarSpace space, OrderKind x_order, OrderKind a_order);
};

/// Leading power product in x̄ and its coefficient in K[ā].
struct LeadingX {
  Monomial lpp;  // in the full ring, parameter entries zero
  Poly coeff;    // in the parameter ring
};

LeadingX leading(const Poly& p, const ParametricRings& rings);

/// gcd over K[ā] of the x̄-coefficients, normalized; p = content * primitive.
Poly content_wrt_x(const Poly& p, const ParametricRings& rings);
Poly primitive_part_wrt_x(const Poly& p, const ParametricRings& rings);

/// σ_α: substitutes the parameters, returning a polynomial of the x̄ ring.
Poly evaluate_params(const Poly& p, std::span<const Rational> alpha, const ParametricRings& rings);

// ---------------------------------------------------------------------------
// gcd and exact division over Q[...].

/// Exact quotient p / q; nullopt when q does not divide p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);
/// Normalized gcd (integer-primitive, positive leading coefficient).
Poly gcd(const Poly& p, const Poly& q);
Poly gcd(std::span<const Poly> polys);
/// Normalized gcd of the coefficients of p viewed as a polynomial in var.
Poly content_in(const Poly& p, std::size_t var);
/// Normalized lcm.
Poly lcm(const Poly& p, const Poly& q);

}  // namespace mccgs
