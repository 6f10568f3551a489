#include "mccgs/polyring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace mccgs {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  exp_.fill(0);
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, int e) {
  if (i >= kMaxVars) throw std::out_of_range("monomial index");
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max())
    throw std::invalid_argument("exponent out of range");
  degree_ += e - exp_[i];
  exp_[i] = static_cast<std::uint16_t>(e);
}

int Monomial::degree(std::size_t begin, std::size_t end) const {
  int d = 0;
  for (std::size_t i = begin; i < end; ++i) d += exp_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(exp_[i]) + other.exp_[i];
    if (s > std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(s);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = other.exp_[i] - exp_[i];
  r.degree_ = other.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

// --------------------------------------------------------------- TermOrder

TermOrder TermOrder::lex(std::size_t n) { return blocks({{0, n, OrderKind::Lex}}); }
TermOrder TermOrder::grevlex(std::size_t n) { return blocks({{0, n, OrderKind::Grevlex}}); }
TermOrder TermOrder::of_kind(OrderKind kind, std::size_t n) { return blocks({{0, n, kind}}); }

TermOrder TermOrder::blocks(std::vector<OrderBlock> blocks) {
  std::size_t expect = 0;
  for (const auto& b : blocks) {
    if (b.begin != expect || b.end < b.begin) throw std::invalid_argument("blocks must be contiguous");
    expect = b.end;
  }
  if (expect > kMaxVars) throw std::invalid_argument("too many variables");
  TermOrder o;
  for (auto& b : blocks)
    if (b.end > b.begin) o.blocks_.push_back(b);
  if (o.blocks_.empty()) o.blocks_.push_back({0, 0, OrderKind::Lex});
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_) {
    if (blk.kind == OrderKind::Lex) {
      for (std::size_t i = blk.begin; i < blk.end; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    } else {
      int da = a.degree(blk.begin, blk.end), db = b.degree(blk.begin, blk.end);
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = blk.end; i-- > blk.begin;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
  }
  return 0;
}

bool TermOrder::operator==(const TermOrder& other) const {
  if (blocks_.size() != other.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto &x = blocks_[i], &y = other.blocks_[i];
    if (x.begin != y.begin || x.end != y.end) return false;
    // a one-variable block orders the same way under either kind
    if (x.kind != y.kind && x.end - x.begin > 1) return false;
  }
  return true;
}

Cmp compare(const Monomial& a, const Monomial& b, const TermOrder& order, std::size_t dim_a,
            std::size_t dim_b) {
  if (dim_a != dim_b || dim_a != order.nvars())
    throw std::invalid_argument("monomial dimension mismatch");
  int c = order.compare(a, b);
  return c < 0 ? Cmp::LT : (c > 0 ? Cmp::GT : Cmp::EQ);
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<std::string> names, TermOrder order)
    : names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables");
  if (order_.nvars() != names_.size()) {
    if (names_.empty() && order_.nvars() == 0) return;
    throw std::invalid_argument("order dimension does not match variable count");
  }
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("duplicate variable name");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, TermOrder order) {
  return std::make_shared<const PolyRing>(std::move(names), std::move(order));
}

RingPtr make_ring(std::vector<std::string> names, OrderKind kind) {
  auto n = names.size();
  return make_ring(std::move(names), TermOrder::of_kind(kind, n));
}

// -------------------------------------------------------------------- Poly

Poly::Poly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.push_back({Monomial{}, c});
  if (!terms_.empty()) terms_[0].coeff.canonicalize();
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  sort_and_combine();
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  if (!p.terms_.empty()) p.terms_[0].coeff.canonicalize();
  return p;
}

void Poly::sort_and_combine() {
  const auto& ord = ring_->order();
  for (auto& t : terms_) t.coeff.canonicalize();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

void Poly::check_ring(const Poly& o) const {
  if (!ring_ || !o.ring_ || !(ring_ == o.ring_ || ring_->same_as(*o.ring_)))
    throw std::invalid_argument("polynomials from different rings");
}

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

Rational Poly::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant polynomial");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Monomial& Poly::lm() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  return terms_[0].mono;
}
const Rational& Poly::lc() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  return terms_[0].coeff;
}
const Term& Poly::lt() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
  return terms_[0];
}

int Poly::degree(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

int Poly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.mono[var] != 0) return true;
  return false;
}

std::vector<std::size_t> Poly::variables() const {
  std::vector<std::size_t> vs;
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    if (involves(i)) vs.push_back(i);
  return vs;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  const auto& ord = ring_->order();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (o.terms_.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return Poly(ring_, std::move(prod));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::sub_scaled(const Poly& g, const Monomial& m, const Rational& c) const {
  check_ring(g);
  const auto& ord = ring_->order();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !have) {
      gm = g.terms_[j].mono * m;
      have = true;
    }
    int cmp;
    if (i >= terms_.size()) cmp = -1;
    else if (j >= g.terms_.size()) cmp = 1;
    else cmp = ord.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, -c * g.terms_[j].coeff});
      ++j;
      have = false;
    } else {
      Rational s = terms_[i].coeff - c * g.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({gm, std::move(s)});
      ++i;
      ++j;
      have = false;
    }
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::tail() const {
  Poly r(ring_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / lc());
}

Rational Poly::rational_content() const {
  if (is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

Poly Poly::normalized() const {
  if (is_zero()) return *this;
  Rational c = rational_content();
  if (lc() < 0) c = -c;
  return scaled(1 / c);
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.mono[var];
    Rational c = t.coeff;
    if (e > 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      pw.canonicalize();
      c *= pw;
    }
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    out.push_back({m, std::move(c)});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  check_ring(value);
  auto coeffs = coefficients_in(var);
  Poly r(ring_);
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value + coeffs[k];
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
      if (v == 0) break;
    }
    sum += v;
  }
  return sum;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  int d = degree(var);
  std::vector<std::vector<Term>> buckets(std::max(d + 1, 0));
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(ring_, std::move(b));
  return out;
}

Poly Poly::from_coefficients(RingPtr ring, std::size_t var, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms()) {
      Monomial m = t.mono;
      m.set(var, m[var] + static_cast<int>(k));
      out.push_back({m, t.coeff});
    }
  return Poly(std::move(ring), std::move(out));
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (ring_ == target) return *this;
  std::vector<std::optional<std::size_t>> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->index_of(ring_->names()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i])
        throw std::invalid_argument("variable '" + ring_->names()[i] + "' not in target ring");
      m.set(*map[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Poly(target, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  check_ring(o);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string render_rational(const Rational& r) {
  return r.get_str();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || c != 1) {
      os << render_rational(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << ring_->names()[i];
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------- parametric view

void VarSpace::validate() const {
  std::set<std::string> seen;
  auto check = [&](const std::string& n) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate name '" + n + "'");
  };
  for (const auto& v : vars) check(v);
  for (const auto& a : params) check(a);
  if (vars.size() + params.size() > kMaxVars - 3)
    throw std::invalid_argument("too many variables and parameters");
}

ParametricRings ParametricRings::make(VarSpace space, OrderKind x_order, OrderKind a_order) {
  space.validate();
  ParametricRings r;
  std::size_t n = space.vars.size(), m = space.params.size();
  std::vector<std::string> all = space.vars;
  all.insert(all.end(), space.params.begin(), space.params.end());
  r.full = make_ring(all, TermOrder::blocks({{0, n, x_order}, {n, n + m, a_order}}));
  r.params = make_ring(space.params, a_order);
  r.vars = make_ring(space.vars, x_order);
  r.x_order = x_order;
  r.a_order = a_order;
  r.space = std::move(space);
  return r;
}

namespace {

Monomial x_part(const Monomial& m, std::size_t n) {
  Monomial r;
  for (std::size_t i = 0; i < n; ++i) r.set(i, m[i]);
  return r;
}

Monomial a_part(const Monomial& m, std::size_t n, std::size_t k) {
  Monomial r;
  for (std::size_t i = 0; i < k; ++i) r.set(i, m[n + i]);
  return r;
}

std::vector<std::pair<Monomial, Poly>> x_coefficients(const Poly& p, const ParametricRings& rings) {
  std::size_t n = rings.space.nvars(), k = rings.space.nparams();
  std::vector<std::pair<Monomial, Poly>> out;
  std::vector<Term> cur;
  Monomial curx;
  auto flush = [&] {
    if (!cur.empty()) out.emplace_back(curx, Poly(rings.params, std::move(cur)));
    cur.clear();
  };
  for (const auto& t : p.terms()) {
    Monomial xm = x_part(t.mono, n);
    if (cur.empty() || xm != curx) {
      flush();
      curx = xm;
    }
    cur.push_back({a_part(t.mono, n, k), t.coeff});
  }
  flush();
  return out;
}

}  // namespace

LeadingX leading(const Poly& p, const ParametricRings& rings) {
  if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  Poly q = p.in_ring(rings.full);
  auto coeffs = x_coefficients(q, rings);
  return {coeffs.front().first, coeffs.front().second};
}

Poly content_wrt_x(const Poly& p, const ParametricRings& rings) {
  if (p.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  Poly q = p.in_ring(rings.full);
  std::vector<Poly> cs;
  for (auto& [m, c] : x_coefficients(q, rings)) cs.push_back(c);
  return gcd(cs);
}

Poly primitive_part_wrt_x(const Poly& p, const ParametricRings& rings) {
  Poly c = content_wrt_x(p, rings).in_ring(rings.full);
  auto q = divide_exact(p.in_ring(rings.full), c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

Poly evaluate_params(const Poly& p, std::span<const Rational> alpha, const ParametricRings& rings) {
  if (alpha.size() != rings.space.nparams()) throw std::invalid_argument("parameter point dimension mismatch");
  Poly q = p.in_ring(rings.full);
  std::size_t n = rings.space.nvars();
  std::vector<Term> out;
  for (const auto& t : q.terms()) {
    Rational c = t.coeff;
    for (std::size_t i = 0; i < alpha.size() && c != 0; ++i)
      for (int e = 0; e < t.mono[n + i]; ++e) c *= alpha[i];
    if (c == 0) continue;
    out.push_back({x_part(t.mono, n), c});
  }
  return Poly(rings.vars, std::move(out));
}

}  // namespace mccgs
