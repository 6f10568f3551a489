#pragma once

#include <span>
#include <string>
#include <vector>

#include "mccgs/polyring.hpp"

namespace mccgs {

/// Fully reduced remainder of f modulo G in f's ring.
Poly normal_form(const Poly& f, std::span<const Poly> G);

struct GbStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Unique reduced Gröbner basis of <F> under the ring's order. Elements are
/// normalized (integer-primitive, positive leading coefficient) and sorted
/// descending by leading monomial. <1> gives [1], <0> gives [].
std::vector<Poly> reduced_gb(std::span<const Poly> F, GbStats* stats = nullptr);

/// S-polynomial of two nonzero polynomials.
Poly s_polynomial(const Poly& f, const Poly& g);

/// True iff every S-polynomial of G reduces to zero modulo G.
bool is_groebner(std::span<const Poly> G);

/// The ring base with extra variables prepended in a dominating lex block.
RingPtr with_leading_vars(const RingPtr& base, const std::vector<std::string>& extra);

/// An ideal with its reduced Gröbner basis, computed on construction.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> generators);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// Trusts that gb already is the normalized reduced basis.
  static Ideal from_reduced_gb(RingPtr ring, std::vector<Poly> gb);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gb() const { return gb_; }
  bool is_unit() const { return gb_.size() == 1 && gb_[0].is_constant(); }
  bool is_zero() const { return gb_.empty(); }

  Poly reduce(const Poly& f) const { return normal_form(f.in_ring(ring_), gb_); }
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  bool contains(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;
  Ideal plus(const Poly& f) const;
  Ideal plus(std::span<const Poly> fs) const;

  bool operator==(const Ideal& other) const;
  bool operator!=(const Ideal& other) const { return !(*this == other); }

  /// "<g1, g2, ...>", with "<0>" and "<1>" for the trivial ideals.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gb_;
};

Ideal intersect(const Ideal& I, const Ideal& J);
/// I : h^infinity.
Ideal saturate(const Ideal& I, const Poly& h);
/// f in sqrt(I).
bool radical_member(const Poly& f, const Ideal& I);
inline bool contains(const Ideal& I, const Ideal& J) { return I.contains(J); }
inline bool equals(const Ideal& I, const Ideal& J) { return I == J; }

}  // namespace mccgs
