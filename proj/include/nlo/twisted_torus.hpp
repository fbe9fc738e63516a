#pragma once

// Knot groups of the twisted torus knots T(p, pk +- 1; l, m): two generators
// a, b and one relator, with meridian and surface-framing peripheral words.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlo/integer.hpp"
#include "nlo/presentation.hpp"

namespace nlo {

enum class FamilySign : int { Minus = -1, Plus = 1 };

class FamilyParams {
 public:
  // Validates 2 <= p, 1 <= k, q = pk + sign >= 2, 2 <= l <= p - 1, m >= 0.
  // l == p is accepted only with allow_unverified_range.
  static FamilyParams make(std::int64_t p, std::int64_t k, FamilySign sign, std::int64_t ell,
                           std::int64_t m, bool allow_unverified_range = false);

  std::int64_t p() const { return p_; }
  std::int64_t k() const { return k_; }
  FamilySign sign() const { return sign_; }
  int sign_value() const { return static_cast<int>(sign_); }
  std::int64_t ell() const { return ell_; }
  std::int64_t m() const { return m_; }
  Integer q() const { return Integer(p_) * k_ + sign_value(); }
  // p q + l^2 m
  Integer framing() const { return Integer(p_) * q() + Integer(ell_) * ell_ * m_; }
  bool unverified_range() const { return ell_ == p_; }

  std::string describe() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
  friend bool operator<(const FamilyParams& a, const FamilyParams& b);

 private:
  FamilyParams() = default;
  std::int64_t p_ = 0, k_ = 0;
  FamilySign sign_ = FamilySign::Minus;
  std::int64_t ell_ = 0, m_ = 0;
};

struct PeripheralStructure {
  Word mu;
  Word s;
  Integer v;
};

struct KnotData {
  FamilyParams params;
  Relation relation;          // the defining equation, as displayed
  Presentation presentation;  // generators a, b; one relator; labels "mu", "s"
  PeripheralStructure peripheral;
  std::vector<std::string> flags;
};

// Reduced fraction numerator/denominator with denominator > 0.
class Slope {
 public:
  Slope(Integer numerator, Integer denominator = 1);
  static Slope parse(std::string_view text);  // "p/q" or "p"

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }

 private:
  Integer num_, den_;
};

KnotData build_minus(const FamilyParams& params);
KnotData build_plus(const FamilyParams& params);
KnotData build(const FamilyParams& params);

enum class LSpaceCase { PMinus1, PMinus2M1, Two_M1, None };

struct LSpaceClassification {
  bool is_lspace = false;
  LSpaceCase matched = LSpaceCase::None;
};

LSpaceClassification is_lspace_knot(std::int64_t p, std::int64_t ell, std::int64_t m);
inline LSpaceClassification is_lspace_knot(const FamilyParams& params) {
  return is_lspace_knot(params.p(), params.ell(), params.m());
}
std::string to_string(LSpaceCase c);

// The knot presentation plus mu^(p' - q' v) s^(q').
Presentation surgery_presentation(const KnotData& kd, const Slope& slope);
Word surgery_relator(const KnotData& kd, const Slope& slope);

}  // namespace nlo
