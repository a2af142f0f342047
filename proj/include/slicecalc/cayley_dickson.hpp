#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slicecalc/scalar.hpp"

namespace slicecalc {

enum class AlgebraKind { R, C, H, O };

constexpr int dim(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::R: return 1;
    case AlgebraKind::C: return 2;
    case AlgebraKind::H: return 4;
    case AlgebraKind::O: return 8;
  }
  return 0;
}
/// Dimension of the imaginary part.
constexpr int d_A(AlgebraKind k) { return dim(k) - 1; }
/// Number of splitting units I₁…I_u; d_A = 2u_A + 1 for ℍ and 𝕆.
constexpr int u_A(AlgebraKind k) { return dim(k) / 2 - 1; }

const char* kind_name(AlgebraKind k);
AlgebraKind parse_kind(const std::string& s);

/// Element of ℝ, ℂ, ℍ or 𝕆 in the basis 1, i, j, ij, ℓ, iℓ, jℓ, (ij)ℓ.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraKind kind, std::vector<Scalar> coeffs);

  static AlgebraElement zero(AlgebraKind k, Mode m);
  static AlgebraElement one(AlgebraKind k, Mode m) { return real(k, Scalar::one(m)); }
  static AlgebraElement real(AlgebraKind k, const Scalar& s);
  static AlgebraElement basis(AlgebraKind k, int index, Mode m);
  static AlgebraElement from_doubles(AlgebraKind k, const std::vector<double>& v);
  static AlgebraElement from_rationals(AlgebraKind k, const std::vector<mpq_class>& v);

  AlgebraKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(c_.size()); }
  Mode mode() const { return c_.front().mode(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  Scalar re() const { return c_.front(); }
  AlgebraElement im() const;
  bool is_zero() const;
  bool is_real() const;
  bool near_zero(double tol) const;
  AlgebraElement to_mode(Mode m) const;
  std::vector<double> to_doubles() const;
  /// Euclidean norm as a double.
  double abs() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  /// Cayley–Dickson product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement scaled(const Scalar& s) const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string to_string() const;

 private:
  AlgebraKind kind_;
  std::vector<Scalar> c_;
};

/// Product of canonical basis elements: e_a·e_b = sign·e_index.
struct BasisProduct {
  int index;
  int sign;
};
BasisProduct basis_product(AlgebraKind k, int a, int b);

AlgebraElement cd_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement cd_conj(const AlgebraElement& a);
/// (t(a), n(a)) with t = a + a^c and n = a·a^c.
std::pair<Scalar, Scalar> trace_norm(const AlgebraElement& a);
AlgebraElement cd_inverse(const AlgebraElement& a);
AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);
/// ¼(q − iqi − jqj − (ij)q(ij)) for q ∈ ℍ.
AlgebraElement real_part_mixed(const AlgebraElement& q);
/// Largest coefficient difference, for Float comparisons.
double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);

/// Element of 𝕊_A: t = 0 and n = 1.
class ImaginaryUnit {
 public:
  /// Validates the unit condition (exactly, or within kFloatTol in Float mode).
  explicit ImaginaryUnit(AlgebraElement e);

  const AlgebraElement& element() const { return e_; }
  AlgebraKind kind() const { return e_.kind(); }
  Mode mode() const { return e_.mode(); }
  ImaginaryUnit operator-() const { return ImaginaryUnit(-e_); }

 private:
  AlgebraElement e_;
};

/// Deterministic per seed; exact rational points come from inverse stereographic projection.
ImaginaryUnit random_imaginary_unit(AlgebraKind kind, std::uint64_t seed, Mode mode = Mode::Exact);

/// Real basis {1, I, I₁, I·I₁, …, I_u, I·I_u} adapted to the slice ℂ_I.
class SplittingBase {
 public:
  SplittingBase(ImaginaryUnit I, std::vector<AlgebraElement> units);

  const ImaginaryUnit& I() const { return I_; }
  const std::vector<AlgebraElement>& units() const { return units_; }
  const std::vector<AlgebraElement>& full_basis() const { return full_; }
  AlgebraKind kind() const { return I_.kind(); }
  Mode mode() const { return I_.mode(); }

  std::vector<Scalar> coordinates(const AlgebraElement& a) const;
  AlgebraElement from_coords(const std::vector<Scalar>& c) const;
  /// Real coordinates of full_basis[a]·full_basis[b].
  const std::vector<Scalar>& structure(int a, int b) const;
  /// Real coordinates of full_basis[a]^c.
  const std::vector<Scalar>& conj_coords(int a) const;

 private:
  ImaginaryUnit I_;
  std::vector<AlgebraElement> units_;
  std::vector<AlgebraElement> full_;
  std::vector<std::vector<Scalar>> inverse_;  // row-major, maps canonical coords to base coords
  std::vector<std::vector<Scalar>> structure_;
  std::vector<std::vector<Scalar>> conj_;
};

SplittingBase make_splitting_base(const ImaginaryUnit& I);
std::vector<Scalar> real_coordinates(const AlgebraElement& a, const SplittingBase& base);
AlgebraElement from_coordinates(const std::vector<Scalar>& coords, const SplittingBase& base);

/// Inverse of a square matrix over Scalar (Gauss–Jordan); throws InvalidBase when singular.
std::vector<std::vector<Scalar>> invert_matrix(std::vector<std::vector<Scalar>> m);

}  // namespace slicecalc
