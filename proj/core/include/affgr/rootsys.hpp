#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affgr/checked.hpp"
#include "affgr/errors.hpp"
#include "affgr/rational.hpp"

namespace affgr {

using IntVec = std::vector<Int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Accepts "A1", "B2", "e8", ... Throws ArgumentError for unknown or invalid labels.
  static CartanType parse(std::string_view label);
  std::string name() const;
  bool simply_laced() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Dense row-major integer matrix with overflow-checked products.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  IntVec operator*(const IntVec& v) const;
  IntMatrix operator*(const IntMatrix& m) const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVec a_;
};

// Element of the coweight lattice, in the fundamental-coweight basis:
// coordinate i is the pairing with the simple root alpha_{i+1}.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(IntVec coords) : c_(std::move(coords)) {}
  Coweight(std::initializer_list<Int> coords) : c_(coords) {}
  static Coweight zero(std::size_t rank) { return Coweight(IntVec(rank, 0)); }

  std::size_t rank() const { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const IntVec& coords() const { return c_; }

  bool is_zero() const;
  bool is_dominant() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator-(const Coweight& a);
  friend Coweight operator*(Int k, const Coweight& a);

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

 private:
  IntVec c_;
};

struct CoweightHash {
  std::size_t operator()(const Coweight& c) const noexcept;
};

/// "a,b,c"
std::string to_string(const Coweight& c);
std::ostream& operator<<(std::ostream& os, const Coweight& c);
/// Parses comma-separated integers (whitespace tolerated). Throws ArgumentError.
IntVec parse_int_list(std::string_view text);

// Finite Weyl group element, stored as its matrix on coweight coordinates
// together with the inverse matrix.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(IntMatrix action, IntMatrix inverse_action);
  static WeylElement identity(std::size_t rank);

  std::size_t rank() const { return m_.rows(); }
  const IntMatrix& matrix() const { return m_; }
  const IntMatrix& inverse_matrix() const { return inv_; }

  Coweight apply(const Coweight& c) const;
  Coweight apply_inverse(const Coweight& c) const;
  /// w(beta) for beta in simple-root coordinates.
  IntVec apply_to_root(const IntVec& beta) const;

  WeylElement inverse() const { return WeylElement(inv_, m_); }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  /// Image of the regular coweight (1,...,1). Determines the element.
  Coweight chamber_key() const;

  bool is_identity() const { return m_ == IntMatrix::identity(m_.rows()); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }

 private:
  IntMatrix m_;
  IntMatrix inv_;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type);
  explicit RootSystem(std::string_view label) : RootSystem(CartanType::parse(label)) {}

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return rank_; }

  /// C[i][j] = <coroot_i, root_j>, 0-based.
  const IntMatrix& cartan_matrix() const { return cartan_; }
  Int cartan(std::size_t i, std::size_t j) const { return cartan_(i, j); }
  Int determinant() const { return det_; }

  // Positive roots sorted by (height, lexicographic). Indices into this list
  // are the "root ids" used throughout the library.
  const std::vector<IntVec>& positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  const IntVec& root(std::size_t id) const { return roots_.at(id); }
  /// Coroot of a positive root in simple-coroot coordinates.
  const IntVec& coroot_coefficients(std::size_t id) const { return coroot_coeffs_.at(id); }
  /// Coroot of a positive root as a coweight.
  const Coweight& coroot(std::size_t id) const { return coroots_.at(id); }
  std::optional<std::size_t> find_root(const IntVec& beta) const;
  /// Root id of the simple root alpha_i, i in 1..rank.
  std::size_t simple_root_id(int i) const;
  std::size_t highest_root_id() const { return theta_id_; }
  const IntVec& highest_root() const { return roots_[theta_id_]; }
  Int height(std::size_t id) const;
  /// a_1..a_l, the coefficients of theta.
  const IntVec& kac_labels() const { return roots_[theta_id_]; }

  /// r_alpha = 2/(alpha|alpha) with long roots of squared length 2.
  int root_ratio(std::size_t id) const { return ratios_.at(id); }
  /// d_i = r_{alpha_i}, 0-based.
  const std::vector<int>& simple_ratios() const { return simple_ratios_; }
  /// 1 simply laced, 2 for B/C/F, 3 for G2.
  Int regularity_constant() const;

  /// {0} union {i : a_i = 1}.
  std::vector<int> minuscule_indices() const;
  Coweight fundamental_coweight(int i) const;

  Int pair(const Coweight& lambda, const IntVec& beta) const;
  Int pair(const Coweight& lambda, std::size_t id) const;
  Coweight reflect(const Coweight& lambda, std::size_t id) const;
  /// s_i, i in 1..rank.
  Coweight simple_reflect(const Coweight& lambda, int i) const;
  /// 2<lambda, rho> = sum over positive roots of <lambda, beta>.
  Int rho_pair(const Coweight& lambda) const;

  WeylElement simple_reflection(int i) const;
  WeylElement reflection(std::size_t id) const;
  WeylElement from_word(std::span<const int> word) const;
  std::vector<int> reduced_word(const WeylElement& w) const;
  std::size_t length(const WeylElement& w) const;
  /// True iff w^{-1}(beta) is a positive root.
  bool inverse_keeps_positive(const WeylElement& w, std::size_t id) const;
  WeylElement longest_element() const;
  /// Longest element of the parabolic subgroup generated by s_i, i in gens (1-based).
  WeylElement longest_element(std::span<const int> gens) const;
  /// Full element table for rank <= 4. Throws UnsupportedRank otherwise.
  const std::vector<WeylElement>& elements() const;

  struct DominantTranslate {
    Coweight dominant;
    WeylElement w;
    std::vector<int> word;
  };
  /// lambda = w(dominant) with w = w^lambda of minimal length.
  DominantTranslate dominant_translate(const Coweight& lambda) const;
  /// Same, without materialising the matrix of w.
  Coweight dominant_part(const Coweight& lambda, std::vector<int>* word = nullptr) const;

  /// True iff w^{-1}(lambda) is dominant.
  bool in_chamber(const Coweight& lambda, const WeylElement& w) const;
  /// Some w with both coweights in the closed chamber w(C), if one exists.
  std::optional<WeylElement> common_chamber(const Coweight& a, const Coweight& b) const;
  bool positive_sum_in_chamber(const Coweight& nu, const WeylElement& w) const;

  RatVec coroot_coordinates(const Coweight& lambda) const;
  bool in_coroot_lattice(const Coweight& lambda) const;
  /// Sum x_j coroot_j.
  Coweight from_coroot_coordinates(std::span<const Int> x) const;

  std::vector<Coweight> weyl_orbit(const Coweight& lambda) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.type_ == b.type_; }

 private:
  void check_rank(const Coweight& c) const;

  CartanType type_;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  Int det_ = 0;
  IntMatrix adj_t_;  // det * C^{-T}, integer
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroot_coeffs_;
  std::vector<Coweight> coroots_;
  std::vector<int> ratios_;
  std::vector<int> simple_ratios_;
  std::vector<std::size_t> simple_ids_;
  std::size_t theta_id_ = 0;
  std::vector<WeylElement> table_;
};

}  // namespace affgr
