#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "prelieder/exact_linalg.hpp"
#include "prelieder/spaces.hpp"

namespace prelieder {

/// Argument of a multilinear evaluation: either a basis vector (by index) or
/// an arbitrary coordinate vector.
struct Arg {
  int basis = -1;
  const Vector* vec = nullptr;

  static Arg of(int index) { return Arg{index, nullptr}; }
  static Arg of(const Vector& v) { return Arg{-1, &v}; }
};

/// A linear map Hom(/\^a g (x) /\^b V (x) T, target) with T, target in {g, V},
/// stored densely in enumerate_basis order; the output coordinate is the
/// fastest-moving index. Evaluation is alternating inside each wedge block.
class ComponentMap {
 public:
  ComponentMap() = default;
  ComponentMap(Shape shape, Factor target, Dims dims);

  const Shape& shape() const { return shape_; }
  Factor target() const { return target_; }
  const Dims& dims() const { return dims_; }
  int arity() const { return shape_.g_wedge + shape_.v_wedge + 1; }
  int target_dim() const { return dims_.of(target_); }

  /// Number of scalar coordinates.
  std::size_t size() const { return coeffs_.size(); }
  std::vector<Scalar>& coeffs() { return coeffs_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Coefficient vector at a canonical basis index.
  Vector at(const MixedIndex& index) const;
  void set(const MixedIndex& index, const Vector& value);

  /// Adds c * f(g_args..., v_args..., tail) to out (length target_dim).
  /// Vector arguments are expanded multilinearly; basis arguments are
  /// normalized with the alternating sign.
  void accumulate(Vector& out, const Scalar& c, std::span<const Arg> g_args, std::span<const Arg> v_args,
                  Arg tail) const;

  Vector evaluate(std::span<const Arg> g_args, std::span<const Arg> v_args, Arg tail) const;

  ComponentMap& operator+=(const ComponentMap& other);
  ComponentMap& operator-=(const ComponentMap& other);
  friend ComponentMap operator+(ComponentMap a, const ComponentMap& b) { return a += b; }
  friend ComponentMap operator-(ComponentMap a, const ComponentMap& b) { return a -= b; }
  friend ComponentMap operator*(const Scalar& s, ComponentMap a);
  friend bool operator==(const ComponentMap& a, const ComponentMap& b);

 private:
  void check_compatible(const ComponentMap& other) const;
  void accumulate_basis(Vector& out, const Scalar& c, std::vector<int>& g, std::vector<int>& v, int tail) const;
  void expand(Vector& out, const Scalar& c, std::span<const Arg> args, std::size_t slot, std::vector<int>& picked) const;

  Shape shape_{};
  Factor target_ = Factor::G;
  Dims dims_{};
  std::vector<Scalar> coeffs_;
};

/// Bidegree k|l of a homogeneous cochain on g (+) V.
struct Bidegree {
  int k = 0;
  int l = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Sparse alternating cochain Hom(/\^{n-1} W (x) W, W) on W = g (+) V.
/// W basis: g vectors are 0..g-1, V vectors are g..g+v-1. Only canonical
/// indices (strictly increasing wedge) with nonzero values are stored.
class GradedCochain {
 public:
  GradedCochain() = default;
  GradedCochain(Dims dims, int arity);

  const Dims& dims() const { return dims_; }
  int arity() const { return arity_; }
  /// Graded-Lie degree: arity - 1.
  int degree() const { return arity_ - 1; }
  int space_dim() const { return dims_.total(); }

  const std::map<WedgeIndex, Vector>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Value at a canonical index (zero vector if absent).
  Vector at(const WedgeIndex& index) const;
  /// Adds value at a canonical index; drops entries that cancel to zero.
  void add(const WedgeIndex& index, const Vector& value);

  /// Adds c * f(wedge..., tail) to out (length space_dim()).
  void accumulate(Vector& out, const Scalar& c, std::span<const Arg> wedge, Arg tail) const;

  /// Multilinear evaluation; args.size() must equal arity().
  Vector evaluate(std::span<const Vector> args) const;

  GradedCochain& operator+=(const GradedCochain& other);
  GradedCochain& operator-=(const GradedCochain& other);
  friend GradedCochain operator+(GradedCochain a, const GradedCochain& b) { return a += b; }
  friend GradedCochain operator-(GradedCochain a, const GradedCochain& b) { return a -= b; }
  friend GradedCochain operator*(const Scalar& s, const GradedCochain& a);
  friend bool operator==(const GradedCochain& a, const GradedCochain& b);

 private:
  void check_compatible(const GradedCochain& other) const;
  void expand(Vector& out, const Scalar& c, std::span<const Arg> args, std::size_t slot,
              std::vector<int>& picked) const;

  Dims dims_{};
  int arity_ = 1;
  std::map<WedgeIndex, Vector> entries_;
};

/// Horizontal lift of a component map to g (+) V.
GradedCochain lift(const ComponentMap& f);
/// Sum of lifts; all components must share dims and arity.
GradedCochain lift(std::span<const ComponentMap> components);

/// Reads the component of shape/target out of a cochain on g (+) V.
ComponentMap restrict_to(const GradedCochain& f, Shape shape, Factor target);

/// True iff f satisfies the four bidegree conditions for b (the zero cochain
/// satisfies every admissible b).
bool has_bidegree(const GradedCochain& f, Bidegree b);
/// The unique bidegree of a nonzero homogeneous cochain; nothing for
/// non-homogeneous or zero cochains.
std::optional<Bidegree> bidegree_of(const GradedCochain& f);

/// Components of a k|0 cochain: Hom(/\^k g (x) g, g), Hom(/\^k g (x) V, V),
/// Hom(/\^{k-1} g (x) V (x) g, V). For k = 0 the third one has no slots and is
/// returned empty-shaped with zero size.
struct K0Components {
  ComponentMap g;
  ComponentMap rho;
  ComponentMap mu;
};
K0Components decompose_k0(const GradedCochain& f);

/// Projection onto h = (+)_n Hom(/\^{n-1} g (x) g, V) (bidegree .|-1).
GradedCochain project_h(const GradedCochain& f);

}  // namespace prelieder
