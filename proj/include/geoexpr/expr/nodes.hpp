// Copyright 2026 The geoexpr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "geoexpr/expr/framed.hpp"
#include "geoexpr/expr/traits.hpp"

// Expression node types and the operator surface that builds them. Every
// operator is constrained by both value-kind admissibility and the frame
// rules; an inadmissible combination fails to compile and has no runtime
// path. Each node's static type encodes its full subtree.

namespace geoexpr {

// Node types ------------------------------------------------------------------

template <typename C>
class InverseExpr : public ExprBase<InverseExpr<C>> {
 public:
  explicit InverseExpr(const C& child) : child_(child) {}
  [[nodiscard]] const C& child() const { return child_; }

 private:
  child_store_t<C> child_;
};

template <typename C>
class ExpMapExpr : public ExprBase<ExpMapExpr<C>> {
 public:
  explicit ExpMapExpr(const C& child) : child_(child) {}
  [[nodiscard]] const C& child() const { return child_; }

 private:
  child_store_t<C> child_;
};

/// Log map with the extra frame argument of the log rule carried as a
/// template parameter.
template <typename To, typename C>
class LogMapExpr : public ExprBase<LogMapExpr<To, C>> {
 public:
  explicit LogMapExpr(const C& child) : child_(child) {}
  [[nodiscard]] const C& child() const { return child_; }

 private:
  child_store_t<C> child_;
};

template <typename C>
class NegateExpr : public ExprBase<NegateExpr<C>> {
 public:
  explicit NegateExpr(const C& child) : child_(child) {}
  [[nodiscard]] const C& child() const { return child_; }

 private:
  child_store_t<C> child_;
};

template <typename C>
class ScaleExpr : public ExprBase<ScaleExpr<C>> {
 public:
  ScaleExpr(double factor, const C& child) : factor_(factor), child_(child) {}
  [[nodiscard]] const C& child() const { return child_; }
  [[nodiscard]] double factor() const { return factor_; }

 private:
  double factor_;
  child_store_t<C> child_;
};

template <typename L, typename R>
class ComposeExpr : public ExprBase<ComposeExpr<L, R>> {
 public:
  ComposeExpr(const L& lhs, const R& rhs) : lhs_(lhs), rhs_(rhs) {}
  [[nodiscard]] const L& lhs() const { return lhs_; }
  [[nodiscard]] const R& rhs() const { return rhs_; }

 private:
  child_store_t<L> lhs_;
  child_store_t<R> rhs_;
};

template <typename L, typename R>
class RotateExpr : public ExprBase<RotateExpr<L, R>> {
 public:
  RotateExpr(const L& lhs, const R& rhs) : lhs_(lhs), rhs_(rhs) {}
  [[nodiscard]] const L& lhs() const { return lhs_; }
  [[nodiscard]] const R& rhs() const { return rhs_; }

 private:
  child_store_t<L> lhs_;
  child_store_t<R> rhs_;
};

template <typename L, typename R>
class TransformExpr : public ExprBase<TransformExpr<L, R>> {
 public:
  TransformExpr(const L& lhs, const R& rhs) : lhs_(lhs), rhs_(rhs) {}
  [[nodiscard]] const L& lhs() const { return lhs_; }
  [[nodiscard]] const R& rhs() const { return rhs_; }

 private:
  child_store_t<L> lhs_;
  child_store_t<R> rhs_;
};

template <typename L, typename R>
class SumExpr : public ExprBase<SumExpr<L, R>> {
 public:
  SumExpr(const L& lhs, const R& rhs) : lhs_(lhs), rhs_(rhs) {}
  [[nodiscard]] const L& lhs() const { return lhs_; }
  [[nodiscard]] const R& rhs() const { return rhs_; }

 private:
  child_store_t<L> lhs_;
  child_store_t<R> rhs_;
};

template <typename L, typename R>
class DifferenceExpr : public ExprBase<DifferenceExpr<L, R>> {
 public:
  DifferenceExpr(const L& lhs, const R& rhs) : lhs_(lhs), rhs_(rhs) {}
  [[nodiscard]] const L& lhs() const { return lhs_; }
  [[nodiscard]] const R& rhs() const { return rhs_; }

 private:
  child_store_t<L> lhs_;
  child_store_t<R> rhs_;
};

template <typename L, typename R>
class BoxPlusExpr : public ExprBase<BoxPlusExpr<L, R>> {
 public:
  BoxPlusExpr(const L& lhs, const R& rhs) : lhs_(lhs), rhs_(rhs) {}
  [[nodiscard]] const L& lhs() const { return lhs_; }
  [[nodiscard]] const R& rhs() const { return rhs_; }

 private:
  child_store_t<L> lhs_;
  child_store_t<R> rhs_;
};

template <typename L, typename R>
class BoxMinusExpr : public ExprBase<BoxMinusExpr<L, R>> {
 public:
  BoxMinusExpr(const L& lhs, const R& rhs) : lhs_(lhs), rhs_(rhs) {}
  [[nodiscard]] const L& lhs() const { return lhs_; }
  [[nodiscard]] const R& rhs() const { return rhs_; }

 private:
  child_store_t<L> lhs_;
  child_store_t<R> rhs_;
};

// Traits ----------------------------------------------------------------------

template <typename C>
struct expr_traits<InverseExpr<C>> {
  using Value = value_t<C>;
  using Sig = typename rules::Inverse<sig_t<C>>::result;
  using Children = std::tuple<C>;
  static constexpr NodeKind kind = NodeKind::Inverse;
};

template <typename C>
struct expr_traits<ExpMapExpr<C>> {
  using Value = std::conditional_t<std::is_same_v<value_t<C>, RotationVector>, SO3Rotation,
                                   SE3Transform>;
  using Sig = typename rules::ExpMap<sig_t<C>>::result;
  using Children = std::tuple<C>;
  static constexpr NodeKind kind = NodeKind::ExpMap;
};

template <typename To, typename C>
struct expr_traits<LogMapExpr<To, C>> {
  using Value = tangent_of_t<value_t<C>>;
  using Sig = typename rules::LogMap<sig_t<C>, To>::result;
  using Children = std::tuple<C>;
  static constexpr NodeKind kind = NodeKind::LogMap;
};

template <typename C>
struct expr_traits<NegateExpr<C>> {
  using Value = value_t<C>;
  using Sig = typename rules::Negative<sig_t<C>>::result;
  using Children = std::tuple<C>;
  static constexpr NodeKind kind = NodeKind::Negate;
};

template <typename C>
struct expr_traits<ScaleExpr<C>> {
  using Value = value_t<C>;
  using Sig = typename rules::Scaling<sig_t<C>>::result;
  using Children = std::tuple<C>;
  static constexpr NodeKind kind = NodeKind::Scale;
};

template <typename L, typename R>
struct expr_traits<ComposeExpr<L, R>> {
  using Value = value_t<L>;
  using Sig = typename rules::Composition<sig_t<L>, sig_t<R>>::result;
  using Children = std::tuple<L, R>;
  static constexpr NodeKind kind = NodeKind::Compose;
};

template <typename L, typename R>
struct expr_traits<RotateExpr<L, R>> {
  using Value = EuclideanVector;
  using Sig = typename rules::Rotation<sig_t<L>, sig_t<R>>::result;
  using Children = std::tuple<L, R>;
  static constexpr NodeKind kind = NodeKind::Rotate;
};

template <typename L, typename R>
struct expr_traits<TransformExpr<L, R>> {
  using Value = EuclideanVector;
  using Sig = typename rules::Transformation<sig_t<L>, sig_t<R>>::result;
  using Children = std::tuple<L, R>;
  static constexpr NodeKind kind = NodeKind::Transform;
};

template <typename L, typename R>
struct expr_traits<SumExpr<L, R>> {
  using Value = value_t<L>;
  using Sig = typename rules::Sum<sig_t<L>, sig_t<R>>::result;
  using Children = std::tuple<L, R>;
  static constexpr NodeKind kind = NodeKind::Sum;
};

template <typename L, typename R>
struct expr_traits<DifferenceExpr<L, R>> {
  using Value = value_t<L>;
  using Sig = typename rules::Difference<sig_t<L>, sig_t<R>>::result;
  using Children = std::tuple<L, R>;
  static constexpr NodeKind kind = NodeKind::Difference;
};

template <typename L, typename R>
struct expr_traits<BoxPlusExpr<L, R>> {
  using Value = value_t<L>;
  using Sig = typename rules::ManifoldPlus<sig_t<L>, sig_t<R>>::result;
  using Children = std::tuple<L, R>;
  static constexpr NodeKind kind = NodeKind::BoxPlus;
};

template <typename L, typename R>
struct expr_traits<BoxMinusExpr<L, R>> {
  using Value = tangent_of_t<value_t<L>>;
  using Sig = typename rules::ManifoldMinus<sig_t<L>, sig_t<R>>::result;
  using Children = std::tuple<L, R>;
  static constexpr NodeKind kind = NodeKind::BoxMinus;
};

// Builders and operators --------------------------------------------------------

template <GroupExpr C>
  requires rules::Inverse<sig_t<C>>::valid
[[nodiscard]] auto make_inverse(const C& c) {
  return InverseExpr<C>{c};
}

template <TangentExpr C>
  requires rules::ExpMap<sig_t<C>>::valid
[[nodiscard]] auto make_exp_map(const C& c) {
  return ExpMapExpr<C>{c};
}

template <typename To = Unframed, GroupExpr C>
  requires rules::LogMap<sig_t<C>, To>::valid
[[nodiscard]] auto make_log_map(const C& c) {
  return LogMapExpr<To, C>{c};
}

/// Group composition.
template <GroupExpr L, GroupExpr R>
  requires std::same_as<value_t<L>, value_t<R>> && rules::Composition<sig_t<L>, sig_t<R>>::valid
[[nodiscard]] auto operator*(const L& lhs, const R& rhs) {
  return ComposeExpr<L, R>{lhs, rhs};
}

/// Rotation applied to an R^3 quantity.
template <So3Expr L, VectorExpr R>
  requires rules::Rotation<sig_t<L>, sig_t<R>>::valid
[[nodiscard]] auto operator*(const L& lhs, const R& rhs) {
  return RotateExpr<L, R>{lhs, rhs};
}

/// Rigid transform applied to an R^3 quantity.
template <Se3Expr L, VectorExpr R>
  requires rules::Transformation<sig_t<L>, sig_t<R>>::valid
[[nodiscard]] auto operator*(const L& lhs, const R& rhs) {
  return TransformExpr<L, R>{lhs, rhs};
}

template <VectorLikeExpr L, VectorLikeExpr R>
  requires std::same_as<value_t<L>, value_t<R>> && rules::Sum<sig_t<L>, sig_t<R>>::valid
[[nodiscard]] auto operator+(const L& lhs, const R& rhs) {
  return SumExpr<L, R>{lhs, rhs};
}

template <VectorLikeExpr L, VectorLikeExpr R>
  requires std::same_as<value_t<L>, value_t<R>> && rules::Difference<sig_t<L>, sig_t<R>>::valid
[[nodiscard]] auto operator-(const L& lhs, const R& rhs) {
  return DifferenceExpr<L, R>{lhs, rhs};
}

template <VectorLikeExpr C>
  requires rules::Negative<sig_t<C>>::valid
[[nodiscard]] auto operator-(const C& c) {
  return NegateExpr<C>{c};
}

template <VectorLikeExpr C>
  requires rules::Scaling<sig_t<C>>::valid
[[nodiscard]] auto operator*(double factor, const C& c) {
  return ScaleExpr<C>{factor, c};
}

template <VectorLikeExpr C>
  requires rules::Scaling<sig_t<C>>::valid
[[nodiscard]] auto operator*(const C& c, double factor) {
  return ScaleExpr<C>{factor, c};
}

/// g [+] phi: left manifold perturbation, Phi_AB [+] phi_A_AB -> Phi_AB.
template <GroupExpr L, TangentExpr R>
  requires std::same_as<tangent_of_t<value_t<L>>, value_t<R>> &&
           rules::ManifoldPlus<sig_t<L>, sig_t<R>>::valid
[[nodiscard]] auto box_plus(const L& lhs, const R& rhs) {
  return BoxPlusExpr<L, R>{lhs, rhs};
}

/// g1 [-] g2 = log(g1 o g2^-1), with matching signatures.
template <GroupExpr L, GroupExpr R>
  requires std::same_as<value_t<L>, value_t<R>> &&
           rules::ManifoldMinus<sig_t<L>, sig_t<R>>::valid
[[nodiscard]] auto box_minus(const L& lhs, const R& rhs) {
  return BoxMinusExpr<L, R>{lhs, rhs};
}

}  // namespace geoexpr
