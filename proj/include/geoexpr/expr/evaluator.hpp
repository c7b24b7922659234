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

#include "geoexpr/expr/nodes.hpp"

// Two evaluation paths over one tree:
//
//  * evaluate(expr): value only. Chains of compositions applied to a vector
//    are evaluated right-to-left (matrix-vector products only), and
//    inverse-then-apply patterns run fused without forming the inverse.
//
//  * Evaluator<E>: the caching recursive evaluator backing every Jacobian
//    pass. It stores each intermediate value; composition caches double as
//    the chain-rule prefix products, which is what keeps the typed forward
//    and reverse evaluators near hand-coded cost. The inverse-then-apply
//    fusion applies here too: the fused evaluator replaces the Rotate- or
//    Transform-over-Inverse pair and carries its own Jacobian rules.

namespace geoexpr {

template <typename E>
class Evaluator;

template <Expression E>
Evaluator(const E&) -> Evaluator<std::remove_cvref_t<E>>;

namespace detail {

template <Expression E>
GEOEXPR_ALWAYS_INLINE value_t<E> eval_value(const E& e);

// Right-to-left application of a (possibly composed, possibly inverted)
// rotation expression to an evaluated vector.
template <Expression L>
GEOEXPR_ALWAYS_INLINE EuclideanVector apply_rotation_chain(const L& rot, const EuclideanVector& v) {
  if constexpr (kind_of_v<L> == NodeKind::Compose) {
    return apply_rotation_chain(rot.lhs(), apply_rotation_chain(rot.rhs(), v));
  } else if constexpr (kind_of_v<L> == NodeKind::Inverse) {
    return inverse_apply(eval_value(rot.child()), v);
  } else {
    return rotate(eval_value(rot), v);
  }
}

template <Expression L>
GEOEXPR_ALWAYS_INLINE EuclideanVector apply_transform_chain(const L& tf, const EuclideanVector& v) {
  if constexpr (kind_of_v<L> == NodeKind::Compose) {
    return apply_transform_chain(tf.lhs(), apply_transform_chain(tf.rhs(), v));
  } else if constexpr (kind_of_v<L> == NodeKind::Inverse) {
    return inverse_apply(eval_value(tf.child()), v);
  } else {
    return transform(eval_value(tf), v);
  }
}

template <Expression E>
GEOEXPR_ALWAYS_INLINE value_t<E> eval_value(const E& e) {
  constexpr NodeKind k = kind_of_v<E>;
  if constexpr (k == NodeKind::Leaf) {
    return e.value();
  } else if constexpr (k == NodeKind::Inverse) {
    return inverse(eval_value(e.child()));
  } else if constexpr (k == NodeKind::ExpMap) {
    return exp_map(eval_value(e.child()));
  } else if constexpr (k == NodeKind::LogMap) {
    return log_map(eval_value(e.child()));
  } else if constexpr (k == NodeKind::Negate) {
    return -eval_value(e.child());
  } else if constexpr (k == NodeKind::Scale) {
    return eval_value(e.child()) * e.factor();
  } else if constexpr (k == NodeKind::Compose) {
    return compose(eval_value(e.lhs()), eval_value(e.rhs()));
  } else if constexpr (k == NodeKind::Rotate) {
    return apply_rotation_chain(e.lhs(), eval_value(e.rhs()));
  } else if constexpr (k == NodeKind::Transform) {
    return apply_transform_chain(e.lhs(), eval_value(e.rhs()));
  } else if constexpr (k == NodeKind::Sum) {
    return eval_value(e.lhs()) + eval_value(e.rhs());
  } else if constexpr (k == NodeKind::Difference) {
    return eval_value(e.lhs()) - eval_value(e.rhs());
  } else if constexpr (k == NodeKind::BoxPlus) {
    return boxplus(eval_value(e.lhs()), eval_value(e.rhs()));
  } else {
    static_assert(k == NodeKind::BoxMinus);
    return boxminus(eval_value(e.lhs()), eval_value(e.rhs()));
  }
}

}  // namespace detail

/// Evaluate an expression to its value. No Jacobian bookkeeping; chain and
/// inverse rewrites keep the cost at matrix-vector level where possible.
template <Expression E>
[[nodiscard]] value_t<E> evaluate(const E& e) {
  return detail::eval_value(e);
}

/// Evaluate to a framed value carrying the expression's derived signature.
template <Expression E>
[[nodiscard]] auto evaluate_framed(const E& e) {
  return Framed<value_t<E>, sig_t<E>>{evaluate(e)};
}

// Caching evaluator -------------------------------------------------------------

template <typename V, typename S>
class Evaluator<Framed<V, S>> {
 public:
  using ExprType = Framed<V, S>;
  static constexpr int arity = 0;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e) : leaf_(&e) {}
  [[nodiscard]] const V& value() const { return leaf_->value(); }
  [[nodiscard]] const ExprType& leaf() const { return *leaf_; }

 private:
  const ExprType* leaf_;
};

template <typename C>
class Evaluator<InverseExpr<C>> {
 public:
  using ExprType = InverseExpr<C>;
  using Child0 = C;
  static constexpr int arity = 1;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e) : child_(e.child()), v_(inverse(child_.value())) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<C>& child() const { return child_; }

 private:
  Evaluator<C> child_;
  value_t<ExprType> v_;
};

template <typename C>
class Evaluator<ExpMapExpr<C>> {
 public:
  using ExprType = ExpMapExpr<C>;
  using Child0 = C;
  static constexpr int arity = 1;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e) : child_(e.child()), v_(exp_map(child_.value())) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<C>& child() const { return child_; }

 private:
  Evaluator<C> child_;
  value_t<ExprType> v_;
};

template <typename To, typename C>
class Evaluator<LogMapExpr<To, C>> {
 public:
  using ExprType = LogMapExpr<To, C>;
  using Child0 = C;
  static constexpr int arity = 1;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e) : child_(e.child()), v_(log_map(child_.value())) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<C>& child() const { return child_; }

 private:
  Evaluator<C> child_;
  value_t<ExprType> v_;
};

template <typename C>
class Evaluator<NegateExpr<C>> {
 public:
  using ExprType = NegateExpr<C>;
  using Child0 = C;
  static constexpr int arity = 1;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e) : child_(e.child()), v_(-child_.value()) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<C>& child() const { return child_; }

 private:
  Evaluator<C> child_;
  value_t<ExprType> v_;
};

template <typename C>
class Evaluator<ScaleExpr<C>> {
 public:
  using ExprType = ScaleExpr<C>;
  using Child0 = C;
  static constexpr int arity = 1;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : factor_(e.factor()), child_(e.child()), v_(child_.value() * factor_) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<C>& child() const { return child_; }
  [[nodiscard]] double factor() const { return factor_; }

 private:
  double factor_;
  Evaluator<C> child_;
  value_t<ExprType> v_;
};

template <typename L, typename R>
class Evaluator<ComposeExpr<L, R>> {
 public:
  using ExprType = ComposeExpr<L, R>;
  using Child0 = L;
  using Child1 = R;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs()), rhs_(e.rhs()), v_(compose(lhs_.value(), rhs_.value())) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<L>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<R>& rhs() const { return rhs_; }

 private:
  Evaluator<L> lhs_;
  Evaluator<R> rhs_;
  value_t<ExprType> v_;
};

template <typename L, typename R>
class Evaluator<RotateExpr<L, R>> {
 public:
  using ExprType = RotateExpr<L, R>;
  using Child0 = L;
  using Child1 = R;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs()), rhs_(e.rhs()), v_(rotate(lhs_.value(), rhs_.value())) {}
  [[nodiscard]] const EuclideanVector& value() const { return v_; }
  [[nodiscard]] const Evaluator<L>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<R>& rhs() const { return rhs_; }

 private:
  Evaluator<L> lhs_;
  Evaluator<R> rhs_;
  EuclideanVector v_;
};

/// Fused rotate-over-inverse: C^-1 * p evaluated in one step. The Inverse
/// node has no evaluator of its own; this node differentiates directly with
/// respect to the inverted operand.
template <typename X, typename P>
class Evaluator<RotateExpr<InverseExpr<X>, P>> {
 public:
  using ExprType = RotateExpr<InverseExpr<X>, P>;
  using Child0 = X;
  using Child1 = P;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = true;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs().child()), rhs_(e.rhs()), v_(inverse_apply(lhs_.value(), rhs_.value())) {}
  [[nodiscard]] const EuclideanVector& value() const { return v_; }
  [[nodiscard]] const Evaluator<X>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<P>& rhs() const { return rhs_; }

 private:
  Evaluator<X> lhs_;
  Evaluator<P> rhs_;
  EuclideanVector v_;
};

template <typename L, typename R>
class Evaluator<TransformExpr<L, R>> {
 public:
  using ExprType = TransformExpr<L, R>;
  using Child0 = L;
  using Child1 = R;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs()), rhs_(e.rhs()), v_(transform(lhs_.value(), rhs_.value())) {}
  [[nodiscard]] const EuclideanVector& value() const { return v_; }
  [[nodiscard]] const Evaluator<L>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<R>& rhs() const { return rhs_; }

 private:
  Evaluator<L> lhs_;
  Evaluator<R> rhs_;
  EuclideanVector v_;
};

/// Fused transform-over-inverse: T^-1 * p as R^T (p - t), never forming the
/// inverse transform.
template <typename X, typename P>
class Evaluator<TransformExpr<InverseExpr<X>, P>> {
 public:
  using ExprType = TransformExpr<InverseExpr<X>, P>;
  using Child0 = X;
  using Child1 = P;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = true;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs().child()), rhs_(e.rhs()), v_(inverse_apply(lhs_.value(), rhs_.value())) {}
  [[nodiscard]] const EuclideanVector& value() const { return v_; }
  [[nodiscard]] const Evaluator<X>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<P>& rhs() const { return rhs_; }

 private:
  Evaluator<X> lhs_;
  Evaluator<P> rhs_;
  EuclideanVector v_;
};

template <typename L, typename R>
class Evaluator<SumExpr<L, R>> {
 public:
  using ExprType = SumExpr<L, R>;
  using Child0 = L;
  using Child1 = R;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs()), rhs_(e.rhs()), v_(lhs_.value() + rhs_.value()) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<L>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<R>& rhs() const { return rhs_; }

 private:
  Evaluator<L> lhs_;
  Evaluator<R> rhs_;
  value_t<ExprType> v_;
};

template <typename L, typename R>
class Evaluator<DifferenceExpr<L, R>> {
 public:
  using ExprType = DifferenceExpr<L, R>;
  using Child0 = L;
  using Child1 = R;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs()), rhs_(e.rhs()), v_(lhs_.value() - rhs_.value()) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const Evaluator<L>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<R>& rhs() const { return rhs_; }

 private:
  Evaluator<L> lhs_;
  Evaluator<R> rhs_;
  value_t<ExprType> v_;
};

/// Boxplus caches the exponential of its tangent operand; the cached value
/// is the adjoint factor of its own Jacobian rules.
template <typename L, typename R>
class Evaluator<BoxPlusExpr<L, R>> {
 public:
  using ExprType = BoxPlusExpr<L, R>;
  using Child0 = L;
  using Child1 = R;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs()),
        rhs_(e.rhs()),
        exp_rhs_(exp_map(rhs_.value())),
        v_(compose(exp_rhs_, lhs_.value())) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const value_t<ExprType>& exp_of_tangent() const { return exp_rhs_; }
  [[nodiscard]] const Evaluator<L>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<R>& rhs() const { return rhs_; }

 private:
  Evaluator<L> lhs_;
  Evaluator<R> rhs_;
  value_t<ExprType> exp_rhs_;
  value_t<ExprType> v_;
};

/// Boxminus caches the relative element g1 o g2^-1 alongside its log.
template <typename L, typename R>
class Evaluator<BoxMinusExpr<L, R>> {
 public:
  using ExprType = BoxMinusExpr<L, R>;
  using Child0 = L;
  using Child1 = R;
  static constexpr int arity = 2;
  static constexpr bool fused_inverse = false;

  explicit Evaluator(const ExprType& e)
      : lhs_(e.lhs()),
        rhs_(e.rhs()),
        relative_(compose(lhs_.value(), inverse(rhs_.value()))),
        v_(log_map(relative_)) {}
  [[nodiscard]] const value_t<ExprType>& value() const { return v_; }
  [[nodiscard]] const value_t<Child0>& relative() const { return relative_; }
  [[nodiscard]] const Evaluator<L>& lhs() const { return lhs_; }
  [[nodiscard]] const Evaluator<R>& rhs() const { return rhs_; }

 private:
  Evaluator<L> lhs_;
  Evaluator<R> rhs_;
  value_t<Child0> relative_;
  value_t<ExprType> v_;
};

/// Uniform child access across unary and binary evaluator nodes.
template <int I, typename Ev>
[[nodiscard]] GEOEXPR_ALWAYS_INLINE const auto& evaluator_child(const Ev& ev) {
  if constexpr (I == 0) {
    if constexpr (Ev::arity == 1) {
      return ev.child();
    } else {
      return ev.lhs();
    }
  } else {
    static_assert(I == 1);
    return ev.rhs();
  }
}

}  // namespace geoexpr
