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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Runtime mirror of the compile-time rule system in frames/rules.hpp.
// The typed layer rejects invalid expressions during compilation and cannot
// report at runtime; this mirror implements the same twelve rules over
// runtime descriptors and produces violation reports for tooling and tests.
// It operates on descriptor names only and never touches numeric values.

namespace geoexpr {

enum class FrameRule {
  Sum,
  Negative,
  Difference,
  Scaling,
  Composition,
  Inverse,
  Rotation,
  Transformation,
  ManifoldPlus,
  ManifoldMinus,
  ExpMap,
  LogMap,
};

[[nodiscard]] constexpr std::string_view rule_name(FrameRule r) {
  switch (r) {
    case FrameRule::Sum: return "Sum";
    case FrameRule::Negative: return "Negative";
    case FrameRule::Difference: return "Difference";
    case FrameRule::Scaling: return "Scaling";
    case FrameRule::Composition: return "Composition";
    case FrameRule::Inverse: return "Inverse";
    case FrameRule::Rotation: return "Rotation";
    case FrameRule::Transformation: return "Transformation";
    case FrameRule::ManifoldPlus: return "ManifoldPlus";
    case FrameRule::ManifoldMinus: return "ManifoldMinus";
    case FrameRule::ExpMap: return "ExpMap";
    case FrameRule::LogMap: return "LogMap";
  }
  return "?";
}

/// Expected operand pattern, as printed in violation reports.
[[nodiscard]] constexpr std::string_view rule_pattern(FrameRule r) {
  switch (r) {
    case FrameRule::Sum: return "p_D_AB + p_D_BC";
    case FrameRule::Negative: return "-p_D_AB";
    case FrameRule::Difference: return "p_D_AC - p_D_BC";
    case FrameRule::Scaling: return "a * p_A_BC";
    case FrameRule::Composition: return "Phi_AB o Phi_BC";
    case FrameRule::Inverse: return "(Phi_AB)^-1";
    case FrameRule::Rotation: return "Phi_DA(p_A_BC)";
    case FrameRule::Transformation: return "T_AB(p_B_BC)";
    case FrameRule::ManifoldPlus: return "Phi_AB [+] phi_A_AB";
    case FrameRule::ManifoldMinus: return "Phi_AB [-] Phi_AB";
    case FrameRule::ExpMap: return "exp(phi_A_AB)";
    case FrameRule::LogMap: return "log_B(Phi_AA)";
  }
  return "?";
}

/// The reserved runtime spelling of the unset descriptor.
inline constexpr std::string_view kUnframedTag = "Unframed";

/// Runtime frame signature: two descriptors for coordinate mappings, three
/// (expressed-in, from, to) for vector quantities.
class FrameSig {
 public:
  static FrameSig map(std::string to, std::string from) {
    return FrameSig{2, {std::move(to), std::move(from), {}}};
  }
  static FrameSig vec(std::string in, std::string from, std::string to) {
    return FrameSig{3, {std::move(in), std::move(from), std::move(to)}};
  }
  static FrameSig unframed_map() {
    return map(std::string{kUnframedTag}, std::string{kUnframedTag});
  }
  static FrameSig unframed_vec() {
    return vec(std::string{kUnframedTag}, std::string{kUnframedTag}, std::string{kUnframedTag});
  }

  [[nodiscard]] int arity() const { return arity_; }
  [[nodiscard]] const std::string& tag(int i) const { return tags_[static_cast<size_t>(i)]; }

  [[nodiscard]] bool all_unframed() const {
    for (int i = 0; i < arity_; ++i) {
      if (tags_[static_cast<size_t>(i)] != kUnframedTag) return false;
    }
    return true;
  }

  [[nodiscard]] std::string str() const {
    std::string out = "(";
    for (int i = 0; i < arity_; ++i) {
      if (i > 0) out += ",";
      out += tags_[static_cast<size_t>(i)];
    }
    out += ")";
    return out;
  }

  friend bool operator==(const FrameSig& a, const FrameSig& b) {
    return a.arity_ == b.arity_ && a.tags_ == b.tags_;
  }

 private:
  FrameSig(int arity, std::array<std::string, 3> tags) : arity_(arity), tags_(std::move(tags)) {}

  int arity_;
  std::array<std::string, 3> tags_;
};

/// A rejected operation: which rule, both operand signatures as seen, and
/// the descriptor positions that failed to match. Positions index the
/// concatenated descriptor list (lhs first, then rhs).
struct FrameViolation {
  FrameRule rule;
  std::string lhs;
  std::string rhs;  // empty for unary rules
  std::vector<int> positions;

  [[nodiscard]] std::string message() const {
    std::string out = "rule=";
    out += rule_name(rule);
    out += " expected=";
    out += rule_pattern(rule);
    out += " got=";
    out += lhs;
    if (!rhs.empty()) {
      out += ", ";
      out += rhs;
    }
    return out;
  }
};

/// Outcome of a rule check: the propagated result signature, or a violation.
class RuleCheck {
 public:
  static RuleCheck pass(FrameSig sig) { return RuleCheck{std::move(sig), std::nullopt}; }
  static RuleCheck fail(FrameViolation v) { return RuleCheck{std::nullopt, std::move(v)}; }

  [[nodiscard]] bool ok() const { return sig_.has_value(); }
  [[nodiscard]] const FrameSig& sig() const { return *sig_; }
  [[nodiscard]] const FrameViolation& violation() const { return *violation_; }

 private:
  RuleCheck(std::optional<FrameSig> sig, std::optional<FrameViolation> v)
      : sig_(std::move(sig)), violation_(std::move(v)) {}

  std::optional<FrameSig> sig_;
  std::optional<FrameViolation> violation_;
};

namespace detail {

inline RuleCheck fail_rule(FrameRule r, const FrameSig& lhs, const FrameSig* rhs,
                           std::vector<int> positions) {
  return RuleCheck::fail(
      FrameViolation{r, lhs.str(), rhs != nullptr ? rhs->str() : std::string{}, std::move(positions)});
}

// Positions of every descriptor of both operands, for mixed-framing and
// arity failures where no single descriptor is at fault.
inline std::vector<int> all_positions(const FrameSig& lhs, const FrameSig* rhs) {
  std::vector<int> p;
  for (int i = 0; i < lhs.arity() + (rhs != nullptr ? rhs->arity() : 0); ++i) p.push_back(i);
  return p;
}

}  // namespace detail

/// Check a unary rule (Negative, Scaling, Inverse, ExpMap).
[[nodiscard]] inline RuleCheck check_rule(FrameRule r, const FrameSig& operand) {
  using detail::fail_rule;
  switch (r) {
    case FrameRule::Negative:
      if (operand.arity() != 3) return fail_rule(r, operand, nullptr, detail::all_positions(operand, nullptr));
      return RuleCheck::pass(FrameSig::vec(operand.tag(0), operand.tag(2), operand.tag(1)));
    case FrameRule::Scaling:
      if (operand.arity() != 3) return fail_rule(r, operand, nullptr, detail::all_positions(operand, nullptr));
      return RuleCheck::pass(operand);
    case FrameRule::Inverse:
      if (operand.arity() != 2) return fail_rule(r, operand, nullptr, detail::all_positions(operand, nullptr));
      return RuleCheck::pass(FrameSig::map(operand.tag(1), operand.tag(0)));
    case FrameRule::ExpMap:
      if (operand.arity() != 3) return fail_rule(r, operand, nullptr, detail::all_positions(operand, nullptr));
      if (operand.tag(0) != operand.tag(1)) return fail_rule(r, operand, nullptr, {0, 1});
      return RuleCheck::pass(FrameSig::map(operand.tag(0), operand.tag(0)));
    default:
      return fail_rule(r, operand, nullptr, detail::all_positions(operand, nullptr));
  }
}

/// Check a binary rule. LogMap takes its frame argument through
/// check_log_rule instead.
[[nodiscard]] inline RuleCheck check_rule(FrameRule r, const FrameSig& lhs, const FrameSig& rhs) {
  using detail::fail_rule;
  if (lhs.all_unframed() != rhs.all_unframed()) {
    return fail_rule(r, lhs, &rhs, detail::all_positions(lhs, &rhs));
  }
  switch (r) {
    case FrameRule::Sum: {
      if (lhs.arity() != 3 || rhs.arity() != 3) break;
      if (lhs.tag(0) != rhs.tag(0)) return fail_rule(r, lhs, &rhs, {0, 3});
      if (lhs.tag(2) == rhs.tag(1)) {
        return RuleCheck::pass(FrameSig::vec(lhs.tag(0), lhs.tag(1), rhs.tag(2)));
      }
      if (rhs.tag(2) == lhs.tag(1)) {
        return RuleCheck::pass(FrameSig::vec(lhs.tag(0), rhs.tag(1), lhs.tag(2)));
      }
      return fail_rule(r, lhs, &rhs, {2, 4});
    }
    case FrameRule::Difference: {
      if (lhs.arity() != 3 || rhs.arity() != 3) break;
      if (lhs.tag(0) != rhs.tag(0)) return fail_rule(r, lhs, &rhs, {0, 3});
      if (lhs.tag(2) != rhs.tag(2)) return fail_rule(r, lhs, &rhs, {2, 5});
      return RuleCheck::pass(FrameSig::vec(lhs.tag(0), lhs.tag(1), rhs.tag(1)));
    }
    case FrameRule::Composition: {
      if (lhs.arity() != 2 || rhs.arity() != 2) break;
      if (lhs.tag(1) != rhs.tag(0)) return fail_rule(r, lhs, &rhs, {1, 2});
      return RuleCheck::pass(FrameSig::map(lhs.tag(0), rhs.tag(1)));
    }
    case FrameRule::Rotation: {
      if (lhs.arity() != 2 || rhs.arity() != 3) break;
      if (lhs.tag(1) != rhs.tag(0)) return fail_rule(r, lhs, &rhs, {1, 2});
      return RuleCheck::pass(FrameSig::vec(lhs.tag(0), rhs.tag(1), rhs.tag(2)));
    }
    case FrameRule::Transformation: {
      if (lhs.arity() != 2 || rhs.arity() != 3) break;
      std::vector<int> bad;
      if (lhs.tag(1) != rhs.tag(0)) bad = {1, 2};
      if (lhs.tag(1) != rhs.tag(1)) {
        bad.push_back(1);
        bad.push_back(3);
      }
      if (!bad.empty()) return fail_rule(r, lhs, &rhs, std::move(bad));
      return RuleCheck::pass(FrameSig::vec(lhs.tag(0), lhs.tag(0), rhs.tag(2)));
    }
    case FrameRule::ManifoldPlus: {
      if (lhs.arity() != 2 || rhs.arity() != 3) break;
      std::vector<int> bad;
      if (rhs.tag(0) != lhs.tag(0)) bad.push_back(2);
      if (rhs.tag(1) != lhs.tag(0)) bad.push_back(3);
      if (rhs.tag(2) != lhs.tag(1)) bad.push_back(4);
      if (!bad.empty()) return fail_rule(r, lhs, &rhs, std::move(bad));
      return RuleCheck::pass(lhs);
    }
    case FrameRule::ManifoldMinus: {
      if (lhs.arity() != 2 || rhs.arity() != 2) break;
      std::vector<int> bad;
      if (lhs.tag(0) != rhs.tag(0)) bad = {0, 2};
      if (lhs.tag(1) != rhs.tag(1)) {
        bad.push_back(1);
        bad.push_back(3);
      }
      if (!bad.empty()) return fail_rule(r, lhs, &rhs, std::move(bad));
      return RuleCheck::pass(FrameSig::vec(lhs.tag(0), lhs.tag(0), lhs.tag(1)));
    }
    default:
      break;
  }
  return fail_rule(r, lhs, &rhs, detail::all_positions(lhs, &rhs));
}

/// Check the log-map rule: log_B(Phi_AA) -> phi_A_AB, with the extra frame
/// argument supplied explicitly.
[[nodiscard]] inline RuleCheck check_log_rule(const FrameSig& operand, const std::string& to_frame) {
  const auto fail = [&](std::vector<int> positions) {
    return RuleCheck::fail(FrameViolation{FrameRule::LogMap, operand.str(), "(" + to_frame + ")",
                                          std::move(positions)});
  };
  if (operand.arity() != 2) {
    return fail(detail::all_positions(operand, nullptr));
  }
  if (operand.all_unframed() != (to_frame == kUnframedTag)) {
    return fail(detail::all_positions(operand, nullptr));
  }
  if (operand.tag(0) != operand.tag(1)) {
    return fail({0, 1});
  }
  return RuleCheck::pass(FrameSig::vec(operand.tag(0), operand.tag(0), to_frame));
}

}  // namespace geoexpr
