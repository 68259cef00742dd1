#pragma once

#include <span>
#include <vector>

#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"

namespace sbrokit {

enum class DeriveOp {
  dual,
  delete_set,
  contract_set,
  direct_sum,
  truncate,
  principal_extension,
  /// Relaxation of a circuit-hyperplane into a basis.
  relaxation,
};

std::string_view to_string(DeriveOp op);

struct DeriveParams {
  ElementSet set;  // deleted / contracted set, flat, or circuit-hyperplane
  int bound = 0;   // truncation rank
};

/// A matroid obtained from one or two operands by a standard operator.
/// Deletion and contraction relabel survivors to 0..n'-1 in increasing
/// order; `to_operand()` maps new labels to operand labels.
class DerivedRep : public Representation {
 public:
  DerivedRep(DeriveOp op, std::vector<Matroid> operands, DeriveParams params);

  RepKind kind() const override { return RepKind::derived; }
  int size() const override { return size_; }
  int rank_of(ElementSet x) const override;

  DeriveOp op() const { return op_; }
  const std::vector<Matroid>& operands() const { return operands_; }
  const DeriveParams& params() const { return params_; }
  /// New element -> operand element (delete/contract only; identity-like
  /// otherwise, with -1 for an added element).
  const std::vector<int>& to_operand() const { return to_operand_; }
  /// Mask of operand elements kept (delete/contract).
  ElementSet kept() const { return kept_; }

 private:
  ElementSet lift(ElementSet x) const;

  DeriveOp op_;
  std::vector<Matroid> operands_;
  DeriveParams params_;
  int size_ = 0;
  ElementSet kept_;
  std::vector<int> to_operand_;
  int operand_rank_ = 0;
  int contracted_rank_ = 0;
};

Matroid dual(const Matroid& m);
Matroid delete_elements(const Matroid& m, ElementSet x);
Matroid contract_elements(const Matroid& m, ElementSet x);
/// M | keep.
Matroid restriction(const Matroid& m, ElementSet keep);
Matroid direct_sum(const Matroid& first, const Matroid& second);
/// r'(X) = min(r(X), k).
Matroid truncate(const Matroid& m, int k);
/// M +_F e; the new element is labelled m.size().
Matroid principal_extension(const Matroid& m, ElementSet flat);
Matroid relax(const Matroid& m, ElementSet circuit_hyperplane);

/// Generic entry point used by the document parser.
Matroid derive(DeriveOp op, std::span<const Matroid> operands,
               const DeriveParams& params);

/// M / contract \ del with survivors relabelled compactly, together with the
/// map from minor labels back to labels of `m`.
struct Minor {
  Matroid matroid;
  std::vector<int> to_original;

  /// Image of a minor-labelled set in the original labels.
  ElementSet lift(ElementSet x) const;
  /// Minor labels of an original-labelled set (elements outside dropped).
  ElementSet project(ElementSet x) const;
};

Minor make_minor(const Matroid& m, ElementSet contract, ElementSet del);

}  // namespace sbrokit
