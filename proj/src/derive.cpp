#include "sbrokit/derive.hpp"

#include <algorithm>
#include <string>

#include "sbrokit/errors.hpp"

namespace sbrokit {

std::string_view to_string(DeriveOp op) {
  switch (op) {
    case DeriveOp::dual:
      return "dual";
    case DeriveOp::delete_set:
      return "delete";
    case DeriveOp::contract_set:
      return "contract";
    case DeriveOp::direct_sum:
      return "direct_sum";
    case DeriveOp::truncate:
      return "truncate";
    case DeriveOp::principal_extension:
      return "principal_extension";
    case DeriveOp::relaxation:
      return "relaxation";
  }
  return "dual";
}

namespace {

// Scatter the low bits of `src` onto the set bits of `mask`, in order.
uint64_t deposit(uint64_t src, uint64_t mask) {
  uint64_t out = 0;
  for (uint64_t m = mask; m != 0 && src != 0; m &= m - 1, src >>= 1) {
    if (src & 1U) out |= m & -m;
  }
  return out;
}

}  // namespace

DerivedRep::DerivedRep(DeriveOp op, std::vector<Matroid> operands,
                       DeriveParams params)
    : op_(op), operands_(std::move(operands)), params_(params) {
  const size_t expected = op == DeriveOp::direct_sum ? 2 : 1;
  if (operands_.size() != expected) {
    throw InputError(std::string(to_string(op)) + ": expected " +
                     std::to_string(expected) + " operand(s)");
  }
  const Matroid& m = operands_.front();
  const ElementSet ground = m.ground_set();
  operand_rank_ = m.rank();
  switch (op) {
    case DeriveOp::dual:
      size_ = m.size();
      break;
    case DeriveOp::delete_set:
    case DeriveOp::contract_set:
      m.check_subset(params.set);
      kept_ = ground - params.set;
      size_ = kept_.size();
      to_operand_ = kept_.to_vector();
      if (op == DeriveOp::contract_set) contracted_rank_ = m.rank(params.set);
      break;
    case DeriveOp::direct_sum:
      size_ = m.size() + operands_[1].size();
      if (size_ > kMaxElements) {
        throw InputError("direct_sum: more than 64 elements");
      }
      break;
    case DeriveOp::truncate:
      if (params.bound < 0) throw InputError("truncate: negative rank bound");
      if (params.bound > operand_rank_) {
        throw InputError("truncate: bound exceeds the rank");
      }
      size_ = m.size();
      break;
    case DeriveOp::principal_extension:
      m.check_subset(params.set);
      if (!is_flat(m, params.set)) {
        throw InputError("principal_extension: " + params.set.to_string() +
                         " is not a flat");
      }
      if (m.size() + 1 > kMaxElements) {
        throw InputError("principal_extension: more than 64 elements");
      }
      size_ = m.size() + 1;
      contracted_rank_ = m.rank(params.set);
      break;
    case DeriveOp::relaxation: {
      m.check_subset(params.set);
      const ElementSet z = params.set;
      if (z.size() != operand_rank_ || m.rank(z) != operand_rank_ - 1 ||
          !is_flat(m, z)) {
        throw InputError("relaxation: " + z.to_string() +
                         " is not a circuit-hyperplane");
      }
      for (int e : z) {
        if (m.rank(z.without(e)) != operand_rank_ - 1) {
          throw InputError("relaxation: " + z.to_string() +
                           " is not a circuit");
        }
      }
      size_ = m.size();
      break;
    }
  }
}

ElementSet DerivedRep::lift(ElementSet x) const {
  return ElementSet(deposit(x.bits(), kept_.bits()));
}

int DerivedRep::rank_of(ElementSet x) const {
  const Matroid& m = operands_.front();
  switch (op_) {
    case DeriveOp::dual: {
      ElementSet ground = m.ground_set();
      return x.size() - operand_rank_ + m.rank(ground - x);
    }
    case DeriveOp::delete_set:
      return m.rank(lift(x));
    case DeriveOp::contract_set:
      return m.rank(lift(x) | params_.set) - contracted_rank_;
    case DeriveOp::direct_sum: {
      const int n1 = m.size();
      ElementSet low = x & ElementSet::range(n1);
      ElementSet high(n1 >= 64 ? 0 : (x.bits() >> n1));
      return m.rank(low) + operands_[1].rank(high);
    }
    case DeriveOp::truncate:
      return std::min(m.rank(x), params_.bound);
    case DeriveOp::principal_extension: {
      const int e = m.size();
      if (!x.contains(e)) return m.rank(x);
      ElementSet rest = x.without(e);
      int r = m.rank(rest);
      return m.rank(rest | params_.set) == r ? r : r + 1;
    }
    case DeriveOp::relaxation:
      if (x == params_.set) return operand_rank_;
      return m.rank(x);
  }
  return 0;
}

namespace {

std::vector<std::string> kept_labels(const Matroid& m, ElementSet kept) {
  std::vector<std::string> out;
  for (int e : kept) out.push_back(m.labels()[e]);
  return out;
}

}  // namespace

Matroid dual(const Matroid& m) {
  return Matroid(std::make_shared<DerivedRep>(DeriveOp::dual,
                                              std::vector<Matroid>{m},
                                              DeriveParams{}),
                 m.labels());
}

Matroid delete_elements(const Matroid& m, ElementSet x) {
  auto rep = std::make_shared<DerivedRep>(
      DeriveOp::delete_set, std::vector<Matroid>{m}, DeriveParams{x, 0});
  auto labels = kept_labels(m, rep->kept());
  return Matroid(std::move(rep), std::move(labels));
}

Matroid contract_elements(const Matroid& m, ElementSet x) {
  auto rep = std::make_shared<DerivedRep>(
      DeriveOp::contract_set, std::vector<Matroid>{m}, DeriveParams{x, 0});
  auto labels = kept_labels(m, rep->kept());
  return Matroid(std::move(rep), std::move(labels));
}

Matroid restriction(const Matroid& m, ElementSet keep) {
  m.check_subset(keep);
  return delete_elements(m, m.ground_set() - keep);
}

Matroid direct_sum(const Matroid& first, const Matroid& second) {
  auto labels = first.labels();
  labels.insert(labels.end(), second.labels().begin(), second.labels().end());
  return Matroid(std::make_shared<DerivedRep>(
                     DeriveOp::direct_sum,
                     std::vector<Matroid>{first, second}, DeriveParams{}),
                 std::move(labels));
}

Matroid truncate(const Matroid& m, int k) {
  return Matroid(
      std::make_shared<DerivedRep>(DeriveOp::truncate, std::vector<Matroid>{m},
                                   DeriveParams{ElementSet(), k}),
      m.labels());
}

Matroid principal_extension(const Matroid& m, ElementSet flat) {
  auto labels = m.labels();
  labels.push_back(std::to_string(m.size()));
  return Matroid(std::make_shared<DerivedRep>(DeriveOp::principal_extension,
                                              std::vector<Matroid>{m},
                                              DeriveParams{flat, 0}),
                 std::move(labels));
}

Matroid relax(const Matroid& m, ElementSet circuit_hyperplane) {
  return Matroid(std::make_shared<DerivedRep>(
                     DeriveOp::relaxation, std::vector<Matroid>{m},
                     DeriveParams{circuit_hyperplane, 0}),
                 m.labels());
}

Matroid derive(DeriveOp op, std::span<const Matroid> operands,
               const DeriveParams& params) {
  auto need = [&](size_t k) {
    if (operands.size() != k) {
      throw InputError(std::string(to_string(op)) + ": expected " +
                       std::to_string(k) + " operand(s)");
    }
  };
  switch (op) {
    case DeriveOp::dual:
      need(1);
      return dual(operands[0]);
    case DeriveOp::delete_set:
      need(1);
      return delete_elements(operands[0], params.set);
    case DeriveOp::contract_set:
      need(1);
      return contract_elements(operands[0], params.set);
    case DeriveOp::direct_sum:
      need(2);
      return direct_sum(operands[0], operands[1]);
    case DeriveOp::truncate:
      need(1);
      return truncate(operands[0], params.bound);
    case DeriveOp::principal_extension:
      need(1);
      return principal_extension(operands[0], params.set);
    case DeriveOp::relaxation:
      need(1);
      return relax(operands[0], params.set);
  }
  throw InputError("unknown operator");
}

ElementSet Minor::lift(ElementSet x) const {
  ElementSet out;
  for (int e : x) out = out.with(to_original.at(e));
  return out;
}

ElementSet Minor::project(ElementSet x) const {
  ElementSet out;
  for (size_t i = 0; i < to_original.size(); ++i) {
    if (x.contains(to_original[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

Minor make_minor(const Matroid& m, ElementSet contract, ElementSet del) {
  m.check_subset(contract);
  m.check_subset(del);
  if (contract.intersects(del)) {
    throw InputError("minor: contracted and deleted sets overlap");
  }
  ElementSet kept = m.ground_set() - contract - del;
  Matroid contracted = contract_elements(m, contract);
  // Relabel `del` into the contracted matroid's labels.
  ElementSet del_local;
  int idx = 0;
  for (int e : m.ground_set() - contract) {
    if (del.contains(e)) del_local = del_local.with(idx);
    ++idx;
  }
  Matroid result = delete_elements(contracted, del_local);
  return Minor{std::move(result), kept.to_vector()};
}

}  // namespace sbrokit
