#include "theta/pos_system.hpp"

#include <algorithm>

namespace theta {

namespace {

struct Coord {
  bool is_e;
  int idx;  // 1-based within its side
};

// Coordinate order induced by a target tuple with all entries distinct.
std::vector<Coord> order_by_target(const HCParam& target) {
  std::vector<std::pair<Scalar, Coord>> items;
  for (size_t i = 0; i < target.left.size(); ++i)
    items.push_back({target.left[i], {true, static_cast<int>(i + 1)}});
  for (size_t j = 0; j < target.right.size(); ++j)
    items.push_back({target.right[j], {false, static_cast<int>(j + 1)}});
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return b.first < a.first; });
  for (size_t i = 1; i < items.size(); ++i)
    require(items[i].first != items[i - 1].first, "ConditionA",
            "named-system target must be regular");
  std::vector<Coord> order;
  order.reserve(items.size());
  for (auto& [v, c] : items) order.push_back(c);
  return order;
}

Scalar coord_value(const HCParam& lambda, const Coord& c) {
  return c.is_e ? lambda.left.at(static_cast<size_t>(c.idx - 1))
                : lambda.right.at(static_cast<size_t>(c.idx - 1));
}

// First coordinate index (1-based) of block j on each side.
struct BlockStarts {
  std::vector<int> e_first, f_first;  // 0 when the side is absent from the block
};

BlockStarts block_starts(const HCShape& shape) {
  BlockStarts s;
  int e = 1, f = 1;
  for (const auto& b : shape.blocks) {
    s.e_first.push_back(b.m > 0 ? e : 0);
    s.f_first.push_back(b.n > 0 ? f : 0);
    e += b.m;
    f += b.n;
  }
  return s;
}

}  // namespace

HCParam named_system_target(const std::string& name, const GroupSig& levi) {
  require(levi.kind == GroupKind::Sp, "ConditionA", "named systems are defined for Sp groups");
  const long p = levi.p;
  auto target = [&](std::vector<long> l, std::vector<long> r) { return make_hc(l, r); };
  if (name == "Psi1") {
    require(levi.q == 0, "ConditionA", "Psi1 lives on Sp(p,0)");
    return target(descending_range(p, 1), {});
  }
  if (name == "Psi2" || name == "Psi3" || name == "Psi4") {
    require(levi.q == 1, "ConditionA", name + " lives on Sp(p,1)");
    if (name == "Psi2") return target(descending_range(p, 1), {p + 1});
    if (name == "Psi3") return target(descending_range(p + 1, 2), {1});
    auto left = descending_range(p - 1, 1);
    left.insert(left.begin(), p + 1);
    return target(left, {p});
  }
  if (name == "Psi5" || name == "Psi6") {
    require(levi.q == 2, "ConditionA", name + " lives on Sp(p,2)");
    if (name == "Psi5") return target(descending_range(p, 1), {p + 2, p + 1});
    return target(descending_range(p + 2, 3), {2, 1});
  }
  if (name == "Psi7") {
    require(levi.p == 2 && levi.q == 2, "ConditionA", "Psi7 lives on Sp(2,2)");
    return target({4, 2}, {3, 1});
  }
  fail("ConditionA", "unknown named system '" + name + "'");
}

PosSystem resolve_pos_system(const PosSystem& psi, const GroupSig& levi, const HCParam& lambda) {
  HCShape shape = analyze_shape(levi, lambda);

  if (psi.name) {
    HCParam target = named_system_target(*psi.name, levi);
    auto order = order_by_target(target);
    // condition (A): the target's total order must refine the parameter's
    // weak order, i.e. lambda is weakly decreasing along it
    for (size_t i = 1; i < order.size(); ++i)
      require(!(coord_value(lambda, order[i - 1]) < coord_value(lambda, order[i])), "ConditionA",
              *psi.name + " is not dominant for this parameter");

    BlockStarts starts = block_starts(shape);
    std::vector<int> epos(lambda.left.size()), fpos(lambda.right.size());
    for (size_t k = 0; k < order.size(); ++k)
      (order[k].is_e ? epos : fpos)[static_cast<size_t>(order[k].idx - 1)] =
          static_cast<int>(k);

    PosSystem resolved;
    resolved.name = psi.name;
    for (size_t j = 0; j < shape.blocks.size(); ++j) {
      if (!shape.blocks[j].tied()) continue;
      int e = starts.e_first[j], f = starts.f_first[j];
      resolved.tied_signs[static_cast<int>(j)] =
          epos[static_cast<size_t>(e - 1)] < fpos[static_cast<size_t>(f - 1)] ? BlockSign::Plus
                                                                              : BlockSign::Minus;
    }
    if (!psi.tied_signs.empty())
      require(psi.tied_signs == resolved.tied_signs, "ConditionA",
              "explicit tied signs conflict with " + *psi.name);
    return resolved;
  }

  for (const auto& [idx, sign] : psi.tied_signs) {
    require(idx >= 0 && idx < static_cast<int>(shape.blocks.size()) &&
                shape.blocks[static_cast<size_t>(idx)].tied(),
            "ConditionA", "sign given for block " + std::to_string(idx) + " which is not tied");
  }
  for (size_t j = 0; j < shape.blocks.size(); ++j)
    require(!shape.blocks[j].tied() || psi.tied_signs.count(static_cast<int>(j)) == 1,
            "ConditionA", "tied block " + std::to_string(j) + " needs a sign");
  PosSystem resolved;
  resolved.tied_signs = psi.tied_signs;
  return resolved;
}

std::vector<PosSystem> condition_a_systems(const GroupSig& levi, const HCParam& lambda) {
  HCShape shape = analyze_shape(levi, lambda);
  std::vector<int> tied;
  for (size_t j = 0; j < shape.blocks.size(); ++j)
    if (shape.blocks[j].tied()) tied.push_back(static_cast<int>(j));

  std::vector<PosSystem> out;
  for (unsigned mask = 0; mask < (1u << tied.size()); ++mask) {
    PosSystem psi;
    for (size_t b = 0; b < tied.size(); ++b)
      psi.tied_signs[tied[b]] = (mask >> b) & 1u ? BlockSign::Plus : BlockSign::Minus;
    out.push_back(std::move(psi));
  }
  return out;
}

PosSystem unique_condition_a_system(const GroupSig& levi, const HCParam& lambda) {
  auto all = condition_a_systems(levi, lambda);
  require(all.size() == 1, "ConditionA",
          "parameter admits " + std::to_string(all.size()) + " systems, not 1");
  return all.front();
}

CoordOrder::CoordOrder(const GroupSig& levi, const HCParam& lambda, const PosSystem& resolved) {
  require(levi.kind == GroupKind::Sp, "ConditionA", "coordinate order is for Sp parameters");
  HCShape shape = analyze_shape(levi, lambda);
  epos_.assign(lambda.left.size(), 0);
  fpos_.assign(lambda.right.size(), 0);

  int pos = 0, e = 1, f = 1;
  for (size_t j = 0; j < shape.blocks.size(); ++j) {
    const auto& b = shape.blocks[j];
    // within a block the sides interleave; vanishing simple roots must be
    // noncompact, so equal runs alternate e,f,e,... or f,e,f,...
    bool e_first;
    if (b.m > b.n)
      e_first = true;
    else if (b.n > b.m)
      e_first = false;
    else
      e_first = resolved.tied_signs.at(static_cast<int>(j)) == BlockSign::Plus;
    int me = b.m, nf = b.n;
    bool turn_e = e_first;
    while (me > 0 || nf > 0) {
      if ((turn_e && me > 0) || nf == 0) {
        epos_[static_cast<size_t>(e - 1)] = pos++;
        ++e;
        --me;
      } else {
        fpos_[static_cast<size_t>(f - 1)] = pos++;
        ++f;
        --nf;
      }
      turn_e = !turn_e;
    }
  }
}

bool CoordOrder::e_before_f(int i, int j) const {
  return epos_.at(static_cast<size_t>(i - 1)) < fpos_.at(static_cast<size_t>(j - 1));
}

bool ostar_sum_root_in(const GroupSig& levi, const HCParam& lambda, const PosSystem& resolved,
                       int i, int j) {
  require(levi.kind == GroupKind::OStar, "ConditionA", "sum roots live in O* parameters");
  HCShape shape = analyze_shape(levi, lambda);
  Scalar s = lambda.left.at(static_cast<size_t>(i - 1)) + lambda.left.at(static_cast<size_t>(j - 1));
  if (!s.is_zero()) return !(s < Scalar(0));
  Scalar v = lambda.left.at(static_cast<size_t>(i - 1));
  require(!v.is_zero(), "ConditionA", "zero pairing of zero coordinates");
  int block = shape.block_of(v.sign_normalized());
  require(block >= 0, "ConditionA", "internal: block lookup failed");
  return resolved.tied_signs.at(block) == BlockSign::Plus;
}

std::vector<Scalar> rho_c(const GroupSig& sig) {
  std::vector<Scalar> out;
  if (sig.kind == GroupKind::Sp) {
    for (long v : descending_range(sig.p, 1)) out.push_back(Scalar(v));
    for (long v : descending_range(sig.q, 1)) out.push_back(Scalar(v));
  } else {
    for (int i = 1; i <= sig.n; ++i) out.push_back(Scalar::half(sig.n + 1 - 2 * i));
  }
  return out;
}

std::vector<Scalar> rho_n(const GroupSig& levi, const HCParam& lambda, const PosSystem& resolved) {
  std::vector<Scalar> out;
  if (levi.kind == GroupKind::Sp) {
    CoordOrder order(levi, lambda, resolved);
    const int p = levi.p, q = levi.q;
    for (int i = 1; i <= p; ++i) {
      long below = 0, above = 0;
      for (int j = 1; j <= q; ++j) (order.e_before_f(i, j) ? below : above) += 1;
      out.push_back(Scalar::half(q + below - above));
    }
    for (int j = 1; j <= q; ++j) {
      long below = 0, above = 0;
      for (int i = 1; i <= p; ++i) (order.e_before_f(i, j) ? above : below) += 1;
      out.push_back(Scalar::half(p + below - above));
    }
  } else {
    const int n = levi.n;
    for (int i = 1; i <= n; ++i) {
      long acc = 0;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        bool in = i < j ? ostar_sum_root_in(levi, lambda, resolved, i, j)
                        : ostar_sum_root_in(levi, lambda, resolved, j, i);
        acc += in ? 1 : -1;
      }
      out.push_back(Scalar::half(acc));
    }
  }
  return out;
}

}  // namespace theta
