#pragma once

#include <set>

#include "theta/lowest_ktypes.hpp"

namespace theta {

// One entry of the closed-form lists of representations whose lowest K-types
// are pinned to one shape: A (Sp(p,1), types (a1,0,...,0;b1)), B (Sp(p,2),
// types (0,...,0;b1,b2)) and C (Sp(2,2), types (a1,a2;0,0)). Entries with
// r >= 1 carry symbolic continuous parameters: param.nu holds placeholders
// and resolve_unique solves for the actual values.
struct CatalogEntry {
  LanglandsParam param;
  std::string case_tag;              // "A1".."A6", "B1".."B7", "C1".."C5"
  std::optional<char> b_side;        // '+' or '-' for B entries

  bool nu_symbolic() const { return param.r > 0; }
};

// Discrete data only: group, r, lambda, resolved signs and the mu multiset.
bool same_entry(const CatalogEntry& a, const CatalogEntry& b);

// All entries whose discrete data are bounded by value_bound.
std::vector<CatalogEntry> enumerate_A_p1(int p, long value_bound);
std::vector<CatalogEntry> enumerate_B_p2(int p, long value_bound);
std::vector<CatalogEntry> enumerate_C_22(long value_bound);

// First coordinates of the lowest K-types by the literal case tables:
// the a1-coordinate table for Sp(p,2) parameters and the b1-coordinate
// table for Sp(2,2) parameters. Rows are tried in written order and the
// first match wins; parameters outside the coverage raise UnsupportedShape.
std::set<Scalar> first_coord_set_a1(const LanglandsParam& param);
std::set<Scalar> first_coord_set_a3(const LanglandsParam& param);

// Every matching row, for the row-overlap consistency check.
struct TableRowMatch {
  int row = 0;
  std::set<Scalar> values;
};
std::vector<TableRowMatch> first_coord_rows_a1(const LanglandsParam& param);
std::vector<TableRowMatch> first_coord_rows_a3(const LanglandsParam& param);

// The unique entry whose lowest K-types equal target_lkt and whose
// infinitesimal character matches target_infchar; symbolic nu values are
// solved exactly from the character constraint. Throws NoMatch or
// AmbiguousMatch.
CatalogEntry resolve_unique(const std::vector<CatalogEntry>& entries,
                            const std::set<KTypeSp>& target_lkt, const InfChar& target_infchar);

// All valid Harish-Chandra parameters for the Levi signature with entries
// bounded by max_entry (exhaustive; used by the completeness oracle and by
// the lambda1 = p-2 catalog case).
std::vector<HCParam> enumerate_hc_params(const GroupSig& levi, long max_entry);

}  // namespace theta
