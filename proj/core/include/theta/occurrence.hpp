#pragma once

#include <map>
#include <optional>

#include "theta/ostar_dual.hpp"

namespace theta {

// Closed-form occurrence sets, written down independently of the lift
// engine so that each side can test the other.
//
// O*(2):  O_0     = {(0,0)} u {min >= 1}
//         O_{k>0} = {(p,0) : 1 <= p <= k} u {min >= 1}
//         O_{k<0} = {(0,q) : 1 <= q <= -k} u {min >= 1}
// O*(4):  P    -> min >= 1
//         D    -> (1,0) + O_{l2}
//         Dbar -> (0,1) + O_{l1}
//         F    -> {(p,1) : p <= l1} u {(1,q) : q <= l1} u {min >= 2}
//                 u {(0,0)} exactly for F_{1,0}
bool occurs(const OStar2Rep& rep, int p, int q);
bool occurs(const OStar4Rep& rep, int p, int q);

// Equivalence class of quaternionic Hermitian spaces with fixed p - q.
struct WittTower {
  int delta = 0;

  friend bool operator==(const WittTower& a, const WittTower& b) { return a.delta == b.delta; }
  friend bool operator<(const WittTower& a, const WittTower& b) { return a.delta < b.delta; }
};

inline int dist(const WittTower& a, const WittTower& b) { return std::abs(a.delta - b.delta); }

// Minimal p + q <= bound with p - q = tower.delta and a nonzero lift.
std::optional<int> first_occurrence(const OStar4Rep& rep, WittTower tower, int bound);
std::optional<int> first_occurrence(const OStar2Rep& rep, WittTower tower, int bound);

// First-occurrence degrees over all towers with |delta| <= bound, the pairs
// attaining n_{T1} + n_{T2} = 5 and the lower-bound check
// n_{T3} + n_{T4} >= 4 + dist for every distinct pair. A failed bound or a
// missing sum-5 pair throws ConservationViolation.
struct ConservationReport {
  std::map<int, int> n_by_delta;
  std::vector<std::pair<WittTower, WittTower>> sum5_pairs;  // all of them
  std::pair<WittTower, WittTower> pair_sum_5;               // the one with minimal n
  bool all_pairs_ok = false;
};

ConservationReport conservation_report(const OStar4Rep& rep, int bound);

// ASCII occurrence picture: '#' where the lift is nonzero, '.' elsewhere,
// q upward and p to the right as in the occurrence diagrams.
std::string render_picture(const OStar2Rep& rep, int max_pq);
std::string render_picture(const OStar4Rep& rep, int max_pq);

}  // namespace theta
