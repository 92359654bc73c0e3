#include "theta/occurrence.hpp"

#include <algorithm>
#include <sstream>

namespace theta {

bool occurs(const OStar2Rep& rep, int p, int q) {
  if (p >= 1 && q >= 1) return true;
  if (rep.k == 0) return p == 0 && q == 0;
  if (rep.k > 0) return q == 0 && p >= 1 && p <= rep.k;
  return p == 0 && q >= 1 && q <= -rep.k;
}

bool occurs(const OStar4Rep& rep, int p, int q) {
  switch (rep.family) {
    case OStar4Family::P:
      return p >= 1 && q >= 1;
    case OStar4Family::D:
      return p >= 1 && occurs(OStar2Rep{rep.l2.to_long()}, p - 1, q);
    case OStar4Family::Dbar:
      return q >= 1 && occurs(OStar2Rep{rep.l1.to_long()}, p, q - 1);
    case OStar4Family::F: {
      long l1 = rep.l1.to_long();
      if (p >= 2 && q >= 2) return true;
      if (q == 1 && p >= 1 && p <= l1) return true;
      if (p == 1 && q >= 1 && q <= l1) return true;
      return p == 0 && q == 0 && l1 == 1 && rep.l2.is_zero();
    }
  }
  return false;
}

namespace {

template <typename Rep>
std::optional<int> first_occurrence_impl(const Rep& rep, WittTower tower, int bound) {
  require(bound >= std::abs(tower.delta), "ShapeError",
          "first-occurrence bound must reach |delta|");
  for (int total = std::abs(tower.delta); total <= bound; total += 2) {
    int p = (total + tower.delta) / 2;
    int q = (total - tower.delta) / 2;
    if (occurs(rep, p, q)) return total;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> first_occurrence(const OStar4Rep& rep, WittTower tower, int bound) {
  return first_occurrence_impl(rep, tower, bound);
}

std::optional<int> first_occurrence(const OStar2Rep& rep, WittTower tower, int bound) {
  return first_occurrence_impl(rep, tower, bound);
}

ConservationReport conservation_report(const OStar4Rep& rep, int bound) {
  require(bound >= 8, "ShapeError", "conservation search bound must be at least 8");
  ConservationReport report;
  for (int delta = -bound; delta <= bound; ++delta) {
    // min(p,q) >= 2 guarantees occurrence, so |delta| + 4 always suffices
    auto n = first_occurrence(rep, WittTower{delta}, std::abs(delta) + 4);
    require(n.has_value(), "ConservationViolation",
            "no first occurrence found in tower delta=" + std::to_string(delta));
    report.n_by_delta[delta] = *n;
  }

  report.all_pairs_ok = true;
  for (auto it1 = report.n_by_delta.begin(); it1 != report.n_by_delta.end(); ++it1)
    for (auto it2 = std::next(it1); it2 != report.n_by_delta.end(); ++it2) {
      WittTower t1{it1->first}, t2{it2->first};
      int sum = it1->second + it2->second;
      if (sum < 4 + dist(t1, t2)) {
        report.all_pairs_ok = false;
        fail("ConservationViolation",
             "towers " + std::to_string(t1.delta) + "," + std::to_string(t2.delta) +
                 " violate the lower bound: " + std::to_string(sum));
      }
      if (sum == 5) report.sum5_pairs.push_back({t1, t2});
    }

  require(!report.sum5_pairs.empty(), "ConservationViolation",
          "no tower pair attains first-occurrence sum 5 for " + rep_str(rep));
  report.pair_sum_5 = *std::min_element(
      report.sum5_pairs.begin(), report.sum5_pairs.end(), [&](const auto& a, const auto& b) {
        auto key = [&](const std::pair<WittTower, WittTower>& pr) {
          int na = report.n_by_delta.at(pr.first.delta);
          int nb = report.n_by_delta.at(pr.second.delta);
          return std::tuple(std::min(na, nb), std::abs(pr.first.delta) + std::abs(pr.second.delta),
                            pr.first.delta);
        };
        return key(a) < key(b);
      });
  return report;
}

namespace {

template <typename Rep>
std::string render_picture_impl(const Rep& rep, int max_pq) {
  require(max_pq >= 0, "ShapeError", "picture size must be nonnegative");
  std::ostringstream os;
  os << "q\n";
  for (int q = max_pq; q >= 0; --q) {
    os << (q < 10 ? " " : "") << q << " |";
    for (int p = 0; p <= max_pq; ++p) os << ' ' << (occurs(rep, p, q) ? '#' : '.');
    os << '\n';
  }
  os << "   +";
  for (int p = 0; p <= max_pq; ++p) os << "--";
  os << "\n    ";
  for (int p = 0; p <= max_pq; ++p) os << (p < 10 ? " " : "") << p % 10;
  os << "  p\n";
  return os.str();
}

}  // namespace

std::string render_picture(const OStar2Rep& rep, int max_pq) {
  return render_picture_impl(rep, max_pq);
}

std::string render_picture(const OStar4Rep& rep, int max_pq) {
  return render_picture_impl(rep, max_pq);
}

}  // namespace theta
