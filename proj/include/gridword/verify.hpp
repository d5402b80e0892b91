#ifndef GRIDWORD_VERIFY_HPP_
#define GRIDWORD_VERIFY_HPP_

// Cross-validation of the closed forms against the exact oracle.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridword/domination.hpp"
#include "gridword/errors.hpp"
#include "gridword/formula.hpp"
#include "gridword/oracle.hpp"
#include "gridword/word.hpp"

namespace gridword {

struct MaxReport {
  int d = 0;
  int h = 0;
  int w = 0;
  std::int64_t formula = 0;
  std::int64_t oracle = 0;
  std::optional<Word2D> witness;
  bool agrees = false;
  bool skipped = false;
  std::string note;  // reason for a skip
};

struct SweepOptions {
  int h_min = 1;
  int w_min = 1;
  bool lower_triangle = true;  // only w <= h
  bool odd_only = false;       // only odd h and odd w
  OracleOptions oracle{};
  DominationOptions domination{};
};

/// One report per (d, h, w) in range, ordered by d, then h, then w.
/// A capacity error on either side marks that cell skipped.
inline std::vector<MaxReport> verify_theorem(const std::vector<int>& d_list,
                                             int h_max, int w_max,
                                             const SweepOptions& opt = {}) {
  for (int d : d_list) check_degree_bound(d);
  std::vector<MaxReport> out;
  for (int d : d_list) {
    // One DP per width serves every height.
    std::map<int, std::unique_ptr<DegreeProfileDP>> dps;
    std::map<int, std::string> failed;
    for (int h = opt.h_min; h <= h_max; ++h) {
      for (int w = opt.w_min; w <= w_max; ++w) {
        if (opt.lower_triangle && w > h) continue;
        if (opt.odd_only && (h % 2 == 0 || w % 2 == 0)) continue;
        MaxReport r;
        r.d = d;
        r.h = h;
        r.w = w;
        try {
          r.formula = max_filled(d, h, w, opt.domination);
          const int width = std::min(h, w), rows = std::max(h, w);
          if (failed.count(width)) throw capacity_error(failed[width]);
          auto& dp = dps[width];
          if (!dp) {
            try {
              dp = std::make_unique<DegreeProfileDP>(d, width, opt.oracle);
            } catch (const capacity_error& e) {
              dps.erase(width);
              failed[width] = e.what();
              throw;
            }
          }
          ExactMax em = exact_max(*dp, rows);
          r.oracle = em.value;
          r.witness = w > h ? transform(em.witness, Transform::transpose)
                            : std::move(em.witness);
          r.agrees = r.formula == r.oracle;
        } catch (const capacity_error& e) {
          r.skipped = true;
          r.note = e.what();
        }
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace gridword

#endif  // GRIDWORD_VERIFY_HPP_
