#ifndef QMX_RMATRIX_HPP
#define QMX_RMATRIX_HPP

#include <tuple>
#include <vector>

#include "qmx/qrat.hpp"
#include "qmx/report.hpp"

namespace qmx {

/// Hecke symmetry on C^N (x) C^N. Entries depend only on order relations
/// between indices, so the principal sub-block over {1..k} coincides with
/// the size-k matrix.
class HeckeR {
 public:
  /// Validates the Hecke identity (R - q^-1 I)(R + q I) = 0 and the braid
  /// relation at construction unless validate is false.
  explicit HeckeR(int N, bool validate = true);

  int size() const { return N_; }

  /// Entry with lower (input) pair (i, j) and upper (output) pair (ip, jp).
  QRat entry(int i, int j, int ip, int jp) const;

  /// Image of e_i (x) e_j as a list of (ip, jp, coefficient).
  std::vector<std::tuple<int, int, QRat>> column(int i, int j) const;

  /// Hecke + braid checks as report content. `flip_entry` negates the
  /// (1,2),(1,2) entry first (fault injection for negative controls).
  Report check(bool flip_entry = false) const;

 private:
  int N_;
  bool flipped_ = false;
  friend HeckeR flipped_hecke_r(int N);
};

/// Unvalidated instance with the (1,2)->(1,2) entry sign-flipped.
HeckeR flipped_hecke_r(int N);

}  // namespace qmx

#endif
