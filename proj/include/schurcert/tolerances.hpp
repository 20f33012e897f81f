#ifndef SCHURCERT_TOLERANCES_HPP
#define SCHURCERT_TOLERANCES_HPP

#include "schurcert/errors.hpp"

namespace schurcert {

/// Numeric thresholds for the sign decisions. All four are independent
/// knobs; margins are measured against max(1, max_abs(M)) so verdicts are
/// scale-robust yet stable near zero matrices.
struct Tolerances {
  double sym_tol = 1e-8;   ///< relative asymmetry accepted before rejection
  double pd_eps = 1e-9;    ///< definiteness margin, relative
  double inv_tol = 1e-10;  ///< minimum smallest/largest singular-value ratio
  double nn_tol = 1e-9;    ///< nonnegativity slack, relative

  void validate() const {
    if (sym_tol <= 0 || pd_eps <= 0 || inv_tol <= 0 || nn_tol <= 0) {
      throw Error("tolerances must be strictly positive");
    }
  }
};

}  // namespace schurcert

#endif
