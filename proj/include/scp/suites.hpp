#pragma once

#include <vector>

#include "scp/drinfeld.hpp"
#include "scp/gfun.hpp"
#include "scp/report.hpp"
#include "scp/rotation.hpp"
#include "scp/sector.hpp"
#include "scp/transfer.hpp"

namespace scp {

/// Everything a verification run needs that does not depend on q.
struct Workspace {
  ModelConfig cfg;
  DrinfeldData dd;
  SectorBasis basis;
  ChargeNTable tab;
  std::vector<Rotation> rots;
  std::vector<CurvePoint> qs;  // seeded samples, at least 4
};

/// Samples are drawn from cfg.seed and vetoed if two analytic eigenvalue
/// squares come within a relative gap of 1e-3.
Workspace build_workspace(const ModelConfig& cfg, int samples);

/// Closed forms of ground-state matrix elements against the dense matrices,
/// all relative. That_yx is the hat matrix in (y_q, x_q) order.
struct ElementResiduals {
  double omega_omega = 0.0;        // <O|T|O>
  double omegabar_omega = 0.0;     // <Ob|T|O>
  double omegabar_omegabar = 0.0;  // <Ob|T|Ob>
  double omega_omegabar = 0.0;     // <O|T|Ob>
  double column_omega = 0.0;       // <n|T|O>, charge-N n
  double hat_row_omega = 0.0;      // <O|That(y,x)|n>
  double hat_row_omegabar = 0.0;   // <Ob|That(y,x)|N-1-n>
  double lowered_omega = 0.0;      // <O|E_m^- T|O>
  double raised_omegabar = 0.0;    // <Ob|E_m^+ T|Ob>
  double max() const;
};

ElementResiduals closed_form_elements(const Workspace& ws, const CurvePoint& q, const CMatrix& T,
                                      const CMatrix& That_yx);

/// max(|<Ob|T_Q|O>|, |<O|T_Q|Ob>|) / max|T_Q| for Q != 0.
double charged_vanishing(const Workspace& ws, const CMatrix& TQ);

/// |T S - S T| / |T| with S the cyclic edge shift.
double translation_residual(const CMatrix& T, const CMatrix& shift);

enum class Suite { Drinfeld, Spectrum, Elements, Rotations, Verify };

struct RunOptions {
  ModelConfig cfg;
  int samples = 5;
  int jobs = 1;
  bool timing = false;
};

/// Runs the selected checks. Throws scp::Error for invalid configurations.
RunReport run_suite(Suite suite, const RunOptions& opts);

const char* suite_name(Suite s);

}  // namespace scp
