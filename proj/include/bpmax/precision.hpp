#pragma once

#include <stdexcept>
#include <utility>

#include "bpmax/errors.hpp"
#include "bpmax/real_ops.hpp"

namespace bpmax {

// Working-precision contract shared by every determinant route.
// 53 = double, 106 = double-double, [200, 4096] = MPFR.
struct PrecisionConfig {
  int working_bits = 106;
  double max_condition_warn = 1e12;

  void validate() const {
    const bool ok = working_bits == 53 || working_bits == 106 ||
                    (working_bits >= 200 && working_bits <= 4096);
    if (!ok) {
      throw DomainError("working_bits must be 53, 106, or in [200, 4096]");
    }
  }

  PrecisionConfig doubled() const {
    PrecisionConfig p = *this;
    if (working_bits == 53) {
      p.working_bits = 106;
    } else if (working_bits == 106) {
      p.working_bits = 212;
    } else {
      p.working_bits = std::min(working_bits * 2, 4096);
    }
    return p;
  }
};

// Runs fn<Real>() with Real selected by the requested working precision.
// For the MPFR branch the thread-local default precision is scoped to the
// requested bit count.
template <class Fn>
auto with_precision(const PrecisionConfig& cfg, Fn&& fn) {
  cfg.validate();
  if (cfg.working_bits == 53) {
    return fn.template operator()<double>();
  }
  if (cfg.working_bits == 106) {
    return fn.template operator()<DD>();
  }
  MpPrecGuard guard(cfg.working_bits);
  return fn.template operator()<MpReal>();
}

}  // namespace bpmax
