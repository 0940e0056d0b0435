#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coneseries/support.hpp"

namespace coneseries {

struct SupportPlot {
  std::vector<LatticeVector> points;  // stored coordinates
  TauClass tau;
  std::string csv;
  std::optional<std::string> svg;  // only for n = 2
};

/// Materializes the support inside [-window, window]^n (stored coordinates)
/// and renders it. The line u . omega = lambda0 is drawn when omega is a
/// boundary vector. WindowTooLarge above `cap` points.
SupportPlot render_support_plot(const SupportSpec& s, const RationalVector& omega, const Integer& window,
                                std::size_t cap);

/// Writes `<out>.csv` and, for n = 2, `<out>.svg`. Returns the paths written.
std::vector<std::string> emit_support_plot(const SupportSpec& s, const RationalVector& omega,
                                           const Integer& window, const std::string& out, std::size_t cap);

}  // namespace coneseries
