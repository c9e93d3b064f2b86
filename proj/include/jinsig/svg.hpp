#pragma once

#include <string>

#include "jinsig/signature.hpp"

namespace jinsig::svg {

struct PlotStyle {
  int width = 640;
  int height = 480;
  int margin = 60;
  int ticks = 5;
};

/// Polyline of the (kappa, kappa_s) pairs with labelled axes. The output is a
/// pure function of its inputs.
std::string signature_plot(const Signature<double>& sig, const std::string& title, const PlotStyle& style = {});

}  // namespace jinsig::svg
