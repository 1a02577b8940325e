#pragma once

// Hurst exponent estimation: Whittle and time-domain likelihood estimators,
// classical baselines, synthetic fGn/fBm/ARFIMA generators and a Monte-Carlo
// benchmark harness.

#include "hurst/baselines.hpp"
#include "hurst/bench.hpp"
#include "hurst/errors.hpp"
#include "hurst/estimator.hpp"
#include "hurst/fft.hpp"
#include "hurst/io.hpp"
#include "hurst/optimize.hpp"
#include "hurst/series.hpp"
#include "hurst/special.hpp"
#include "hurst/spectral.hpp"
#include "hurst/synth.hpp"
#include "hurst/tdml.hpp"
#include "hurst/whittle.hpp"
