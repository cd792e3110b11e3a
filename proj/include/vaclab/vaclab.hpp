#pragma once

#include "vaclab/axisym.hpp"
#include "vaclab/chart.hpp"
#include "vaclab/conserved.hpp"
#include "vaclab/constants.hpp"
#include "vaclab/diagnostics.hpp"
#include "vaclab/fd_oracle.hpp"
#include "vaclab/fields.hpp"
#include "vaclab/func1.hpp"
#include "vaclab/geometry.hpp"
#include "vaclab/media_suites.hpp"
#include "vaclab/profiles.hpp"
#include "vaclab/random.hpp"
#include "vaclab/relmedia.hpp"
#include "vaclab/solutions.hpp"

namespace vaclab {
inline constexpr const char* kVersion = "0.1.0";
}
