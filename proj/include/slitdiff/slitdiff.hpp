#pragma once

#include "slitdiff/aperture.hpp"
#include "slitdiff/bandlimit.hpp"
#include "slitdiff/config.hpp"
#include "slitdiff/errors.hpp"
#include "slitdiff/huygens.hpp"
#include "slitdiff/io.hpp"
#include "slitdiff/kirchhoff.hpp"
#include "slitdiff/math.hpp"
#include "slitdiff/momentum.hpp"
#include "slitdiff/pattern.hpp"
#include "slitdiff/quadrature.hpp"
#include "slitdiff/runner.hpp"
#include "slitdiff/sine_integral.hpp"
