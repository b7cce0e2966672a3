#pragma once

#include "error.hpp"
#include "series.hpp"
#include "special.hpp"
#include "dual.hpp"
#include "params.hpp"
#include "quadrature.hpp"
#include "recurrence.hpp"
#include "functions.hpp"
#include "ortho.hpp"
#include "genfunc.hpp"
#include "classify.hpp"
#include "spectrum.hpp"
#include "format.hpp"
#include "verify.hpp"
