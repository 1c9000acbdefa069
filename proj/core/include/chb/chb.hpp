#ifndef CHB_CHB_HPP
#define CHB_CHB_HPP

// Umbrella header for the Castelnuovo-Halphen bound library.

#include "chb/ci.hpp"
#include "chb/decompose.hpp"
#include "chb/errors.hpp"
#include "chb/flag.hpp"
#include "chb/halphen.hpp"
#include "chb/hilbert.hpp"
#include "chb/numeric.hpp"
#include "chb/regimes.hpp"
#include "chb/scan.hpp"
#include "chb/speciality.hpp"

#endif
