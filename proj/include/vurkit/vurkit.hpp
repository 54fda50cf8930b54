#ifndef VURKIT_VURKIT_HPP
#define VURKIT_VURKIT_HPP

#include "vurkit/config.hpp"
#include "vurkit/error.hpp"
#include "vurkit/core/matrix.hpp"
#include "vurkit/core/jacobi.hpp"
#include "vurkit/core/observable.hpp"
#include "vurkit/core/state.hpp"
#include "vurkit/core/measurement.hpp"
#include "vurkit/core/fixtures.hpp"
#include "vurkit/entropic.hpp"
#include "vurkit/golden_section.hpp"
#include "vurkit/vur.hpp"
#include "vurkit/random.hpp"
#include "vurkit/parallel.hpp"
#include "vurkit/oracle.hpp"
#include "vurkit/sweeps.hpp"
#include "vurkit/lur.hpp"

#endif // VURKIT_VURKIT_HPP
