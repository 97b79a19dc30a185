#pragma once

#include "barber/benchgen.hpp"
#include "barber/circuit.hpp"
#include "barber/device.hpp"
#include "barber/errors.hpp"
#include "barber/experiment.hpp"
#include "barber/gate.hpp"
#include "barber/io.hpp"
#include "barber/matrix.hpp"
#include "barber/metrics.hpp"
#include "barber/noise.hpp"
#include "barber/outcomes.hpp"
#include "barber/passes.hpp"
#include "barber/qasm.hpp"
#include "barber/reconstruct.hpp"
#include "barber/rng.hpp"
#include "barber/statevector.hpp"
