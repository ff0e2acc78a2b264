#pragma once

// Umbrella header: FSM graphs to path-verifying boolean circuits.

#include "pathcirc/algebra.hpp"
#include "pathcirc/bit_vector.hpp"
#include "pathcirc/bristol.hpp"
#include "pathcirc/budget.hpp"
#include "pathcirc/builder.hpp"
#include "pathcirc/circuit.hpp"
#include "pathcirc/enumeration.hpp"
#include "pathcirc/equivalence.hpp"
#include "pathcirc/errors.hpp"
#include "pathcirc/graph.hpp"
#include "pathcirc/kp.hpp"
#include "pathcirc/serialize.hpp"
#include "pathcirc/synth.hpp"
#include "pathcirc/truth_table.hpp"
#include "pathcirc/universal.hpp"
