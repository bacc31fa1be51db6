#pragma once

#include "graysynth/angle.hpp"
#include "graysynth/bitmatrix.hpp"
#include "graysynth/bitvec.hpp"
#include "graysynth/circuit.hpp"
#include "graysynth/errors.hpp"
#include "graysynth/io.hpp"
#include "graysynth/linear_synth.hpp"
#include "graysynth/optimizer.hpp"
#include "graysynth/oracle.hpp"
#include "graysynth/parity_net.hpp"
#include "graysynth/phase_poly.hpp"
#include "graysynth/simulate.hpp"
