// Umbrella header.
#pragma once

#include "cuspidal/abelian.hpp"
#include "cuspidal/base_ring.hpp"
#include "cuspidal/cusp_lattice.hpp"
#include "cuspidal/delta.hpp"
#include "cuspidal/eta.hpp"
#include "cuspidal/ffpoly.hpp"
#include "cuspidal/galois.hpp"
#include "cuspidal/hecke.hpp"
#include "cuspidal/integers.hpp"
#include "cuspidal/json_io.hpp"
#include "cuspidal/matrix.hpp"
#include "cuspidal/qseries.hpp"
#include "cuspidal/torsion.hpp"
