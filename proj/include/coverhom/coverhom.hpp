#pragma once

// Umbrella header for the coverhom toolkit.

#include "coverhom/cell_complex.hpp"
#include "coverhom/cochain.hpp"
#include "coverhom/cover.hpp"
#include "coverhom/errors.hpp"
#include "coverhom/geometry.hpp"
#include "coverhom/hocolim.hpp"
#include "coverhom/io.hpp"
#include "coverhom/mayer_vietoris.hpp"
#include "coverhom/parallel.hpp"
#include "coverhom/polynomial.hpp"
#include "coverhom/quadform.hpp"
#include "coverhom/rational.hpp"
#include "coverhom/report.hpp"
#include "coverhom/simplicial.hpp"
#include "coverhom/sparse_matrix.hpp"
