#pragma once

// Umbrella header: exact character arithmetic and reducibility decisions for
// degenerate principal series of GL(n) over local fields, derivative-functor
// composition profiles, infinitesimal-character multisets, and the spectral /
// Monte-Carlo realization of the alpha-cosine transform on real
// Grassmannians.

#include "dps/character.hpp"
#include "dps/derivatives.hpp"
#include "dps/field.hpp"
#include "dps/gegenbauer.hpp"
#include "dps/grassmann.hpp"
#include "dps/grids.hpp"
#include "dps/infchar.hpp"
#include "dps/laurent.hpp"
#include "dps/mero.hpp"
#include "dps/quadrature.hpp"
#include "dps/rational.hpp"
#include "dps/reducibility.hpp"
#include "dps/rng.hpp"
#include "dps/spectral.hpp"
#include "dps/version.hpp"
