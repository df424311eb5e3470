#pragma once

#include <brunr/lattices/glattice.hpp>
#include <brunr/lattices/lattice_cohomology.hpp>
