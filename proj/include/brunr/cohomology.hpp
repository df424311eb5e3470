#pragma once

#include <brunr/cohomology/cocycle_system.hpp>
#include <brunr/cohomology/h2.hpp>
