#pragma once

#include <brunr/exactalg/abelian.hpp>
#include <brunr/exactalg/integer.hpp>
#include <brunr/exactalg/modular.hpp>
