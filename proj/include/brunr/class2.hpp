#pragma once

#include <brunr/class2/bogomolov.hpp>
#include <brunr/class2/extension_data.hpp>
#include <brunr/class2/subspace.hpp>
#include <brunr/class2/wedge.hpp>
