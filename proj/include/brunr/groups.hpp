#pragma once

#include <brunr/groups/catalog.hpp>
#include <brunr/groups/cayley.hpp>
#include <brunr/groups/construct.hpp>
#include <brunr/groups/subgroups.hpp>
