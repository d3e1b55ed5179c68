// Umbrella header pulling in the whole abstraction pipeline.
#pragma once

#include <boolabs/choice_set.hpp>
#include <boolabs/errors.hpp>
#include <boolabs/game.hpp>
#include <boolabs/io.hpp>
#include <boolabs/literals.hpp>
#include <boolabs/ltl.hpp>
#include <boolabs/pipeline.hpp>
#include <boolabs/reactions.hpp>
#include <boolabs/search.hpp>
#include <boolabs/smt.hpp>
