#pragma once

#include "quorumlab/coalition.hpp"
#include "quorumlab/dimension.hpp"
#include "quorumlab/errors.hpp"
#include "quorumlab/exact_lp.hpp"
#include "quorumlab/game.hpp"
#include "quorumlab/legco.hpp"
#include "quorumlab/power.hpp"
#include "quorumlab/rational.hpp"
#include "quorumlab/structure.hpp"
