#pragma once

#include "palab/algebra.hpp"
#include "palab/checks.hpp"
#include "palab/fixtures.hpp"
#include "palab/json_io.hpp"
#include "palab/search.hpp"
#include "palab/topology.hpp"
#include "palab/uniformity.hpp"
